#ifndef PARACONTACT_SCALAR_HPP
#define PARACONTACT_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <string>

namespace paracontact {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

enum class ScalarMode { rational, float64 };

inline constexpr double kDefaultEps = 1e-10;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr ScalarMode mode = ScalarMode::rational;
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x, double) { return x == 0; }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  // nullopt unless x is the square of a rational.
  static std::optional<Rational> sqrt(const Rational& x);
  static std::string to_string(const Rational& x) { return x.str(); }
  static Rational from_string(const std::string& s);
  static Rational from_double(double x) { return Rational(x); }
};

template <>
struct scalar_traits<double> {
  static constexpr ScalarMode mode = ScalarMode::float64;
  static constexpr bool exact = false;
  static bool is_zero(double x, double eps) { return std::abs(x) <= eps; }
  static double abs(double x) { return std::abs(x); }
  static double to_double(double x) { return x; }
  static std::optional<double> sqrt(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
  }
  static std::string to_string(double x);
  static double from_string(const std::string& s);
  static double from_double(double x) { return x; }
};

template <class S>
bool is_zero(const S& x, double eps = kDefaultEps) {
  return scalar_traits<S>::is_zero(x, eps);
}

template <class S>
bool near(const S& a, const S& b, double eps = kDefaultEps) {
  return scalar_traits<S>::is_zero(S(a - b), eps);
}

template <class S>
S abs_value(const S& x) {
  return scalar_traits<S>::abs(x);
}

template <class S>
double to_double(const S& x) {
  return scalar_traits<S>::to_double(x);
}

template <class S>
std::string to_string(const S& x) {
  return scalar_traits<S>::to_string(x);
}

// Largest absolute entry; zero for empty matrices.
template <class S, int R, int C>
S max_abs(const Eigen::Matrix<S, R, C>& m) {
  S best(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      S a = abs_value<S>(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

template <class S, int R, int C>
bool is_zero_matrix(const Eigen::Matrix<S, R, C>& m, double eps = kDefaultEps) {
  return is_zero<S>(max_abs(m), eps);
}

template <class S>
Vec<S> unit_vector(int dim, int i) {
  Vec<S> v = Vec<S>::Zero(dim);
  v(i) = S(1);
  return v;
}

template <class To, class From>
Mat<To> cast_matrix(const Mat<From>& m) {
  Mat<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<To, From>)
        out(i, j) = m(i, j);
      else
        out(i, j) = scalar_traits<To>::from_double(to_double(m(i, j)));
    }
  return out;
}

}  // namespace paracontact

#endif

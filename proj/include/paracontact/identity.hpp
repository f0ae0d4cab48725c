#ifndef PARACONTACT_IDENTITY_HPP
#define PARACONTACT_IDENTITY_HPP

#include <array>
#include <string>
#include <vector>

#include "paracontact/scalar.hpp"

namespace paracontact {

template <class S>
struct IdentityResult {
  std::string tag;
  bool applicable = true;
  bool pass = false;
  S max_residual = S(0);
  std::string note;
};

template <class S>
IdentityResult<S> not_applicable(std::string tag, std::string note) {
  IdentityResult<S> r;
  r.tag = std::move(tag);
  r.applicable = false;
  r.pass = true;
  r.note = std::move(note);
  return r;
}

template <class S>
IdentityResult<S> residual_result(std::string tag, const S& residual, double eps, std::string note = {}) {
  IdentityResult<S> r;
  r.tag = std::move(tag);
  r.max_residual = residual;
  r.pass = is_zero(residual, eps);
  r.note = std::move(note);
  return r;
}

namespace detail {
template <class S, class T>
S magnitude(const T& value) {
  if constexpr (std::is_convertible_v<T, S> && !std::is_base_of_v<Eigen::EigenBase<T>, T>)
    return abs_value<S>(S(value));
  else
    return max_abs(Mat<S>(value));
}
}  // namespace detail

// Evaluates `f` on every tuple of `vectors` of length Arity and records the largest
// magnitude of the (scalar or vector) difference it returns.
template <class S, std::size_t Arity, class F>
IdentityResult<S> check_on_tuples(std::string tag, const std::vector<Vec<S>>& vectors, double eps,
                                  F&& f, std::string note = {}) {
  S worst(0);
  const std::size_t m = vectors.size();
  std::array<std::size_t, Arity> idx{};
  while (true) {
    S r = [&]<std::size_t... I>(std::index_sequence<I...>) {
      return detail::magnitude<S>(f(vectors[idx[I]]...));
    }(std::make_index_sequence<Arity>{});
    if (r > worst) worst = r;
    std::size_t p = 0;
    while (p < Arity && ++idx[p] == m) idx[p++] = 0;
    if (p == Arity || m == 0) break;
  }
  return residual_result<S>(std::move(tag), worst, eps, std::move(note));
}

template <class S>
std::vector<Vec<S>> standard_basis(int dim) {
  std::vector<Vec<S>> out;
  for (int i = 0; i < dim; ++i) out.push_back(unit_vector<S>(dim, i));
  return out;
}

}  // namespace paracontact

#endif

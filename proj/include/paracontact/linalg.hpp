#ifndef PARACONTACT_LINALG_HPP
#define PARACONTACT_LINALG_HPP

#include "paracontact/errors.hpp"
#include "paracontact/scalar.hpp"

namespace paracontact {

// Solves A x = B for every column of B. Gaussian elimination; the pivot is the
// first exact nonzero entry (rational) or the largest magnitude (float).
template <class S>
Mat<S> solve_linear(const Mat<S>& A, const Mat<S>& B, double eps = kDefaultEps);

template <class S>
Vec<S> solve_linear(const Mat<S>& A, const Vec<S>& b, double eps = kDefaultEps) {
  Mat<S> B = b;
  return solve_linear<S>(A, B, eps).col(0);
}

template <class S>
Mat<S> inverse(const Mat<S>& A, double eps = kDefaultEps) {
  return solve_linear<S>(A, Mat<S>(Mat<S>::Identity(A.rows(), A.cols())), eps);
}

template <class S>
int rank(const Mat<S>& A, double eps = kDefaultEps);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

// Inertia of a symmetric form by congruence (symmetric elimination with pivoting).
template <class S>
Signature signature_ldl(const Mat<S>& G, double eps = kDefaultEps);

template <class S>
struct LeastSquares {
  Vec<S> x;
  S residual_squared;
  double residual() const { return std::sqrt(to_double(residual_squared)); }
};

// Normal-equation least squares. Throws RankDeficient when AᵀA is singular.
template <class S>
LeastSquares<S> least_squares(const Mat<S>& A, const Vec<S>& b, double eps = kDefaultEps);

// Orthogonal basis of span(columns of V) w.r.t. the symmetric form G, pivoting on the
// candidate of largest |G(v,v)| so that null vectors are never chosen. Columns of the
// result are mutually G-orthogonal and non-null.
template <class S>
Mat<S> orthogonal_basis(const Mat<S>& G, const Mat<S>& V, double eps = kDefaultEps);

}  // namespace paracontact

#endif

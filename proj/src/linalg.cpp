#include "paracontact/linalg.hpp"

#include <vector>

namespace paracontact {

namespace {

// Index of the pivot row in column `col`, scanning rows [from, rows). -1 if none.
template <class S>
Eigen::Index pick_pivot(const Mat<S>& M, Eigen::Index col, Eigen::Index from, double eps) {
  Eigen::Index best = -1;
  S best_abs(0);
  for (Eigen::Index r = from; r < M.rows(); ++r) {
    S a = abs_value<S>(M(r, col));
    if constexpr (scalar_traits<S>::exact) {
      if (a != 0) return r;
    } else {
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
  }
  if (best >= 0 && is_zero<S>(best_abs, eps)) return -1;
  return best;
}

}  // namespace

template <class S>
Mat<S> solve_linear(const Mat<S>& A, const Mat<S>& B, double eps) {
  if (A.rows() != A.cols() || B.rows() != A.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve_linear needs square A and matching b");
  const Eigen::Index n = A.rows();
  Mat<S> M = A;
  Mat<S> X = B;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = pick_pivot<S>(M, c, c, eps);
    if (p < 0) throw Error(ErrorKind::SingularMatrix, "zero pivot in column " + std::to_string(c));
    if (p != c) {
      M.row(p).swap(M.row(c));
      X.row(p).swap(X.row(c));
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || M(r, c) == S(0)) continue;
      S f = M(r, c) / M(c, c);
      M.row(r) -= f * M.row(c);
      X.row(r) -= f * X.row(c);
    }
  }
  for (Eigen::Index r = 0; r < n; ++r) X.row(r) /= M(r, r);
  return X;
}

template <class S>
int rank(const Mat<S>& A, double eps) {
  Mat<S> M = A;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < M.cols() && row < M.rows(); ++c) {
    Eigen::Index p = pick_pivot<S>(M, c, row, eps);
    if (p < 0) continue;
    if (p != row) M.row(p).swap(M.row(row));
    for (Eigen::Index r = row + 1; r < M.rows(); ++r) {
      if (M(r, c) == S(0)) continue;
      S f = M(r, c) / M(row, c);
      M.row(r) -= f * M.row(row);
    }
    ++row;
  }
  return static_cast<int>(row);
}

template <class S>
Signature signature_ldl(const Mat<S>& G, double eps) {
  if (G.rows() != G.cols()) throw Error(ErrorKind::DimensionMismatch, "signature of non-square form");
  Mat<S> M = G;
  const Eigen::Index n = M.rows();
  std::vector<Eigen::Index> active;
  for (Eigen::Index i = 0; i < n; ++i) active.push_back(i);
  Signature sig;
  while (!active.empty()) {
    Eigen::Index piv = -1;
    S piv_abs(0);
    for (auto i : active) {
      S a = abs_value<S>(M(i, i));
      if (a > piv_abs) {
        piv_abs = a;
        piv = i;
      }
    }
    if (piv < 0 || is_zero<S>(piv_abs, eps)) {
      // Zero diagonal: fold a coupled index in so that a nonzero pivot appears.
      Eigen::Index bi = -1, bj = -1;
      S best(0);
      for (auto i : active)
        for (auto j : active)
          if (i < j && abs_value<S>(M(i, j)) > best) {
            best = abs_value<S>(M(i, j));
            bi = i;
            bj = j;
          }
      if (bi < 0 || is_zero<S>(best, eps)) break;
      M.row(bi) += M.row(bj);
      M.col(bi) += M.col(bj);
      continue;
    }
    S d = M(piv, piv);
    if (d > S(0))
      ++sig.positive;
    else
      ++sig.negative;
    std::erase(active, piv);
    for (auto a : active)
      for (auto b : active) M(a, b) -= M(a, piv) * M(piv, b) / d;
  }
  sig.zero = static_cast<int>(n) - sig.positive - sig.negative;
  return sig;
}

template <class S>
LeastSquares<S> least_squares(const Mat<S>& A, const Vec<S>& b, double eps) {
  if (A.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "least_squares row mismatch");
  Mat<S> At = A.transpose();
  Mat<S> N = At * A;
  Mat<S> rhs = At * b;
  LeastSquares<S> out;
  try {
    out.x = solve_linear<S>(N, rhs, eps).col(0);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularMatrix)
      throw Error(ErrorKind::RankDeficient, "normal equations are singular");
    throw;
  }
  Vec<S> r = A * out.x - b;
  out.residual_squared = r.dot(r);
  return out;
}

template <class S>
Mat<S> orthogonal_basis(const Mat<S>& G, const Mat<S>& V, double eps) {
  std::vector<Vec<S>> cands;
  for (Eigen::Index j = 0; j < V.cols(); ++j) cands.push_back(V.col(j));
  std::vector<Vec<S>> chosen;
  auto form = [&](const Vec<S>& a, const Vec<S>& b) { return S(a.dot(G * b)); };
  while (true) {
    std::erase_if(cands, [&](const Vec<S>& v) { return is_zero_matrix(v, eps); });
    if (cands.empty()) break;
    std::size_t best = 0;
    S best_abs(-1);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      S a = abs_value<S>(form(cands[i], cands[i]));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (is_zero<S>(best_abs, eps)) {
      bool merged = false;
      for (std::size_t i = 0; i < cands.size() && !merged; ++i)
        for (std::size_t j = i + 1; j < cands.size() && !merged; ++j)
          if (!is_zero<S>(form(cands[i], cands[j]), eps)) {
            cands[i] = cands[i] + cands[j];
            merged = true;
          }
      if (!merged) break;  // what is left spans a totally null subspace
      continue;
    }
    Vec<S> v = cands[best];
    S vv = form(v, v);
    cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(best));
    for (auto& w : cands) w -= (form(w, v) / vv) * v;
    chosen.push_back(v);
  }
  Mat<S> out(G.rows(), static_cast<Eigen::Index>(chosen.size()));
  for (std::size_t i = 0; i < chosen.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = chosen[i];
  return out;
}

#define PARACONTACT_INSTANTIATE(S)                                                \
  template Mat<S> solve_linear<S>(const Mat<S>&, const Mat<S>&, double);         \
  template int rank<S>(const Mat<S>&, double);                                   \
  template Signature signature_ldl<S>(const Mat<S>&, double);                    \
  template LeastSquares<S> least_squares<S>(const Mat<S>&, const Vec<S>&, double); \
  template Mat<S> orthogonal_basis<S>(const Mat<S>&, const Mat<S>&, double);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact

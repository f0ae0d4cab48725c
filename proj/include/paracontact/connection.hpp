#ifndef PARACONTACT_CONNECTION_HPP
#define PARACONTACT_CONNECTION_HPP

#include <vector>

#include "paracontact/identity.hpp"
#include "paracontact/structure.hpp"

namespace paracontact {

enum class ConnectionKind { levi_civita, paracontact_canonical };

template <class S>
struct Connection {
  ConnectionKind kind = ConnectionKind::levi_civita;
  // nabla[i]: column j is nabla_{e_i} e_j, so entry (k, j) is Gamma^k_{ij}.
  std::vector<Mat<S>> nabla;

  int dim() const { return static_cast<int>(nabla.size()); }
  const S& gamma(int k, int i, int j) const { return nabla[i](k, j); }
  // The operator Y -> nabla_u Y on constant-coefficient fields.
  Mat<S> along(const Vec<S>& u) const {
    Mat<S> out = Mat<S>::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      if (u(i) != S(0)) out += u(i) * nabla[i];
    return out;
  }
  Vec<S> apply(const Vec<S>& u, const Vec<S>& v) const { return along(u) * v; }
};

// Koszul formula; checks metricity and torsion-freeness. Throws SingularMatrix.
template <class S>
Connection<S> levi_civita(const Model<S>& m);

// (nabla_u T) = nabla_u ∘ T - T ∘ nabla_u for a frame-constant operator T.
template <class S>
Mat<S> covariant_derivative(const Connection<S>& conn, const Mat<S>& T, const Vec<S>& u) {
  Mat<S> N = conn.along(u);
  return N * T - T * N;
}

// Per basis direction, the largest entry of nabla_{e_i} xi - (-phi e_i + phi h e_i)
// (paracontact) or nabla_{e_i} xi - (-phi e_i - phi h e_i) (contact).
template <class S>
std::vector<S> nabla_xi_check(const Model<S>& m, const Connection<S>& lc, const Mat<S>& h);

// nabla^pc = nabla + eta⊗phi + ... ; checks nabla^pc eta = nabla^pc xi = nabla^pc g = 0
// and the torsion conditions. Throws PostconditionFailed.
template <class S>
Connection<S> canonical_paracontact_connection(const Model<S>& m, const Connection<S>& lc,
                                               const Mat<S>& h);

template <class S>
struct Curvature {
  // ops[i * dim + j]: column k is R_{e_i e_j} e_k.
  std::vector<Mat<S>> ops;
  Mat<S> gram;

  int dim() const { return static_cast<int>(gram.rows()); }
  const Mat<S>& op(int i, int j) const { return ops[static_cast<std::size_t>(i) * dim() + j]; }
  Mat<S> op(const Vec<S>& u, const Vec<S>& v) const {
    Mat<S> out = Mat<S>::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
      if (u(i) == S(0)) continue;
      for (int j = 0; j < dim(); ++j)
        if (v(j) != S(0)) out += (u(i) * v(j)) * op(i, j);
    }
    return out;
  }
  Vec<S> apply(const Vec<S>& u, const Vec<S>& v, const Vec<S>& w) const { return op(u, v) * w; }
  // R(X,Y,Z,W) = g(R_{XY} Z, W)
  S lowered(const Vec<S>& x, const Vec<S>& y, const Vec<S>& z, const Vec<S>& w) const {
    return apply(x, y, z).dot(gram * w);
  }
  S lowered(int i, int j, int k, int l) const { return op(i, j).col(k).dot(gram.col(l)); }
};

template <class S>
struct CurvatureSymmetries {
  S antisym_first;   // R_ijkl + R_jikl
  S antisym_second;  // R_ijkl + R_ijlk
  S pair_symmetry;   // R_ijkl - R_klij
  S bianchi;         // cyclic sum of R_{e_i e_j} e_k
};

template <class S>
CurvatureSymmetries<S> curvature_symmetries(const Curvature<S>& R);

// R_{XY} = [nabla_X, nabla_Y] - nabla_{[X,Y]}. For Levi-Civita input the lowered-form
// symmetries and first Bianchi are asserted (PostconditionFailed).
template <class S>
Curvature<S> curvature(const Connection<S>& conn, const FrameAlgebra<S>& a, const Mat<S>& gram,
                       double eps = kDefaultEps);

template <class S>
struct Ricci {
  Mat<S> ric;  // Ric(e_j, e_k)
  Mat<S> Q;    // gram^{-1} Ric
  S scalar;
};

// Ric(Y,Z) = trace of X -> R_{XY} Z.
template <class S>
Ricci<S> ricci(const Curvature<S>& R, double eps = kDefaultEps);

// Same tensor contracted over a gram-orthogonal frame.
template <class S>
Mat<S> ricci_via_frame(const Curvature<S>& R, double eps = kDefaultEps);

// X -> R_{X xi} xi
template <class S>
Mat<S> jacobi_operator(const Curvature<S>& R, const Vec<S>& xi);

// R(X,Y,Y,X) / (g(X,X) g(Y,Y) - g(X,Y)^2). Throws DegeneratePlane.
template <class S>
S sectional_curvature(const Curvature<S>& R, const Vec<S>& X, const Vec<S>& Y,
                      double eps = kDefaultEps);

// Everything downstream modules need from one model.
template <class S>
struct Geometry {
  Model<S> model;
  Mat<S> deta;
  Mat<S> h;
  Connection<S> lc;
  Curvature<S> R;
  Ricci<S> ric;
};

template <class S>
Geometry<S> compute_geometry(const Model<S>& m);

// True iff nabla^pc phi = 0.
template <class S>
bool is_integrable(const Geometry<S>& geo);

// Bracket closure of the +1 and -1 eigendistributions of phi.
template <class S>
bool eigendistributions_involutive(const Model<S>& m);

// Identities valid on every paracontact metric manifold: namlafibar, FiL, Curvature2,
// Curvature3, nablaxi, CURVATURE_4. Contact models get nablaxi only.
template <class S>
std::vector<IdentityResult<S>> general_identities(const Geometry<S>& geo);

}  // namespace paracontact

#endif

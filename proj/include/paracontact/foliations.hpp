#ifndef PARACONTACT_FOLIATIONS_HPP
#define PARACONTACT_FOLIATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "paracontact/linalg.hpp"
#include "paracontact/nullity.hpp"

namespace paracontact {

enum class DistributionKind { D_plus, D_minus, D_h_pos, D_h_neg, D_phih_pos, D_phih_neg };

const char* distribution_name(DistributionKind k);

template <class S>
struct DistributionBasis {
  DistributionKind kind = DistributionKind::D_plus;
  std::vector<Vec<S>> vectors;
  Signature signature;  // of the restricted Gram
  S eigen_residual = S(0);

  Mat<S> matrix() const;
};

// P0 = eta (x) xi, P+ and P- the +-lambda eigenprojectors of A on the contact
// distribution. A is h above the boundary and phi h below it.
template <class S>
struct Projectors {
  Mat<S> A, P0, P_plus, P_minus;
  S lambda = S(0);
  S algebra_residual = S(0);
};

template <class S>
Projectors<S> projectors(const Geometry<S>& geo, const NullityReport<S>& rep);

// (Pi +- phi)/2.
template <class S>
std::pair<Mat<S>, Mat<S>> phi_projectors(const Model<S>& m);

// Column space of P, orthogonalised for g when the restriction is nondegenerate.
template <class S>
DistributionBasis<S> distribution_basis(const Geometry<S>& geo, const NullityReport<S>& rep, DistributionKind k);

template <class S>
struct PhiBasis {
  std::vector<Vec<S>> xs, ys;  // ys[i] = phi xs[i]
  int r = 0, s = 0;
  bool normalized = false;
  std::vector<std::string> notes;
};

// Orthogonal phi-basis with xs in the +lambda eigendistribution, g(X,X) > 0 first.
// Vectors are scaled to unit length only when every square root is exact.
template <class S>
PhiBasis<S> phi_basis(const Geometry<S>& geo, const NullityReport<S>& rep);

template <class S>
struct PangForm {
  DistributionKind kind = DistributionKind::D_plus;
  Mat<S> defining;             // 2 deta([xi, b_i], b_j)
  std::optional<Mat<S>> closed;
  std::string closed_tag;      // pang1, pang2, pang5, pang6 or invariant1
  S residual = S(0);
  Signature signature;
};

// Throws NotInvolutive when the span of the basis is not closed under brackets.
template <class S>
PangForm<S> pang_invariant(const Geometry<S>& geo, const NullityReport<S>& rep, const DistributionBasis<S>& basis);

template <class S>
bool is_involutive(const FrameAlgebra<S>& alg, const std::vector<Vec<S>>& basis, double eps);

template <class S>
struct LibermannMap {
  Mat<S> lambda_plus;   // Lambda_{D+}, defined on D-
  Mat<S> lambda_minus;  // Lambda_{D-}, defined on D+
  S square_residual = S(0);
  S kernel_residual = S(0);
  S relation_residual = S(0);
  bool pass(double eps) const {
    return is_zero(square_residual, eps) && is_zero(kernel_residual, eps) && is_zero(relation_residual, eps);
  }
};

template <class S>
LibermannMap<S> libermann_map(const Geometry<S>& geo, const NullityReport<S>& rep);

enum class Definiteness { positive, negative, indefinite };

const char* definiteness_name(Definiteness d);

template <class S>
struct DefinitenessReport {
  Definiteness verdict = Definiteness::indefinite;
  int index = 0;  // negative count on the +lambda eigendistribution
  Signature pang_plus, pang_minus;
  // verdict read off the signatures of the Pang forms of D+ and D-
  Definiteness from_pang = Definiteness::indefinite;
};

template <class S>
DefinitenessReport<S> definiteness(const Geometry<S>& geo, const NullityReport<S>& rep);

template <class S>
struct BiParacontact {
  Mat<S> phi1, phi2, phi3;
  S residual = S(0);
};

// Throws InexactRoot in rational mode when sqrt|1+kappa| is irrational.
template <class S>
BiParacontact<S> almost_biparacontact(const Geometry<S>& geo, const NullityReport<S>& rep);

template <class S>
struct GeodesyReport {
  bool above = true;
  // above: g(nabla_X X', Y) and g(nabla_X X', xi) within one eigendistribution
  S geodesic_residual = S(0);
  // below: B(X,X') + sigma lambda g(X,X') xi on the sigma lambda eigendistribution
  S umbilic_residual = S(0);
  // below: mean curvature vectors of the two foliations
  std::vector<Vec<S>> mean_curvature;
  // below: g(nabla_X Y, xi) + g(X, phi Y) across the two foliations
  S cross_residual = S(0);
  bool pass(double eps) const {
    return is_zero(geodesic_residual, eps) && is_zero(umbilic_residual, eps) && is_zero(cross_residual, eps);
  }
};

template <class S>
GeodesyReport<S> geodesy_umbilicity(const Geometry<S>& geo, const NullityReport<S>& rep);

// Second fundamental form part of nabla_X X' normal to the span of `leaf`.
template <class S>
Vec<S> second_fundamental_form(const Geometry<S>& geo, const Mat<S>& leaf, const Vec<S>& X, const Vec<S>& Xp);

// Projector algebra, phi swapping, Pang agreement, the Libermann relation, the
// curvature blocks and geodesy, as identity rows.
template <class S>
std::vector<IdentityResult<S>> foliation_identities(const Geometry<S>& geo, const NullityReport<S>& rep);

}  // namespace paracontact

#endif

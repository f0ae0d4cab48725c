#ifndef PARACONTACT_NULLITY_HPP
#define PARACONTACT_NULLITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "paracontact/connection.hpp"

namespace paracontact {

// Position of kappa relative to -1.
enum class NullityClass { below, equal, above };

const char* class_name(NullityClass c);

template <class S>
struct NullityReport {
  StructureKind kind = StructureKind::paracontact;
  S kappa = S(0);
  std::optional<S> mu;  // nullopt when h = 0 (indeterminate)
  S residual_squared = S(0);
  bool is_nullity = false;
  NullityClass cls = NullityClass::equal;
  // sqrt|1 + kappa|, when representable in S.
  std::optional<S> lambda;
  double lambda_approx = 0;
  bool h_zero = false;
  std::vector<std::string> notes;

  // mu where it only multiplies h-terms; zero stands in for an indeterminate mu.
  S mu_or_zero() const { return mu ? *mu : S(0); }
};

// Least-squares fit of R_{XY} xi = kappa(eta(Y)X - eta(X)Y) + mu(eta(Y)hX - eta(X)hY)
// over all basis pairs.
template <class S>
NullityReport<S> solve_nullity(const Model<S>& m, const Curvature<S>& R, const Mat<S>& h);

template <class S>
NullityReport<S> solve_nullity(const Geometry<S>& geo) {
  return solve_nullity(geo.model, geo.R, geo.h);
}

// lambda of the report; throws InexactRoot when sqrt|1+kappa| is irrational in
// rational mode and NotNullity when the fit failed.
template <class S>
S require_lambda(const NullityReport<S>& rep);

// Identities specific to paracontact (kappa, mu)-manifolds, each gated by class.
template <class S>
std::vector<IdentityResult<S>> identity_suite(const Geometry<S>& geo, const NullityReport<S>& rep);

// (0,4) tensor with values[((i*d + j)*d + k)*d + l] = R(e_i, e_j, e_k, e_l).
template <class S>
struct LoweredTensor {
  int dim = 0;
  std::vector<S> values;
  const S& at(int i, int j, int k, int l) const {
    return values[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l];
  }
};

// Closed-form curvature in terms of g, eta, h, phi, kappa, mu. Throws ClassBoundary.
template <class S>
LoweredTensor<S> explicit_curvature(const Geometry<S>& geo, const NullityReport<S>& rep);

template <class S>
LoweredTensor<S> lower(const Curvature<S>& R);

// Max entrywise difference between the closed form and the computed curvature.
template <class S>
S explicit_curvature_residual(const Geometry<S>& geo, const NullityReport<S>& rep);

template <class S>
struct RicciFormula {
  Mat<S> Q_formula;           // as printed for the report's class
  S printed_h_coefficient;    // 2(n-1)+mu above, 2(n+1)+mu below
  S coefficient_low;          // 2(n-1)+mu
  S coefficient_high;         // 2(n+1)+mu
  bool low_matches = false;   // formula with coefficient_low equals the computed Q
  bool high_matches = false;
  bool eta_einstein = false;
  bool einstein = false;
};

template <class S>
RicciFormula<S> ricci_formula(const Geometry<S>& geo, const NullityReport<S>& rep);

// Block formulas for R evaluated on eigenbases: xs span the +lambda
// eigendistribution and ys the -lambda one (of h above -1, of phi h below -1).
template <class S>
IdentityResult<S> curvature_blocks(const Geometry<S>& geo, const NullityReport<S>& rep,
                                   const std::vector<Vec<S>>& xs, const std::vector<Vec<S>>& ys);

// xi-sectional and normal sectional curvatures against their closed forms on the same bases.
template <class S>
IdentityResult<S> sectional_corollary(const Geometry<S>& geo, const NullityReport<S>& rep,
                                      const std::vector<Vec<S>>& xs, const std::vector<Vec<S>>& ys);

}  // namespace paracontact

#endif

#ifndef PARACONTACT_TRANSFORMS_HPP
#define PARACONTACT_TRANSFORMS_HPP

#include <optional>
#include <type_traits>
#include <string>
#include <vector>

#include "paracontact/foliations.hpp"

namespace paracontact {

template <class S>
struct TransformResult {
  std::string construction;
  Model<S> output;
  std::optional<S> predicted_kappa, predicted_mu;
  NullityReport<S> verified;  // refit on the output
  std::vector<IdentityResult<S>> checks;
  // competing printed formulas; recorded but not required to pass
  std::vector<IdentityResult<S>> comparisons;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const IdentityResult<S>* find(const std::string& tag) const {
    for (const auto& c : checks)
      if (c.tag == tag) return &c;
    return nullptr;
  }
};

// (alpha eta, xi/alpha, phi, alpha g + alpha(alpha-1) eta (x) eta). Throws InvalidAlpha for alpha <= 0.
template <class S>
TransformResult<S> d_homothetic(const Model<S>& m, const S& alpha);

enum class ContactToParaMode { via_h, via_phih };

// Paracontact structure h/s or phi h/s on a non-Sasakian contact (kappa, mu)-model,
// s = sqrt(1 - kappa). via_phih takes c with kappa = c(2-c), mu = -2c.
template <class S>
TransformResult<S> paracontact_from_contact(const Model<S>& m, ContactToParaMode mode,
                                            std::type_identity_t<std::optional<S>> c = std::nullopt);

// Contact metric structure -+ phi h / sqrt(1+kappa) on a definite model above the boundary.
template <class S>
TransformResult<S> contact_from_paracontact_pos(const Model<S>& m);

// Contact metric structure +- h / sqrt(-1-kappa) on a definite model below the boundary.
template <class S>
TransformResult<S> contact_from_paracontact_neg(const Model<S>& m);

// Predicted contact constants of the construction below the boundary.
template <class S>
std::pair<S, S> contact_neg_constants(const S& kappa, const S& mu);

// Contact metric structure (phi_{a,b}, g_{a,b}) with ab = 4(1 + kappa).
template <class S>
TransformResult<S> contact_family(const Model<S>& m, const S& a, const S& b);

// (1 - mu/2) / sqrt(1 - kappa) for a contact (kappa, mu)-model.
template <class S>
S boeckx_invariant(const NullityReport<S>& rep);

// kappa - 2 + (1 - mu/2)^2 for the contact constants (c(2-c), -2c).
template <class S>
S sphere_kappa(const S& c);

// Sasakian test used on construction outputs: h = 0, N = 0, R_{XY} xi = eta(Y)X - eta(X)Y.
template <class S>
IdentityResult<S> sasakian_check(const Geometry<S>& geo);

}  // namespace paracontact

#endif

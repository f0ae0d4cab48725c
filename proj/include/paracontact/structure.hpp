#ifndef PARACONTACT_STRUCTURE_HPP
#define PARACONTACT_STRUCTURE_HPP

#include <string>
#include <vector>

#include "paracontact/frame.hpp"
#include "paracontact/linalg.hpp"

namespace paracontact {

// deta(e_i, e_j) = -1/2 eta([e_i, e_j]).
template <class S>
Mat<S> exterior_derivative_eta(const Model<S>& m);

template <class S>
struct ValidationEntry {
  std::string axiom;
  bool pass;
  S residual;
};

template <class S>
struct ValidationReport {
  std::vector<ValidationEntry<S>> entries;
  Signature signature;
  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  const ValidationEntry<S>* find(const std::string& axiom) const {
    for (const auto& e : entries)
      if (e.axiom == axiom) return &e;
    return nullptr;
  }
};

// Axioms of a paracontact metric (or contact metric) structure, one entry each.
template <class S>
ValidationReport<S> validate_structure(const Model<S>& m);

// h = 1/2 L_xi phi. Throws PostconditionFailed unless h is g-symmetric, trace-free,
// kills xi and anticommutes with phi.
template <class S>
Mat<S> compute_h(const Model<S>& m);

template <class S>
struct NijenhuisResult {
  // values[i * dim + j] = N(e_i, e_j)
  std::vector<Vec<S>> values;
  S max_residual;
  bool is_normal;
  // para-Sasakian for paracontact models, Sasakian for contact ones.
  bool is_sasakian;
};

// [phi,phi] - 2 deta ⊗ xi (paracontact) or [phi,phi] + 2 deta ⊗ xi (contact).
template <class S>
NijenhuisResult<S> nijenhuis(const Model<S>& m);

}  // namespace paracontact

#endif

#ifndef PARACONTACT_REPORT_HPP
#define PARACONTACT_REPORT_HPP

#include <string>
#include <vector>

#include "paracontact/model_io.hpp"
#include "paracontact/transforms.hpp"

namespace paracontact {

template <class S>
json validation_json(const ValidationReport<S>& rep);

template <class S>
json nullity_json(const NullityReport<S>& rep);

template <class S>
json identity_json(const IdentityResult<S>& r);

// Every identity row for the model, general ones first, plus the explicit
// curvature comparison tagged RXYZW (above) or RXYZW2 (below).
template <class S>
std::vector<IdentityResult<S>> all_identities(const Geometry<S>& geo, const NullityReport<S>& rep);

// Object keyed by tag, in row order.
template <class S>
json identities_json(const std::vector<IdentityResult<S>>& rows);

// Full analysis: model, validation, normality, nullity, identities, ricci,
// sectional table, foliations, integrability. Keys are emitted in a fixed order.
template <class S>
json analysis_report(const Model<S>& m);

template <class S>
json transform_json(const TransformResult<S>& t);

// Human-readable rendering of any of the JSON documents above.
std::string render_text(const json& doc);

}  // namespace paracontact

#endif

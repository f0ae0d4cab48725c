#ifndef PARACONTACT_MODEL_IO_HPP
#define PARACONTACT_MODEL_IO_HPP

#include <json.hpp>
#include <string>
#include <variant>

#include "paracontact/frame.hpp"

namespace paracontact {

using json = nlohmann::ordered_json;

using AnyModel = std::variant<Model<Rational>, Model<double>>;

// Rationals as "p/q" or "p" strings, floats as JSON numbers.
template <class S>
json scalar_to_json(const S& x);
template <class S>
S scalar_from_json(const json& j);

template <class S>
json matrix_to_json(const Mat<S>& m);
template <class S>
json vector_to_json(const Vec<S>& v);

// Throws ParseError, JacobiViolation or DimensionMismatch.
AnyModel parse_model(const std::string& document, double eps = kDefaultEps);
AnyModel load_model(const std::string& path, double eps = kDefaultEps);

template <class S>
json serialize_model(const Model<S>& m);

}  // namespace paracontact

#endif

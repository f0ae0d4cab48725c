#include "paracontact/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace paracontact {

template <>
json scalar_to_json<Rational>(const Rational& x) {
  return x.str();
}

template <>
json scalar_to_json<double>(const double& x) {
  return x;
}

template <>
Rational scalar_from_json<Rational>(const json& j) {
  if (j.is_string()) return scalar_traits<Rational>::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  throw Error(ErrorKind::ParseError,
              "rational entries must be integers or \"p/q\" strings, got " + j.dump());
}

template <>
double scalar_from_json<double>(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return scalar_traits<double>::from_string(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected a number, got " + j.dump());
}

template <class S>
json matrix_to_json(const Mat<S>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json<S>(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
json vector_to_json(const Vec<S>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json<S>(v(i)));
  return out;
}

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return obj.at(key);
}

template <class S>
Mat<S> read_matrix(const json& j, int d, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must have " + std::to_string(d) + " rows");
  Mat<S> m(d, d);
  for (int r = 0; r < d; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + " row " + std::to_string(r) +
                                                    " must have " + std::to_string(d) + " entries");
    for (int c = 0; c < d; ++c) m(r, c) = scalar_from_json<S>(row[c]);
  }
  return m;
}

template <class S>
Vec<S> read_vector(const json& j, int d, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must have " + std::to_string(d) + " entries");
  Vec<S> v(d);
  for (int i = 0; i < d; ++i) v(i) = scalar_from_json<S>(j[i]);
  return v;
}

template <class S>
Model<S> read_model(const json& doc, double eps) {
  const json& dim_j = field(doc, "dimension");
  if (!dim_j.is_number_integer()) throw Error(ErrorKind::ParseError, "dimension must be an integer");
  const int d = dim_j.get<int>();
  if (d < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    for (const auto& l : doc.at("basis")) {
      if (!l.is_string()) throw Error(ErrorKind::ParseError, "basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  FrameAlgebra<S> alg(d, labels);
  std::set<std::pair<int, int>> seen;
  if (doc.contains("brackets")) {
    const json& brackets = doc.at("brackets");
    if (!brackets.is_array()) throw Error(ErrorKind::ParseError, "brackets must be an array");
    for (const auto& b : brackets) {
      const json& ij = field(b, "i");
      const json& jj = field(b, "j");
      if (!ij.is_number_integer() || !jj.is_number_integer())
        throw Error(ErrorKind::ParseError, "bracket indices must be integers");
      int i = ij.get<int>(), j = jj.get<int>();
      if (i < 0 || j < 0 || i >= d || j >= d)
        throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
      if (i >= j) throw Error(ErrorKind::ParseError, "brackets must be listed with i < j");
      if (!seen.insert({i, j}).second)
        throw Error(ErrorKind::ParseError, "duplicate bracket (" + std::to_string(i) + "," + std::to_string(j) + ")");
      const json& res = field(b, "result");
      if (!res.is_object()) throw Error(ErrorKind::ParseError, "bracket result must be an object");
      Vec<S> v = Vec<S>::Zero(d);
      for (auto it = res.begin(); it != res.end(); ++it) {
        int k = -1;
        try {
          std::size_t used = 0;
          k = std::stoi(it.key(), &used);
          if (used != it.key().size()) k = -1;
        } catch (const std::exception&) {
        }
        if (k < 0 || k >= d)
          throw Error(ErrorKind::DimensionMismatch, "bracket component '" + it.key() + "' out of range");
        v(k) = scalar_from_json<S>(it.value());
      }
      alg.set_bracket(i, j, v);
    }
  }
  const json& st = field(doc, "structure");
  const std::string kind_s = field(st, "kind").get<std::string>();
  StructureKind kind;
  if (kind_s == "paracontact")
    kind = StructureKind::paracontact;
  else if (kind_s == "contact")
    kind = StructureKind::contact;
  else
    throw Error(ErrorKind::ParseError, "structure kind must be 'paracontact' or 'contact'");
  Mat<S> phi = read_matrix<S>(field(st, "phi"), d, "phi");
  Vec<S> xi = read_vector<S>(field(st, "xi"), d, "xi");
  Mat<S> gram = read_matrix<S>(field(st, "gram"), d, "gram");
  std::optional<Vec<S>> eta;
  if (st.contains("eta")) eta = read_vector<S>(st.at("eta"), d, "eta");
  std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : std::string();
  Model<S> m = make_model<S>(std::move(alg), kind, phi, xi, gram, eta, name, eps);
  if (doc.contains("params")) {
    for (auto it = doc.at("params").begin(); it != doc.at("params").end(); ++it)
      m.params[it.key()] = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  }
  return m;
}

}  // namespace

AnyModel parse_model(const std::string& document, double eps) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    std::string mode = doc.contains("scalars") ? doc.at("scalars").get<std::string>() : "rational";
    if (mode == "rational") return read_model<Rational>(doc, eps);
    if (mode == "float64") return read_model<double>(doc, eps);
    throw Error(ErrorKind::ParseError, "scalars must be 'rational' or 'float64'");
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

AnyModel load_model(const std::string& path, double eps) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str(), eps);
}

template <class S>
json serialize_model(const Model<S>& m) {
  const int d = m.dim();
  json doc;
  doc["dimension"] = d;
  doc["scalars"] = scalar_traits<S>::mode == ScalarMode::rational ? "rational" : "float64";
  doc["basis"] = m.algebra.labels();
  json brackets = json::array();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec<S> v = m.algebra.bracket(i, j);
      json res = json::object();
      for (int k = 0; k < d; ++k)
        if (v(k) != S(0)) res[std::to_string(k)] = scalar_to_json<S>(v(k));
      if (!res.empty()) brackets.push_back({{"i", i}, {"j", j}, {"result", res}});
    }
  doc["brackets"] = brackets;
  doc["structure"] = {{"kind", kind_name(m.structure.kind)},
                      {"phi", matrix_to_json<S>(m.phi())},
                      {"xi", vector_to_json<S>(m.xi())},
                      {"gram", matrix_to_json<S>(m.gram())},
                      {"eta", vector_to_json<S>(m.eta())}};
  if (!m.name.empty()) doc["name"] = m.name;
  if (!m.params.empty()) doc["params"] = m.params;
  return doc;
}

#define PARACONTACT_INSTANTIATE(S)                       \
  template json matrix_to_json<S>(const Mat<S>&);        \
  template json vector_to_json<S>(const Vec<S>&);        \
  template json serialize_model<S>(const Model<S>&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact

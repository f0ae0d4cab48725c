#include "paracontact/report.hpp"

#include <cmath>
#include <sstream>

namespace paracontact {

namespace {

json signature_json(const Signature& s) {
  json j;
  j["positive"] = s.positive;
  j["negative"] = s.negative;
  j["zero"] = s.zero;
  return j;
}

template <class S>
json optional_scalar(const std::optional<S>& x) {
  return x ? scalar_to_json<S>(*x) : json(nullptr);
}

template <class S>
json vectors_json(const std::vector<Vec<S>>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json<S>(v));
  return out;
}

template <class S>
json normality_json(const Model<S>& m) {
  const auto N = nijenhuis(m);
  json j;
  j["is_normal"] = N.is_normal;
  j[m.structure.kind == StructureKind::paracontact ? "para_sasakian" : "sasakian"] = N.is_sasakian;
  j["residual"] = scalar_to_json<S>(N.max_residual);
  return j;
}

template <class S>
json ricci_json(const Geometry<S>& geo, const NullityReport<S>& rep) {
  json j;
  j["Q"] = matrix_to_json<S>(geo.ric.Q);
  j["scalar"] = scalar_to_json<S>(geo.ric.scalar);
  if (geo.model.structure.kind != StructureKind::paracontact || !rep.is_nullity) return j;
  if (rep.cls == NullityClass::equal) {
    j["formula"] = "not applicable at kappa = -1";
    return j;
  }
  const auto f = ricci_formula(geo, rep);
  j["coefficient_2n_minus_2"] = scalar_to_json<S>(f.coefficient_low);
  j["coefficient_2n_plus_2"] = scalar_to_json<S>(f.coefficient_high);
  j["low_matches"] = f.low_matches;
  j["high_matches"] = f.high_matches;
  j["eta_einstein"] = f.eta_einstein;
  j["einstein"] = f.einstein;
  return j;
}

template <class S>
json sectional_json(const Geometry<S>& geo) {
  const auto& m = geo.model;
  const int d = m.dim();
  const auto& labels = m.algebra.labels();
  json rows = json::array();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      json row;
      row["plane"] = json::array({labels[i], labels[j]});
      try {
        row["K"] = scalar_to_json<S>(
            sectional_curvature(geo.R, unit_vector<S>(d, i), unit_vector<S>(d, j), m.eps));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegeneratePlane) throw;
        row["K"] = nullptr;
        row["note"] = "degenerate plane";
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

template <class S>
json distribution_json(const DistributionBasis<S>& b) {
  json j;
  j["basis"] = vectors_json<S>(b.vectors);
  j["signature"] = signature_json(b.signature);
  j["residual"] = scalar_to_json<S>(b.eigen_residual);
  return j;
}

template <class S>
json foliations_json(const Geometry<S>& geo, const NullityReport<S>& rep) {
  json j;
  const bool above = rep.cls == NullityClass::above;
  j["lambda"] = scalar_to_json<S>(require_lambda(rep));

  const auto P = projectors(geo, rep);
  json pj;
  pj["P0"] = matrix_to_json<S>(P.P0);
  pj["P_plus"] = matrix_to_json<S>(P.P_plus);
  pj["P_minus"] = matrix_to_json<S>(P.P_minus);
  pj["residual"] = scalar_to_json<S>(P.algebra_residual);
  j["projectors"] = std::move(pj);

  std::vector<DistributionKind> kinds = {DistributionKind::D_plus, DistributionKind::D_minus};
  if (above) {
    kinds.push_back(DistributionKind::D_h_pos);
    kinds.push_back(DistributionKind::D_h_neg);
  } else {
    kinds.push_back(DistributionKind::D_phih_pos);
    kinds.push_back(DistributionKind::D_phih_neg);
  }
  json dists, pangs;
  for (auto k : kinds) {
    const auto b = distribution_basis(geo, rep, k);
    dists[distribution_name(k)] = distribution_json(b);
    json pg;
    try {
      const auto f = pang_invariant(geo, rep, b);
      pg["defining"] = matrix_to_json<S>(f.defining);
      pg["closed_form"] = f.closed_tag;
      pg["residual"] = scalar_to_json<S>(f.residual);
      pg["signature"] = signature_json(f.signature);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInvolutive) throw;
      pg["involutive"] = false;
    }
    pangs[distribution_name(k)] = std::move(pg);
  }
  j["distributions"] = std::move(dists);
  j["pang"] = std::move(pangs);

  const auto D = definiteness(geo, rep);
  json dj;
  dj["verdict"] = definiteness_name(D.verdict);
  dj["index"] = D.index;
  dj["from_pang"] = definiteness_name(D.from_pang);
  dj["pang_plus_signature"] = signature_json(D.pang_plus);
  dj["pang_minus_signature"] = signature_json(D.pang_minus);
  j["definiteness"] = std::move(dj);

  const auto pb = phi_basis(geo, rep);
  json bj;
  bj["r"] = pb.r;
  bj["s"] = pb.s;
  bj["normalized"] = pb.normalized;
  bj["X"] = vectors_json<S>(pb.xs);
  bj["Y"] = vectors_json<S>(pb.ys);
  if (!pb.notes.empty()) bj["notes"] = pb.notes;
  j["phi_basis"] = std::move(bj);

  if (above) {
    const auto L = libermann_map(geo, rep);
    json lj;
    lj["Lambda_D_plus"] = matrix_to_json<S>(L.lambda_plus);
    lj["Lambda_D_minus"] = matrix_to_json<S>(L.lambda_minus);
    lj["square_residual"] = scalar_to_json<S>(L.square_residual);
    lj["kernel_residual"] = scalar_to_json<S>(L.kernel_residual);
    lj["relation_residual"] = scalar_to_json<S>(L.relation_residual);
    j["libermann"] = std::move(lj);
  }

  const auto G = geodesy_umbilicity(geo, rep);
  json gj;
  if (above) {
    gj["totally_geodesic"] = is_zero(G.geodesic_residual, geo.model.eps);
    gj["residual"] = scalar_to_json<S>(G.geodesic_residual);
  } else {
    gj["totally_umbilical"] = is_zero(G.umbilic_residual, geo.model.eps);
    gj["residual"] = scalar_to_json<S>(G.umbilic_residual);
    gj["mean_curvature"] = vectors_json<S>(G.mean_curvature);
    gj["cross_residual"] = scalar_to_json<S>(G.cross_residual);
  }
  j["geodesy"] = std::move(gj);
  return j;
}

template <class S>
json foliations_section(const Geometry<S>& geo, const NullityReport<S>& rep) {
  if (geo.model.structure.kind != StructureKind::paracontact) return json(nullptr);
  json j;
  if (!rep.is_nullity || rep.cls == NullityClass::equal) {
    j["applicable"] = false;
    j["note"] = rep.is_nullity ? "kappa = -1" : "not a (kappa, mu) model";
    return j;
  }
  if constexpr (scalar_traits<S>::exact) {
    if (!rep.lambda) {
      const Model<double> fm = convert_model<double, S>(geo.model);
      const auto fgeo = compute_geometry(fm);
      j = foliations_json(fgeo, solve_nullity(fgeo));
      j["note"] = "sqrt|1+kappa| is irrational; computed in floating point";
      return j;
    }
  }
  return foliations_json(geo, rep);
}

template <class S>
json boeckx_json(const NullityReport<S>& rep) {
  if (!rep.is_nullity || rep.kappa >= S(1)) return json(nullptr);
  try {
    return scalar_to_json<S>(boeckx_invariant(rep));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InexactRoot) throw;
    return (1 - to_double(rep.mu_or_zero()) / 2) / std::sqrt(1 - to_double(rep.kappa));
  }
}

void render(std::ostringstream& os, const json& j, int indent);

bool is_flat_array(const json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string flat_text(const json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  return s + "]";
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!v.is_structured()) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() && is_flat_array(v)) {
        os << pad << k << ": " << flat_text(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_structured()) {
        os << pad << "- " << scalar_text(v) << "\n";
      } else if (v.is_array() && is_flat_array(v)) {
        os << pad << flat_text(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

template <class S>
json validation_json(const ValidationReport<S>& rep) {
  json j;
  j["pass"] = rep.pass();
  json axioms = json::array();
  for (const auto& e : rep.entries) {
    json a;
    a["axiom"] = e.axiom;
    a["pass"] = e.pass;
    a["residual"] = scalar_to_json<S>(e.residual);
    axioms.push_back(std::move(a));
  }
  j["axioms"] = std::move(axioms);
  j["signature"] = signature_json(rep.signature);
  return j;
}

template <class S>
json nullity_json(const NullityReport<S>& rep) {
  json j;
  j["is_nullity"] = rep.is_nullity;
  j["kappa"] = scalar_to_json<S>(rep.kappa);
  j["mu"] = rep.mu ? scalar_to_json<S>(*rep.mu) : json("indeterminate");
  j["lambda"] = optional_scalar<S>(rep.lambda);
  if (!rep.lambda) j["lambda_approx"] = rep.lambda_approx;
  j["class"] = class_name(rep.cls);
  j["h_zero"] = rep.h_zero;
  j["residual"] = scalar_to_json<S>(rep.residual_squared);
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

template <class S>
json identity_json(const IdentityResult<S>& r) {
  json j;
  j["applicable"] = r.applicable;
  j["pass"] = r.pass;
  j["residual"] = scalar_to_json<S>(r.max_residual);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

template <class S>
std::vector<IdentityResult<S>> all_identities(const Geometry<S>& geo, const NullityReport<S>& rep) {
  auto rows = general_identities(geo);
  auto suite = identity_suite(geo, rep);
  rows.insert(rows.end(), suite.begin(), suite.end());
  if (geo.model.structure.kind != StructureKind::paracontact) return rows;
  if (!rep.is_nullity || rep.cls == NullityClass::equal) {
    rows.push_back(not_applicable<S>("RXYZW", "requires kappa != -1"));
    rows.push_back(not_applicable<S>("RXYZW2", "requires kappa != -1"));
  } else {
    const bool above = rep.cls == NullityClass::above;
    const S r = explicit_curvature_residual(geo, rep);
    rows.push_back(above ? residual_result<S>("RXYZW", r, geo.model.eps)
                         : not_applicable<S>("RXYZW", "kappa < -1"));
    rows.push_back(above ? not_applicable<S>("RXYZW2", "kappa > -1")
                         : residual_result<S>("RXYZW2", r, geo.model.eps));
  }
  auto fol = foliation_identities(geo, rep);
  rows.insert(rows.end(), fol.begin(), fol.end());
  return rows;
}

template <class S>
json identities_json(const std::vector<IdentityResult<S>>& rows) {
  json j = json::object();
  for (const auto& r : rows) j[r.tag] = identity_json(r);
  return j;
}

template <class S>
json analysis_report(const Model<S>& m) {
  json j;
  json mj;
  mj["name"] = m.name;
  mj["kind"] = kind_name(m.structure.kind);
  mj["dim"] = m.dim();
  mj["scalars"] = scalar_traits<S>::exact ? "rational" : "float";
  if (!m.params.empty()) mj["params"] = m.params;
  j["model"] = std::move(mj);

  const auto v = validate_structure(m);
  j["validation"] = validation_json(v);
  if (!v.pass()) return j;

  j["normality"] = normality_json(m);
  const auto geo = compute_geometry(m);
  const auto rep = solve_nullity(geo);
  j["nullity"] = nullity_json(rep);
  if (m.structure.kind == StructureKind::contact) j["boeckx_invariant"] = boeckx_json(rep);
  j["identities"] = identities_json(all_identities(geo, rep));
  j["ricci"] = ricci_json(geo, rep);
  j["sectional"] = sectional_json(geo);
  j["foliations"] = foliations_section(geo, rep);
  j["integrable"] = m.structure.kind == StructureKind::paracontact ? json(is_integrable(geo)) : json(nullptr);
  return j;
}

template <class S>
json transform_json(const TransformResult<S>& t) {
  json j;
  j["construction"] = t.construction;
  j["pass"] = t.pass();
  j["predicted"] = {{"kappa", optional_scalar<S>(t.predicted_kappa)}, {"mu", optional_scalar<S>(t.predicted_mu)}};
  j["verified"] = nullity_json(t.verified);
  json checks = json::object();
  for (const auto& c : t.checks) checks[c.tag] = identity_json(c);
  j["checks"] = std::move(checks);
  if (!t.comparisons.empty()) {
    json comps = json::object();
    for (const auto& c : t.comparisons) comps[c.tag] = identity_json(c);
    j["comparisons"] = std::move(comps);
  }
  if (!t.notes.empty()) j["notes"] = t.notes;
  j["model"] = serialize_model(t.output);
  return j;
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

#define PARACONTACT_INSTANTIATE(S)                                                                  \
  template json validation_json<S>(const ValidationReport<S>&);                                    \
  template json nullity_json<S>(const NullityReport<S>&);                                          \
  template json identity_json<S>(const IdentityResult<S>&);                                        \
  template std::vector<IdentityResult<S>> all_identities<S>(const Geometry<S>&, const NullityReport<S>&); \
  template json identities_json<S>(const std::vector<IdentityResult<S>>&);                         \
  template json analysis_report<S>(const Model<S>&);                                               \
  template json transform_json<S>(const TransformResult<S>&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact

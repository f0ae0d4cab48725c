#include "paracontact/transforms.hpp"

#include "paracontact/structure.hpp"

namespace paracontact {

namespace {

template <class S>
void require_kind(const Model<S>& m, StructureKind k, const char* what) {
  if (m.structure.kind != k)
    throw Error(ErrorKind::WrongKind, std::string(what) + " expects a " + kind_name(k) + " model");
}

template <class S>
Model<S> derived_model(const Model<S>& from, StructureKind kind, const Mat<S>& phi, const Vec<S>& xi,
                       const Mat<S>& gram, const Vec<S>& eta, const std::string& construction) {
  auto out = make_model<S>(from.algebra, kind, phi, xi, gram, eta, construction + "(" + from.name + ")", from.eps);
  out.params = from.params;
  out.params["construction"] = construction;
  return out;
}

template <class S>
IdentityResult<S> validation_row(const Model<S>& m) {
  auto v = validate_structure(m);
  IdentityResult<S> r;
  r.tag = "validation";
  r.pass = v.pass();
  for (const auto& e : v.entries) {
    if (e.residual > r.max_residual) r.max_residual = e.residual;
    if (!e.pass) r.note += (r.note.empty() ? "" : ", ") + e.axiom;
  }
  return r;
}

// Validates the output, refits its constants and compares them with the prediction.
template <class S>
Geometry<S> finish(TransformResult<S>& t) {
  t.checks.push_back(validation_row(t.output));
  if (!t.checks.back().pass)
    throw Error(ErrorKind::PostconditionFailed,
                t.construction + " produced an invalid structure (" + t.checks.back().note + ")");
  auto geo = compute_geometry(t.output);
  t.verified = solve_nullity(geo);
  const double eps = t.output.eps;
  if (t.predicted_kappa) {
    t.checks.push_back(residual_result<S>("kappa", abs_value<S>(S(t.verified.kappa - *t.predicted_kappa)), eps,
                                          "refit " + to_string(t.verified.kappa)));
  }
  if (t.predicted_mu) {
    if (t.verified.mu)
      t.checks.push_back(residual_result<S>("mu", abs_value<S>(S(*t.verified.mu - *t.predicted_mu)), eps,
                                            "refit " + to_string(*t.verified.mu)));
    else
      t.notes.push_back("mu indeterminate on the output (h = 0)");
  }
  if (t.predicted_kappa || t.predicted_mu) {
    IdentityResult<S> r;
    r.tag = "nullity";
    r.pass = t.verified.is_nullity;
    r.max_residual = t.verified.residual_squared;
    t.checks.push_back(r);
  }
  return geo;
}

template <class S>
S require_root(const S& x, const char* what) {
  auto r = scalar_traits<S>::sqrt(x);
  if (!r) throw Error(ErrorKind::InexactRoot, std::string(what) + " = sqrt(" + to_string(x) + ") is irrational");
  return *r;
}

template <class S>
struct Definite {
  Geometry<S> geo;
  NullityReport<S> rep;
  Definiteness def;
};

template <class S>
Definite<S> definite_input(const Model<S>& m, NullityClass wanted, const char* what) {
  require_kind(m, StructureKind::paracontact, what);
  auto geo = compute_geometry(m);
  auto rep = solve_nullity(geo);
  if (!rep.is_nullity) throw Error(ErrorKind::NotNullity, std::string(what) + " needs a (kappa, mu) model");
  if (rep.cls != wanted)
    throw Error(ErrorKind::ClassBoundary, std::string(what) + " needs kappa " +
                                              (wanted == NullityClass::above ? "> -1" : "< -1"));
  auto d = definiteness(geo, rep);
  if (d.verdict == Definiteness::indefinite)
    throw Error(ErrorKind::NotDefinite, std::string(what) + " needs a positive or negative definite model");
  return {std::move(geo), std::move(rep), d.verdict};
}

}  // namespace

template <class S>
IdentityResult<S> sasakian_check(const Geometry<S>& geo) {
  const auto& m = geo.model;
  S worst = max_abs(geo.h);
  S n = nijenhuis(m).max_residual;
  if (n > worst) worst = n;
  const auto basis = standard_basis<S>(m.dim());
  auto r = check_on_tuples<S, 2>("sasakian", basis, m.eps, [&](const Vec<S>& X, const Vec<S>& Y) {
    return Vec<S>(geo.R.apply(X, Y, m.xi()) - (m.eta_of(Y) * X - m.eta_of(X) * Y));
  });
  if (worst > r.max_residual) r.max_residual = worst;
  r.pass = is_zero(r.max_residual, m.eps);
  return r;
}

template <class S>
TransformResult<S> d_homothetic(const Model<S>& m, const S& alpha) {
  require_kind(m, StructureKind::paracontact, "D-homothetic deformation");
  if (!(alpha > S(0))) throw Error(ErrorKind::InvalidAlpha, "alpha must be positive, got " + to_string(alpha));
  const S one(1);
  auto src = compute_geometry(m);
  auto src_rep = solve_nullity(src);
  TransformResult<S> t;
  t.construction = "d_homothetic";
  const Vec<S> eta = alpha * m.eta();
  const Vec<S> xi = m.xi() / alpha;
  const Mat<S> gram = alpha * m.gram() + alpha * (alpha - one) * m.eta() * m.eta().transpose();
  t.output = derived_model(m, StructureKind::paracontact, m.phi(), xi, gram, eta, "d_homothetic");
  t.output.params["alpha"] = to_string(alpha);
  if (src_rep.is_nullity) {
    t.predicted_kappa = (src_rep.kappa + one - alpha * alpha) / (alpha * alpha);
    if (src_rep.mu) t.predicted_mu = (*src_rep.mu + S(2) * alpha - S(2)) / alpha;
  }
  auto geo = finish(t);
  const double eps = m.eps;
  t.checks.push_back(residual_result<S>("H BAR", max_abs(Mat<S>(geo.h - src.h / alpha)), eps));
  const auto basis = standard_basis<S>(m.dim());
  const Mat<S> ph = m.phi() * src.h;
  auto g = [&](const Vec<S>& a, const Vec<S>& b) { return m.g(a, b); };
  t.checks.push_back(check_on_tuples<S, 2>("CONNECTION", basis, eps, [&](const Vec<S>& X, const Vec<S>& Y) {
    Vec<S> rhs = src.lc.apply(X, Y) + (alpha - one) / alpha * g(Vec<S>(ph * X), Y) * m.xi() -
                 (alpha - one) * (m.eta_of(Y) * (m.phi() * X) + m.eta_of(X) * (m.phi() * Y));
    return Vec<S>(geo.lc.apply(X, Y) - rhs);
  }));
  std::vector<Mat<S>> dphi;
  for (const auto& e : basis) dphi.push_back(covariant_derivative(src.lc, m.phi(), e));
  auto along = [&](const Vec<S>& u) {
    Mat<S> out = Mat<S>::Zero(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i) out += u(i) * dphi[static_cast<std::size_t>(i)];
    return out;
  };
  t.checks.push_back(check_on_tuples<S, 2>("CURVATURE", basis, eps, [&](const Vec<S>& X, const Vec<S>& Y) {
    const S ex = m.eta_of(X), ey = m.eta_of(Y);
    Vec<S> rhs = src.R.apply(X, Y, m.xi()) -
                 (alpha - one) * Vec<S>(along(X) * Y - along(Y) * X + ey * Vec<S>(X - src.h * X) -
                                        ex * Vec<S>(Y - src.h * Y)) -
                 (alpha - one) * (alpha - one) * Vec<S>(ey * X - ex * Y);
    return Vec<S>(alpha * geo.R.apply(X, Y, xi) - rhs);
  }));
  if (src_rep.is_nullity) {
    IdentityResult<S> r;
    r.tag = "class_preserved";
    r.pass = t.verified.is_nullity && t.verified.cls == src_rep.cls;
    r.note = std::string(class_name(src_rep.cls)) + " -> " + class_name(t.verified.cls);
    t.checks.push_back(r);
  }
  return t;
}

template <class S>
TransformResult<S> paracontact_from_contact(const Model<S>& m, ContactToParaMode mode,
                                            std::type_identity_t<std::optional<S>> c) {
  require_kind(m, StructureKind::contact, "paracontact_from_contact");
  auto geo = compute_geometry(m);
  auto rep = solve_nullity(geo);
  if (!rep.is_nullity) throw Error(ErrorKind::NotNullity, "input is not a contact (kappa, mu) model");
  const S one(1), two(2);
  if (rep.h_zero || rep.kappa == one) throw Error(ErrorKind::SasakianInput, "input is Sasakian (kappa = 1)");
  if (rep.kappa > one) throw Error(ErrorKind::InvalidParams, "contact (kappa, mu) models have kappa <= 1");
  const S mu = rep.mu_or_zero();
  TransformResult<S> t;
  const Mat<S> ee = m.eta() * m.eta().transpose();
  if (mode == ContactToParaMode::via_h) {
    t.construction = "capar1";
    const S s = require_root<S>(S(one - rep.kappa), "sqrt(1 - kappa)");
    const Mat<S> phi = geo.h / s;
    const Mat<S> gram = geo.deta * geo.h / s + ee;
    t.output = derived_model(m, StructureKind::paracontact, phi, m.xi(), gram, m.eta(), t.construction);
    const S q = one - mu / two;
    t.predicted_kappa = rep.kappa - two + q * q;
    t.predicted_mu = two;
  } else {
    t.construction = "sphere1";
    if (!c) throw Error(ErrorKind::InvalidParams, "via_phih needs the constant c");
    if (!near(rep.kappa, S(*c * (two - *c)), m.eps) || !near(mu, S(-two * *c), m.eps))
      throw Error(ErrorKind::ConstraintViolation, "constants are not (c(2-c), -2c) for c = " + to_string(*c));
    const S s = abs_value<S>(S(one - *c));
    const Mat<S> ph = m.phi() * geo.h;
    const Mat<S> gram = geo.deta * ph / s + ee;
    t.output = derived_model(m, StructureKind::paracontact, Mat<S>(ph / s), m.xi(), gram, m.eta(), t.construction);
    t.output.params["c"] = to_string(*c);
    t.predicted_kappa = (one + *c) * (one + *c) - one;
    t.predicted_mu = two * (one - abs_value<S>(S(*c - one)));
  }
  finish(t);
  return t;
}

template <class S>
TransformResult<S> contact_from_paracontact_pos(const Model<S>& m) {
  auto in = definite_input(m, NullityClass::above, "principal1");
  const S one(1), two(2);
  const S lam = require_lambda(in.rep);
  const S sigma = in.def == Definiteness::positive ? S(-1) : one;
  const S mu_t = in.rep.mu_or_zero();
  TransformResult<S> t;
  t.construction = "principal1";
  const Mat<S> phi = sigma * m.phi() * in.geo.h / lam;
  const Mat<S> gram = -in.geo.deta * phi + m.eta() * m.eta().transpose();
  t.output = derived_model(m, StructureKind::contact, phi, m.xi(), gram, m.eta(), t.construction);
  t.notes.push_back(std::string("sign chosen for a ") + definiteness_name(in.def) + " definite input");
  const bool sasakian = near(mu_t, two, m.eps);
  if (!sasakian) {
    const S q = one - mu_t / two;
    t.predicted_kappa = one - q * q;
    t.predicted_mu = two * (one + sigma * lam);
  }
  auto geo = finish(t);
  if (sasakian) {
    t.checks.push_back(sasakian_check(geo));
  } else {
    const Mat<S> h_law = sigma * (two - mu_t) * in.geo.h / (two * lam);
    t.checks.push_back(residual_result<S>("passo2", max_abs(Mat<S>(geo.h - h_law)), m.eps));
  }
  return t;
}

template <class S>
std::pair<S, S> contact_neg_constants(const S& kappa, const S& mu) {
  const S q = S(1) - mu / S(2);
  return {kappa + S(2) - q * q, S(2)};
}

template <class S>
TransformResult<S> contact_from_paracontact_neg(const Model<S>& m) {
  auto in = definite_input(m, NullityClass::below, "def2");
  const S lam = require_lambda(in.rep);
  const S sigma = in.def == Definiteness::positive ? S(1) : S(-1);
  const S mu_t = in.rep.mu_or_zero();
  TransformResult<S> t;
  t.construction = "def2";
  const Mat<S> phi = sigma * in.geo.h / lam;
  const Mat<S> gram = -in.geo.deta * phi + m.eta() * m.eta().transpose();
  t.output = derived_model(m, StructureKind::contact, phi, m.xi(), gram, m.eta(), t.construction);
  auto [k, mu] = contact_neg_constants(in.rep.kappa, mu_t);
  t.predicted_kappa = k;
  t.predicted_mu = mu;
  auto geo = finish(t);
  const S q = S(1) - mu_t / S(2);
  const S nu2 = q * q - S(1) - in.rep.kappa;
  t.checks.push_back(
      residual_result<S>("h_eigenvalues", max_abs(Mat<S>(geo.h * geo.h - nu2 * t.output.pi())), m.eps));
  return t;
}

template <class S>
TransformResult<S> contact_family(const Model<S>& m, const S& a, const S& b) {
  auto in = definite_input(m, NullityClass::above, "contact_family");
  const S one(1), two(2);
  const S c = two * (in.rep.kappa + one);
  if (!near(S(a * b), S(two * c), m.eps))
    throw Error(ErrorKind::ConstraintViolation, "ab = " + to_string(S(a * b)) + " but 4(1+kappa) = " +
                                                    to_string(S(two * c)));
  const bool positive = in.def == Definiteness::positive;
  if (positive ? !(a > S(0) && b > S(0)) : !(a < S(0) && b < S(0)))
    throw Error(ErrorKind::ConstraintViolation,
                std::string("a and b must both be ") + (positive ? "positive" : "negative") + " here");
  auto [Pp, Pm] = phi_projectors(m);
  const Mat<S>& h = in.geo.h;
  const Mat<S> hg = h.transpose() * m.gram();
  TransformResult<S> t;
  t.construction = "family";
  const Mat<S> phi = (b * h * Pp - a * h * Pm) / c;
  const Mat<S> gram = Mat<S>(Pp.transpose() * hg * Pp) * (two / a) + Mat<S>(Pm.transpose() * hg * Pm) * (two / b) +
                      m.eta() * m.eta().transpose();
  t.output = derived_model(m, StructureKind::contact, phi, m.xi(), gram, m.eta(), t.construction);
  t.output.params["a"] = to_string(a);
  t.output.params["b"] = to_string(b);
  const S mu_t = in.rep.mu_or_zero();
  const bool mu2 = near(mu_t, two, m.eps);
  if (mu2) t.predicted_kappa = one - (a - b) * (a - b) / S(16);
  auto geo = finish(t);
  if (a == b) {
    t.comparisons.push_back(residual_result<S>("k_contact", max_abs(geo.h), m.eps, "h = 0"));
    const Mat<S> law = a * (mu_t - two) * h / (two * c);
    t.checks.push_back(residual_result<S>("family_h", max_abs(Mat<S>(geo.h - law)), m.eps,
                                          "h = a(mu-2)h~/(4(1+kappa)) for a = b"));
    const S literal = two * (in.rep.kappa + one);
    if (!near(S(abs_value<S>(a)), literal, m.eps))
      t.notes.push_back("a = b = +-2(1+kappa) = +-" + to_string(literal) + " would violate ab = 4(1+kappa)");
  }
  if (mu2 && a != b) {
    if (t.verified.mu) {
      t.comparisons.push_back(residual_result<S>(
          "mu_main1", abs_value<S>(S(*t.verified.mu - (two - (a - b) / two))), m.eps, "mu = 2 - (a-b)/2"));
      t.comparisons.push_back(residual_result<S>(
          "mu_costanti0", abs_value<S>(S(*t.verified.mu - (two - (a + b) / two))), m.eps, "mu = 2 - (a+b)/2"));
    }
  } else if (!mu2) {
    t.notes.push_back("mu != 2: the output is a contact metric structure, nullity not asserted");
  }
  return t;
}

template <class S>
S boeckx_invariant(const NullityReport<S>& rep) {
  if (rep.kind != StructureKind::contact) throw Error(ErrorKind::WrongKind, "Boeckx invariant needs a contact model");
  if (!rep.is_nullity) throw Error(ErrorKind::NotNullity, "Boeckx invariant needs a (kappa, mu) model");
  const S one(1);
  if (rep.kappa == one) throw Error(ErrorKind::SasakianInput, "Boeckx invariant is undefined for kappa = 1");
  if (rep.kappa > one) throw Error(ErrorKind::InvalidParams, "contact (kappa, mu) models have kappa <= 1");
  const S s = require_root<S>(S(one - rep.kappa), "sqrt(1 - kappa)");
  return (one - rep.mu_or_zero() / S(2)) / s;
}

template <class S>
S sphere_kappa(const S& c) {
  const S kappa = c * (S(2) - c);
  const S mu = S(-2) * c;
  const S q = S(1) - mu / S(2);
  return kappa - S(2) + q * q;
}

#define PARACONTACT_INSTANTIATE(S)                                                                            \
  template IdentityResult<S> sasakian_check<S>(const Geometry<S>&);                                           \
  template TransformResult<S> d_homothetic<S>(const Model<S>&, const S&);                                     \
  template TransformResult<S> paracontact_from_contact<S>(const Model<S>&, ContactToParaMode, std::optional<S>); \
  template TransformResult<S> contact_from_paracontact_pos<S>(const Model<S>&);                               \
  template std::pair<S, S> contact_neg_constants<S>(const S&, const S&);                                      \
  template TransformResult<S> contact_from_paracontact_neg<S>(const Model<S>&);                               \
  template TransformResult<S> contact_family<S>(const Model<S>&, const S&, const S&);                         \
  template S boeckx_invariant<S>(const NullityReport<S>&);                                                    \
  template S sphere_kappa<S>(const S&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact

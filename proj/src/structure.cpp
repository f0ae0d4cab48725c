#include "paracontact/structure.hpp"

namespace paracontact {

template <class S>
Mat<S> exterior_derivative_eta(const Model<S>& m) {
  const int d = m.dim();
  Mat<S> out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = -m.eta().dot(m.algebra.bracket(i, j)) / S(2);
  return out;
}

template <class S>
ValidationReport<S> validate_structure(const Model<S>& m) {
  ValidationReport<S> rep;
  const int d = m.dim();
  const int n = m.n();
  const bool para = m.structure.kind == StructureKind::paracontact;
  const double eps = m.eps;
  const Mat<S> I = Mat<S>::Identity(d, d);
  const Mat<S>& phi = m.phi();
  const Mat<S>& G = m.gram();
  const Mat<S> eta_xi = m.xi() * m.eta().transpose();
  auto add = [&](const std::string& name, const S& residual) {
    rep.entries.push_back({name, is_zero(residual, eps), residual});
  };

  add("odd_dimension", S(d % 2 == 1 ? 0 : 1));
  add("gram_symmetric", max_abs(Mat<S>(G - G.transpose())));
  add("eta_of_xi", abs_value<S>(S(m.eta_of(m.xi()) - S(1))));
  add("phi_xi", max_abs(Vec<S>(phi * m.xi())));
  add("eta_phi", max_abs(Vec<S>(phi.transpose() * m.eta())));
  add("eta_metric_dual", max_abs(Vec<S>(m.eta() - G * m.xi())));
  const Mat<S> phi2_expected = para ? Mat<S>(I - eta_xi) : Mat<S>(-I + eta_xi);
  add("phi_squared", max_abs(Mat<S>(phi * phi - phi2_expected)));
  if (para) {
    int dplus = d - rank<S>(Mat<S>(phi - I), eps);
    int dminus = d - rank<S>(Mat<S>(phi + I), eps);
    add("eigendistribution_dimensions", S(std::abs(dplus - n) + std::abs(dminus - n)));
  }
  add("phi_rank", S(std::abs(rank<S>(phi, eps) - 2 * n)));
  // g(phi X, phi Y) = -g(X,Y) + eta(X)eta(Y) (paracontact), g - eta⊗eta (contact).
  const Mat<S> ee = m.eta() * m.eta().transpose();
  const Mat<S> compat_expected = para ? Mat<S>(-G + ee) : Mat<S>(G - ee);
  add("metric_compatibility", max_abs(Mat<S>(phi.transpose() * G * phi - compat_expected)));
  rep.signature = signature_ldl<S>(G, eps);
  if (para) {
    add("signature", S(std::abs(rep.signature.positive - (n + 1)) +
                       std::abs(rep.signature.negative - n) + rep.signature.zero));
  } else {
    add("signature", S(std::abs(rep.signature.positive - d) + rep.signature.negative +
                       rep.signature.zero));
  }
  add("contact_form", max_abs(Mat<S>(exterior_derivative_eta(m) - G * phi)));
  return rep;
}

template <class S>
Mat<S> compute_h(const Model<S>& m) {
  const Mat<S> ad_xi = m.algebra.ad(m.xi());
  const Mat<S> h = (ad_xi * m.phi() - m.phi() * ad_xi) / S(2);
  const Mat<S>& G = m.gram();
  struct Check {
    const char* what;
    S residual;
  } checks[] = {
      {"g-symmetry", max_abs(Mat<S>(G * h - h.transpose() * G))},
      {"trace", abs_value<S>(S(h.trace()))},
      {"h xi = 0", max_abs(Vec<S>(h * m.xi()))},
      {"anticommutation with phi", max_abs(Mat<S>(h * m.phi() + m.phi() * h))},
  };
  for (const auto& c : checks)
    if (!is_zero(c.residual, m.eps))
      throw Error(ErrorKind::PostconditionFailed,
                  std::string("h fails ") + c.what + " (residual " + to_string(c.residual) + ")");
  return h;
}

template <class S>
NijenhuisResult<S> nijenhuis(const Model<S>& m) {
  const int d = m.dim();
  const Mat<S>& phi = m.phi();
  const Mat<S> deta = exterior_derivative_eta(m);
  const S sign = m.structure.kind == StructureKind::paracontact ? S(-2) : S(2);
  NijenhuisResult<S> out;
  out.max_residual = S(0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec<S> X = unit_vector<S>(d, i), Y = unit_vector<S>(d, j);
      Vec<S> pX = phi * X, pY = phi * Y;
      Vec<S> bracket_term = phi * (phi * m.algebra.bracket(X, Y)) + m.algebra.bracket(pX, pY) -
                            phi * m.algebra.bracket(pX, Y) - phi * m.algebra.bracket(X, pY);
      Vec<S> N = bracket_term + sign * deta(i, j) * m.xi();
      S r = max_abs(N);
      if (r > out.max_residual) out.max_residual = r;
      out.values.push_back(std::move(N));
    }
  out.is_normal = is_zero(out.max_residual, m.eps);
  out.is_sasakian = out.is_normal && validate_structure(m).pass();
  return out;
}

#define PARACONTACT_INSTANTIATE(S)                                        \
  template Mat<S> exterior_derivative_eta<S>(const Model<S>&);            \
  template ValidationReport<S> validate_structure<S>(const Model<S>&);    \
  template Mat<S> compute_h<S>(const Model<S>&);                          \
  template NijenhuisResult<S> nijenhuis<S>(const Model<S>&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact

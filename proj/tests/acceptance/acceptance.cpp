// One PASS/FAIL line per acceptance criterion, all in exact arithmetic.
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "paracontact/report.hpp"

using namespace paracontact;
using Q = Rational;

namespace {

Q q(long p, long d = 1) { return Q(p, d); }

Model<Q> fix_a(long a, long b) { return builtin_example<Q>("fix-a", {q(a), q(b)}); }
Model<Q> fix_b() { return builtin_example<Q>("fix-b", {}); }
Model<Q> fix_c() { return builtin_example<Q>("fix-c", {}); }

struct Analysis {
  Geometry<Q> geo;
  NullityReport<Q> rep;
};

Analysis analyse(const Model<Q>& m) {
  auto geo = compute_geometry(m);
  auto rep = solve_nullity(geo);
  return {std::move(geo), std::move(rep)};
}

Vec<Q> e(int d, int i) { return unit_vector<Q>(d, i); }

class Checker {
 public:
  // A failed expectation records the first message; later ones still run.
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

bool constants_are(const NullityReport<Q>& r, const Q& kappa, const Q& mu) {
  return r.is_nullity && r.kappa == kappa && r.mu && *r.mu == mu;
}

void criterion_1(Checker& c) {
  auto a = analyse(fix_a(2, 0));
  c.expect(constants_are(a.rep, q(0), q(4)), "(kappa, mu) != (0, 4)");
  c.expect(a.rep.lambda && *a.rep.lambda == q(1), "lambda != 1");
  c.expect(a.rep.cls == NullityClass::above, "class is not above");
  c.expect(definiteness(a.geo, a.rep).verdict == Definiteness::negative, "not negative definite");
}

void criterion_2(Checker& c) {
  auto a = analyse(fix_a(1, 2));
  c.expect(constants_are(a.rep, q(9, 16), q(1, 2)), "(kappa, mu) != (9/16, 1/2)");
  c.expect(a.rep.lambda && *a.rep.lambda == q(5, 4), "lambda != 5/4");
  auto t = contact_from_paracontact_pos(fix_a(1, 2));
  c.expect(t.pass(), "principal1 checks fail");
  c.expect(constants_are(t.verified, q(7, 16), q(9, 2)), "principal1 output does not refit to (7/16, 9/2)");
  c.expect(boeckx_invariant(t.verified) == q(-5, 3), "Boeckx invariant != -5/3");
}

void criterion_3(Checker& c) {
  auto a = analyse(fix_b());
  const auto& m = a.geo.model;
  const int d = m.dim();
  c.expect(constants_are(a.rep, q(-2), q(2)), "(kappa, mu) != (-2, 2)");
  c.expect(a.rep.cls == NullityClass::below, "class is not below");
  const int xi = 4;
  c.expect(m.xi() == e(d, xi), "xi is not the last basis vector");
  for (int i = 0; i < d; ++i)
    if (i != xi) c.expect(sectional_curvature(a.geo.R, e(d, i), e(d, xi)) == q(-2), "K(X, xi) != -2");
  const auto g = geodesy_umbilicity(a.geo, a.rep);
  c.expect(g.umbilic_residual == 0 && g.pass(m.eps), "umbilicity residual is nonzero");
  c.expect(definiteness(a.geo, a.rep).verdict == Definiteness::indefinite, "not indefinite");

  DistributionBasis<Q> hand;
  hand.kind = DistributionKind::D_plus;
  hand.vectors = {Vec<Q>(e(d, 0) + e(d, 2)), Vec<Q>(e(d, 1) + e(d, 3))};
  for (const auto& v : hand.vectors) c.expect(m.phi() * v == v, "hand basis is not in D+");
  const auto pang = pang_invariant(a.geo, a.rep, hand);
  Mat<Q> expected = Mat<Q>::Zero(2, 2);
  expected(0, 0) = q(-4);
  expected(1, 1) = q(4);
  c.expect(pang.defining == expected, "Pang form of D+ on {e1+e3, e2+e4} != diag(-4, 4)");
}

void criterion_4(Checker& c) {
  const auto m = fix_c();
  c.expect(validate_structure(m).pass(), "does not validate");
  const auto N = nijenhuis(m);
  c.expect(N.is_normal && N.is_sasakian, "not para-Sasakian");
  auto a = analyse(m);
  c.expect(a.rep.is_nullity && a.rep.kappa == q(-1), "kappa != -1");
  c.expect(!a.rep.mu, "mu is not indeterminate");
  const int d = m.dim();
  for (int i = 0; i < d; ++i)
    c.expect(a.geo.lc.apply(e(d, i), m.xi()) == Vec<Q>(-m.phi() * e(d, i)), "nabla xi != -phi");
}

void criterion_5(Checker& c) {
  const std::set<std::string> required = {
      "namlafibar", "FiL",        "Curvature2", "Curvature3", "nablaxi", "H2",         "Riczeta",
      "NAMLAFI",    "NAMLA_X_H",  "NMBLA_ZETAH", "nablah",    "nablah1", "formula8",   "R(X,zeta)Y",
      "RHZ",        "QFI-FIQ",    "KMU_QFI-FIQ", "curv",      "curvatura", "RXYZW",    "RXYZW2",
      "pang1",      "pang2",      "pang5",      "pang6",      "invariant1"};
  std::set<std::string> seen;
  for (const auto& m : {fix_a(2, 0), fix_a(1, 2), fix_b(), fix_c()}) {
    auto a = analyse(m);
    for (const auto& r : all_identities(a.geo, a.rep)) {
      if (!r.applicable) continue;
      seen.insert(r.tag);
      c.expect(r.pass && r.max_residual == 0, m.name + ": " + r.tag + " fails");
    }
  }
  for (const auto& tag : required) {
    if (tag == "nablah" || tag == "nablah1") {
      c.expect(seen.count("nablah") || seen.count("nablah1"), "nablah/nablah1 never applicable");
      continue;
    }
    c.expect(seen.count(tag) > 0, tag + " never applicable");
  }
}

void criterion_6(Checker& c) {
  for (const auto& m : {fix_a(2, 0), fix_b()}) {
    auto a = analyse(m);
    const auto F = explicit_curvature(a.geo, a.rep);
    const auto L = lower(a.geo.R);
    c.expect(F.values == L.values, m.name + ": explicit curvature differs");
  }
}

void criterion_7(Checker& c) {
  const auto a = fix_a(2, 0);
  auto t = d_homothetic(a, q(2));
  c.expect(t.pass(), "alpha = 2 checks fail");
  c.expect(constants_are(t.verified, q(-3, 4), q(3)), "alpha = 2 does not refit to (-3/4, 3)");
  c.expect(compute_h(t.output) == Mat<Q>(compute_h(a) / q(2)), "h bar != h / 2");

  auto id = d_homothetic(a, q(1));
  c.expect(id.output.phi() == a.phi() && id.output.gram() == a.gram() && id.output.xi() == a.xi() &&
               id.output.eta() == a.eta(),
           "alpha = 1 is not the identity");
  for (const auto& m : {fix_a(2, 0), fix_b()})
    for (const auto& alpha : {q(1, 2), q(2), q(3)}) {
      auto r = d_homothetic(m, alpha);
      const auto* kept = r.find("class_preserved");
      c.expect(r.pass() && kept && kept->pass, m.name + ": class changes for alpha = " + to_string(alpha));
    }
}

void criterion_8(Checker& c) {
  auto first = contact_from_paracontact_pos(fix_a(1, 2));
  auto back = paracontact_from_contact(first.output, ContactToParaMode::via_h);
  auto last = contact_from_paracontact_pos(back.output);
  c.expect(first.pass() && back.pass() && last.pass(), "a construction in the chain fails its checks");
  const auto& m = last.output;
  c.expect(compute_h(m).isZero(), "h != 0");
  c.expect(nijenhuis(m).is_normal, "not normal");
  auto a = analyse(m);
  const int d = m.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec<Q> lhs = a.geo.R.apply(e(d, i), e(d, j), m.xi());
      Vec<Q> rhs = m.eta_of(e(d, j)) * e(d, i) - m.eta_of(e(d, i)) * e(d, j);
      c.expect(lhs == rhs, "R_{XY} xi != eta(Y) X - eta(X) Y");
    }
  c.expect(sasakian_check(a.geo).pass, "Sasakian check fails");
}

void criterion_9(Checker& c) {
  auto a = analyse(fix_b());
  const auto f = ricci_formula(a.geo, a.rep);
  c.expect(f.low_matches != f.high_matches, "not exactly one coefficient matches");
  const Q coeff = f.low_matches ? f.coefficient_low : f.coefficient_high;
  const auto& m = a.geo.model;
  const int n = m.n();
  const Q kappa = a.rep.kappa, mu = *a.rep.mu;
  const Mat<Q> I = Mat<Q>::Identity(m.dim(), m.dim());
  const Mat<Q> etaxi = m.xi() * m.eta().transpose();
  const Mat<Q> Q_formula = (q(2) * (1 - n) + n * mu) * I + coeff * a.geo.h +
                           (q(2) * (n - 1) + n * (2 * kappa - mu)) * etaxi;
  c.expect(Q_formula == a.geo.ric.Q, "matching formula does not reproduce Q");
}

void criterion_10(Checker& c) {
  for (const auto& m : {fix_a(2, 0), fix_a(1, 2), fix_b(), fix_c()}) {
    auto a = analyse(m);
    const auto s = curvature_symmetries(a.geo.R);
    c.expect(s.antisym_first == 0 && s.antisym_second == 0 && s.pair_symmetry == 0 && s.bianchi == 0,
             m.name + ": curvature symmetries fail");
    if (a.rep.cls == NullityClass::equal) continue;
    c.expect(projectors(a.geo, a.rep).algebra_residual == 0, m.name + ": projector algebra fails");
    for (const auto& r : foliation_identities(a.geo, a.rep))
      if (r.tag.rfind("pang", 0) == 0 || r.tag == "invariant1")
        c.expect(!r.applicable || r.max_residual == 0, m.name + ": " + r.tag + " disagrees");
  }
  for (long cc : {-1, 0, 2}) c.expect(sphere_kappa(q(cc)) == q(4 * cc - 1), "sphere_kappa wrong");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Checker&)>> criteria[] = {
      {"FIX-A(2,0) constants, class and definiteness", criterion_1},
      {"FIX-A(1,2) constants, principal1 and Boeckx invariant", criterion_2},
      {"FIX-B constants, sectional curvature, umbilicity, definiteness", criterion_3},
      {"FIX-C para-Sasakian with nabla xi = -phi", criterion_4},
      {"identity suite on all fixtures", criterion_5},
      {"explicit curvature equals computed curvature", criterion_6},
      {"D-homothetic deformation", criterion_7},
      {"Sasakian round trip", criterion_8},
      {"Ricci coefficient adjudication", criterion_9},
      {"property batteries", criterion_10},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [title, run] : criteria) {
    Checker c;
    try {
      run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " " << index++ << " " << title;
    if (!c.ok()) std::cout << ": " << c.failure();
    std::cout << "\n";
    failures += c.ok() ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

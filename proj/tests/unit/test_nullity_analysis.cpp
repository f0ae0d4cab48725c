#include "paracontact/connection.hpp"
#include "paracontact/linalg.hpp"
#include "paracontact/nullity.hpp"
#include "test_helpers.hpp"

using namespace paracontact;
using namespace paracontact::testing;

namespace {

std::vector<Vec<Q>> columns(const Mat<Q>& m) {
  std::vector<Vec<Q>> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

// eigenspace of an operator A with A^2 = lam^2 on the horizontal part, sign picks +lam or -lam
std::vector<Vec<Q>> eigen_basis(const Model<Q>& m, const Mat<Q>& A, const Q& lam, int sign) {
  const int d = m.dim();
  Mat<Q> P = (A + Q(sign) * lam * Mat<Q>::Identity(d, d)) * (Mat<Q>::Identity(d, d) - m.xi() * m.eta().transpose());
  return columns(orthogonal_basis<Q>(m.gram(), P));
}

void expect_all_pass(const std::vector<IdentityResult<Q>>& rs) {
  for (const auto& r : rs)
    if (r.applicable) EXPECT_TRUE(r.pass) << r.tag << " residual " << r.max_residual;
}

}  // namespace

TEST(Nullity, FixA20IsAboveClass) {
  auto geo = compute_geometry(fix_a(2, 0));
  auto rep = solve_nullity(geo);
  ASSERT_TRUE(rep.is_nullity);
  EXPECT_EQ(rep.kappa, q(0));
  EXPECT_EQ(rep.mu, q(4));
  EXPECT_EQ(rep.cls, NullityClass::above);
  EXPECT_EQ(require_lambda(rep), q(1));
}

TEST(Nullity, FixA12HasRationalLambda) {
  auto geo = compute_geometry(fix_a(1, 2));
  auto rep = solve_nullity(geo);
  ASSERT_TRUE(rep.is_nullity);
  EXPECT_EQ(rep.kappa, q(9, 16));
  EXPECT_EQ(rep.mu, q(1, 2));
  EXPECT_EQ(require_lambda(rep), q(5, 4));
}

TEST(Nullity, FixBIsBelowClass) {
  auto geo = compute_geometry(fix_b());
  auto rep = solve_nullity(geo);
  ASSERT_TRUE(rep.is_nullity);
  EXPECT_EQ(rep.kappa, q(-2));
  EXPECT_EQ(rep.mu, q(2));
  EXPECT_EQ(rep.cls, NullityClass::below);
  EXPECT_EQ(require_lambda(rep), q(1));
}

TEST(Nullity, FixCHasIndeterminateMu) {
  auto geo = compute_geometry(fix_c());
  auto rep = solve_nullity(geo);
  ASSERT_TRUE(rep.is_nullity);
  EXPECT_TRUE(rep.h_zero);
  EXPECT_FALSE(rep.mu.has_value());
  EXPECT_EQ(rep.kappa, q(-1));
  EXPECT_EQ(rep.cls, NullityClass::equal);
  EXPECT_THROW_KIND(explicit_curvature(geo, rep), ErrorKind::ClassBoundary);
}

TEST(Nullity, RequireLambdaErrors) {
  NullityReport<Q> rep;
  rep.is_nullity = true;
  EXPECT_THROW_KIND(require_lambda(rep), ErrorKind::InexactRoot);
  rep.is_nullity = false;
  EXPECT_THROW_KIND(require_lambda(rep), ErrorKind::NotNullity);
}

TEST(Nullity, IdentitySuiteHoldsOnFixtures) {
  for (auto m : {fix_a(2, 0), fix_a(1, 2), fix_a(3, 1), fix_b(), fix_c()}) {
    auto geo = compute_geometry(m);
    auto rep = solve_nullity(geo);
    auto rs = identity_suite(geo, rep);
    EXPECT_GE(rs.size(), 10u);
    expect_all_pass(rs);
  }
}

TEST(Nullity, IdentityGatingByClass) {
  auto geo = compute_geometry(fix_b());
  auto rs = identity_suite(geo, solve_nullity(geo));
  auto find = [&](const std::string& t) {
    for (const auto& r : rs)
      if (r.tag == t) return r;
    ADD_FAILURE() << t;
    return rs.front();
  };
  EXPECT_FALSE(find("nablah").applicable);
  EXPECT_TRUE(find("formula8").applicable);
  EXPECT_TRUE(find("curv1").applicable);
  EXPECT_TRUE(find("RHZ").applicable);
  auto geoc = compute_geometry(fix_c());
  auto rc = identity_suite(geoc, solve_nullity(geoc));
  bool pasa = false;
  for (const auto& r : rc)
    if (r.tag == "Pasa") pasa = r.applicable && r.pass;
  EXPECT_TRUE(pasa);
}

TEST(Nullity, ExplicitCurvatureMatches) {
  for (auto m : {fix_a(2, 0), fix_a(1, 2), fix_b()}) {
    auto geo = compute_geometry(m);
    EXPECT_EQ(explicit_curvature_residual(geo, solve_nullity(geo)), q(0)) << m.params.at("alpha");
  }
}

TEST(Nullity, RicciFormulaAbove) {
  auto geo = compute_geometry(fix_a(2, 0));
  auto rf = ricci_formula(geo, solve_nullity(geo));
  const Mat<Q> I = Mat<Q>::Identity(5, 5);
  Mat<Q> expected = q(6) * I + q(6) * geo.h - q(6) * geo.model.xi() * geo.model.eta().transpose();
  EXPECT_EQ(rf.Q_formula, expected);
  EXPECT_EQ(geo.ric.Q, expected);
  EXPECT_TRUE(rf.low_matches);
}

TEST(Nullity, RicciCoefficientOnFixB) {
  auto geo = compute_geometry(fix_b());
  auto rf = ricci_formula(geo, solve_nullity(geo));
  EXPECT_TRUE(rf.low_matches);
  EXPECT_FALSE(rf.high_matches);
  EXPECT_EQ(rf.coefficient_high - rf.coefficient_low, q(4));
}

TEST(Nullity, EtaEinsteinFlag) {
  auto geo = compute_geometry(fix_a(2, 0));
  auto rf = ricci_formula(geo, solve_nullity(geo));
  EXPECT_FALSE(rf.eta_einstein);
  EXPECT_FALSE(rf.einstein);
}

TEST(Nullity, CurvatureBlocksAbove) {
  for (auto m : {fix_a(2, 0), fix_a(1, 2)}) {
    auto geo = compute_geometry(m);
    auto rep = solve_nullity(geo);
    Q lam = require_lambda(rep);
    auto xs = eigen_basis(geo.model, geo.h, lam, 1);
    auto ys = eigen_basis(geo.model, geo.h, lam, -1);
    EXPECT_EQ(xs.size(), 2u);
    EXPECT_EQ(ys.size(), 2u);
    auto r = curvature_blocks(geo, rep, xs, ys);
    EXPECT_TRUE(r.applicable && r.pass) << r.max_residual;
    auto s = sectional_corollary(geo, rep, xs, ys);
    EXPECT_TRUE(s.applicable && s.pass) << s.max_residual;
  }
}

TEST(Nullity, CurvatureBlocksBelow) {
  auto geo = compute_geometry(fix_b());
  auto rep = solve_nullity(geo);
  Q lam = require_lambda(rep);
  Mat<Q> ph = geo.model.phi() * geo.h;
  auto xs = eigen_basis(geo.model, ph, lam, 1);
  auto ys = eigen_basis(geo.model, ph, lam, -1);
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_EQ(ph * xs[0], lam * xs[0]);
  auto r = curvature_blocks(geo, rep, xs, ys);
  EXPECT_TRUE(r.applicable && r.pass) << r.max_residual;
  auto s = sectional_corollary(geo, rep, xs, ys);
  EXPECT_TRUE(s.applicable && s.pass) << s.max_residual;
}

TEST(Nullity, FloatModeAgrees) {
  auto geo = compute_geometry(convert_model<double, Q>(fix_a(1, 2)));
  auto rep = solve_nullity(geo);
  ASSERT_TRUE(rep.is_nullity);
  EXPECT_NEAR(rep.kappa, 9.0 / 16.0, 1e-12);
  EXPECT_NEAR(*rep.mu, 0.5, 1e-12);
  for (const auto& r : identity_suite(geo, rep))
    if (r.applicable) EXPECT_TRUE(r.pass) << r.tag;
  EXPECT_LT(explicit_curvature_residual(geo, rep), 1e-9);
}


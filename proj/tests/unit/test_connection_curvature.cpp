#include "paracontact/connection.hpp"
#include "test_helpers.hpp"

using namespace paracontact;
using namespace paracontact::testing;

namespace {

std::vector<Model<Q>> fixtures() { return {fix_a(2, 0), fix_a(1, 2), fix_b(), fix_c()}; }

}  // namespace

TEST(LeviCivita, NablaXiOnFixtures) {
  auto a = fix_a(2, 0);
  auto lc = levi_civita(a);
  EXPECT_TRUE(is_zero_matrix(lc.apply(e(5, 0), a.xi())));
  auto b = fix_b();
  auto lcb = levi_civita(b);
  EXPECT_EQ(lcb.apply(e(5, 0), b.xi()), Vec<Q>(e(5, 0) - e(5, 2)));
}

TEST(LeviCivita, FlatAbelian) {
  auto lc = levi_civita(abelian(3));
  for (const auto& N : lc.nabla) EXPECT_TRUE(is_zero_matrix(N));
}

TEST(LeviCivita, MetricAndTorsionFree) {
  for (const auto& m : fixtures()) {
    auto lc = levi_civita(m);
    const int d = m.dim();
    for (int i = 0; i < d; ++i) {
      EXPECT_TRUE(is_zero_matrix(Mat<Q>(m.gram() * lc.nabla[i] + lc.nabla[i].transpose() * m.gram())));
      for (int j = 0; j < d; ++j)
        EXPECT_EQ(Vec<Q>(lc.nabla[i].col(j) - lc.nabla[j].col(i)), m.algebra.bracket(i, j));
    }
  }
}

TEST(LeviCivita, DegenerateGram) {
  auto m = fix_c();
  m.structure.gram(1, 1) = q(0);
  EXPECT_THROW_KIND(levi_civita(m), ErrorKind::SingularMatrix);
}

TEST(NablaXi, AllResidualsZero) {
  for (const auto& m : fixtures()) {
    Mat<Q> h = compute_h(m);
    for (const auto& r : nabla_xi_check(m, levi_civita(m), h)) EXPECT_EQ(r, q(0)) << m.name;
  }
  auto c = fix_c();
  auto lc = levi_civita(c);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(lc.apply(e(3, i), c.xi()), Vec<Q>(-c.phi() * e(3, i)));
}

TEST(CanonicalConnection, PhiIsParallelOnIntegrableFixtures) {
  for (const auto& m : fixtures()) {
    auto lc = levi_civita(m);
    auto pc = canonical_paracontact_connection(m, lc, compute_h(m));
    EXPECT_EQ(pc.kind, ConnectionKind::paracontact_canonical);
    for (int i = 0; i < m.dim(); ++i)
      EXPECT_TRUE(is_zero_matrix(covariant_derivative(pc, m.phi(), e(m.dim(), i)))) << m.name;
  }
}

TEST(CanonicalConnection, IntegrabilityMatchesInvolutivity) {
  for (const auto& m : fixtures()) {
    auto geo = compute_geometry(m);
    EXPECT_EQ(is_integrable(geo), eigendistributions_involutive(m)) << m.name;
    EXPECT_TRUE(eigendistributions_involutive(m));
  }
}

TEST(Curvature, FlatAbelian) {
  auto m = abelian(3);
  auto R = curvature(levi_civita(m), m.algebra, m.gram());
  for (const auto& op : R.ops) EXPECT_TRUE(is_zero_matrix(op));
}

TEST(Curvature, NullityValuesOnFixtures) {
  auto a = fix_a(2, 0);
  auto geo = compute_geometry(a);
  EXPECT_EQ(geo.R.apply(e(5, 0), a.xi(), a.xi()), Vec<Q>(4 * e(5, 0)));
  auto c = fix_c();
  auto gc = compute_geometry(c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec<Q> X = e(3, i), Y = e(3, j);
      Vec<Q> expected = -(c.eta_of(Y) * X - c.eta_of(X) * Y);
      EXPECT_EQ(gc.R.apply(X, Y, c.xi()), expected);
    }
}

TEST(Curvature, SymmetriesAndBianchi) {
  for (const auto& m : fixtures()) {
    auto geo = compute_geometry(m);
    auto s = curvature_symmetries(geo.R);
    EXPECT_EQ(s.antisym_first, q(0));
    EXPECT_EQ(s.antisym_second, q(0));
    EXPECT_EQ(s.pair_symmetry, q(0));
    EXPECT_EQ(s.bianchi, q(0));
  }
}

TEST(Ricci, XiEigenvalueAndFramePath) {
  auto ga = compute_geometry(fix_a(2, 0));
  EXPECT_TRUE(is_zero_matrix(Vec<Q>(ga.ric.Q * ga.model.xi())));
  auto gb = compute_geometry(fix_b());
  EXPECT_EQ(Vec<Q>(gb.ric.Q * gb.model.xi()), Vec<Q>(-8 * gb.model.xi()));
  for (const auto& m : fixtures()) {
    auto geo = compute_geometry(m);
    EXPECT_EQ(geo.ric.ric, ricci_via_frame(geo.R)) << m.name;
    EXPECT_EQ(geo.ric.ric, Mat<Q>(geo.ric.ric.transpose()));
  }
  auto flat = abelian(3);
  auto R = curvature(levi_civita(flat), flat.algebra, flat.gram());
  EXPECT_TRUE(is_zero_matrix(ricci(R).Q));
}

TEST(JacobiOperator, Fixtures) {
  auto ga = compute_geometry(fix_a(2, 0));
  Mat<Q> l = jacobi_operator(ga.R, ga.model.xi());
  EXPECT_EQ(l, Mat<Q>(4 * ga.h));
  auto gc = compute_geometry(fix_c());
  EXPECT_EQ(jacobi_operator(gc.R, gc.model.xi()), Mat<Q>(-gc.model.pi()));
  auto flat = abelian(3);
  auto R = curvature(levi_civita(flat), flat.algebra, flat.gram());
  EXPECT_TRUE(is_zero_matrix(jacobi_operator(R, flat.xi())));
}

TEST(SectionalCurvature, Fixtures) {
  auto gb = compute_geometry(fix_b());
  EXPECT_EQ(sectional_curvature(gb.R, e(5, 0), gb.model.xi()), q(-2));
  auto ga = compute_geometry(fix_a(2, 0));
  EXPECT_EQ(sectional_curvature(ga.R, e(5, 0), ga.model.xi()), q(4));
  // e1 and e2 span D_{phi h}(lambda) on fix-b.
  EXPECT_EQ(sectional_curvature(gb.R, e(5, 0), e(5, 1)), q(-1));
  Vec<Q> null_vec = e(5, 0) + e(5, 2);
  EXPECT_THROW_KIND(sectional_curvature(gb.R, null_vec, Vec<Q>(gb.model.phi() * null_vec)),
                    ErrorKind::DegeneratePlane);
}

TEST(CovariantDerivative, Examples) {
  auto c = fix_c();
  auto lc = levi_civita(c);
  for (int i = 0; i < 3; ++i)
    EXPECT_TRUE(is_zero_matrix(covariant_derivative(lc, Mat<Q>(Mat<Q>::Identity(3, 3)), e(3, i))));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec<Q> X = e(3, i), Y = e(3, j);
      Vec<Q> expected = -c.g(X, Y) * c.xi() + c.eta_of(Y) * X;
      EXPECT_EQ(Vec<Q>(covariant_derivative(lc, c.phi(), X) * Y), expected);
    }
  auto a = fix_a(2, 0);
  auto ga = compute_geometry(a);
  Mat<Q> nh = covariant_derivative(ga.lc, ga.h, a.xi());
  EXPECT_EQ(nh, Mat<Q>(4 * ga.h * a.phi()));
}

TEST(GeneralIdentities, HoldOnFixtures) {
  for (const auto& m : fixtures()) {
    auto geo = compute_geometry(m);
    auto results = general_identities(geo);
    EXPECT_EQ(results.size(), 6u);
    for (const auto& r : results) EXPECT_TRUE(r.pass && r.max_residual == 0) << m.name << " " << r.tag;
  }
}

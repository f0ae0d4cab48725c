#include "paracontact/transforms.hpp"
#include "test_helpers.hpp"

using namespace paracontact;
using namespace paracontact::testing;

namespace {

void expect_pass(const TransformResult<Q>& t) {
  EXPECT_TRUE(t.pass()) << t.construction;
  for (const auto& c : t.checks) EXPECT_TRUE(c.pass) << t.construction << " " << c.tag << " " << c.max_residual << " " << c.note;
}

NullityReport<Q> refit(const Model<Q>& m) { return solve_nullity(compute_geometry(m)); }

}  // namespace

TEST(Transforms, DHomotheticFixA) {
  auto t = d_homothetic(fix_a(2, 0), q(2));
  expect_pass(t);
  EXPECT_EQ(t.verified.kappa, q(-3, 4));
  EXPECT_EQ(t.verified.mu, q(3));
  EXPECT_NE(t.find("H BAR"), nullptr);
  EXPECT_NE(t.find("CONNECTION"), nullptr);
  EXPECT_NE(t.find("CURVATURE"), nullptr);
}

TEST(Transforms, DHomotheticIdentity) {
  auto m = fix_a(1, 2);
  auto t = d_homothetic(m, q(1));
  EXPECT_EQ(t.output.gram(), m.gram());
  EXPECT_EQ(t.output.xi(), m.xi());
  EXPECT_EQ(t.verified.kappa, q(9, 16));
  EXPECT_EQ(t.verified.mu, q(1, 2));
}

TEST(Transforms, DHomotheticFixB) {
  auto t = d_homothetic(fix_b(), q(2));
  expect_pass(t);
  EXPECT_EQ(t.verified.kappa, q(-5, 4));
  EXPECT_EQ(t.verified.mu, q(2));
  EXPECT_EQ(t.verified.cls, NullityClass::below);
}

TEST(Transforms, DHomotheticPreservesClass) {
  for (auto m : {fix_a(2, 0), fix_b()})
    for (auto a : {q(1, 2), q(2), q(3)}) {
      auto t = d_homothetic(m, a);
      expect_pass(t);
      ASSERT_NE(t.find("class_preserved"), nullptr);
    }
}

TEST(Transforms, DHomotheticRejectsAlpha) {
  EXPECT_THROW_KIND(d_homothetic(fix_a(2, 0), q(0)), ErrorKind::InvalidAlpha);
  EXPECT_THROW_KIND(d_homothetic(fix_a(2, 0), q(-1)), ErrorKind::InvalidAlpha);
}

TEST(Transforms, Principal1FixA20) {
  auto t = contact_from_paracontact_pos(fix_a(2, 0));
  expect_pass(t);
  EXPECT_EQ(t.output.structure.kind, StructureKind::contact);
  EXPECT_EQ(t.verified.kappa, q(0));
  EXPECT_EQ(t.verified.mu, q(4));
  EXPECT_NE(t.find("passo2"), nullptr);
  EXPECT_EQ(boeckx_invariant(t.verified), q(-1));
}

TEST(Transforms, Principal1FixA12) {
  auto t = contact_from_paracontact_pos(fix_a(1, 2));
  expect_pass(t);
  EXPECT_EQ(t.verified.kappa, q(7, 16));
  EXPECT_EQ(t.verified.mu, q(9, 2));
  EXPECT_EQ(boeckx_invariant(t.verified), q(-5, 3));
}

TEST(Transforms, Principal1RejectsBelowClass) {
  EXPECT_THROW_KIND(contact_from_paracontact_pos(fix_b()), ErrorKind::ClassBoundary);
  EXPECT_THROW_KIND(contact_from_paracontact_pos(fix_c()), ErrorKind::ClassBoundary);
}

TEST(Transforms, Def2) {
  EXPECT_THROW_KIND(contact_from_paracontact_neg(fix_b()), ErrorKind::NotDefinite);
  EXPECT_THROW_KIND(contact_from_paracontact_neg(fix_a(2, 0)), ErrorKind::ClassBoundary);
  auto [k, mu] = contact_neg_constants(q(-2), q(2));
  EXPECT_EQ(k, q(0));
  EXPECT_EQ(mu, q(2));
}

TEST(Transforms, Capar1FromFixD) {
  auto fix_d = contact_from_paracontact_pos(fix_a(2, 0)).output;
  auto t = paracontact_from_contact(fix_d, ContactToParaMode::via_h);
  expect_pass(t);
  EXPECT_EQ(t.verified.kappa, q(-1));
  EXPECT_EQ(t.verified.mu, q(2));
}

TEST(Transforms, SyntheticContactZeroZero) {
  auto src = contact_e2();
  auto rep = refit(src);
  ASSERT_EQ(rep.kappa, q(0));
  ASSERT_EQ(rep.mu, q(0));
  EXPECT_EQ(boeckx_invariant(rep), q(1));
  EXPECT_THROW_KIND(contact_from_paracontact_pos(src), ErrorKind::WrongKind);
  auto h = paracontact_from_contact(src, ContactToParaMode::via_h);
  expect_pass(h);
  EXPECT_EQ(h.verified.kappa, q(-1));
  EXPECT_EQ(h.verified.mu, q(2));
  auto ph = paracontact_from_contact(src, ContactToParaMode::via_phih, q(0));
  expect_pass(ph);
  EXPECT_EQ(ph.verified.kappa, q(0));
  EXPECT_EQ(ph.verified.mu, q(0));
  EXPECT_THROW_KIND(paracontact_from_contact(src, ContactToParaMode::via_phih, q(1, 2)),
                    ErrorKind::ConstraintViolation);
}

TEST(Transforms, SasakianRoundTrip) {
  auto a = contact_from_paracontact_pos(fix_a(1, 2));
  expect_pass(a);
  auto b = paracontact_from_contact(a.output, ContactToParaMode::via_h);
  expect_pass(b);
  EXPECT_EQ(b.verified.kappa, q(0));
  EXPECT_EQ(b.verified.mu, q(2));
  auto c = contact_from_paracontact_pos(b.output);
  expect_pass(c);
  auto* s = c.find("sasakian");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->max_residual, q(0));
  EXPECT_THROW_KIND(paracontact_from_contact(c.output, ContactToParaMode::via_h), ErrorKind::SasakianInput);
  EXPECT_THROW_KIND(boeckx_invariant(refit(c.output)), ErrorKind::SasakianInput);
}

TEST(Transforms, ContactFamilyFixA) {
  auto t = contact_family(fix_a(2, 0), q(-4), q(-1));
  expect_pass(t);
  EXPECT_EQ(t.output.structure.kind, StructureKind::contact);
  auto k = contact_family(fix_a(2, 0), q(-2), q(-2));
  expect_pass(k);
  ASSERT_NE(k.find("family_h"), nullptr);
  ASSERT_EQ(k.comparisons.size(), 1u);
  EXPECT_FALSE(k.comparisons[0].pass);
  EXPECT_EQ(k.comparisons[0].max_residual, q(1));
  EXPECT_THROW_KIND(contact_family(fix_a(2, 0), q(1), q(-4)), ErrorKind::ConstraintViolation);
  EXPECT_THROW_KIND(contact_family(fix_a(2, 0), q(-4), q(-2)), ErrorKind::ConstraintViolation);
  EXPECT_THROW_KIND(contact_family(fix_a(2, 0), q(4), q(1)), ErrorKind::ConstraintViolation);
}

TEST(Transforms, ContactFamilyMuTwo) {
  auto base = paracontact_from_contact(contact_from_paracontact_pos(fix_a(1, 2)).output, ContactToParaMode::via_h);
  auto geo = compute_geometry(base.output);
  auto def = definiteness(geo, solve_nullity(geo));
  ASSERT_NE(def.verdict, Definiteness::indefinite);
  const Q s = def.verdict == Definiteness::positive ? q(1) : q(-1);
  auto t = contact_family(base.output, s * q(4), s * q(1));
  expect_pass(t);
  EXPECT_EQ(t.verified.kappa, q(1) - q(9, 16));
  ASSERT_EQ(t.comparisons.size(), 2u);
  EXPECT_NE(t.comparisons[0].pass, t.comparisons[1].pass);
  auto same = contact_family(base.output, s * q(2), s * q(2));
  expect_pass(same);
  EXPECT_TRUE(sasakian_check(compute_geometry(same.output)).pass);
  ASSERT_EQ(same.comparisons.size(), 1u);
  EXPECT_TRUE(same.comparisons[0].pass);
}

TEST(Transforms, SphereKappa) {
  EXPECT_EQ(sphere_kappa(q(-1)), q(-5));
  EXPECT_EQ(sphere_kappa(q(0)), q(-1));
  EXPECT_EQ(sphere_kappa(q(2)), q(7));
  for (int c = -3; c <= 3; ++c) EXPECT_EQ(sphere_kappa(q(c)), q(4 * c - 1));
}

TEST(Transforms, WrongKind) {
  EXPECT_THROW_KIND(paracontact_from_contact(fix_a(2, 0), ContactToParaMode::via_h), ErrorKind::WrongKind);
  EXPECT_THROW_KIND(boeckx_invariant(refit(fix_a(2, 0))), ErrorKind::WrongKind);
}

TEST(Transforms, FloatMode) {
  auto t = d_homothetic(convert_model<double, Q>(fix_a(2, 0)), 2.0);
  EXPECT_TRUE(t.pass());
  EXPECT_NEAR(t.verified.kappa, -0.75, 1e-12);
  auto p = contact_from_paracontact_pos(convert_model<double, Q>(fix_a(1, 2)));
  EXPECT_TRUE(p.pass());
  EXPECT_NEAR(boeckx_invariant(p.verified), -5.0 / 3.0, 1e-12);
}

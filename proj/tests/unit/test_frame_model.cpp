#include "paracontact/model_io.hpp"
#include "paracontact/structure.hpp"
#include "test_helpers.hpp"

using namespace paracontact;
using namespace paracontact::testing;

namespace {

std::string fix_c_document(bool with_brackets) {
  json doc = serialize_model(fix_c());
  if (!with_brackets) doc["brackets"] = json::array();
  return doc.dump();
}

}  // namespace

TEST(BuiltinExample, FixADefault) {
  auto m = fix_a(2, 0);
  EXPECT_EQ(m.dim(), 5);
  EXPECT_EQ(m.n(), 2);
  EXPECT_EQ(m.gram(), diag<Q>({q(-1), q(-1), q(1), q(1), q(1)}));
  EXPECT_EQ(m.eta(), e(5, 4));
  EXPECT_EQ(m.algebra.bracket(0, 2), Vec<Q>(2 * e(5, 4)));
  EXPECT_EQ(m.algebra.bracket(2, 0), Vec<Q>(-2 * e(5, 4)));
}

TEST(BuiltinExample, ParameterConstraints) {
  EXPECT_THROW_KIND(fix_a(1, 1), ErrorKind::InvalidParams);
  EXPECT_THROW_KIND(builtin_example<Q>("fix-b", {q(1), q(-1)}), ErrorKind::InvalidParams);
  EXPECT_THROW_KIND(builtin_example<Q>("fix-c", {q(1)}), ErrorKind::InvalidParams);
  EXPECT_THROW_KIND(builtin_example<Q>("fix-z", {}), ErrorKind::InvalidParams);
}

TEST(BuiltinExample, FixCHasZeroH) {
  auto m = fix_c();
  EXPECT_EQ(m.dim(), 3);
  EXPECT_TRUE(is_zero_matrix(compute_h(m)));
}

TEST(BuiltinExample, AllPassJacobiAndValidation) {
  std::vector<Model<Q>> models = {fix_a(2, 0), fix_a(1, 2), fix_a(3, 1), fix_b(),
                                  builtin_example<Q>("fix-b", {q(2), q(1, 2)}), fix_c()};
  for (const auto& m : models) {
    EXPECT_TRUE(validate_jacobi(m.algebra).empty()) << m.name;
    EXPECT_TRUE(validate_structure(m).pass()) << m.name;
  }
}

TEST(ValidateJacobi, AbelianHasNoViolations) {
  EXPECT_TRUE(validate_jacobi(FrameAlgebra<Q>(4)).empty());
}

TEST(ValidateJacobi, ReportsOffendingTuple) {
  FrameAlgebra<Q> a(3);
  a.set_bracket(0, 1, e(3, 2));
  a.set_bracket(0, 2, e(3, 0));
  auto v = validate_jacobi(a);
  ASSERT_FALSE(v.empty());
  bool found = false;
  for (const auto& x : v)
    if (x.i == 0 && x.j == 1 && x.k == 2 && x.l == 2) {
      found = true;
      EXPECT_EQ(x.residual, q(-1));
    }
  EXPECT_TRUE(found);
}

TEST(ParseModel, RoundTrip) {
  for (const auto& m : {fix_a(2, 0), fix_a(1, 2), fix_b(), fix_c()}) {
    json doc = serialize_model(m);
    auto parsed = std::get<Model<Q>>(parse_model(doc.dump()));
    EXPECT_EQ(serialize_model(parsed), doc);
    EXPECT_EQ(parsed.n(), m.n());
  }
}

TEST(ParseModel, FloatModeRoundTrip) {
  auto m = convert_model<double>(fix_a(1, 2));
  json doc = serialize_model(m);
  EXPECT_EQ(doc["scalars"], "float64");
  auto parsed = std::get<Model<double>>(parse_model(doc.dump()));
  EXPECT_EQ(serialize_model(parsed), doc);
}

TEST(ParseModel, DerivesEtaFromGram) {
  json doc = serialize_model(fix_a(2, 0));
  doc["structure"].erase("eta");
  auto m = std::get<Model<Q>>(parse_model(doc.dump()));
  EXPECT_EQ(m.eta(), e(5, 4));
}

TEST(ParseModel, InconsistentEtaFailsValidation) {
  json doc = serialize_model(fix_a(2, 0));
  doc["structure"]["eta"] = {0, 0, 0, 1, 1};
  auto m = std::get<Model<Q>>(parse_model(doc.dump()));
  auto rep = validate_structure(m);
  EXPECT_FALSE(rep.pass());
  EXPECT_FALSE(rep.find("eta_metric_dual")->pass);
}

TEST(ParseModel, AbelianFailsContactValidation) {
  auto m = std::get<Model<Q>>(parse_model(fix_c_document(false)));
  auto rep = validate_structure(m);
  EXPECT_FALSE(rep.pass());
  EXPECT_FALSE(rep.find("contact_form")->pass);
}

TEST(ParseModel, MutatedStructureConstantIsRejected) {
  json doc = serialize_model(fix_a(2, 0));
  for (auto& b : doc["brackets"])
    if (b["i"] == 0 && b["j"] == 2) b["result"]["4"] = "3";
  try {
    auto m = std::get<Model<Q>>(parse_model(doc.dump()));
    EXPECT_FALSE(validate_structure(m).find("contact_form")->pass);
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::JacobiViolation);
  }
}

TEST(ParseModel, Errors) {
  EXPECT_THROW_KIND(parse_model("{ not json"), ErrorKind::ParseError);
  EXPECT_THROW_KIND(parse_model(R"({"dimension": 3})"), ErrorKind::ParseError);
  json doc = serialize_model(fix_c());
  doc["structure"]["xi"] = {0, 1};
  EXPECT_THROW_KIND(parse_model(doc.dump()), ErrorKind::DimensionMismatch);
  doc = serialize_model(fix_c());
  doc["dimension"] = 4;
  EXPECT_THROW_KIND(parse_model(doc.dump()), ErrorKind::DimensionMismatch);
  doc = serialize_model(fix_c());
  doc["brackets"][0]["result"]["2"] = 0.5;
  EXPECT_THROW_KIND(parse_model(doc.dump()), ErrorKind::ParseError);
  doc = serialize_model(fix_c());
  doc["brackets"][0]["i"] = 1;
  doc["brackets"][0]["j"] = 0;
  EXPECT_THROW_KIND(parse_model(doc.dump()), ErrorKind::ParseError);
  doc = serialize_model(fix_c());
  doc["structure"]["kind"] = "symplectic";
  EXPECT_THROW_KIND(parse_model(doc.dump()), ErrorKind::ParseError);
}

TEST(ParseModel, JacobiViolationNamesTuple) {
  json doc = serialize_model(fix_c());
  doc["brackets"] = json::parse(R"([{"i":0,"j":1,"result":{"2":1}},{"i":0,"j":2,"result":{"0":1}}])");
  EXPECT_THROW_KIND(parse_model(doc.dump()), ErrorKind::JacobiViolation);
}

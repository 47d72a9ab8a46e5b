#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "orlicz/catalog.hpp"
#include "orlicz/descriptor_json.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/young.hpp"
#include "properties.hpp"

using namespace orlicz;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Descriptor single(Formula f, std::optional<double> b = std::nullopt) {
  Descriptor d;
  d.pieces.push_back({0.0, std::move(f)});
  d.b = b;
  return d;
}

}  // namespace

TEST(ExtReal, ArithmeticAndOrder) {
  ExtReal a(2.0), inf = ExtReal::infinity();
  EXPECT_EQ((a + 3.0).value(), 5.0);
  EXPECT_TRUE((a + inf).is_infinite());
  EXPECT_TRUE((2.0 * inf).is_infinite());
  EXPECT_LT(a, inf);
  EXPECT_EQ(max(a, inf), inf);
  EXPECT_EQ(min(a, inf), a);
  EXPECT_THROW(inf.finite(), DomainError);
  EXPECT_THROW(difference(inf, inf), DomainError);
  EXPECT_EQ(difference(inf, a), kInf);
  EXPECT_EQ(difference(a, inf), -kInf);
  EXPECT_EQ(inf.str(), "inf");
}

TEST(ExtReal, RejectsNegativeAndZeroTimesInfinity) {
  EXPECT_THROW(ExtReal(-1.0), DomainError);
  EXPECT_THROW(ExtReal(std::nan("")), DomainError);
  EXPECT_THROW(0.0 * ExtReal::infinity(), DomainError);
}

TEST(ExtReal, OverflowBecomesInfinity) {
  ExtReal big(1e308);
  EXPECT_TRUE((big + big).is_infinite());
}

TEST(YoungFunction, PowerEvaluationAndInverse) {
  auto phi = catalog::power(2.0);
  EXPECT_EQ(phi(3.0).value(), 9.0);
  EXPECT_DOUBLE_EQ(inverse(phi, 9.0), 3.0);
  EXPECT_EQ(phi.cls(), YoungClass::Y1);
  EXPECT_EQ(phi.a(), 0.0);
  EXPECT_TRUE(phi.b().is_infinite());
}

TEST(YoungFunction, StepIsTwoValuedY3) {
  auto phi = catalog::zero_inf_step(1.0);
  EXPECT_EQ(phi(1.0).value(), 0.0);
  EXPECT_TRUE(phi(1.0000001).is_infinite());
  EXPECT_EQ(phi.cls(), YoungClass::Y3);
  EXPECT_TRUE(phi.characteristics().two_valued);
  EXPECT_EQ(phi.a(), 1.0);
  EXPECT_EQ(phi.b().value(), 1.0);
  EXPECT_EQ(phi.characteristics().u0.value(), 0.0);
  EXPECT_EQ(inverse(phi, 0.0), 1.0);
  EXPECT_EQ(inverse(phi, 5.0), 1.0);
  EXPECT_EQ(inverse(phi, ExtReal::infinity()), 1.0);
  ASSERT_FALSE(phi.flags().empty());
}

TEST(YoungFunction, Characteristics) {
  auto pole = catalog::pole(1.0, 1.0);
  EXPECT_EQ(pole.cls(), YoungClass::Y2);
  EXPECT_TRUE(pole(1.0).is_infinite());
  auto cap = catalog::linear_cap(2.0);
  EXPECT_EQ(cap.cls(), YoungClass::Y3);
  EXPECT_EQ(cap.characteristics().value_at_b.value(), 2.0);
  EXPECT_EQ(cap.characteristics().u0.value(), 2.0);
  auto e7 = catalog::example7_phi();
  EXPECT_EQ(e7.a(), 1.0);
  EXPECT_EQ(inverse(e7, 0.0), 1.0);
  EXPECT_EQ(inverse(e7, 2.0), 3.0);
}

TEST(YoungFunction, InverseMatchesBisectionOracle) {
  for (const char* s : {"power:2.5:0.7", "expm1:1.5", "square_log", "example7_phi3", "example11_theta", "pole:2:2"}) {
    auto phi = catalog::parse(s);
    oracle::Fn f = [&](double u) { return phi(u).value(); };
    for (double v : {1e-4, 0.3, 1.0, 7.0, 123.0}) {
      EXPECT_NEAR(inverse(phi, v), oracle::inverse(f, v), 1e-12 * (1 + inverse(phi, v))) << s << " v=" << v;
    }
  }
}

TEST(Validation, RejectsNonConvex) {
  // sqrt is concave.
  try {
    YoungFunction phi(single(formula::Power{1.0, 0.5, 0.0}));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("convexity"), std::string::npos) << e.what();
  }
}

TEST(Validation, ReportsEachAxiom) {
  auto rep = validate(single(formula::Affine{1.0, 1.0}));
  EXPECT_FALSE(rep.ok());
  EXPECT_NE(rep.failures().find("origin"), std::string::npos);

  Descriptor neg;
  neg.pieces.push_back({0.0, formula::Affine{1.0, 0.0}});
  neg.pieces.push_back({1.0, formula::Affine{-1.0, 2.0}});
  EXPECT_NE(validate(neg).failures().find("structure"), std::string::npos);

  EXPECT_NE(validate(single(formula::Table{{0.0, 1.0, 2.0}, {0.0, 1.0, 0.5}})).failures().find("monotone"),
            std::string::npos);

  Descriptor jump;
  jump.pieces.push_back({0.0, formula::Affine{1.0, 0.0}});
  jump.pieces.push_back({1.0, formula::Affine{2.0, 0.0}});
  EXPECT_NE(validate(jump).failures().find("continuity"), std::string::npos);

  auto zero = validate(single(formula::Affine{0.0, 0.0}));
  EXPECT_NE(zero.failures().find("nontrivial"), std::string::npos);

  Descriptor unsorted;
  unsorted.pieces.push_back({0.0, formula::Affine{1.0, 0.0}});
  unsorted.pieces.push_back({0.0, formula::Affine{1.0, 0.0}});
  EXPECT_NE(validate(unsorted).failures().find("structure"), std::string::npos);
}

TEST(Validation, AcceptsCatalog) {
  for (const auto& name : {"power:1", "power:4:2", "step:3", "positive_part:2:3", "expm1", "exp_square", "square_log",
                           "pole", "linear_cap", "shifted_cap:1:2", "example7_phi2", "example7_phi3",
                           "example11_theta", "example11_phi_p:1", "example9_psi"}) {
    EXPECT_NO_THROW(catalog::parse(name)) << name;
  }
}

TEST(Catalog, ParseErrors) {
  EXPECT_THROW(catalog::parse("nonexistent"), DescriptorError);
  EXPECT_THROW(catalog::parse("power:abc"), DescriptorError);
  EXPECT_THROW(catalog::parse("power:0.5"), ValidationError);
}

TEST(Descriptor, JsonRoundTrip) {
  for (const auto& st : props::inverse_identity_catalog()) {
    const Json j = to_json(st.phi);
    const YoungFunction back = young_from_json(j);
    EXPECT_EQ(to_json(back), j) << st.name;
    for (double u : {0.0, 0.25, 0.5, 1.0, 1.5, 3.0, 10.0}) {
      EXPECT_EQ(back(u), st.phi(u)) << st.name << " u=" << u;
    }
  }
}

TEST(Descriptor, ErrorsCarryPath) {
  try {
    descriptor_from_json(Json::parse(R"({"pieces":[{"from":"0","kind":"power","params":{"c":1,"q":2}}]})"));
    FAIL();
  } catch (const DescriptorError& e) {
    EXPECT_EQ(e.path(), "/pieces/0/params/q");
  }
  try {
    descriptor_from_json(Json::parse(R"({"pieces":[],"tail":"none"})"));
    FAIL();
  } catch (const DescriptorError& e) {
    EXPECT_EQ(e.path(), "/pieces");
  }
  try {
    descriptor_from_json(Json::parse(R"({"pieces":[{"from":"0","kind":"power","params":{}}],"tail":"infinite"})"));
    FAIL();
  } catch (const DescriptorError& e) {
    EXPECT_EQ(e.path(), "/b");
  }
}

TEST(Descriptor, DecimalStringsAreExact) {
  auto phi = young_from_json(Json::parse(
      R"({"pieces":[{"from":"0","kind":"affine","params":{"slope":"0","intercept":"0"}},)"
      R"({"from":"0.1","kind":"affine","params":{"slope":"1","intercept":"-0.1"}}],"tail":"none"})"));
  EXPECT_EQ(phi.a(), 0.1);
}

TEST(Dilate, ScalesArgument) {
  auto phi = catalog::example7_phi3();
  auto d = dilate(phi, 2.0);
  for (double u : {0.1, 0.3, 0.5, 0.7, 2.0}) EXPECT_NEAR(d(u).value(), phi(2.0 * u).value(), 1e-12);
  auto cap = dilate(catalog::linear_cap(2.0), 4.0);
  EXPECT_EQ(cap.b().value(), 0.5);
  EXPECT_THROW(dilate(phi, 0.0), DomainError);
}

TEST(Delta2, PowerHasConstantTwoToP) {
  auto rep = delta2(catalog::power(3.0), {RangeKind::all, 1.0});
  EXPECT_TRUE(rep.satisfied);
  EXPECT_NEAR(rep.constant.value(), 8.0, 1e-9);
}

TEST(Delta2, ExponentialFailsForLarge) {
  auto rep = delta2(catalog::expm1(), {RangeKind::large, 1.0});
  EXPECT_FALSE(rep.satisfied);
  EXPECT_FALSE(rep.witnesses.empty());
}

TEST(Delta2, ExponentialHoldsForSmall) {
  auto rep = delta2(catalog::expm1(), {RangeKind::small, 1.0});
  EXPECT_TRUE(rep.satisfied);
}

TEST(Delta2, CapIsSmallArgumentOnly) {
  auto cap = catalog::linear_cap(2.0);
  EXPECT_THROW(delta2(cap, {RangeKind::large, 1.0}), DomainError);
  EXPECT_TRUE(delta2(cap, {RangeKind::small, 0.5}).satisfied);
}

TEST(InverseIdentities, AllClassesWithinTolerance) {
  for (const auto& st : props::inverse_identity_catalog()) {
    auto t = props::inverse_identity_check(st.phi);
    EXPECT_GE(t.points, 10000u) << st.name;
    EXPECT_EQ(t.violations, 0u) << st.name << ": " << t.first;
  }
}

TEST(InverseIdentities, Y3SplitIsExactForAffineCap) {
  auto phi = catalog::linear_cap(2.0);
  auto t = props::inverse_identity_check(phi, 0.0, /*exact=*/true);
  EXPECT_EQ(t.violations, 0u) << t.first;
  EXPECT_EQ(phi(inverse(phi, 2.0)).value(), 2.0);
  EXPECT_EQ(phi(inverse(phi, 2.5)).value(), 2.0);
  EXPECT_EQ(phi(inverse(phi, 1.25)).value(), 1.25);
}

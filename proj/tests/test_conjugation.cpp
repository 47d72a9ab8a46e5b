#include <gtest/gtest.h>

#include <cmath>

#include "golden.hpp"
#include "oracles.hpp"
#include "orlicz/catalog.hpp"
#include "orlicz/conjugation.hpp"
#include "orlicz/descriptor_json.hpp"
#include "orlicz/errors.hpp"
#include "properties.hpp"

using namespace orlicz;
namespace c = orlicz::catalog;

TEST(Ominus, QuotedValues) {
  EXPECT_NEAR(ominus(c::power(2.0, 0.5), c::power(4.0, 0.25), 2.0).value(), 4.0, 4e-9);
  EXPECT_NEAR(ominus(c::example7_phi(), c::power(2.0), 4.0).value(), 3.0, 3e-9);
  auto psi = c::example9_psi(8);
  EXPECT_EQ(ominus(c::power(2.0, 0.5), psi, 0.5).value(), 0.0);
  EXPECT_TRUE(ominus(c::power(2.0, 0.5), psi, 2.0).is_infinite());
}

TEST(OminusZero, QuotedValues) {
  EXPECT_NEAR(ominus_zero(c::power(2.0, 0.5), c::power(4.0, 0.25), 2.0).value(), 1.75, 1e-9);
  EXPECT_EQ(ominus_zero(c::power(2.0, 0.5), c::power(2.0, 0.5), 1.0).value(), 0.0);
  EXPECT_EQ(ominus_zero(c::expm1(), c::power(3.0), 0.0).value(), 0.0);
  EXPECT_EQ(ominus(c::expm1(), c::power(3.0), 0.0).value(), 0.0);
}

TEST(Ominus, GoldenClosedForms) {
  for (const auto& cs : golden::conjugation_cases()) {
    auto r = golden::run_case(cs);
    EXPECT_TRUE(r.ok) << r.name << " max rel " << r.max_rel << " at u=" << r.worst_u;
  }
}

TEST(Ominus, EqualPowersGiveStepAndShiftedBranch) {
  auto phi = c::power(2.0, 0.5);
  for (double u : {0.1, 0.5, 1.0}) EXPECT_EQ(ominus(phi, phi, u).value(), 0.0) << u;
  for (double u : {1.01, 2.0, 10.0}) EXPECT_TRUE(ominus(phi, phi, u).is_infinite()) << u;
  for (double u : {1.5, 3.0}) EXPECT_NEAR(ominus_zero(phi, phi, u).value(), (u * u - 1.0) / 2.0, 1e-9);
}

TEST(Ominus, FasterPhiDivergesAndZeroBranchShifts) {
  auto phi = c::power(4.0, 0.25), phi1 = c::power(2.0, 0.5);
  for (double u : {0.01, 0.5, 3.0}) EXPECT_TRUE(ominus(phi, phi1, u).is_infinite()) << u;
  const double knee = std::pow(2.0, 0.25);
  EXPECT_EQ(ominus_zero(phi, phi1, 0.9 * knee).value(), 0.0);
  for (double u : {1.3, 2.0, 5.0}) EXPECT_NEAR(ominus_zero(phi, phi1, u).value(), std::pow(u, 4) / 4.0 - 0.5, 1e-8 * std::pow(u, 4));
}

TEST(Ominus, RejectsBothFiniteB) {
  EXPECT_THROW(ominus(c::linear_cap(2.0), c::zero_inf_step(1.0), 1.0), DomainError);
  EXPECT_THROW(ominus(c::power(2.0), c::power(2.0), -1.0), DomainError);
}

TEST(Ominus, MatchesBruteForceOracle) {
  auto phi = c::square_log();
  auto phi1 = c::power(3.0);
  // Frozen from oracle::ominus with 2e5 log points on [1e-6, 1e6].
  const std::vector<std::pair<double, double>> frozen = {
      {0.5, 0.0}, {1.0, 0.0}, {2.0, 225.24990497401075}, {5.0, 580725.1149202236}};
  for (auto [u, want] : frozen) {
    EXPECT_TRUE(close_rel(ominus(phi, phi1, u), want, 1e-8)) << u << " " << ominus(phi, phi1, u);
  }
  oracle::Fn f = [&](double u) { return phi(u).value(); };
  oracle::Fn g = [&](double v) { return phi1(v).value(); };
  for (double u : {1.5, 3.0, 8.0}) {
    EXPECT_TRUE(close_rel(ominus(phi, phi1, u), oracle::ominus(f, g, u), 1e-8)) << u;
  }
}

TEST(Ominus, CompositionReturnsPhi1) {
  // phi = 2 phi1(sqrt u) with phi1 = e^{u^2} - 1, so phi = 2(e^u - 1).
  auto phi1 = c::exp_square();
  auto phi = c::expm1(1.0, 2.0);
  auto cf = catalog_closed_form(phi, phi1);
  ASSERT_TRUE(cf.has_value());
  EXPECT_EQ(to_json(*cf), to_json(phi1));
  // Frozen oracle values at u = 0.3, 1, 2.5.
  EXPECT_NEAR(ominus(phi, phi1, 0.3).value(), 0.094174283705210374, 1e-9);
  EXPECT_NEAR(ominus(phi, phi1, 1.0).value(), 1.7182818284590453, 1e-9);
  EXPECT_NEAR(ominus(phi, phi1, 2.5).value(), 517.01282466834152, 517.0 * 1e-8);
}

TEST(ClosedForm, PowerCatalog) {
  auto k = catalog_closed_form(c::power(2.0, 0.5), c::power(4.0, 0.25));
  ASSERT_TRUE(k);
  EXPECT_NEAR((*k)(3.0).value(), 81.0 / 4.0, 1e-12);
  auto step = catalog_closed_form(c::power(2.0, 0.5), c::power(2.0, 0.5));
  ASSERT_TRUE(step);
  EXPECT_EQ(step->cls(), YoungClass::Y3);
  EXPECT_EQ(step->b().value(), 1.0);
  EXPECT_FALSE(catalog_closed_form(c::power(3.0), c::power(2.0)));
  EXPECT_FALSE(catalog_closed_form(c::square_log(), c::power(3.0)));
  auto z = catalog_closed_form_zero(c::power(2.0, 0.5), c::power(4.0, 0.25));
  ASSERT_TRUE(z);
  EXPECT_NEAR((*z)(2.0).value(), 1.75, 1e-12);
  EXPECT_NEAR((*z)(0.5).value(), std::pow(0.5, 4) / 4.0, 1e-15);
}

TEST(ClosedForm, PositivePartAndTwoPiecePower) {
  auto f2 = catalog_closed_form(c::example7_phi(), c::power(2.0));
  ASSERT_TRUE(f2);
  EXPECT_EQ(to_json(*f2), to_json(c::example7_phi2()));
  auto f3 = catalog_closed_form(c::example7_phi(), c::example7_phi2());
  ASSERT_TRUE(f3);
  EXPECT_EQ(to_json(*f3), to_json(c::example7_phi3()));
  auto f4 = catalog_closed_form(c::example7_phi(), c::example7_phi3());
  ASSERT_TRUE(f4);
  EXPECT_EQ(to_json(*f4), to_json(c::example7_phi2()));
  for (double p : {1.0, 1.5, 2.0}) {
    auto th = catalog_closed_form(c::power(2.0), c::example11_phi_p(p));
    ASSERT_TRUE(th) << p;
    EXPECT_EQ(to_json(*th), to_json(c::example11_theta()));
  }
  auto back = catalog_closed_form(c::power(2.0), c::example11_theta());
  ASSERT_TRUE(back);
  EXPECT_EQ(to_json(*back), to_json(c::example11_phi_p(2.0)));
}

TEST(Ominus, YoungInequality) {
  const std::vector<std::pair<YoungFunction, YoungFunction>> pairs = {
      {c::power(2.0, 0.5), c::power(4.0, 0.25)}, {c::example7_phi(), c::power(2.0)},
      {c::power(2.0), c::example11_phi_p(1.5)}, {c::square_log(), c::power(3.0)}, {c::power(1.5), c::expm1()}};
  const auto grid = geometric_grid(1e-2, 1e2, 41);
  for (const auto& [phi, phi1] : pairs) {
    for (double u : grid) {
      const ExtReal phi2 = ominus(phi, phi1, u);
      for (double v : grid) {
        const ExtReal lhs = phi(u * v);
        if (lhs.is_infinite() || phi2.is_infinite()) continue;
        const double rhs = phi1(v).value() + phi2.value();
        EXPECT_LE(lhs.value(), rhs * (1 + 1e-9) + 1e-12) << u << " " << v;
      }
    }
  }
}

TEST(Ominus, MonotoneRefinement) {
  OminusOptions coarse;
  coarse.points = 20001;
  OminusOptions fine = coarse;
  fine.points = 40001;
  for (double u : {0.3, 1.7, 4.0, 25.0}) {
    const double a = ominus(c::square_log(), c::power(3.0), u, coarse).value();
    const double b = ominus(c::square_log(), c::power(3.0), u, fine).value();
    EXPECT_GE(b, a * (1 - 1e-9)) << u;
    const double x = ominus(c::example7_phi(), c::example7_phi2(), u, coarse).value();
    const double y = ominus(c::example7_phi(), c::example7_phi2(), u, fine).value();
    EXPECT_GE(y, x * (1 - 1e-9)) << u;
  }
}

TEST(Tabulate, MonotoneConvexWithClosedForm) {
  auto r = tabulate(c::example7_phi(), c::power(2.0), geometric_grid(1e-2, 1e2, 101));
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.convex);
  ASSERT_TRUE(r.closed_form);
  EXPECT_EQ(r.rows.size(), 101u);
  for (const auto& row : r.rows) EXPECT_TRUE(close_rel(row.value, golden::ex7_phi2(row.u), 1e-6)) << row.u;
}

TEST(Tabulate, StepConjugateEndsInfinite) {
  auto r = tabulate(c::power(2.0, 0.5), c::power(2.0, 0.5), linear_grid(0.1, 2.0, 20));
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.rows.back().value.is_infinite());
  std::vector<double> us;
  std::vector<ExtReal> vals;
  for (const auto& row : r.rows) {
    us.push_back(row.u);
    vals.push_back(row.value);
  }
  auto f = tabulated_function(us, vals);
  EXPECT_EQ(f.cls(), YoungClass::Y3);
  EXPECT_EQ(f(0.5).value(), 0.0);
  EXPECT_TRUE(f(1.5).is_infinite());
}

TEST(DoubleOminus, TwoPiecePowerDisagreesExactlyBelowOne) {
  auto r = golden::example11_double(1.5);
  EXPECT_TRUE(r.iterate_is_phi2);
  EXPECT_TRUE(r.ok);
  EXPECT_DOUBLE_EQ(r.disagreement_lo, 1e-3);
  EXPECT_LT(r.disagreement_hi, 1.0);
  auto p1 = golden::example11_double(1.0);
  EXPECT_TRUE(p1.ok);
}

TEST(DoubleOminus, PositivePartIterateIsPhi2) {
  auto us = geometric_grid(1e-2, 1e2, 81);
  auto rep = double_ominus_check(c::example7_phi(), c::example7_phi2(), us);
  EXPECT_FALSE(rep.first_disagreement.has_value());
  ASSERT_EQ(rep.agreement.size(), 1u);
  EXPECT_TRUE(rep.inner_exact);
}

TEST(DoubleOminus, EqualHalfSquaresReportRegion) {
  // phi (-) phi is the 0/inf step at 1; phi (-) step(1) = phi(u).
  auto phi = c::power(2.0, 0.5);
  auto us = geometric_grid(1e-2, 1e2, 41);
  auto rep = double_ominus_check(phi, phi, us);
  for (std::size_t i = 0; i < us.size(); ++i) EXPECT_TRUE(close_rel(rep.iterate[i], phi(us[i]), 1e-6)) << us[i];
  EXPECT_FALSE(rep.first_disagreement.has_value());
}

TEST(ProductBound, SmallBatch) {
  for (const auto& pr : props::product_bound_pairs(4, 99u)) {
    auto t = props::product_bound_check(pr, 2000, 1500);
    EXPECT_EQ(t.violations, 0u) << pr.name << " " << t.first;
  }
}

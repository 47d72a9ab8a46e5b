#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "orlicz/catalog.hpp"
#include "orlicz/conjugation.hpp"
#include "orlicz/pathology.hpp"

using namespace orlicz;

TEST(GapSequence, Factorials) {
  auto s = build_gap_sequence(3, factorial_generator());
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.a[0], 6);
  EXPECT_EQ(s.a[1], 24);
  EXPECT_EQ(s.a[2], 120);
  ASSERT_EQ(s.u.size(), 4u);
  EXPECT_EQ(s.u[0], 0);
  EXPECT_EQ(s.u[1], 12);
  EXPECT_EQ(s.u[2], 36);
  EXPECT_EQ(s.u[3], 204);
  auto two = build_gap_sequence(2, factorial_generator());
  EXPECT_TRUE(check_gap_sequence(two).empty());
  EXPECT_EQ(two.u.back(), 36);
}

TEST(GapSequence, CentersAndGrowth) {
  auto s = build_gap_sequence(9, factorial_generator());
  for (std::size_t n = 1; n < s.u.size(); ++n) {
    EXPECT_EQ((s.u[n] + s.u[n - 1]) / 2, s.a[n - 1]);
    if (n + 1 < s.u.size()) EXPECT_GT(s.u[n + 1], 2 * s.u[n]);
  }
}

TEST(GapSequence, GeometricViolates) {
  const auto s = gap_sequence(5, geometric_generator(2));
  const auto v = check_gap_sequence(s);
  // The ratio a_{n+1}/a_n is constant, so the first comparison (n = 2 against n = 1) fails.
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().index, 2);
  try {
    build_gap_sequence(5, geometric_generator(2));
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.violations().size(), v.size());
  }
  EXPECT_THROW(build_gap_sequence(1, factorial_generator()), ConstructionError);
  EXPECT_THROW(build_gap_sequence(3, list_generator({1, 1, 1})), ConstructionError);
}

TEST(Psi, ExactValues) {
  auto s = build_gap_sequence(4, factorial_generator());
  EXPECT_EQ(psi_exact(s, 12), 72);
  EXPECT_EQ(psi_exact(s, 24), 360);
  EXPECT_EQ(psi_exact(s, 36), 648);
  EXPECT_EQ(psi_exact(s, 24) / psi_exact(s, 12), 5);
  for (std::size_t n = 1; n < s.u.size(); ++n) EXPECT_EQ(psi_exact(s, s.u[n]), s.u[n] * s.u[n] / 2);
  // Below u_1 the slope is a_1.
  EXPECT_EQ(psi_exact(s, Rational(7, 3)), 6 * Rational(7, 3));
}

TEST(Psi, FloatDescriptorAgrees) {
  auto s = build_gap_sequence(5, factorial_generator());
  auto psi = build_psi(s);
  EXPECT_EQ(psi.characteristics().cls, YoungClass::Y1);
  for (int k = 0; k <= 400; ++k) {
    const Rational u = Rational(k) * s.u.back() / 200;
    const double want = to_double(psi_exact(s, u));
    EXPECT_NEAR(psi(to_double(u)).value(), want, 1e-12 * std::max(1.0, want)) << rational_str(u);
  }
}

TEST(Pathology, Report) {
  const auto r = verify_pathology(8);
  EXPECT_EQ(r.n, 8);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(r.equality_exact);
  EXPECT_TRUE(r.domination_exact);
  EXPECT_TRUE(r.domination_float);
  EXPECT_GE(r.domination_points, 10000u);
  EXPECT_GE(r.domination_min_gap, -1e-12);  // the exact check is strict; this one is in doubles
  EXPECT_TRUE(r.delta2_identity_holds);
  EXPECT_TRUE(r.delta2_increasing);
  EXPECT_TRUE(r.ominus_zero_below_one);
  EXPECT_TRUE(r.ominus_divergent_above_one);
  EXPECT_EQ(r.t_to_one.size(), 8u);
  EXPECT_EQ(r.t_to_zero.size(), 8u);
  for (double q : r.ratio_to_one) EXPECT_NEAR(q, 1.0, 1e-12);
  for (std::size_t i = 1; i < r.ratio_to_zero.size(); ++i) EXPECT_LT(r.ratio_to_zero[i], r.ratio_to_zero[i - 1]);
  // 2/sqrt(R_n) decays slowly: R_8 is about 13.
  EXPECT_LT(r.ratio_to_zero.back(), 0.6);
  EXPECT_TRUE(r.ok());
}

TEST(Pathology, Delta2RatiosExact) {
  const auto r = verify_pathology(4);
  ASSERT_EQ(r.delta2_ratio.size(), 4u);
  EXPECT_EQ(r.delta2_ratio[0], 5);
  EXPECT_EQ(r.delta2_ratio[1], Rational(23, 3));
  EXPECT_EQ(r.delta2_ratio[2], Rational(137, 17));
  EXPECT_EQ(r.delta2_ratio[3], Rational(943, 103));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.delta2_ratio[i], r.delta2_identity[i]);
    EXPECT_GE(r.delta2_ratio[i], r.delta2_lower_bound[i]);
    EXPECT_EQ(r.ratio_to_zero_squared[i], 4 / r.delta2_ratio[i]);
  }
  // Only the first ratio meets the lower bound with equality.
  EXPECT_EQ(r.delta2_ratio[0], r.delta2_lower_bound[0]);
  EXPECT_LT(r.delta2_ratio[1], r.delta2_lower_bound[1] + 2);
}

TEST(Pathology, OminusIsStepAtOne) {
  const auto r = verify_pathology(6);
  ASSERT_FALSE(r.ominus_samples.empty());
  for (const auto& [u, v] : r.ominus_samples) {
    if (u <= 1.0)
      EXPECT_EQ(v.value(), 0.0) << u;
    else
      EXPECT_TRUE(v.is_infinite()) << u;
  }
}

TEST(Pathology, RefutationCertificate) {
  const auto r = verify_pathology(8);
  const auto ref = psi_refutation(r);
  ASSERT_EQ(ref.witnesses.size(), 8u);
}

TEST(Pathology, JsonAndCsv) {
  const auto r = verify_pathology(4);
  const Json j = to_json(r);
  EXPECT_EQ(j.at("n").get<int>(), 4);
  EXPECT_TRUE(j.contains("identity_chain"));
  const std::string csv = pathology_csv(r, 10);
  EXPECT_EQ(csv.rfind("u,psi,phi\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);  // header and 11 grid points
  EXPECT_EQ(to_json(verify_pathology(4)).dump(), j.dump());
}

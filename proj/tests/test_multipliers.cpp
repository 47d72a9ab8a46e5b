#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orlicz/catalog.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/multipliers.hpp"
#include "space_checks.hpp"

using namespace orlicz;
namespace c = orlicz::catalog;

namespace {

StepFunction vec(std::initializer_list<double> v) {
  StepFunction x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) x[i++] = d;
  return x;
}

}  // namespace

TEST(MultiplierNorm, HolderPairOnCounting) {
  auto m = MeasureModel::counting(4);
  auto est = multiplier_norm(make_lp(2.0), make_lp(1.0), vec({1, 1, 1, 1}), m);
  ASSERT_TRUE(est.certificate.has_value());
  EXPECT_DOUBLE_EQ(*est.certificate, 2.0);
  EXPECT_NEAR(est.value, 2.0, 1e-6);
  EXPECT_LE(est.value, *est.certificate * (1 + 1e-12));
  EXPECT_LE(norm(make_lp(2.0), est.y, m), 1.0 + 1e-9);
}

TEST(MultiplierNorm, SameSpaceGivesSupNorm) {
  auto m = MeasureModel::counting(4);
  auto est = multiplier_norm(make_lp(2.0), make_lp(2.0), vec({3, 1, 2, 0}), m);
  ASSERT_TRUE(est.certificate.has_value());
  EXPECT_DOUBLE_EQ(*est.certificate, 3.0);
  EXPECT_NEAR(est.value, 3.0, 1e-6);
}

TEST(MultiplierNorm, OptimizerReproducesValue) {
  auto m = MeasureModel::counting(8);
  std::mt19937_64 rng(31);
  const IdealSpace E = make_lp(3.0), F = make_lp(1.5);
  for (int k = 0; k < 5; ++k) {
    const StepFunction x = spaces::random_simple(m, rng);
    auto est = multiplier_norm(E, F, x, m);
    const StepFunction xy = x.cwiseProduct(est.y);
    EXPECT_NEAR(norm(F, xy, m), est.value, 1e-10 * std::max(1.0, est.value));
    ASSERT_TRUE(est.certificate.has_value());
    EXPECT_GE(est.value, 0.98 * *est.certificate);
  }
}

TEST(MultiplierNorm, WeightedSupIdentity) {
  auto m = MeasureModel::grid01(16);
  const IdealSpace E = make_linf({1.0, 1.0}), F = make_linf({1.0, 0.5});
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const StepFunction x = spaces::random_simple(m, rng);
    double want = 0.0;
    for (Eigen::Index i = 0; i < m.size(); ++i) want = std::max(want, std::fabs(x[i]) / std::sqrt(m.midpoint(i)));
    auto est = multiplier_norm(E, F, x, m);
    EXPECT_NEAR(est.value, want, 1e-8 * want);
    ASSERT_TRUE(est.certificate.has_value());
    EXPECT_NEAR(*est.certificate, want, 1e-12 * want);
  }
}

TEST(MultiplierNorm, MonotoneInTheSpaces) {
  // On [0,1]: shrinking E to L^3 or enlarging F to L^1 cannot increase the estimate.
  auto m = MeasureModel::grid01(8);
  std::mt19937_64 rng(41);
  const StepFunction x = spaces::random_simple(m, rng);
  const double base = multiplier_norm(make_lp(2.0), make_lp(1.5), x, m).value;
  EXPECT_GE(base * (1 + 1e-6), multiplier_norm(make_lp(3.0), make_lp(1.5), x, m).value);
  EXPECT_GE(base * (1 + 1e-6), multiplier_norm(make_lp(2.0), make_lp(1.0), x, m).value);
}

TEST(MultiplierNorm, SharedModelRequired) {
  auto m = MeasureModel::counting(4);
  EXPECT_THROW(multiplier_norm(make_lp(2.0), make_lp(1.0), vec({1, 1, 1}), m), DomainError);
}

TEST(MultiplierRefinement, WeightedPairDiverges) {
  auto r = multiplier_refinement(make_linf({1.0, 1.0}), make_linf({1.0, 0.5}), {16, 64, 256, 1024});
  EXPECT_TRUE(r.diverging);
  ASSERT_EQ(r.values.size(), 4u);
  for (std::size_t i = 1; i < r.values.size(); ++i) EXPECT_GT(r.values[i], r.values[i - 1]);
  // sup over atoms of t^{-1/2} at the first midpoint grows like sqrt(n).
  EXPECT_NEAR(r.growth_exponent, 0.5, 0.05);
  auto flat = multiplier_refinement(make_lp(2.0), make_lp(1.0), {16, 64, 256});
  EXPECT_FALSE(flat.diverging);
}

TEST(Holder, BatchAndOptimizer) {
  auto m = MeasureModel::counting(8);
  const StepFunction x = vec({1, 2, 0.5, 3, 0, 1, 1, 2});
  auto est = multiplier_norm(make_lp(2.0), make_lp(1.0), x, m);
  auto r = holder_check(make_lp(2.0), make_lp(1.0), x, m, est, 100);
  EXPECT_EQ(r.checked, 102u);  // the batch, y = 0 and the optimizer
  EXPECT_EQ(r.violations, 0u);
  EXPECT_NEAR(r.optimizer_ratio, 1.0, 1e-9);
}

TEST(FundamentalBounds, QuotedValues) {
  auto m = MeasureModel::grid01(512);
  auto b = fundamental_bounds(make_lorentz(Profile::power(0.5)), make_lorentz(Profile::power(1.0)), m, 0.25);
  EXPECT_NEAR(b.lower, 0.5, 1e-12);
  EXPECT_GE(b.upper, b.lower);
  auto same = fundamental_bounds(make_lp(2.0), make_lp(2.0), m, 0.25);
  EXPECT_NEAR(same.lower, 1.0, 1e-12);
}

TEST(FundamentalBounds, SandwichForPowers) {
  auto m = MeasureModel::grid01(512);
  // f_F / f_E = t^{1/2}: the hypothesis holds with a = 1/2.
  auto b = fundamental_bounds(make_lp(2.0), make_lp(1.0), m, 0.5);
  EXPECT_TRUE(b.sandwich_checked);
  EXPECT_TRUE(b.sandwich_holds);
  EXPECT_NEAR(b.a, 0.5, 1e-6);
  EXPECT_LE(b.lower, b.upper * (1 + 1e-12));
  EXPECT_LE(b.upper, b.sandwich_upper * (1 + 1e-9));
}

TEST(FundamentalBounds, GapPsiPairIsOne) {
  // psi^-1(1/s) = phi^-1(1/s) at s = 2/u_n^2, i.e. 1/72 and 1/648; grid01(648) has both as breakpoints.
  auto m = MeasureModel::grid01(648);
  const IdealSpace E = make_cl(make_lp(1.0), c::example9_psi(8));
  const IdealSpace F = make_cl(make_lp(1.0), c::power(2.0, 0.5));
  for (double t : {1.0 / 648, 1.0 / 72, 0.5, 1.0}) EXPECT_NEAR(fundamental_bounds(E, F, m, t).lower, 1.0, 1e-9) << t;
}

TEST(Eta, TwoThirdsPower) {
  auto psi = Profile::power(2.0 / 3.0);
  auto r = eta_construction(psi, psi);
  ASSERT_TRUE(r.finite);
  EXPECT_NEAR(r.C, 4.0 / 3.0, 1e-9);
  ASSERT_TRUE(r.eta.has_value());
  for (double t : linear_grid(1.0 / 512, 1.0, 512)) EXPECT_NEAR((*r.eta)(t), 4.0 / 3.0 * std::cbrt(t), 1e-3) << t;
}

TEST(Eta, SqrtDiverges) {
  auto psi = Profile::power(0.5);
  auto r = eta_construction(psi, psi);
  EXPECT_FALSE(r.finite);
  EXPECT_TRUE(std::isinf(r.C));
  EXPECT_FALSE(r.eta.has_value());
  // Equal contributions per decade: (1/4) ln 10.
  ASSERT_GE(r.decade_contributions.size(), 3u);
  for (double d : r.decade_contributions) EXPECT_NEAR(d, 0.25 * std::log(10.0), 1e-6);
}

TEST(Eta, IdentityPsi) {
  auto phi = Profile::power(0.4, 2.0);
  auto r = eta_construction(Profile::power(1.0), phi);
  ASSERT_TRUE(r.finite);
  EXPECT_NEAR(r.C, 2.0, 1e-9);
  for (double t : {0.01, 0.3, 1.0}) EXPECT_NEAR((*r.eta)(t), phi(t), 1e-6 * phi(t));
}

TEST(Eta, EmbeddingBatch) {
  auto psi = Profile::power(2.0 / 3.0);
  auto r = eta_construction(psi, psi);
  verify_eta_embedding(r, psi, psi, MeasureModel::grid01(512), 100);
  EXPECT_EQ(r.checked, 100u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_LE(r.max_ratio, 1.0 + 1e-9);
  // The discrete extremal falls short of C at n = 512 (the continuum value is reached only in the limit).
  EXPECT_GT(r.extremal_ratio, 0.95);
  EXPECT_LE(r.extremal_ratio, 1.0 + 1e-9);
}

TEST(Trichotomy, CanonicalInstances) {
  auto i = predict_multiplier_space(c::power(4.0), c::power(2.0));
  EXPECT_EQ(i.case_id, "i");
  EXPECT_EQ(i.space, "E_phi2");
  ASSERT_TRUE(i.phi2.has_value());
  EXPECT_TRUE(i.phi2_exact);
  EXPECT_TRUE(i.delta2_phi2);
  auto ii = predict_multiplier_space(c::power(2.0), c::power(2.0));
  EXPECT_EQ(ii.case_id, "ii");
  EXPECT_EQ(ii.space, "Linf");
  auto iii = predict_multiplier_space(c::power(1.0), c::power(2.0));
  EXPECT_EQ(iii.case_id, "iii");
  EXPECT_EQ(iii.space, "zero");
  for (auto t : iii.trends) EXPECT_EQ(t, Trend::divergent);
}

TEST(Trichotomy, HypothesisViolation) {
  EXPECT_THROW(predict_multiplier_space(c::power(2.0), c::example7_phi()), DomainError);
  EXPECT_THROW(predict_multiplier_space(c::linear_cap(2.0), c::power(2.0)), DomainError);
}

TEST(Conjecture, HolderCaseProbe) {
  auto r = conjecture_probe(make_lp(1.0), MeasureModel::grid01(64), c::power(4.0), c::power(2.0), 10);
  ASSERT_EQ(r.factors.size(), 10u);
  EXPECT_LE(r.max_factor, 4.0);
  EXPECT_GE(r.max_factor, 1.0);
}

TEST(Conjecture, SequenceZeroVariant) {
  auto r = conjecture_probe(make_lp(1.0), MeasureModel::counting(8), c::power(4.0, 0.25), c::power(2.0, 0.5), 10, true);
  EXPECT_LE(r.max_factor, 2.0 + 1e-2);
}

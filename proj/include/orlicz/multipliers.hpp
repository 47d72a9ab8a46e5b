#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orlicz/conjugation.hpp"
#include "orlicz/profile.hpp"
#include "orlicz/space_models.hpp"

namespace orlicz {

struct MultiplierOptions {
  std::size_t random_starts = 8;  // on top of the deterministic starts
  int max_sweeps = 400;
  double step0 = 0.5;
  double min_step = 1e-9;
  unsigned seed = 20240601u;
  bool use_cone = true;  // similarly ordered search for symmetric pairs on uniform models
};

struct MultiplierEstimate {
  double value = 0.0;  // ||x y||_F at the normalized optimizer, a lower bound
  StepFunction y;      // ||y||_E = 1
  std::optional<double> certificate;
  std::string certificate_source;
  double gap = 0.0;  // (certificate - value) / certificate when certified
  std::size_t starts = 0;
  std::string search;  // "cone" or "coordinate"
  double objective = 0.0;  // best ratio seen during the search
};

// Analytic value of ||x||_{M(E,F)} when the pair is catalogued.
std::optional<std::pair<double, std::string>> multiplier_certificate(const IdealSpace& E, const IdealSpace& F,
                                                                     const StepFunction& x, const MeasureModel& m);

MultiplierEstimate multiplier_norm(const IdealSpace& E, const IdealSpace& F, const StepFunction& x, const MeasureModel& m,
                                   const MultiplierOptions& opts = {});

struct RefinementReport {
  std::vector<Eigen::Index> atoms;
  std::vector<double> values;
  double growth_exponent = 0.0;  // d log value / d log n between the extremes
  bool diverging = false;
};

// ||chi_Omega||_{M(E,F)} on grid01(n) for each n.
RefinementReport multiplier_refinement(const IdealSpace& E, const IdealSpace& F, const std::vector<Eigen::Index>& ns,
                                       const MultiplierOptions& opts = {});

struct HolderReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double max_excess = 0.0;    // max ||xy||_F - M ||y||_E
  double optimizer_ratio = 0.0;  // ||x y*||_F / (M ||y*||_E)
};

HolderReport holder_check(const IdealSpace& E, const IdealSpace& F, const StepFunction& x, const MeasureModel& m,
                          const MultiplierEstimate& est, std::size_t batch = 100, unsigned seed = 7u);

struct FundamentalBounds {
  double lower = 0.0;
  double upper = 0.0;
  double a = 0.0;  // largest a with f_F/(f_E t^a) non-decreasing on the breakpoints
  bool sandwich_checked = false;
  double sandwich_upper = 0.0;  // (1/a) f_F(t)/f_E(t)
  bool sandwich_holds = false;
};

FundamentalBounds fundamental_bounds(const IdealSpace& E, const IdealSpace& F, const MeasureModel& m, double t);

struct EtaReport {
  bool finite = false;
  double C = 0.0;
  std::optional<Profile> eta;
  std::vector<double> decade_contributions;  // integral over [T 10^{-k-1}, T 10^{-k}]
  // Embedding verification on the model.
  std::size_t checked = 0;
  std::size_t violations = 0;
  double max_ratio = 0.0;       // max ||x||_Lambda / (C ||x||_M) over the batch
  double extremal_ratio = 0.0;  // the same for x = cell averages of psi'
};

// eta(t) = int_0^t psi' phi' on [0, T] with divergence detection at 0.
EtaReport eta_construction(const Profile& psi, const Profile& phi, double T = 1.0);
// Adds the random-batch and extremal checks on m (psi must be a power sum).
void verify_eta_embedding(EtaReport& r, const Profile& psi, const Profile& phi, const MeasureModel& m,
                          std::size_t batch = 100, unsigned seed = 11u);

enum class Trend { vanishing, finite, divergent };
std::string trend_name(Trend t);

struct PredictOptions {
  std::vector<double> vs = {1e-2, 1e-1, 1.0, 10.0, 100.0};
  int first_decade = 1;
  int decades = 12;
  std::size_t points_per_decade = 64;
  double vanish_factor = 1e-2;  // over the last three decades
};

struct Trichotomy {
  std::string case_id;  // "i", "ii", "iii"
  std::string space;    // "E_phi2", "Linf", "zero"
  std::vector<double> vs;
  std::vector<Trend> trends;
  std::vector<std::vector<double>> window_max;  // per v, max of phi(uv)/phi1(u) per decade
  // Case (i) side conditions detected on samples.
  bool monotone_fv = false;
  bool monotone_inverse_ratio = false;
  bool delta2_phi2 = false;
  std::optional<YoungFunction> phi2;
  bool phi2_exact = false;
};

// phi, phi1 must be increasing Orlicz functions.
Trichotomy predict_multiplier_space(const YoungFunction& phi1, const YoungFunction& phi, const PredictOptions& opts = {});

// Cheaper search settings used by conjecture_probe.
MultiplierOptions probe_options();

struct ConjectureReport {
  std::vector<double> multiplier_values;
  std::vector<double> cl_values;
  std::vector<double> factors;  // max(a/b, b/a)
  double max_factor = 0.0;
  bool phi2_exact = false;
};

ConjectureReport conjecture_probe(const IdealSpace& E, const MeasureModel& m, const YoungFunction& phi1,
                                  const YoungFunction& phi, std::size_t batch = 50, bool zero_variant = false,
                                  unsigned seed = 5u, const MultiplierOptions& opts = probe_options());
Json to_json(const MultiplierEstimate& e);
Json to_json(const Trichotomy& t);

}  // namespace orlicz

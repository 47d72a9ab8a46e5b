#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orlicz/equivalence.hpp"
#include "orlicz/profile.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

using StepFunction = Eigen::VectorXd;

// Atoms laid out left to right; atom i occupies [left_i, left_i + weight_i) on the line.
struct MeasureModel {
  enum class Label { grid01, half_line, counting, custom };
  Label label = Label::custom;
  Eigen::VectorXd weights;
  double horizon = 0.0;  // T for half_line

  Eigen::Index size() const { return weights.size(); }
  double total() const { return weights.sum(); }
  double left(Eigen::Index i) const;
  double midpoint(Eigen::Index i) const;
  bool uniform() const;

  static MeasureModel grid01(Eigen::Index n = 512);
  // [0, t_min) followed by geometric cells up to T.
  static MeasureModel half_line(double T = 65536.0, Eigen::Index n = 1024, double t_min = 1.0 / 65536.0);
  static MeasureModel counting(Eigen::Index n);
  static MeasureModel custom(Eigen::VectorXd weights);
};

std::string label_name(MeasureModel::Label l);
EmbeddingKind embedding_kind(const MeasureModel& m);

// x* as steps: value[k] on [t[k], t[k+1]); t[0] = 0, t.back() = measure of the support.
struct DecreasingProfile {
  std::vector<double> t;
  std::vector<double> value;
  // Prefix integrals of x* at t[k].
  std::vector<double> integral;

  double support() const { return t.back(); }
  double star(double s) const;
  double star_star(double s) const;  // (1/s) int_0^s x*
};

DecreasingProfile rearrange(const StepFunction& x, const MeasureModel& m);

// c * t^alpha evaluated at atom midpoints.
struct Weight {
  double c = 1.0, alpha = 0.0;
  bool trivial() const { return c == 1.0 && alpha == 0.0; }
};

struct LpSpace {
  double p = 1.0;
  Weight w;
};
struct LinfSpace {
  Weight w;
};
struct LorentzSpace {
  Profile phi;
};
struct MarcinkiewiczSpace {
  Profile phi;
};
struct CLSpace;

using IdealSpace = std::variant<LpSpace, LinfSpace, LorentzSpace, MarcinkiewiczSpace, CLSpace>;

struct CLSpace {
  std::shared_ptr<const IdealSpace> base;
  std::shared_ptr<const YoungFunction> phi;
};

IdealSpace make_lp(double p, Weight w = {});
IdealSpace make_linf(Weight w = {});
IdealSpace make_lorentz(Profile phi);
IdealSpace make_marcinkiewicz(Profile phi);
IdealSpace make_cl(IdealSpace base, YoungFunction phi);

// Norm depends only on x* (weights trivial; CL over a symmetric base).
bool is_symmetric(const IdealSpace& s);
// Throws ValidationError for bad parameters.
void validate_space(const IdealSpace& s);
std::string describe(const IdealSpace& s);

Eigen::VectorXd weight_values(const Weight& w, const MeasureModel& m);

double norm(const IdealSpace& s, const StepFunction& x, const MeasureModel& m);

// ||phi o |x| ||_base, +inf if some atom leaves the finiteness domain.
ExtReal cl_modular(const IdealSpace& base, const YoungFunction& phi, const StepFunction& x, const MeasureModel& m);

struct LuxemburgOptions {
  double rtol = 1e-10;
  int max_doublings = 60;
  bool keep_trace = false;
};

struct LuxemburgResult {
  double value = 0.0;
  // (lambda, modular at x / lambda)
  std::vector<std::pair<double, ExtReal>> trace;
  int iterations = 0;
  bool at_jump = false;  // attained at ||x||_inf / b (class Y3 jump rule)
};

LuxemburgResult luxemburg(const IdealSpace& base, const YoungFunction& phi, const StepFunction& x, const MeasureModel& m,
                          const LuxemburgOptions& opts = {});
double luxemburg_norm(const IdealSpace& base, const YoungFunction& phi, const StepFunction& x, const MeasureModel& m);

StepFunction indicator(const MeasureModel& m, Eigen::Index first_atoms);
// Number of leading atoms whose measure is t; throws DomainError if t is not representable.
Eigen::Index atoms_for_measure(const MeasureModel& m, double t);

double fundamental_function(const IdealSpace& s, const MeasureModel& m, double t);
// 1 / phi^-1(1 / f_E(t))
double cl_fundamental_formula(const IdealSpace& base, const YoungFunction& phi, const MeasureModel& m, double t);

Json to_json(const MeasureModel& m);
Json to_json(const StepFunction& x);
Json to_json(const IdealSpace& s);
MeasureModel measure_from_json(const Json& j, const std::string& path = "");
StepFunction step_from_json(const Json& j, const std::string& path = "");
IdealSpace space_from_json(const Json& j, const std::string& path = "");

}  // namespace orlicz

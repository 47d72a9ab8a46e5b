#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orlicz/descriptor_json.hpp"
#include "orlicz/equivalence.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

using Rational = boost::multiprecision::cpp_rational;

// a_n for n = 1, 2, ...
using Generator = std::function<Rational(int)>;

Generator factorial_generator();  // (n+2)!
Generator geometric_generator(Rational ratio);
Generator list_generator(std::vector<Rational> values);

// a = (a_1..a_N), u = (u_0 = 0, u_1..u_N) with u_n = 2a_n - u_{n-1}.
struct GapSequence {
  std::vector<Rational> a;
  std::vector<Rational> u;
  std::size_t size() const { return a.size(); }
};

struct GapViolation {
  std::string condition;
  int index = 0;  // 1-based n at which the condition fails
};

class ConstructionError : public ValidationError {
 public:
  ConstructionError(std::string what, std::vector<GapViolation> v)
      : ValidationError(std::move(what)), violations_(std::move(v)) {}
  const std::vector<GapViolation>& violations() const { return violations_; }

 private:
  std::vector<GapViolation> violations_;
};

GapSequence gap_sequence(int n, const Generator& gen);
std::vector<GapViolation> check_gap_sequence(const GapSequence& s);
// Throws ConstructionError for n < 2 or any violation.
GapSequence build_gap_sequence(int n, const Generator& gen);

// Slope a_n on [u_{n-1}, u_n), continued by u^2/2 beyond u_N.
Rational psi_exact(const GapSequence& s, const Rational& u);
YoungFunction build_psi(const GapSequence& s);

struct IdentityStep {
  std::string statement;
  std::string status;  // assumed, catalog, verified
};

struct PathologyReport {
  int n = 0;  // number of witnesses
  GapSequence seq;
  std::vector<GapViolation> violations;

  bool equality_exact = true;  // psi(u_n) = u_n^2/2
  bool domination_exact = true;  // on the rational grid over [0, u_3]
  std::size_t domination_points = 0;
  double domination_min_gap = 0.0;  // floating check up to 2u_N
  bool domination_float = true;

  // R_n = psi(2u_n)/psi(u_n) as exact rationals.
  std::vector<Rational> delta2_ratio;
  std::vector<Rational> delta2_identity;     // 1 + 2a_{n+1}/u_n
  std::vector<Rational> delta2_lower_bound;  // 1 + a_{n+1}/a_n
  bool delta2_identity_holds = true;
  bool delta2_increasing = true;

  // (u, value) of numerical phi (-) psi on the sample.
  std::vector<std::pair<double, ExtReal>> ominus_samples;
  bool ominus_zero_below_one = true;
  bool ominus_divergent_above_one = true;

  // psi^-1(1/t)/phi^-1(1/t) at t = 1/psi(u_n) (exactly 1) and t = 1/psi(2u_n) (squared: 4/R_n).
  std::vector<double> t_to_one, ratio_to_one;
  std::vector<double> t_to_zero, ratio_to_zero;
  std::vector<Rational> ratio_to_zero_squared;
  // psi/phi at u_n (1) and 2u_n (R_n/4).
  std::vector<std::pair<double, double>> nonmonotone_witnesses;

  std::vector<IdentityStep> identity_chain;
  bool ok() const;
};

// n witnesses need a_{n+1}, so n+1 terms are built.
PathologyReport verify_pathology(int n = 8, const Generator& gen = factorial_generator());

Json to_json(const PathologyReport& r);
// "u,psi,phi" rows on a linear grid over [0, 2u_N].
std::string pathology_csv(const PathologyReport& r, std::size_t points = 200);

// Exact divergence of phi^-1 / psi^-1 along w_n = psi(2u_n): the ratio is sqrt(R_n)/2.
ExternalRefutation psi_refutation(const PathologyReport& r);

double to_double(const Rational& q);
std::string rational_str(const Rational& q);

}  // namespace orlicz

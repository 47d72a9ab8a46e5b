#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orlicz/descriptor_json.hpp"

namespace orlicz {

// Non-negative function on [0, inf) used as a Lorentz / Marcinkiewicz parameter,
// a fundamental function, or a weight.
class Profile {
 public:
  enum class Kind { power_sum, tabulated, t_over };

  // sum_i c_i t^{p_i}
  static Profile power(double p, double c = 1.0);
  static Profile power_sum(std::vector<std::pair<double, double>> terms);  // (c, p)
  // Piecewise linear through (t_i, v_i); t_0 must be 0. Constant past the last knot.
  static Profile tabulated(std::vector<double> t, std::vector<double> v);
  // t / psi(t) for a power-sum psi.
  static Profile t_over(const Profile& psi);

  Kind kind() const { return kind_; }
  double operator()(double t) const;
  // Right derivative.
  double derivative(double t) const;
  // Value at 0+.
  double at_zero() const;

  const std::vector<std::pair<double, double>>& terms() const { return terms_; }
  const std::vector<double>& knots() const { return t_; }
  const std::vector<double>& values() const { return v_; }

  std::string describe() const;

 private:
  Kind kind_ = Kind::power_sum;
  std::vector<std::pair<double, double>> terms_;
  std::vector<double> t_, v_;
};

// Sampled shape checks on the given points (sorted, positive).
bool is_concave_on(const Profile& f, const std::vector<double>& ts, double tol = 1e-12);
bool is_quasi_concave_on(const Profile& f, const std::vector<double>& ts, double tol = 1e-12);

Json to_json(const Profile& f);
Profile profile_from_json(const Json& j, const std::string& path = "");

}  // namespace orlicz

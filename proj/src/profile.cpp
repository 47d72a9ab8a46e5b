#include "orlicz/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

double power_sum_value(const std::vector<std::pair<double, double>>& terms, double t) {
  double s = 0.0;
  for (const auto& [c, p] : terms) s += p == 0.0 ? c : c * std::pow(t, p);
  return s;
}

double power_sum_derivative(const std::vector<std::pair<double, double>>& terms, double t) {
  double s = 0.0;
  for (const auto& [c, p] : terms) {
    if (p == 0.0) continue;
    s += c * p * std::pow(t, p - 1.0);
  }
  return s;
}

}  // namespace

Profile Profile::power(double p, double c) { return power_sum({{c, p}}); }

Profile Profile::power_sum(std::vector<std::pair<double, double>> terms) {
  if (terms.empty()) throw ValidationError("profile: empty power sum");
  for (const auto& [c, p] : terms) {
    if (!(c > 0.0) || !std::isfinite(c) || !(p >= 0.0) || !std::isfinite(p))
      throw ValidationError("profile: power-sum terms need c > 0 and p >= 0");
  }
  Profile f;
  f.kind_ = Kind::power_sum;
  f.terms_ = std::move(terms);
  return f;
}

Profile Profile::tabulated(std::vector<double> t, std::vector<double> v) {
  if (t.size() != v.size() || t.size() < 2) throw ValidationError("profile: table needs matching knots, at least 2");
  if (t.front() != 0.0) throw ValidationError("profile: table must start at t = 0");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(v[i]) || v[i] < 0.0) throw ValidationError("profile: table values must be finite and non-negative");
    if (i > 0 && !(t[i] > t[i - 1])) throw ValidationError("profile: table knots must increase strictly");
  }
  Profile f;
  f.kind_ = Kind::tabulated;
  f.t_ = std::move(t);
  f.v_ = std::move(v);
  return f;
}

Profile Profile::t_over(const Profile& psi) {
  if (psi.kind_ != Kind::power_sum) throw ValidationError("profile: t_over needs a power-sum psi");
  Profile f;
  f.kind_ = Kind::t_over;
  f.terms_ = psi.terms_;
  return f;
}

double Profile::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("profile evaluated at a negative argument");
  switch (kind_) {
    case Kind::power_sum:
      return power_sum_value(terms_, t);
    case Kind::tabulated: {
      if (t >= t_.back()) return v_.back();
      const auto it = std::upper_bound(t_.begin(), t_.end(), t);
      const std::size_t i = static_cast<std::size_t>(it - t_.begin());
      const double w = (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
      return v_[i - 1] + w * (v_[i] - v_[i - 1]);
    }
    case Kind::t_over:
      break;
  }
  if (t == 0.0) return at_zero();
  return t / power_sum_value(terms_, t);
}

double Profile::derivative(double t) const {
  switch (kind_) {
    case Kind::power_sum:
      return power_sum_derivative(terms_, t);
    case Kind::tabulated: {
      if (t >= t_.back()) return 0.0;
      const auto it = std::upper_bound(t_.begin(), t_.end(), t);
      const std::size_t i = static_cast<std::size_t>(it - t_.begin());
      return (v_[i] - v_[i - 1]) / (t_[i] - t_[i - 1]);
    }
    case Kind::t_over:
      break;
  }
  const double s = power_sum_value(terms_, t);
  return (s - t * power_sum_derivative(terms_, t)) / (s * s);
}

double Profile::at_zero() const {
  switch (kind_) {
    case Kind::power_sum: {
      double s = 0.0;
      for (const auto& [c, p] : terms_) {
        if (p == 0.0) s += c;
      }
      return s;
    }
    case Kind::tabulated:
      return v_.front();
    case Kind::t_over:
      break;
  }
  // t / psi(t) as t -> 0+: governed by the smallest exponent.
  double pmin = std::numeric_limits<double>::infinity(), cmin = 0.0;
  for (const auto& [c, p] : terms_) {
    if (p < pmin) {
      pmin = p;
      cmin = c;
    } else if (p == pmin) {
      cmin += c;
    }
  }
  if (pmin < 1.0) return 0.0;
  if (pmin == 1.0) return 1.0 / cmin;
  return std::numeric_limits<double>::infinity();
}

std::string Profile::describe() const {
  auto sum = [&] {
    std::string s;
    for (const auto& [c, p] : terms_) {
      if (!s.empty()) s += " + ";
      s += format_double(c) + "*t^" + format_double(p);
    }
    return s;
  };
  switch (kind_) {
    case Kind::power_sum:
      return sum();
    case Kind::tabulated:
      return "table(" + std::to_string(t_.size()) + " knots)";
    case Kind::t_over:
      break;
  }
  return "t/(" + sum() + ")";
}

bool is_concave_on(const Profile& f, const std::vector<double>& ts, double tol) {
  for (std::size_t i = 2; i < ts.size(); ++i) {
    const double s1 = (f(ts[i - 1]) - f(ts[i - 2])) / (ts[i - 1] - ts[i - 2]);
    const double s2 = (f(ts[i]) - f(ts[i - 1])) / (ts[i] - ts[i - 1]);
    if (s2 > s1 + tol * (1.0 + std::fabs(s1))) return false;
  }
  return true;
}

bool is_quasi_concave_on(const Profile& f, const std::vector<double>& ts, double tol) {
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double a = f(ts[i - 1]), b = f(ts[i]);
    if (b < a * (1.0 - tol)) return false;
    if (b / ts[i] > (a / ts[i - 1]) * (1.0 + tol)) return false;
  }
  return true;
}

Json to_json(const Profile& f) {
  Json j;
  switch (f.kind()) {
    case Profile::Kind::power_sum:
    case Profile::Kind::t_over: {
      j["kind"] = f.kind() == Profile::Kind::power_sum ? "power_sum" : "t_over";
      Json terms = Json::array();
      for (const auto& [c, p] : f.terms()) terms.push_back({{"c", format_double(c)}, {"p", format_double(p)}});
      j["terms"] = terms;
      break;
    }
    case Profile::Kind::tabulated: {
      j["kind"] = "tabulated";
      Json t = Json::array(), v = Json::array();
      for (double x : f.knots()) t.push_back(format_double(x));
      for (double x : f.values()) v.push_back(format_double(x));
      j["t"] = t;
      j["v"] = v;
      break;
    }
  }
  return j;
}

Profile profile_from_json(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw DescriptorError(path + "/kind", "profile needs a string 'kind'");
  const std::string kind = j["kind"];
  if (kind == "power_sum" || kind == "t_over") {
    if (!j.contains("terms") || !j["terms"].is_array()) throw DescriptorError(path + "/terms", "profile needs 'terms'");
    std::vector<std::pair<double, double>> terms;
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
      const std::string p = path + "/terms/" + std::to_string(i);
      const Json& t = j["terms"][i];
      if (!t.is_object() || !t.contains("c") || !t.contains("p")) throw DescriptorError(p, "term needs c and p");
      terms.emplace_back(parse_decimal(t["c"], p + "/c"), parse_decimal(t["p"], p + "/p"));
    }
    Profile ps = Profile::power_sum(std::move(terms));
    return kind == "t_over" ? Profile::t_over(ps) : ps;
  }
  if (kind == "tabulated") {
    std::vector<double> t, v;
    for (const char* key : {"t", "v"}) {
      if (!j.contains(key) || !j[key].is_array()) throw DescriptorError(path + "/" + key, "table needs an array");
    }
    for (std::size_t i = 0; i < j["t"].size(); ++i) t.push_back(parse_decimal(j["t"][i], path + "/t/" + std::to_string(i)));
    for (std::size_t i = 0; i < j["v"].size(); ++i) v.push_back(parse_decimal(j["v"][i], path + "/v/" + std::to_string(i)));
    return Profile::tabulated(std::move(t), std::move(v));
  }
  throw DescriptorError(path + "/kind", "unknown profile kind '" + kind + "'");
}

}  // namespace orlicz

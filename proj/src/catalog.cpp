#include "orlicz/catalog.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "orlicz/descriptor_json.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/pathology.hpp"

namespace orlicz::catalog {

namespace {

Piece zero_from(double from) { return {from, formula::Affine{0.0, 0.0}}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double number(const std::string& s, const std::string& spec) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw DescriptorError("", "bad number '" + s + "' in '" + spec + "'");
  return v;
}

}  // namespace

YoungFunction power(double p, double c) { return YoungFunction({{{0.0, formula::Power{c, p, 0.0}}}, std::nullopt}); }

YoungFunction zero_inf_step(double b) { return YoungFunction({{zero_from(0.0)}, b}); }

YoungFunction positive_part(double s, double m) {
  return YoungFunction({{zero_from(0.0), {s, formula::Affine{m, -m * s}}}, std::nullopt});
}

YoungFunction expm1(double k, double c) { return YoungFunction({{{0.0, formula::Exp{c, k, 1.0, 0.0}}}, std::nullopt}); }

YoungFunction exp_square() { return YoungFunction({{{0.0, formula::Exp{1.0, 1.0, 2.0, 0.0}}}, std::nullopt}); }

YoungFunction square_log() { return YoungFunction({{{0.0, formula::LogPow{1.0, 2.0, 1.0, 0.0}}}, std::nullopt}); }

YoungFunction pole(double b, double p, double c) { return YoungFunction({{{0.0, formula::Pole{c, p, b}}}, b}); }

YoungFunction linear_cap(double b) { return YoungFunction({{{0.0, formula::Affine{1.0, 0.0}}}, b}); }

YoungFunction shifted_cap(double s, double b) {
  return YoungFunction({{zero_from(0.0), {s, formula::Affine{1.0, -s}}}, b});
}

YoungFunction example7_phi() { return positive_part(1.0, 1.0); }

YoungFunction example7_phi2() {
  return YoungFunction({{zero_from(0.0), {2.0, formula::Power{0.25, 2.0, -1.0}}}, std::nullopt});
}

YoungFunction example7_phi3() {
  return YoungFunction(
      {{zero_from(0.0), {0.5, formula::Affine{2.0, -1.0}}, {1.0, formula::Power{1.0, 2.0, 0.0}}}, std::nullopt});
}

YoungFunction example11_phi_p(double p) {
  return YoungFunction({{{0.0, formula::Power{1.0, p, 0.0}}, {1.0, formula::Power{1.0, 4.0, 0.0}}}, std::nullopt});
}

YoungFunction example11_theta() {
  return YoungFunction({{zero_from(0.0), {1.0, formula::Power{1.0, 2.0, -1.0}}, {std::sqrt(2.0), formula::Power{0.25, 4.0, 0.0}}},
                        std::nullopt});
}

YoungFunction example9_psi(int pieces) {
  return build_psi(build_gap_sequence(pieces, factorial_generator()));
}

YoungFunction parse(const std::string& spec) {
  if (spec.empty()) throw DescriptorError("", "empty function spec");
  if (spec.front() == '{') return young_from_json(Json::parse(spec));
  if (spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw DescriptorError("", "cannot open descriptor file '" + spec.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return young_from_json(Json::parse(ss.str()));
  }
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto arg = [&](std::size_t i, double def) { return parts.size() > i ? number(parts[i], spec) : def; };
  auto require_at_most = [&](std::size_t n) {
    if (parts.size() > n + 1) throw DescriptorError("", "too many arguments in '" + spec + "'");
  };
  if (name == "power") {
    if (parts.size() < 2) throw DescriptorError("", "power needs an exponent: power:p[:c]");
    require_at_most(2);
    return power(arg(1, 1.0), arg(2, 1.0));
  }
  if (name == "step") { require_at_most(1); return zero_inf_step(arg(1, 1.0)); }
  if (name == "positive_part") { require_at_most(2); return positive_part(arg(1, 1.0), arg(2, 1.0)); }
  if (name == "expm1") { require_at_most(2); return expm1(arg(1, 1.0), arg(2, 1.0)); }
  if (name == "exp_square") { require_at_most(0); return exp_square(); }
  if (name == "square_log") { require_at_most(0); return square_log(); }
  if (name == "pole") { require_at_most(3); return pole(arg(1, 1.0), arg(2, 1.0), arg(3, 1.0)); }
  if (name == "linear_cap") { require_at_most(1); return linear_cap(arg(1, 2.0)); }
  if (name == "shifted_cap") { require_at_most(2); return shifted_cap(arg(1, 1.0), arg(2, 3.0)); }
  if (name == "example7_phi") { require_at_most(0); return example7_phi(); }
  if (name == "example7_phi2") { require_at_most(0); return example7_phi2(); }
  if (name == "example7_phi3") { require_at_most(0); return example7_phi3(); }
  if (name == "example11_phi_p") { require_at_most(1); return example11_phi_p(arg(1, 1.0)); }
  if (name == "example11_theta") { require_at_most(0); return example11_theta(); }
  if (name == "example9_psi") {
    require_at_most(1);
    const double n = arg(1, 8.0);
    if (n != std::floor(n) || n < 2 || n > 40) throw DomainError("example9_psi: piece count must be an integer in [2, 40]");
    return example9_psi(static_cast<int>(n));
  }
  throw DescriptorError("", "unknown function shorthand '" + name + "'");
}

std::vector<std::string> shorthand_names() {
  return {"power:p[:c]",       "step[:b]",          "positive_part[:s[:m]]", "expm1[:k[:c]]",
          "exp_square",        "square_log",        "pole[:b[:p[:c]]]",      "linear_cap[:b]",
          "shifted_cap[:s[:b]]", "example7_phi",    "example7_phi2",         "example7_phi3",
          "example11_phi_p:p", "example11_theta",   "example9_psi[:n]",      "{json descriptor}",
          "@descriptor.json"};
}

}  // namespace orlicz::catalog

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orlicz/ext_real.hpp"

namespace orlicz {

namespace formula {
// c*u^p + d
struct Power {
  double c = 1.0, p = 1.0, d = 0.0;
};
// slope*u + intercept
struct Affine {
  double slope = 0.0, intercept = 0.0;
};
// c*(exp(k*u^q) - 1) + d
struct Exp {
  double c = 1.0, k = 1.0, q = 1.0, d = 0.0;
};
// c*u^p*log(1+s*u) + d
struct LogPow {
  double c = 1.0, p = 1.0, s = 1.0, d = 0.0;
};
// c*(u/(b-u))^p, infinite at u = b
struct Pole {
  double c = 1.0, p = 1.0, b = 1.0;
};
// Linear interpolation of (u, v) knots; extended past the last knot with the last slope.
struct Table {
  std::vector<double> u, v;
};
}  // namespace formula

using Formula = std::variant<formula::Power, formula::Affine, formula::Exp, formula::LogPow,
                             formula::Pole, formula::Table>;

enum class PieceKind { power, affine, exp, logpow, pole, table };

PieceKind kind_of(const Formula& f);
std::string kind_name(PieceKind k);

// Formula evaluated at u (no domain logic).
double formula_value(const Formula& f, double u);

struct Piece {
  double from = 0.0;
  Formula f;
};

// Raw piecewise description. `b` present means the tail is infinite beyond b.
struct Descriptor {
  std::vector<Piece> pieces;
  std::optional<double> b;
};

enum class YoungClass { Y1, Y2, Y3 };
std::string class_name(YoungClass c);

struct Characteristics {
  double a = 0.0;
  ExtReal b;
  ExtReal value_at_b;
  YoungClass cls = YoungClass::Y1;
  // inf{u > 0 : inverse(u) = b} for Y3, +inf otherwise.
  ExtReal u0;
  // Only the values 0 and +inf are taken.
  bool two_valued = false;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::optional<double> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  std::vector<std::string> flags;
  bool ok() const;
  std::string failures() const;
};

ValidationReport validate(const Descriptor& d);

class YoungFunction {
 public:
  // Throws ValidationError listing the failed axioms.
  explicit YoungFunction(Descriptor d);

  ExtReal operator()(double u) const;

  const Descriptor& descriptor() const { return d_; }
  const Characteristics& characteristics() const { return ch_; }
  double a() const { return ch_.a; }
  ExtReal b() const { return ch_.b; }
  YoungClass cls() const { return ch_.cls; }
  const std::vector<std::string>& flags() const { return flags_; }

  // End of piece i: next breakpoint, b, or +inf.
  double piece_end(std::size_t i) const;
  std::size_t piece_index(double u) const;

 private:
  Descriptor d_;
  Characteristics ch_;
  std::vector<std::string> flags_;
};

ExtReal eval(const YoungFunction& phi, double u);

// Right-continuous generalized inverse inf{u >= 0 : phi(u) > v}. Returns +inf
// only for v = +inf and b = +inf.
double inverse(const YoungFunction& phi, ExtReal v);

const Characteristics& characteristics(const YoungFunction& phi);

// phi(c*u) as a descriptor.
YoungFunction dilate(const YoungFunction& phi, double c);

enum class RangeKind { all, large, small };
std::string range_name(RangeKind k);

struct ArgRange {
  RangeKind kind = RangeKind::all;
  double threshold = 1.0;
};

struct Delta2Options {
  std::size_t points = 10000;
  double span_decades = 3.0;
  double rtol = 1e-3;
};

struct Delta2Report {
  ArgRange range;
  std::size_t points = 0;
  // Successive spans in decades and the sampled sup of phi(2u)/phi(u) on each.
  std::vector<double> spans;
  std::vector<ExtReal> sups;
  std::size_t skipped = 0;
  bool satisfied = false;
  ExtReal constant;
  // Record-setting (u, ratio) pairs on the widest span.
  std::vector<std::pair<double, ExtReal>> witnesses;
};

Delta2Report delta2(const YoungFunction& phi, ArgRange range, const Delta2Options& opts = {});

}  // namespace orlicz

#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/grid.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double table_value(const formula::Table& t, double u) {
  const auto& x = t.u;
  const auto& y = t.v;
  if (u <= x.front()) return y.front();
  auto it = std::upper_bound(x.begin(), x.end(), u);
  std::size_t j = static_cast<std::size_t>(it - x.begin());
  if (j >= x.size()) j = x.size() - 1;
  const double x0 = x[j - 1], x1 = x[j];
  return y[j - 1] + (y[j] - y[j - 1]) * (u - x0) / (x1 - x0);
}

// Value of the formula as u -> e from the left; e may be +inf.
double formula_limit(const Formula& f, double e) {
  if (std::isfinite(e)) return formula_value(f, e);
  return std::visit(
      Overloaded{
          [](const formula::Power& p) { return p.c > 0 ? kInf : p.d; },
          [](const formula::Affine& a) { return a.slope > 0 ? kInf : a.intercept; },
          [](const formula::Exp& x) { return x.c > 0 ? kInf : x.d; },
          [](const formula::LogPow& l) { return l.c > 0 ? kInf : l.d; },
          [](const formula::Pole&) { return kInf; },
          [](const formula::Table& t) {
            const std::size_t n = t.u.size();
            return t.v[n - 1] > t.v[n - 2] ? kInf : t.v[n - 1];
          },
      },
      f);
}

// inf{u in [s, e) : f(u) > v} by bisection, assuming f(s) <= v < f(e-).
double bisect_level(const Formula& f, double v, double s, double e) {
  double lo = s;
  double hi = e;
  if (!std::isfinite(hi)) {
    hi = std::max(2.0 * s, s + 1.0);
    int guard = 0;
    while (!(formula_value(f, hi) > v)) {
      lo = hi;
      hi *= 2.0;
      if (++guard > 2100) throw NumericError("inverse: level not reached");
    }
  }
  // Bisect down to adjacent doubles so relative accuracy holds for tiny levels too.
  // The geometric midpoint keeps the iteration count near 64 when lo and hi differ by decades.
  for (int it = 0; it < 2200; ++it) {
    double mid = lo > 0 && hi > 4.0 * lo ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
    if (lo == 0.0 && hi > 1e-300) mid = std::max(0.5 * hi * 1e-3, hi * 1e-30);
    if (mid <= lo || mid >= hi) break;
    if (formula_value(f, mid) > v) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double clamp_to(double u, double s, double e) {
  if (!(u >= s)) return s;
  if (u > e) return e;
  return u;
}

// inf{u in [s, e) : f(u) > v}, assuming f(s) <= v < f(e-).
double formula_level(const Formula& f, double v, double s, double e) {
  const double u = std::visit(
      Overloaded{
          [&](const formula::Power& p) {
            const double w = (v - p.d) / p.c;
            return w <= 0 ? s : std::pow(w, 1.0 / p.p);
          },
          [&](const formula::Affine& a) { return (v - a.intercept) / a.slope; },
          [&](const formula::Exp& x) {
            const double t = std::log1p((v - x.d) / x.c) / x.k;
            return t <= 0 ? s : std::pow(t, 1.0 / x.q);
          },
          [&](const formula::LogPow& l) {
            // Strictly increasing when c > 0, so a level at or below f(s) is reached at s.
            if (l.c > 0 && v <= formula_value(f, s)) return s;
            return bisect_level(f, v, s, e);
          },
          [&](const formula::Pole& p) {
            const double w = std::pow(v / p.c, 1.0 / p.p);
            return p.b * w / (1.0 + w);
          },
          [&](const formula::Table& t) {
            const auto& x = t.u;
            const auto& y = t.v;
            for (std::size_t j = 1; j < x.size(); ++j) {
              if (y[j] > v) {
                if (y[j - 1] > v) return x[j - 1];
                return x[j - 1] + (v - y[j - 1]) * (x[j] - x[j - 1]) / (y[j] - y[j - 1]);
              }
            }
            const std::size_t n = x.size();
            const double slope = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
            return x[n - 1] + (v - y[n - 1]) / slope;
          },
      },
      f);
  return clamp_to(u, s, e);
}

bool params_finite(const Formula& f) {
  return std::visit(
      Overloaded{
          [](const formula::Power& p) { return std::isfinite(p.c) && std::isfinite(p.p) && std::isfinite(p.d); },
          [](const formula::Affine& a) { return std::isfinite(a.slope) && std::isfinite(a.intercept); },
          [](const formula::Exp& x) {
            return std::isfinite(x.c) && std::isfinite(x.k) && std::isfinite(x.q) && std::isfinite(x.d);
          },
          [](const formula::LogPow& l) {
            return std::isfinite(l.c) && std::isfinite(l.p) && std::isfinite(l.s) && std::isfinite(l.d);
          },
          [](const formula::Pole& p) { return std::isfinite(p.c) && std::isfinite(p.p) && std::isfinite(p.b); },
          [](const formula::Table& t) {
            return std::all_of(t.u.begin(), t.u.end(), [](double z) { return std::isfinite(z); }) &&
                   std::all_of(t.v.begin(), t.v.end(), [](double z) { return std::isfinite(z); });
          },
      },
      f);
}

// Parameter sanity; returns an empty string when fine.
std::string param_problem(const Piece& pc, std::size_t i, std::size_t n, const std::optional<double>& b) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const formula::Power& p) {
                   if (!(p.p > 0)) os << "power exponent must be positive";
                   if (p.c < 0) os << "power coefficient must be non-negative";
                 },
                 [&](const formula::Affine& a) {
                   if (a.slope < 0) os << "affine slope must be non-negative";
                 },
                 [&](const formula::Exp& x) {
                   if (x.c < 0 || !(x.k > 0) || !(x.q > 0)) os << "exp requires c >= 0, k > 0, q > 0";
                 },
                 [&](const formula::LogPow& l) {
                   if (l.c < 0 || !(l.p > 0) || !(l.s > 0)) os << "logpow requires c >= 0, p > 0, s > 0";
                 },
                 [&](const formula::Pole& p) {
                   if (!(p.c > 0) || !(p.p > 0)) os << "pole requires c > 0, p > 0";
                   if (i + 1 != n) os << "pole must be the last piece";
                   if (!b || *b != p.b) os << "pole requires an infinite tail starting at its b";
                 },
                 [&](const formula::Table& t) {
                   if (t.u.size() < 2 || t.u.size() != t.v.size()) {
                     os << "table needs at least two (u, v) knots of equal length";
                     return;
                   }
                   for (std::size_t j = 1; j < t.u.size(); ++j) {
                     if (!(t.u[j] > t.u[j - 1])) {
                       os << "table knots must be strictly increasing";
                       return;
                     }
                   }
                   if (t.u.front() != pc.from) os << "table must start at the piece breakpoint";
                 },
             },
             pc.f);
  return os.str();
}

// Deterministic low-discrepancy fraction.
double frac_seq(std::size_t j, double alpha) {
  double x = static_cast<double>(j) * alpha;
  return x - std::floor(x);
}

struct Sampler {
  const Descriptor& d;
  std::size_t i;
  double s, e;
};

double sample_end(const Descriptor& d, std::size_t i) {
  if (i + 1 < d.pieces.size()) return d.pieces[i + 1].from;
  if (d.b) return *d.b;
  const double s = d.pieces[i].from;
  return s + std::max(10.0, 10.0 * s);
}

double raw_eval(const Descriptor& d, double u) {
  if (d.b && u > *d.b) return kInf;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    if (d.pieces[i].from <= u) idx = i;
  }
  return formula_value(d.pieces[idx].f, u);
}

}  // namespace

PieceKind kind_of(const Formula& f) {
  return std::visit(Overloaded{
                        [](const formula::Power&) { return PieceKind::power; },
                        [](const formula::Affine&) { return PieceKind::affine; },
                        [](const formula::Exp&) { return PieceKind::exp; },
                        [](const formula::LogPow&) { return PieceKind::logpow; },
                        [](const formula::Pole&) { return PieceKind::pole; },
                        [](const formula::Table&) { return PieceKind::table; },
                    },
                    f);
}

std::string kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::power: return "power";
    case PieceKind::affine: return "affine";
    case PieceKind::exp: return "exp";
    case PieceKind::logpow: return "logpow";
    case PieceKind::pole: return "pole";
    case PieceKind::table: return "table";
  }
  return "?";
}

std::string class_name(YoungClass c) {
  switch (c) {
    case YoungClass::Y1: return "Y1";
    case YoungClass::Y2: return "Y2";
    case YoungClass::Y3: return "Y3";
  }
  return "?";
}

std::string range_name(RangeKind k) {
  switch (k) {
    case RangeKind::all: return "all";
    case RangeKind::large: return "large";
    case RangeKind::small: return "small";
  }
  return "?";
}

double formula_value(const Formula& f, double u) {
  return std::visit(Overloaded{
                        [u](const formula::Power& p) { return p.c * std::pow(u, p.p) + p.d; },
                        [u](const formula::Affine& a) { return a.slope * u + a.intercept; },
                        [u](const formula::Exp& x) { return x.c * std::expm1(x.k * std::pow(u, x.q)) + x.d; },
                        [u](const formula::LogPow& l) { return l.c * std::pow(u, l.p) * std::log1p(l.s * u) + l.d; },
                        [u](const formula::Pole& p) {
                          if (u >= p.b) return kInf;
                          return p.c * std::pow(u / (p.b - u), p.p);
                        },
                        [u](const formula::Table& t) { return table_value(t, u); },
                    },
                    f);
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string ValidationReport::failures() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!first) os << "; ";
    first = false;
    os << c.axiom;
    if (c.witness) os << " at u=" << format_double(*c.witness);
    if (!c.detail.empty()) os << " (" << c.detail << ")";
  }
  return os.str();
}

ValidationReport validate(const Descriptor& d) {
  ValidationReport rep;
  auto add = [&](std::string axiom, bool ok, std::optional<double> w = std::nullopt, std::string detail = {}) {
    rep.checks.push_back({std::move(axiom), ok, w, std::move(detail)});
  };

  // Structure first; sampling is meaningless without it.
  {
    std::string problem;
    if (d.pieces.empty()) problem = "no pieces";
    else if (d.pieces.front().from != 0.0) problem = "first breakpoint must be 0";
    for (std::size_t i = 0; problem.empty() && i < d.pieces.size(); ++i) {
      if (!std::isfinite(d.pieces[i].from)) problem = "breakpoint " + std::to_string(i) + " not finite";
      else if (i > 0 && !(d.pieces[i].from > d.pieces[i - 1].from))
        problem = "breakpoints must be strictly increasing";
      else if (!params_finite(d.pieces[i].f)) problem = "piece " + std::to_string(i) + " has non-finite parameters";
      else {
        auto pp = param_problem(d.pieces[i], i, d.pieces.size(), d.b);
        if (!pp.empty()) problem = "piece " + std::to_string(i) + ": " + pp;
      }
    }
    if (problem.empty() && d.b) {
      if (!std::isfinite(*d.b) || !(*d.b > d.pieces.back().from)) problem = "b must be finite and beyond the last breakpoint";
    }
    add("structure", problem.empty(), std::nullopt, problem);
    if (!problem.empty()) return rep;
  }

  const double f0 = formula_value(d.pieces.front().f, 0.0);
  add("origin", f0 == 0.0, f0 == 0.0 ? std::nullopt : std::optional<double>(0.0),
      f0 == 0.0 ? "" : "phi(0) = " + format_double(f0));

  // Sample points per piece, sorted.
  std::vector<double> pts;
  constexpr std::size_t kPerPiece = 1000;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const double s = d.pieces[i].from;
    double e = sample_end(d, i);
    const bool pole_end = kind_of(d.pieces[i].f) == PieceKind::pole;
    const double span = e - s;
    for (std::size_t j = 0; j < kPerPiece; ++j) {
      double t = static_cast<double>(j) / kPerPiece;
      if (pole_end) t = 1.0 - std::pow(10.0, -6.0 * (1.0 - t));  // concentrate near the pole
      pts.push_back(s + span * t);
      pts.push_back(s + span * std::pow(10.0, -8.0 * frac_seq(j + 1, 0.6180339887498949)));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto tol = [](double a, double b) { return 1e-10 * (std::fabs(a) + std::fabs(b)) + 1e-13; };

  {
    std::optional<double> w;
    for (double u : pts) {
      const double v = raw_eval(d, u);
      if (v < -tol(v, 0)) {
        w = u;
        break;
      }
    }
    add("nonnegative", !w, w);
  }
  {
    std::optional<double> w;
    double prev = raw_eval(d, pts.front());
    for (std::size_t j = 1; j < pts.size(); ++j) {
      const double v = raw_eval(d, pts[j]);
      if (std::isfinite(v) && std::isfinite(prev) && v < prev - tol(v, prev)) {
        w = pts[j];
        break;
      }
      prev = v;
    }
    add("monotone", !w, w);
  }
  {
    std::optional<double> w;
    for (std::size_t i = 1; i < d.pieces.size() && !w; ++i) {
      const double x = d.pieces[i].from;
      const double left = formula_value(d.pieces[i - 1].f, x);
      const double right = formula_value(d.pieces[i].f, x);
      if (std::fabs(left - right) > 1e-9 * (1.0 + std::fabs(left) + std::fabs(right))) w = x;
    }
    add("continuity", !w, w, w ? "jump at an inner breakpoint" : "");
  }
  {
    // Midpoint inequality within each piece and across neighbouring pieces.
    std::optional<double> w;
    auto check = [&](double u, double v) {
      if (w) return;
      const double fu = raw_eval(d, u), fv = raw_eval(d, v);
      if (!std::isfinite(fu) || !std::isfinite(fv)) return;
      const double m = 0.5 * (u + v);
      const double fm = raw_eval(d, m);
      if (fm > 0.5 * (fu + fv) + tol(fu, fv)) w = m;
    };
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      const double s = d.pieces[i].from;
      const double e = sample_end(d, i);
      const double span = e - s;
      for (std::size_t j = 0; j < kPerPiece; ++j) {
        const double x = frac_seq(j + 1, 0.6180339887498949);
        const double y = frac_seq(j + 1, 0.4142135623730950);
        check(s + span * x * (1 - 1e-12), s + span * y * (1 - 1e-12));
        check(s + span * x * 1e-3, s + span * y);
        if (i + 1 < d.pieces.size()) {
          const double s2 = d.pieces[i + 1].from;
          const double e2 = sample_end(d, i + 1);
          check(s + span * x, s2 + (e2 - s2) * y * (1 - 1e-12));
        }
      }
    }
    add("convexity", !w, w);
  }

  bool all_zero = true;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const double s = d.pieces[i].from;
    const double e = sample_end(d, i);
    if (formula_value(d.pieces[i].f, s) != 0.0 || formula_limit(d.pieces[i].f, e) != 0.0) all_zero = false;
  }
  if (!d.b) {
    add("nontrivial", !all_zero, std::nullopt, all_zero ? "identically zero" : "");
    const double lim = formula_limit(d.pieces.back().f, kInf);
    add("unbounded_at_infinity", std::isinf(lim) || all_zero, std::nullopt,
        std::isinf(lim) ? "" : "finite-valued tail must grow without bound");
  } else {
    add("nontrivial", true);
    if (all_zero) rep.flags.push_back("two_valued: takes only the values 0 and +inf");
  }
  add("left_continuity_at_b", true, std::nullopt, d.b ? "value at b is the left limit by construction" : "b = +inf");
  return rep;
}

YoungFunction::YoungFunction(Descriptor d) : d_(std::move(d)) {
  auto rep = validate(d_);
  if (!rep.ok()) throw ValidationError("invalid Young function: " + rep.failures());
  flags_ = rep.flags;

  if (d_.b) {
    ch_.b = ExtReal(*d_.b);
    ch_.value_at_b = ExtReal(std::max(0.0, formula_value(d_.pieces.back().f, *d_.b)));
    ch_.cls = ch_.value_at_b.is_infinite() ? YoungClass::Y2 : YoungClass::Y3;
  } else {
    ch_.b = ExtReal::infinity();
    ch_.value_at_b = ExtReal::infinity();
    ch_.cls = YoungClass::Y1;
  }
  ch_.a = inverse(*this, ExtReal(0.0));
  ch_.u0 = ch_.cls == YoungClass::Y3 ? ch_.value_at_b : ExtReal::infinity();
  ch_.two_valued = ch_.cls == YoungClass::Y3 && ch_.value_at_b.value() == 0.0;
}

double YoungFunction::piece_end(std::size_t i) const {
  if (i + 1 < d_.pieces.size()) return d_.pieces[i + 1].from;
  if (d_.b) return *d_.b;
  return kInf;
}

std::size_t YoungFunction::piece_index(double u) const {
  auto it = std::upper_bound(d_.pieces.begin(), d_.pieces.end(), u,
                             [](double x, const Piece& p) { return x < p.from; });
  return static_cast<std::size_t>(it - d_.pieces.begin()) - 1;
}

ExtReal YoungFunction::operator()(double u) const {
  if (!(u >= 0.0)) throw DomainError("Young function evaluated at negative or NaN argument");
  if (d_.b) {
    if (u > *d_.b) return ExtReal::infinity();
    if (u == *d_.b) return ch_.value_at_b;
  }
  if (std::isinf(u)) return ExtReal::infinity();
  const double v = formula_value(d_.pieces[piece_index(u)].f, u);
  return ExtReal(v > 0.0 ? v : 0.0);
}

ExtReal eval(const YoungFunction& phi, double u) { return phi(u); }

const Characteristics& characteristics(const YoungFunction& phi) { return phi.characteristics(); }

double inverse(const YoungFunction& phi, ExtReal v) {
  const auto& d = phi.descriptor();
  if (v.is_infinite()) return d.b ? *d.b : kInf;
  const double level = v.value();
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const double s = d.pieces[i].from;
    const double e = phi.piece_end(i);
    const double top = formula_limit(d.pieces[i].f, e);
    if (!(top > level)) continue;
    if (formula_value(d.pieces[i].f, s) > level) return s;
    return formula_level(d.pieces[i].f, level, s, e);
  }
  if (d.b) return *d.b;
  throw NumericError("inverse: finite-valued function bounded on [0, inf)");
}

YoungFunction dilate(const YoungFunction& phi, double c) {
  if (!(c > 0) || !std::isfinite(c)) throw DomainError("dilate: factor must be positive and finite");
  Descriptor out;
  for (const auto& pc : phi.descriptor().pieces) {
    Piece q;
    q.from = pc.from / c;
    q.f = std::visit(Overloaded{
                         [c](formula::Power p) -> Formula {
                           p.c *= std::pow(c, p.p);
                           return p;
                         },
                         [c](formula::Affine a) -> Formula {
                           a.slope *= c;
                           return a;
                         },
                         [c](formula::Exp x) -> Formula {
                           x.k *= std::pow(c, x.q);
                           return x;
                         },
                         [c](formula::LogPow l) -> Formula {
                           l.c *= std::pow(c, l.p);
                           l.s *= c;
                           return l;
                         },
                         [c](formula::Pole p) -> Formula {
                           p.b /= c;
                           return p;
                         },
                         [c](formula::Table t) -> Formula {
                           for (auto& x : t.u) x /= c;
                           return t;
                         },
                     },
                     pc.f);
    out.pieces.push_back(std::move(q));
  }
  if (phi.descriptor().b) out.b = *phi.descriptor().b / c;
  // Keep a pole's own b identical to the descriptor's.
  if (!out.pieces.empty()) {
    if (auto* p = std::get_if<formula::Pole>(&out.pieces.back().f)) p->b = *out.b;
  }
  out.pieces.front().from = 0.0;
  return YoungFunction(std::move(out));
}

Delta2Report delta2(const YoungFunction& phi, ArgRange range, const Delta2Options& opts) {
  const auto& ch = phi.characteristics();
  if (!(range.threshold > 0)) throw DomainError("delta2: threshold must be positive");
  if ((range.kind == RangeKind::large || range.kind == RangeKind::all) && ch.b.is_finite())
    throw DomainError("delta2: large arguments require b = inf");
  if ((range.kind == RangeKind::small || range.kind == RangeKind::all) && ch.a > 0.0)
    throw DomainError("delta2: small arguments require a = 0");

  Delta2Report rep;
  rep.range = range;
  rep.points = opts.points;
  const double t = range.threshold;
  std::vector<std::pair<double, ExtReal>> last_records;
  for (int k = 0; k < 3; ++k) {
    const double dec = opts.span_decades * std::pow(2.0, k);
    double lo = t, hi = t;
    if (range.kind != RangeKind::small) hi = t * std::pow(10.0, dec);
    if (range.kind != RangeKind::large) lo = t * std::pow(10.0, -dec);
    std::vector<double> us = geometric_grid(lo, hi, opts.points);
    ExtReal sup(0.0);
    std::size_t skipped = 0;
    std::vector<std::pair<double, ExtReal>> records;
    for (double u : us) {
      const ExtReal fu = phi(u);
      if (fu.value() == 0.0 || fu.is_infinite()) {
        ++skipped;
        continue;
      }
      const ExtReal f2 = phi(2.0 * u);
      const ExtReal r = f2.is_infinite() ? ExtReal::infinity() : ExtReal(f2.value() / fu.value());
      if (r.value() > sup.value() * (1.0 + opts.rtol) || records.empty()) records.emplace_back(u, r);
      sup = max(sup, r);
      if (r.is_infinite()) break;
    }
    rep.spans.push_back(dec);
    rep.sups.push_back(sup);
    rep.skipped = skipped;
    last_records = std::move(records);
  }
  const auto& s = rep.sups;
  const bool finite = s[0].is_finite() && s[1].is_finite() && s[2].is_finite();
  rep.satisfied = finite && s[1].value() <= s[0].value() * (1.0 + opts.rtol) &&
                  s[2].value() <= s[1].value() * (1.0 + opts.rtol);
  rep.constant = s[2];
  if (last_records.size() > 64) last_records.erase(last_records.begin(), last_records.end() - 64);
  rep.witnesses = std::move(last_records);
  return rep;
}

}  // namespace orlicz

#include "orlicz/conjugation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/catalog.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/grid.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool true_infinite(const YoungFunction& f, double x) {
  const auto& ch = f.characteristics();
  if (ch.b.is_infinite()) return false;
  const double b = ch.b.value();
  return x > b || (x == b && ch.value_at_b.is_infinite());
}

struct Sample {
  double v = 0.0;
  double g = -kInf;     // objective, +inf means the supremum is infinite
  double scale = 0.0;   // phi(uv) + phi1(v), for noise snapping
};

class Objective {
 public:
  Objective(const YoungFunction& phi, const YoungFunction& phi1, double u) : phi_(phi), phi1_(phi1), u_(u) {}

  Sample operator()(double v) const {
    Sample s;
    s.v = v;
    const double x = u_ * v;
    const ExtReal a = phi_(x);
    const ExtReal b = phi1_(v);
    if (a.is_infinite()) {
      const bool ta = true_infinite(phi_, x);
      const bool tb = b.is_infinite() && true_infinite(phi1_, v);
      if (ta && tb) throw std::logic_error("ominus: inf - inf reached despite precondition");
      if (ta || !b.is_infinite()) {
        s.g = kInf;
        return s;
      }
      return s;  // both overflowed: no information
    }
    if (b.is_infinite()) return s;
    s.g = a.value() - b.value();
    s.scale = a.value() + b.value();
    return s;
  }

 private:
  const YoungFunction& phi_;
  const YoungFunction& phi1_;
  double u_;
};

double snapped(const Sample& s, double snap_factor) {
  if (s.g <= snap_factor * kEps * s.scale) return 0.0;
  return s.g;
}

// Golden-section maximisation of the objective on [lo, hi].
Sample golden(const Objective& obj, double lo, double hi, std::size_t& evals) {
  const double r = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  Sample sc = obj(c), sd = obj(d);
  evals += 2;
  Sample best = sc.g > sd.g ? sc : sd;
  for (int it = 0; it < 200; ++it) {
    if (b - a <= 1e-15 * b) break;
    if (sc.g >= sd.g) {
      b = d;
      d = c;
      sd = sc;
      c = b - r * (b - a);
      sc = obj(c);
    } else {
      a = c;
      c = d;
      sc = sd;
      d = a + r * (b - a);
      sd = obj(d);
    }
    ++evals;
    if (sc.g > best.g) best = sc;
    if (sd.g > best.g) best = sd;
    if (std::isinf(best.g) && best.g > 0) break;
  }
  return best;
}

std::vector<double> kink_candidates(const YoungFunction& phi, const YoungFunction& phi1, double u, double lo, double hi) {
  std::vector<double> out;
  auto push = [&](double v) {
    if (v >= lo && v <= hi && std::isfinite(v)) out.push_back(v);
  };
  for (const auto& pc : phi1.descriptor().pieces) push(pc.from);
  if (phi1.descriptor().b) push(*phi1.descriptor().b);
  for (const auto& pc : phi.descriptor().pieces) push(pc.from / u);
  if (phi.descriptor().b) push(*phi.descriptor().b / u);
  push(1.0);
  return out;
}

void check_pair(const YoungFunction& phi, const YoungFunction& phi1) {
  if (phi.b().is_finite() && phi1.b().is_finite())
    throw DomainError("ominus: both b_phi and b_phi1 finite is the excluded inf - inf case");
}

OminusEvidence run(const YoungFunction& phi, const YoungFunction& phi1, double u, const OminusOptions& opts, bool zero) {
  check_pair(phi, phi1);
  if (!(u >= 0.0) || std::isinf(u)) throw DomainError("ominus: u must be finite and non-negative");
  OminusEvidence ev;
  ev.value = ExtReal(0.0);
  if (u == 0.0) return ev;

  const Objective obj(phi, phi1, u);
  const double hi = zero ? 1.0 : opts.v_max;
  const double lo = std::min(opts.v_min, hi);
  std::vector<double> vs = merge_sorted(geometric_grid(lo, hi, opts.points), kink_candidates(phi, phi1, u, lo, hi));
  const std::size_t base_n = vs.size();
  if (!zero) {
    for (int k = 1; k <= opts.extension_decades; ++k) {
      auto ext = geometric_grid(hi * std::pow(10.0, k - 1), hi * std::pow(10.0, k), opts.points_per_extension + 1);
      vs.insert(vs.end(), ext.begin() + 1, ext.end());
    }
    vs = merge_sorted(std::move(vs), kink_candidates(phi, phi1, u, hi, hi * std::pow(10.0, opts.extension_decades)));
  }

  std::vector<Sample> samples;
  samples.reserve(vs.size());
  for (double v : vs) {
    Sample s = obj(v);
    if (std::isinf(s.g) && s.g > 0) {
      ev.value = ExtReal::infinity();
      ev.maximizer = v;
      ev.infinite_point = true;
      return ev;
    }
    samples.push_back(s);
  }

  // Running max over the base grid and after each decade extension.
  double m0 = 0.0;
  for (std::size_t i = 0; i < samples.size() && samples[i].v <= hi; ++i) m0 = std::max(m0, snapped(samples[i], opts.snap_factor));
  (void)base_n;
  ev.grid_max = m0;
  if (!zero) {
    double running = m0;
    for (int k = 1; k <= opts.extension_decades; ++k) {
      const double top = hi * std::pow(10.0, k);
      for (const auto& s : samples) {
        if (s.v > hi && s.v <= top) running = std::max(running, snapped(s, opts.snap_factor));
      }
      ev.extension_max.push_back(running);
    }
    const double m2 = ev.extension_max.back();
    const bool grew = m0 <= 0.0 ? m2 > 0.0 : m2 > opts.divergence_factor * m0;
    if (grew || m2 >= opts.overflow_cap) {
      ev.value = ExtReal::infinity();
      ev.divergent = true;
      return ev;
    }
  }

  // Local maxima of the sampled objective, best first.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double g = samples[i].g;
    if (!std::isfinite(g)) continue;
    const bool left_ok = i == 0 || g >= samples[i - 1].g;
    const bool right_ok = i + 1 == samples.size() || g >= samples[i + 1].g;
    if (left_ok && right_ok) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].g != samples[b].g ? samples[a].g > samples[b].g : a < b;
  });
  if (peaks.size() > opts.refine_candidates) peaks.resize(opts.refine_candidates);

  Sample best;
  best.g = 0.0;  // the limit v -> 0+
  for (const auto& s : samples) {
    if (s.g > best.g) best = s;
  }
  std::size_t evals = 0;
  for (std::size_t i : peaks) {
    const double a = i == 0 ? samples[i].v * 0.5 : samples[i - 1].v;
    const double b = i + 1 == samples.size() ? samples[i].v : samples[i + 1].v;
    if (!(b > a)) continue;
    Sample s = golden(obj, a, b, evals);
    if (s.g > best.g) best = s;
    if (std::isinf(best.g) && best.g > 0) break;
  }
  ev.refinements = evals;
  if (std::isinf(best.g) && best.g > 0) {
    ev.value = ExtReal::infinity();
    ev.maximizer = best.v;
    ev.infinite_point = true;
    return ev;
  }
  const double val = snapped(best, opts.snap_factor);
  ev.snapped = val == 0.0 && best.g > 0.0;
  ev.value = ExtReal(std::max(0.0, val));
  ev.maximizer = val > 0.0 ? best.v : 0.0;
  return ev;
}

bool near(double a, double b, double tol = 1e-12) { return std::fabs(a - b) <= tol * (1.0 + std::fabs(a) + std::fabs(b)); }

bool same_formula(const Formula& x, const Formula& y) {
  if (x.index() != y.index()) return false;
  if (auto* a = std::get_if<formula::Power>(&x)) {
    auto& b = std::get<formula::Power>(y);
    return near(a->c, b.c) && near(a->p, b.p) && near(a->d, b.d);
  }
  if (auto* a = std::get_if<formula::Affine>(&x)) {
    auto& b = std::get<formula::Affine>(y);
    return near(a->slope, b.slope) && near(a->intercept, b.intercept);
  }
  if (auto* a = std::get_if<formula::Exp>(&x)) {
    auto& b = std::get<formula::Exp>(y);
    return near(a->c, b.c) && near(a->k, b.k) && near(a->q, b.q) && near(a->d, b.d);
  }
  if (auto* a = std::get_if<formula::LogPow>(&x)) {
    auto& b = std::get<formula::LogPow>(y);
    return near(a->c, b.c) && near(a->p, b.p) && near(a->s, b.s) && near(a->d, b.d);
  }
  if (auto* a = std::get_if<formula::Pole>(&x)) {
    auto& b = std::get<formula::Pole>(y);
    return near(a->c, b.c) && near(a->p, b.p) && near(a->b, b.b);
  }
  auto& a = std::get<formula::Table>(x);
  auto& b = std::get<formula::Table>(y);
  if (a.u.size() != b.u.size()) return false;
  for (std::size_t i = 0; i < a.u.size(); ++i) {
    if (!near(a.u[i], b.u[i]) || !near(a.v[i], b.v[i])) return false;
  }
  return true;
}

bool is_zero_formula(const Formula& f) {
  if (auto* a = std::get_if<formula::Affine>(&f)) return a->slope == 0.0 && a->intercept == 0.0;
  if (auto* p = std::get_if<formula::Power>(&f)) return p->c == 0.0 && p->d == 0.0;
  return false;
}

bool same_descriptor(const Descriptor& x, const Descriptor& y) {
  if (x.pieces.size() != y.pieces.size() || x.b.has_value() != y.b.has_value()) return false;
  if (x.b && !near(*x.b, *y.b)) return false;
  for (std::size_t i = 0; i < x.pieces.size(); ++i) {
    if (!near(x.pieces[i].from, y.pieces[i].from)) return false;
    const bool zx = is_zero_formula(x.pieces[i].f), zy = is_zero_formula(y.pieces[i].f);
    if (zx != zy) return false;
    if (!zx && !same_formula(x.pieces[i].f, y.pieces[i].f)) return false;
  }
  return true;
}

// alpha u^p when phi is a single pure power piece.
std::optional<std::pair<double, double>> pure_power(const YoungFunction& f) {
  const auto& d = f.descriptor();
  if (d.b || d.pieces.size() != 1) return std::nullopt;
  auto* p = std::get_if<formula::Power>(&d.pieces[0].f);
  if (!p || p->d != 0.0 || !(p->c > 0)) return std::nullopt;
  return std::make_pair(p->c, p->p);
}

// m (u - s)_+ as (m, s).
std::optional<std::pair<double, double>> positive_part_of(const YoungFunction& f) {
  const auto& d = f.descriptor();
  if (d.b || d.pieces.size() != 2 || !is_zero_formula(d.pieces[0].f)) return std::nullopt;
  auto* a = std::get_if<formula::Affine>(&d.pieces[1].f);
  if (!a || !(a->slope > 0)) return std::nullopt;
  const double s = d.pieces[1].from;
  if (!near(a->intercept, -a->slope * s)) return std::nullopt;
  return std::make_pair(a->slope, s);
}

Piece zero_piece(double from) { return {from, formula::Affine{0.0, 0.0}}; }

// 2 f(sqrt(u)) for power / exp pieces.
std::optional<Descriptor> twice_sqrt_composition(const Descriptor& d) {
  if (d.b) return std::nullopt;
  Descriptor out;
  for (const auto& pc : d.pieces) {
    Piece q;
    q.from = pc.from * pc.from;
    if (auto* p = std::get_if<formula::Power>(&pc.f)) {
      q.f = formula::Power{2.0 * p->c, p->p / 2.0, 2.0 * p->d};
    } else if (auto* x = std::get_if<formula::Exp>(&pc.f)) {
      q.f = formula::Exp{2.0 * x->c, x->k, x->q / 2.0, 2.0 * x->d};
    } else {
      return std::nullopt;
    }
    out.pieces.push_back(q);
  }
  return out;
}

bool strictly_increasing_orlicz(const YoungFunction& f) {
  return f.a() == 0.0 && f.b().is_infinite() && !is_zero_formula(f.descriptor().pieces.front().f);
}

}  // namespace

bool close_rel(ExtReal a, ExtReal b, double rtol, double atol) {
  if (a.is_infinite() || b.is_infinite()) return a == b;
  const double x = a.value(), y = b.value();
  return std::fabs(x - y) <= std::max(atol, rtol * std::max(std::fabs(x), std::fabs(y)));
}

OminusEvidence ominus_detail(const YoungFunction& phi, const YoungFunction& phi1, double u, const OminusOptions& opts) {
  return run(phi, phi1, u, opts, false);
}

ExtReal ominus(const YoungFunction& phi, const YoungFunction& phi1, double u, const OminusOptions& opts) {
  return run(phi, phi1, u, opts, false).value;
}

OminusEvidence ominus_zero_detail(const YoungFunction& phi, const YoungFunction& phi1, double u, const OminusOptions& opts) {
  return run(phi, phi1, u, opts, true);
}

ExtReal ominus_zero(const YoungFunction& phi, const YoungFunction& phi1, double u, const OminusOptions& opts) {
  return run(phi, phi1, u, opts, true).value;
}

ConjugationResult tabulate(const YoungFunction& phi, const YoungFunction& phi1, const std::vector<double>& us,
                           bool zero_variant, const OminusOptions& opts) {
  ConjugationResult res;
  res.zero_variant = zero_variant;
  res.closed_form = zero_variant ? catalog_closed_form_zero(phi, phi1) : catalog_closed_form(phi, phi1);
  for (double u : us) {
    auto ev = zero_variant ? ominus_zero_detail(phi, phi1, u, opts) : ominus_detail(phi, phi1, u, opts);
    res.rows.push_back({u, ev.value, ev.maximizer});
  }
  const auto& r = res.rows;
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i].u < r[i - 1].u) continue;
    if (r[i].value < r[i - 1].value && !close_rel(r[i].value, r[i - 1].value, 1e-9)) res.monotone = false;
  }
  for (std::size_t i = 2; i < r.size(); ++i) {
    if (r[i].value.is_infinite()) break;
    const double s1 = (r[i - 1].value.value() - r[i - 2].value.value()) / (r[i - 1].u - r[i - 2].u);
    const double s2 = (r[i].value.value() - r[i - 1].value.value()) / (r[i].u - r[i - 1].u);
    if (s2 < s1 - 1e-7 * (std::fabs(s1) + std::fabs(s2)) - 1e-12) res.convex = false;
  }
  return res;
}

std::optional<YoungFunction> catalog_closed_form(const YoungFunction& phi, const YoungFunction& phi1) {
  const auto pw = pure_power(phi);
  const auto pw1 = pure_power(phi1);
  if (pw && pw1) {
    const auto [alpha, p] = *pw;
    const auto [beta, q] = *pw1;
    if (p < q) {
      const double p2 = p * q / (q - p);
      const double K = (1.0 - p / q) * alpha * std::pow(alpha * p / (beta * q), p / (q - p));
      return catalog::power(p2, K);
    }
    if (p == q) return catalog::zero_inf_step(std::pow(beta / alpha, 1.0 / p));
    return std::nullopt;  // identically +inf on (0, inf)
  }

  // m (u - s)_+ against beta u^2.
  const auto pp = positive_part_of(phi);
  if (pp && pw1 && pw1->second == 2.0) {
    const auto [m, s] = *pp;
    const double beta = pw1->first;
    const double start = 2.0 * std::sqrt(beta * s / m);
    return YoungFunction({{zero_piece(0.0), {start, formula::Power{m * m / (4.0 * beta), 2.0, -m * s}}}, std::nullopt});
  }

  const auto& d = phi.descriptor();
  const auto& d1 = phi1.descriptor();
  if (same_descriptor(d, catalog::example7_phi().descriptor())) {
    if (same_descriptor(d1, catalog::example7_phi2().descriptor())) return catalog::example7_phi3();
    if (same_descriptor(d1, catalog::example7_phi3().descriptor())) return catalog::example7_phi2();
  }

  if (pw && pw->first == 1.0 && pw->second == 2.0) {
    if (d1.pieces.size() == 2 && !d1.b && d1.pieces[1].from == 1.0) {
      auto* first = std::get_if<formula::Power>(&d1.pieces[0].f);
      auto* second = std::get_if<formula::Power>(&d1.pieces[1].f);
      if (first && second && first->c == 1.0 && first->d == 0.0 && first->p >= 1.0 && first->p <= 2.0 && second->c == 1.0 &&
          second->p == 4.0 && second->d == 0.0)
        return catalog::example11_theta();
    }
    if (same_descriptor(d1, catalog::example11_theta().descriptor())) return catalog::example11_phi_p(2.0);
  }

  if (strictly_increasing_orlicz(phi1)) {
    auto comp = twice_sqrt_composition(d1);
    if (comp && same_descriptor(d, *comp)) return phi1;
  }
  return std::nullopt;
}

std::optional<YoungFunction> catalog_closed_form_zero(const YoungFunction& phi, const YoungFunction& phi1) {
  const auto pw = pure_power(phi);
  const auto pw1 = pure_power(phi1);
  if (!pw || !pw1) return std::nullopt;
  const auto [alpha, p] = *pw;
  const auto [beta, q] = *pw1;
  if (p < q) {
    const double p2 = p * q / (q - p);
    const double K = (1.0 - p / q) * alpha * std::pow(alpha * p / (beta * q), p / (q - p));
    const double uc = std::pow(beta * q / (alpha * p), 1.0 / p);
    return YoungFunction({{{0.0, formula::Power{K, p2, 0.0}}, {uc, formula::Power{alpha, p, -beta}}}, std::nullopt});
  }
  const double start = std::pow(beta / alpha, 1.0 / p);
  return YoungFunction({{zero_piece(0.0), {start, formula::Power{alpha, p, -beta}}}, std::nullopt});
}

YoungFunction tabulated_function(const std::vector<double>& us, const std::vector<ExtReal>& values) {
  if (us.size() != values.size()) throw DomainError("tabulated_function: size mismatch");
  formula::Table t;
  t.u.push_back(0.0);
  t.v.push_back(0.0);
  std::optional<double> b;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (!(us[i] > t.u.back())) continue;
    if (values[i].is_infinite()) {
      b = t.u.back() > 0.0 ? std::optional<double>(t.u.back()) : std::nullopt;
      break;
    }
    t.u.push_back(us[i]);
    t.v.push_back(std::max(values[i].value(), t.v.back()));
  }
  if (t.u.size() < 2) throw DomainError("tabulated_function: no finite positive samples");
  if (b && *b == t.u.back()) {
    // The table itself must end strictly before b.
    if (t.u.size() < 3) throw DomainError("tabulated_function: too few finite samples before +inf");
    const double last_u = t.u.back();
    t.u.pop_back();
    t.v.pop_back();
    b = last_u;
    // Keep the value at b through the extension slope of the last segment.
  }
  return YoungFunction({{{0.0, t}}, b});
}

std::pair<YoungFunction, bool> ominus_function(const YoungFunction& phi, const YoungFunction& phi1,
                                               const std::vector<double>& us, const OminusOptions& opts) {
  if (auto cf = catalog_closed_form(phi, phi1)) return {*cf, true};
  std::vector<ExtReal> vals;
  vals.reserve(us.size());
  for (double u : us) vals.push_back(ominus(phi, phi1, u, opts));
  return {tabulated_function(us, vals), false};
}

DoubleOminusReport double_ominus_check(const YoungFunction& phi, const YoungFunction& phi1, const std::vector<double>& us,
                                       double rtol, const OminusOptions& opts) {
  DoubleOminusReport rep;
  rep.rtol = rtol;
  const auto [inner, exact] = ominus_function(phi, phi1, geometric_grid(1e-6, 1e6, 2001), opts);
  rep.inner_exact = exact;
  bool in_run = false;
  for (double u : us) {
    const ExtReal it = ominus(phi, inner, u, opts);
    const ExtReal tg = phi1(u);
    const bool ok = close_rel(it, tg, rtol);
    rep.u.push_back(u);
    rep.iterate.push_back(it);
    rep.target.push_back(tg);
    rep.agree.push_back(ok);
    if (ok) {
      if (!in_run) rep.agreement.emplace_back(u, u);
      rep.agreement.back().second = u;
      in_run = true;
    } else {
      in_run = false;
      if (!rep.first_disagreement) rep.first_disagreement = u;
    }
  }
  return rep;
}

}  // namespace orlicz

#include "orlicz/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Span {
  double lo, hi;
};

Span base_span(ArgRange r, const EquivOptions& o) {
  if (r.kind != RangeKind::all && !(r.threshold > 0.0)) throw DomainError("range threshold must be positive");
  switch (r.kind) {
    case RangeKind::large:
      if (!(r.threshold < o.span_hi)) throw DomainError("large-range threshold must lie below span_hi");
      return {r.threshold, o.span_hi};
    case RangeKind::small:
      if (!(r.threshold > o.span_lo)) throw DomainError("small-range threshold must lie above span_lo");
      return {o.span_lo, r.threshold};
    case RangeKind::all:
      break;
  }
  return {o.span_lo, o.span_hi};
}

// Left cares about the infimum, right about the supremum.
bool better(Direction d, double candidate, double current) {
  return d == Direction::left ? candidate < current : candidate > current;
}

bool degenerate(Direction d, double r) { return d == Direction::left ? r == 0.0 : std::isinf(r); }

}  // namespace

std::string direction_name(Direction d) { return d == Direction::left ? "left" : "right"; }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::refuted:
      return "refuted";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

std::optional<double> product_ratio(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                    double u) {
  const double num = inverse(phi, ExtReal(u));
  const double den = inverse(phi1, ExtReal(u)) * inverse(phi2, ExtReal(u));
  if (den == 0.0) {
    if (num == 0.0) return std::nullopt;
    return kInf;
  }
  return num / den;
}

RelationResult check_product_relation(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                      Direction direction, ArgRange range, const EquivOptions& opts) {
  RelationResult res;
  res.direction = direction;
  res.range = range;
  const Span span = base_span(range, opts);

  std::vector<double> base = geometric_grid(span.lo, span.hi, opts.points);
  std::vector<double> extra;
  for (double u : opts.extra_points) {
    // u = 0 belongs to the all and small ranges even though the log grid cannot reach it.
    const bool origin = u == 0.0 && range.kind != RangeKind::large;
    if ((u >= span.lo || origin) && u <= span.hi) extra.push_back(u);
  }
  std::sort(extra.begin(), extra.end());
  base = merge_sorted(std::move(base), extra);
  res.grid = {"geometric", span.lo, span.hi, base.size()};

  const std::size_t per_decade = std::max<std::size_t>(opts.points / 10, 101);
  std::vector<std::vector<double>> exts;
  for (int k = 1; k <= opts.extension_decades; ++k) {
    std::vector<double> e;
    if (range.kind != RangeKind::small) {
      auto g = geometric_grid(span.hi * std::pow(10.0, k - 1), span.hi * std::pow(10.0, k), per_decade);
      e.insert(e.end(), g.begin() + 1, g.end());
    }
    if (range.kind != RangeKind::large) {
      auto g = geometric_grid(span.lo * std::pow(10.0, -k), span.lo * std::pow(10.0, 1 - k), per_decade);
      e.insert(e.end(), g.begin(), g.end() - 1);
    }
    exts.push_back(std::move(e));
  }

  double extremal = direction == Direction::left ? kInf : 0.0;
  double mn = kInf, mx = 0.0;
  bool any = false;
  bool degenerate_seen = false;
  std::size_t total = 0;
  std::vector<std::pair<double, double>> records;

  auto visit = [&](double u, bool in_base) {
    ++total;
    const auto r = product_ratio(phi1, phi2, phi, u);
    if (!r) {
      res.skipped.push_back(u);
      return;
    }
    any = true;
    if (in_base) {
      mn = std::min(mn, *r);
      mx = std::max(mx, *r);
    }
    if (degenerate(direction, *r)) degenerate_seen = true;
    if (better(direction, *r, extremal)) {
      extremal = *r;
      records.emplace_back(u, *r);
    }
  };

  for (double u : base) visit(u, true);
  res.extremal.push_back(extremal);
  const bool degenerate_in_base = degenerate_seen;
  for (const auto& e : exts) {
    for (double u : e) visit(u, false);
    res.extremal.push_back(extremal);
  }
  if (static_cast<double>(res.skipped.size()) > opts.skip_cap * static_cast<double>(total))
    throw NumericError("product ratio undefined (0/0) at " + std::to_string(res.skipped.size()) + " of " +
                       std::to_string(total) + " sample points");
  if (!any) throw NumericError("product ratio undefined at every sample point");

  res.sampled_min_ratio = mn;
  res.sampled_max_ratio = mx;
  res.constant = extremal;

  const double m0 = res.extremal.front();
  const double mlast = res.extremal.back();
  double growth;
  if (direction == Direction::left)
    growth = mlast == 0.0 ? kInf : m0 / mlast;
  else
    growth = std::isinf(mlast) ? kInf : mlast / m0;
  // extremal is monotone in the better() sense by construction; strict movement across each extension is required.
  bool moved_each = true;
  for (std::size_t k = 1; k < res.extremal.size(); ++k) {
    if (!better(direction, res.extremal[k], res.extremal[k - 1])) moved_each = false;
  }

  if (range.kind == RangeKind::all && degenerate_in_base) {
    res.verdict = Verdict::refuted;
  } else if (degenerate_seen || (growth > opts.refute_factor && moved_each)) {
    res.verdict = Verdict::refuted;
  } else if (growth <= opts.drift_factor) {
    res.verdict = Verdict::holds;
  } else {
    res.verdict = Verdict::inconclusive;
  }

  if (records.size() > 16) {
    std::vector<std::pair<double, double>> thin;
    for (std::size_t i = 0; i < 16; ++i) thin.push_back(records[i * (records.size() - 1) / 15]);
    records = std::move(thin);
  }
  res.witnesses = std::move(records);

  if (opts.certificate && opts.certificate->direction == direction &&
      (opts.certificate->range == range.kind || range.kind == RangeKind::all)) {
    res.verdict = Verdict::refuted;
    res.source = opts.certificate->source;
    res.witnesses = opts.certificate->witnesses;
  }
  return res;
}

RelationResult extend_constants(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                const RelationResult& witness, double new_threshold) {
  const double u0 = witness.range.threshold;
  double lo, hi;
  if (witness.range.kind == RangeKind::large) {
    if (!(new_threshold > 0.0 && new_threshold < u0)) throw DomainError("extend_constants: new threshold must lie below the old one");
    lo = new_threshold;
    hi = u0;
  } else if (witness.range.kind == RangeKind::small) {
    if (!(new_threshold > u0)) throw DomainError("extend_constants: new threshold must lie above the old one");
    lo = u0;
    hi = new_threshold;
  } else {
    throw DomainError("extend_constants: an all-argument witness has nothing to extend");
  }
  RelationResult out = witness;
  out.range.threshold = new_threshold;
  out.grid = {"geometric", lo, hi, 1001};
  out.witnesses.clear();
  out.source = "bridge";

  const Direction d = witness.direction;
  double ext = d == Direction::left ? kInf : 0.0;
  double ext_u = lo;
  for (double u : geometric_grid(lo, hi, 1001)) {
    const auto r = product_ratio(phi1, phi2, phi, u);
    if (!r) {
      out.skipped.push_back(u);
      continue;
    }
    if (better(d, *r, ext)) {
      ext = *r;
      ext_u = u;
    }
  }
  out.witnesses.emplace_back(ext_u, ext);
  const bool degen = degenerate(d, ext);
  const bool collapsed = d == Direction::left ? ext * 1e2 < witness.constant : ext > 1e2 * witness.constant;
  if (degen || collapsed) {
    out.verdict = Verdict::refuted;
    out.constant = ext;
    return out;
  }
  out.constant = d == Direction::left ? std::min(witness.constant, ext) : std::max(witness.constant, ext);
  return out;
}

DegeneracyReport degeneracy_links(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                  RangeKind claimed) {
  DegeneracyReport rep;
  rep.claimed = claimed;
  if (claimed != RangeKind::small) {
    LinkCheck c;
    c.name = "b_phi finite iff b_phi1 and b_phi2 finite";
    c.lhs = phi.b().is_finite();
    c.rhs = phi1.b().is_finite() && phi2.b().is_finite();
    c.consistent = c.lhs == c.rhs;
    rep.checks.push_back(c);
  }
  if (claimed != RangeKind::large) {
    LinkCheck c;
    c.name = "a_phi zero iff a_phi1 or a_phi2 zero";
    c.lhs = phi.a() == 0.0;
    c.rhs = phi1.a() == 0.0 || phi2.a() == 0.0;
    c.consistent = c.lhs == c.rhs;
    rep.checks.push_back(c);
  }
  for (const auto& c : rep.checks) rep.consistent = rep.consistent && c.consistent;
  return rep;
}

BridgeReport bridge_product_sum(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                double C, ArgRange range, std::size_t uv_points, std::size_t w_points) {
  if (!(C > 0.0) || std::isinf(C)) throw DomainError("bridge_product_sum: C must be positive and finite");
  BridgeReport rep;
  rep.C = C;

  const auto g = geometric_grid(1e-3, 1e3, uv_points);
  std::vector<double> f1, f2;
  for (double u : g) {
    f1.push_back(phi1(u).value());
    f2.push_back(phi2(u).value());
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::isinf(f1[i])) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (std::isinf(f2[j])) continue;
      ++rep.sum_points;
      const double lhs = phi(C * g[i] * g[j]).value();
      const double rhs = f1[i] + f2[j];
      if (lhs > rhs * (1.0 + 1e-12)) {
        const double excess = std::isinf(lhs) ? kInf : lhs - rhs;
        if (excess > worst) {
          worst = excess;
          rep.sum_holds = false;
          rep.sum_counterexample = std::vector<double>{g[i], g[j], lhs, rhs};
        }
      }
    }
  }

  EquivOptions o;
  const Span span = base_span(range, o);
  double inf_ratio = kInf;
  for (double w : geometric_grid(span.lo, span.hi, w_points)) {
    const double lhs = 0.5 * C * inverse(phi1, ExtReal(w)) * inverse(phi2, ExtReal(w));
    const double rhs = inverse(phi, ExtReal(w));
    if (lhs > rhs * (1.0 + 1e-12) && rep.product_holds) {
      rep.product_holds = false;
      rep.product_counterexample = std::vector<double>{w, lhs, rhs};
    }
    if (auto r = product_ratio(phi1, phi2, phi, w)) inf_ratio = std::min(inf_ratio, *r);
  }
  rep.final_constant = inf_ratio;
  return rep;
}

RangeKind required_range(EmbeddingKind e) {
  switch (e) {
    case EmbeddingKind::function_finite_measure:
      return RangeKind::large;
    case EmbeddingKind::function_infinite_measure:
      return RangeKind::all;
    case EmbeddingKind::sequence:
      break;
  }
  return RangeKind::small;
}

std::string inclusion_name(Inclusion i) {
  switch (i) {
    case Inclusion::equality:
      return "equality";
    case Inclusion::inclusion:
      return "inclusion";
    case Inclusion::reverse_inclusion:
      return "reverse_inclusion";
    case Inclusion::neither:
      return "neither";
    case Inclusion::inconclusive:
      break;
  }
  return "inconclusive";
}

InclusionVerdict multiplier_inclusion_predicate(EmbeddingKind e, const YoungFunction& phi1, const YoungFunction& phi2,
                                                const YoungFunction& phi, const EquivOptions& opts) {
  InclusionVerdict v;
  v.range = {required_range(e), 1.0};
  v.left = check_product_relation(phi1, phi2, phi, Direction::left, v.range, opts);
  v.right = check_product_relation(phi1, phi2, phi, Direction::right, v.range, opts);
  const bool l = v.left.verdict == Verdict::holds, r = v.right.verdict == Verdict::holds;
  if (l && r)
    v.classification = Inclusion::equality;
  else if (l)
    v.classification = Inclusion::inclusion;
  else if (r)
    v.classification = Inclusion::reverse_inclusion;
  else if (v.left.verdict == Verdict::refuted && v.right.verdict == Verdict::refuted)
    v.classification = Inclusion::neither;
  else
    v.classification = Inclusion::inconclusive;
  return v;
}

}  // namespace orlicz

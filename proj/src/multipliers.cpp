#include "orlicz/multipliers.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "orlicz/errors.hpp"
#include "orlicz/grid.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct LpLike {
  double p;
  Weight w;
};

std::optional<LpLike> as_lp(const IdealSpace& s) {
  if (auto* a = std::get_if<LpSpace>(&s)) return LpLike{a->p, a->w};
  if (auto* b = std::get_if<LinfSpace>(&s)) return LpLike{kInf, b->w};
  return std::nullopt;
}

class Search {
 public:
  Search(const IdealSpace& E, const IdealSpace& F, const StepFunction& x, const MeasureModel& m, bool cone)
      : E_(E), F_(F), x_(x), m_(m), cone_(cone) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x[i] != 0.0) supp_.push_back(i);
    }
    std::stable_sort(supp_.begin(), supp_.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return std::fabs(x[a]) > std::fabs(x[b]); });
  }

  std::size_t dim() const { return supp_.size(); }

  StepFunction expand(const Eigen::VectorXd& c) const {
    StepFunction y = StepFunction::Zero(x_.size());
    if (cone_) {
      double acc = 0.0;
      for (std::size_t j = dim(); j-- > 0;) {
        acc += c[static_cast<Eigen::Index>(j)];
        y[supp_[j]] = acc;
      }
    } else {
      for (std::size_t j = 0; j < dim(); ++j) y[supp_[j]] = c[static_cast<Eigen::Index>(j)];
    }
    return y;
  }

  // Coordinates reproducing y on the support (sorted first in cone mode).
  Eigen::VectorXd coords(const std::vector<double>& ysupp) const {
    Eigen::VectorXd c(static_cast<Eigen::Index>(dim()));
    if (cone_) {
      std::vector<double> s = ysupp;
      std::sort(s.begin(), s.end(), std::greater<>());
      for (std::size_t j = 0; j < dim(); ++j) c[static_cast<Eigen::Index>(j)] = s[j] - (j + 1 < dim() ? s[j + 1] : 0.0);
    } else {
      for (std::size_t j = 0; j < dim(); ++j) c[static_cast<Eigen::Index>(j)] = ysupp[j];
    }
    return c;
  }

  double ratio(const Eigen::VectorXd& c) const {
    const StepFunction y = expand(c);
    const double ne = norm(E_, y, m_);
    if (!(ne > 0.0) || !std::isfinite(ne)) return -kInf;
    return norm(F_, x_.cwiseAbs().cwiseProduct(y), m_) / ne;
  }

  double xabs(std::size_t j) const { return std::fabs(x_[supp_[j]]); }
  Eigen::Index atom(std::size_t j) const { return supp_[j]; }

 private:
  const IdealSpace& E_;
  const IdealSpace& F_;
  const StepFunction& x_;
  const MeasureModel& m_;
  bool cone_;
  std::vector<Eigen::Index> supp_;
};

double ascend(const Search& s, Eigen::VectorXd& c, const MultiplierOptions& o) {
  double best = s.ratio(c);
  double step = o.step0;
  for (int sweep = 0; sweep < o.max_sweeps; ++sweep) {
    bool improved = false;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const double scale = std::max(c.cwiseAbs().maxCoeff(), 1e-300);
      const double ci = c[i];
      const double cand[] = {ci * (1.0 + step), ci * (1.0 - step), ci + step * scale, std::max(0.0, ci - step * scale), 0.0};
      double bv = best, bc = ci;
      for (double v : cand) {
        if (v == ci || v < 0.0) continue;
        c[i] = v;
        const double r = s.ratio(c);
        if (r > bv * (1.0 + 1e-14) + 1e-300) {
          bv = r;
          bc = v;
        }
      }
      c[i] = bc;
      if (bv > best) {
        best = bv;
        improved = true;
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < o.min_step) break;
    }
  }
  return best;
}


struct Levels {
  StepFunction x;
  MeasureModel m;
  std::vector<Eigen::Index> block;  // level index of each atom, -1 off the support
};

Levels levels(const StepFunction& x, const MeasureModel& m) {
  std::vector<double> vals;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) vals.push_back(std::fabs(x[i]));
  }
  std::sort(vals.begin(), vals.end(), std::greater<>());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  Levels l;
  l.x = StepFunction(static_cast<Eigen::Index>(vals.size()));
  Eigen::VectorXd w = Eigen::VectorXd::Zero(l.x.size());
  l.block.assign(static_cast<std::size_t>(x.size()), -1);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    const auto it = std::lower_bound(vals.begin(), vals.end(), std::fabs(x[i]), std::greater<>());
    const auto k = static_cast<Eigen::Index>(it - vals.begin());
    l.block[static_cast<std::size_t>(i)] = k;
    w[k] += m.weights[i];
  }
  for (Eigen::Index k = 0; k < l.x.size(); ++k) l.x[k] = vals[static_cast<std::size_t>(k)];
  l.m = MeasureModel::custom(w);
  return l;
}

// Maximizer of the catalogued weighted L^p pairs: y = z^{r/p} / w_E with z = (w_F / w_E)|x|,
// or the indicator of the largest z when p_E = p_F.
std::optional<std::vector<double>> extremal_start(const IdealSpace& E, const IdealSpace& F, const Search& s,
                                                  const MeasureModel& m) {
  const auto e = as_lp(E), f = as_lp(F);
  if (!e || !f || e->p < f->p) return std::nullopt;
  const Eigen::VectorXd we = weight_values(e->w, m), wf = weight_values(f->w, m);
  std::vector<double> z(s.dim()), y(s.dim(), 0.0);
  for (std::size_t j = 0; j < s.dim(); ++j) z[j] = s.xabs(j) * wf[s.atom(j)] / we[s.atom(j)];
  if (e->p == f->p) {
    const auto k = static_cast<std::size_t>(std::max_element(z.begin(), z.end()) - z.begin());
    y[k] = 1.0 / we[s.atom(k)];
    return y;
  }
  const double r = std::isinf(e->p) ? f->p : 1.0 / (1.0 / f->p - 1.0 / e->p);
  const double expo = std::isinf(e->p) ? 0.0 : r / e->p;
  for (std::size_t j = 0; j < s.dim(); ++j) y[j] = std::pow(z[j], expo) / we[s.atom(j)];
  return y;
}

}  // namespace

std::optional<std::pair<double, std::string>> multiplier_certificate(const IdealSpace& E, const IdealSpace& F,
                                                                     const StepFunction& x, const MeasureModel& m) {
  const auto e = as_lp(E), f = as_lp(F);
  if (e && f && e->p >= f->p) {
    Eigen::VectorXd z = x.cwiseAbs();
    if (!e->w.trivial() || !f->w.trivial()) z = z.cwiseProduct(weight_values(f->w, m)).cwiseQuotient(weight_values(e->w, m));
    if (e->p == f->p) return std::make_pair(z.size() ? z.maxCoeff() : 0.0, std::string(e->w.trivial() && f->w.trivial() ? "M(E,E)=Linf" : "weighted: sup (w2/w1)|x|"));
    const double r = std::isinf(e->p) ? f->p : 1.0 / (1.0 / f->p - 1.0 / e->p);
    return std::make_pair(norm(make_lp(r), z, m), std::string("Holder: M(Lp,Lq)=Lr"));
  }
  if (to_json(E) == to_json(F)) return std::make_pair(x.size() ? x.cwiseAbs().maxCoeff() : 0.0, std::string("M(E,E)=Linf"));
  return std::nullopt;
}

MultiplierEstimate multiplier_norm(const IdealSpace& E, const IdealSpace& F, const StepFunction& x, const MeasureModel& m,
                                   const MultiplierOptions& opts) {
  if (x.size() != m.size()) throw DomainError("multiplier_norm: x does not live on the shared measure model");
  MultiplierEstimate est;
  if (auto c = multiplier_certificate(E, F, x, m)) {
    est.certificate = c->first;
    est.certificate_source = c->second;
  }
  const bool cone = opts.use_cone && is_symmetric(E) && is_symmetric(F) && m.uniform();
  est.search = cone ? "cone" : "coordinate";
  if (x.cwiseAbs().maxCoeff() == 0.0) {
    est.y = StepFunction::Zero(x.size());
    if (est.certificate) est.gap = 0.0;
    return est;
  }
  // Symmetric norms depend only on the distribution, so in cone mode the search runs on
  // one atom per level of |x| and the optimizer is spread back over the level sets.
  const Levels lv = cone ? levels(x, m) : Levels{};
  const StepFunction& xs = cone ? lv.x : x;
  const MeasureModel& ms = cone ? lv.m : m;
  Search s(E, F, xs, ms, cone);
  const std::size_t K = s.dim();

  std::vector<std::vector<double>> starts;
  starts.emplace_back(K, 1.0);
  if (auto y = extremal_start(E, F, s, ms)) starts.push_back(*y);
  for (double e : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    std::vector<double> y(K);
    for (std::size_t j = 0; j < K; ++j) y[j] = std::pow(s.xabs(j), e);
    starts.push_back(y);
  }
  for (std::size_t k : {std::size_t{1}, std::size_t{2}, K / 4, K / 2, (3 * K) / 4}) {
    if (k == 0 || k > K) continue;
    std::vector<double> y(K, 0.0);
    std::fill(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k), 1.0);
    starts.push_back(y);
  }
  std::mt19937 rng(opts.seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  while (starts.size() < 16 || starts.size() < 11 + opts.random_starts) {
    std::vector<double> y(K);
    for (auto& v : y) v = U(rng);
    starts.push_back(y);
  }
  est.starts = starts.size();

  double best = -kInf;
  Eigen::VectorXd best_c;
  for (const auto& y0 : starts) {
    Eigen::VectorXd c = s.coords(y0);
    const double r = ascend(s, c, opts);
    if (r > best) {
      best = r;
      best_c = c;
    }
  }
  est.objective = best;
  StepFunction y = s.expand(best_c);
  if (cone) {
    StepFunction full = StepFunction::Zero(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (lv.block[i] >= 0) full[i] = y[lv.block[i]];
    }
    y = full;
  }
  y /= norm(E, y, m);
  est.y = y;
  est.value = norm(F, x.cwiseAbs().cwiseProduct(y), m);
  if (est.certificate && *est.certificate > 0.0) est.gap = (*est.certificate - est.value) / *est.certificate;
  return est;
}

RefinementReport multiplier_refinement(const IdealSpace& E, const IdealSpace& F, const std::vector<Eigen::Index>& ns,
                                       const MultiplierOptions& opts) {
  RefinementReport r;
  for (Eigen::Index n : ns) {
    const MeasureModel m = MeasureModel::grid01(n);
    const StepFunction one = StepFunction::Ones(n);
    const auto cert = multiplier_certificate(E, F, one, m);
    r.atoms.push_back(n);
    r.values.push_back(cert ? cert->first : multiplier_norm(E, F, one, m, opts).value);
  }
  if (r.values.size() >= 2) {
    r.growth_exponent = std::log(r.values.back() / r.values.front()) /
                        std::log(static_cast<double>(r.atoms.back()) / static_cast<double>(r.atoms.front()));
    bool increasing = true;
    for (std::size_t i = 1; i < r.values.size(); ++i) increasing = increasing && r.values[i] > r.values[i - 1];
    r.diverging = increasing && r.growth_exponent > 0.05;
  }
  return r;
}

HolderReport holder_check(const IdealSpace& E, const IdealSpace& F, const StepFunction& x, const MeasureModel& m,
                          const MultiplierEstimate& est, std::size_t batch, unsigned seed) {
  HolderReport rep;
  const double M = est.certificate ? std::max(*est.certificate, est.value) : est.value;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  auto one = [&](const StepFunction& y) {
    const double lhs = norm(F, x.cwiseAbs().cwiseProduct(y), m);
    const double rhs = M * norm(E, y, m);
    ++rep.checked;
    const double excess = lhs - rhs;
    rep.max_excess = std::max(rep.max_excess, excess);
    if (excess > 1e-9 * std::max(1.0, rhs)) ++rep.violations;
    return std::make_pair(lhs, rhs);
  };
  one(StepFunction::Zero(x.size()));
  for (std::size_t k = 0; k < batch; ++k) {
    StepFunction y(x.size());
    for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = U(rng) < 0.2 ? 0.0 : U(rng) * 3.0;
    one(y);
  }
  if (est.y.size() == x.size()) {
    const auto [lhs, rhs] = one(est.y);
    rep.optimizer_ratio = rhs > 0.0 ? lhs / rhs : 0.0;
  }
  return rep;
}

FundamentalBounds fundamental_bounds(const IdealSpace& E, const IdealSpace& F, const MeasureModel& m, double t) {
  const Eigen::Index k = atoms_for_measure(m, t);
  if (k == 0) throw DomainError("fundamental_bounds: t must be positive");
  FundamentalBounds b;
  double prev_f = 0.0, prev_g = 0.0, prev_s = 0.0;
  double s = 0.0;
  double amin = kInf;
  double ratio_t = 0.0;
  for (Eigen::Index j = 1; j <= k; ++j) {
    s += m.weights[j - 1];
    const StepFunction chi = indicator(m, j);
    const double fe = norm(E, chi, m), ff = norm(F, chi, m);
    const double ratio = ff / fe;
    b.lower = std::max(b.lower, ratio);
    b.upper += (ff - prev_f) / fe;
    const double g = std::log(ratio);
    if (j > 1) amin = std::min(amin, (g - prev_g) / (std::log(s) - std::log(prev_s)));
    prev_f = ff;
    prev_g = g;
    prev_s = s;
    ratio_t = ratio;
  }
  b.a = k > 1 ? amin : 0.0;
  if (b.a > 0.0 && std::isfinite(b.a)) {
    b.sandwich_checked = true;
    b.sandwich_upper = ratio_t / b.a;
    const double tol = 1e-9 * b.sandwich_upper;
    b.sandwich_holds = ratio_t <= b.lower + tol && b.upper <= b.sandwich_upper + tol;
  }
  return b;
}

EtaReport eta_construction(const Profile& psi, const Profile& phi, double T) {
  using boost::math::quadrature::gauss_kronrod;
  EtaReport r;
  auto f = [&](double x) {
    const double s = std::exp(x);
    return psi.derivative(s) * phi.derivative(s) * s;
  };
  auto integral = [&](double a, double b) { return gauss_kronrod<double, 61>::integrate(f, std::log(a), std::log(b), 8, 1e-13); };

  const int decades = 40;
  for (int k = 0; k < decades; ++k) r.decade_contributions.push_back(integral(T * std::pow(10.0, -k - 1), T * std::pow(10.0, -k)));
  const auto& D = r.decade_contributions;
  // Geometric decay of the decade contributions is required; a ratio near 1 is a log divergence.
  double rho = 0.0;
  for (int k = decades - 5; k < decades; ++k) rho = std::max(rho, D[k] / D[k - 1]);
  if (!(rho < 0.95) || !std::isfinite(D.back())) {
    r.finite = false;
    r.C = kInf;
    return r;
  }
  const double t_lo = T * std::pow(10.0, -decades);
  const double tail = D.back() * rho / (1.0 - rho);

  std::vector<double> knots = merge_sorted(geometric_grid(t_lo, T, 801), linear_grid(0.0, T, 4097));
  if (knots.front() != 0.0) knots.insert(knots.begin(), 0.0);
  std::vector<double> vals(knots.size(), 0.0);
  double acc = tail;
  double prev = t_lo;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double t = knots[i];
    if (t == 0.0) continue;
    if (t <= t_lo) {
      // Below the resolved range: scale the tail with the local decay.
      vals[i] = tail * std::pow(t / t_lo, -std::log10(rho));
      continue;
    }
    acc += integral(prev, t);
    prev = t;
    vals[i] = acc;
  }
  r.finite = true;
  r.C = vals.back();
  r.eta = Profile::tabulated(knots, vals);
  return r;
}

void verify_eta_embedding(EtaReport& r, const Profile& psi, const Profile& phi, const MeasureModel& m, std::size_t batch,
                          unsigned seed) {
  if (!r.finite) return;
  const IdealSpace L = make_lorentz(phi);
  const IdealSpace M = make_marcinkiewicz(Profile::t_over(psi));
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  r.checked = 0;
  r.violations = 0;
  r.max_ratio = 0.0;
  for (std::size_t k = 0; k < batch; ++k) {
    StepFunction x(m.size());
    const double sparsity = U(rng);
    const double spread = 1.0 + 6.0 * U(rng);
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = U(rng) < sparsity * 0.5 ? 0.0 : std::pow(U(rng), spread);
    if (x.maxCoeff() == 0.0) x[0] = 1.0;
    const double ratio = norm(L, x, m) / (r.C * norm(M, x, m));
    ++r.checked;
    r.max_ratio = std::max(r.max_ratio, ratio);
    if (ratio > 1.0 + 1e-9) ++r.violations;
  }
  StepFunction xs(m.size());
  double left = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const double right = left + m.weights[i];
    xs[i] = (psi(right) - psi(left)) / m.weights[i];
    left = right;
  }
  r.extremal_ratio = norm(L, xs, m) / (r.C * norm(M, xs, m));
}

std::string trend_name(Trend t) {
  switch (t) {
    case Trend::vanishing:
      return "vanishing";
    case Trend::finite:
      return "finite";
    case Trend::divergent:
      break;
  }
  return "divergent";
}

namespace {

bool increasing_orlicz(const YoungFunction& f) {
  if (f.a() != 0.0 || f.b().is_finite()) return false;
  for (double u : geometric_grid(1e-6, 1e6, 121)) {
    if (!(f(u) > ExtReal(0.0))) return false;
  }
  return true;
}

}  // namespace

Trichotomy predict_multiplier_space(const YoungFunction& phi1, const YoungFunction& phi, const PredictOptions& opts) {
  if (!increasing_orlicz(phi1) || !increasing_orlicz(phi))
    throw DomainError("predict: phi and phi1 must be increasing Orlicz functions (a = 0, b = inf)");
  Trichotomy t;
  t.vs = opts.vs;
  for (double v : opts.vs) {
    std::vector<double> wm;
    for (int k = opts.first_decade; k < opts.first_decade + opts.decades; ++k) {
      double mx = 0.0;
      for (double u : geometric_grid(std::pow(10.0, k), std::pow(10.0, k + 1), opts.points_per_decade)) {
        const double num = phi(u * v).value(), den = phi1(u).value();
        const double q = std::isinf(num) ? kInf : (std::isinf(den) ? 0.0 : num / den);
        mx = std::max(mx, q);
      }
      wm.push_back(mx);
    }
    const double last = wm.back(), back3 = wm[wm.size() - 4];
    Trend tr;
    if (std::isinf(last) || last * opts.vanish_factor > back3)
      tr = Trend::divergent;
    else if (last <= opts.vanish_factor * back3)
      tr = Trend::vanishing;
    else
      tr = Trend::finite;
    t.trends.push_back(tr);
    t.window_max.push_back(std::move(wm));
  }
  const bool all_zero = std::all_of(t.trends.begin(), t.trends.end(), [](Trend x) { return x == Trend::vanishing; });
  const bool all_inf = std::all_of(t.trends.begin(), t.trends.end(), [](Trend x) { return x == Trend::divergent; });
  if (all_zero) {
    t.case_id = "i";
    t.space = "E_phi2";
    auto [phi2, exact] = ominus_function(phi, phi1, geometric_grid(1e-6, 1e6, 2001));
    t.phi2_exact = exact;

    const auto g = geometric_grid(1e-6, 1e6, 241);
    t.monotone_fv = true;
    for (double v : opts.vs) {
      double prev = kInf;
      for (double u : g) {
        const double q = phi(u * v).value() / phi1(u).value();
        if (q > prev * (1.0 + 1e-9)) t.monotone_fv = false;
        prev = q;
      }
    }
    t.monotone_inverse_ratio = true;
    double prev = 0.0;
    for (double u : geometric_grid(1.0, 1e6, 241)) {
      const double q = inverse(phi, ExtReal(u)) / inverse(phi1, ExtReal(u));
      if (q < prev * (1.0 - 1e-9)) t.monotone_inverse_ratio = false;
      prev = q;
    }
    if (phi2.b().is_infinite()) t.delta2_phi2 = delta2(phi2, {RangeKind::large, 1.0}).satisfied;
    t.phi2 = std::move(phi2);
  } else if (all_inf) {
    t.case_id = "iii";
    t.space = "zero";
  } else {
    t.case_id = "ii";
    t.space = "Linf";
  }
  return t;
}

MultiplierOptions probe_options() {
  MultiplierOptions o;
  o.random_starts = 5;
  o.max_sweeps = 60;
  o.min_step = 1e-3;
  return o;
}

ConjectureReport conjecture_probe(const IdealSpace& E, const MeasureModel& m, const YoungFunction& phi1,
                                  const YoungFunction& phi, std::size_t batch, bool zero_variant, unsigned seed,
                                  const MultiplierOptions& opts) {
  ConjectureReport rep;
  std::optional<YoungFunction> phi2;
  const auto us = geometric_grid(1e-6, 1e6, 2001);
  if (zero_variant) {
    phi2 = catalog_closed_form_zero(phi, phi1);
    rep.phi2_exact = phi2.has_value();
    if (!phi2) {
      std::vector<ExtReal> v;
      for (double u : us) v.push_back(ominus_zero(phi, phi1, u));
      phi2 = tabulated_function(us, v);
    }
  } else {
    auto [f, exact] = ominus_function(phi, phi1, us);
    phi2 = std::move(f);
    rep.phi2_exact = exact;
  }
  const IdealSpace E1 = make_cl(E, phi1), F = make_cl(E, phi), E2 = make_cl(E, *phi2);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (std::size_t k = 0; k < batch; ++k) {
    // Simple functions with 1..8 levels at a random scale; a quarter of the atoms stay 0.
    StepFunction x(m.size());
    const double scale = std::pow(10.0, 2.0 * U(rng) - 1.0);
    std::vector<double> level(1 + static_cast<std::size_t>(U(rng) * 8.0) % 8);
    for (auto& v : level) v = scale * (0.05 + U(rng));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      x[i] = U(rng) < 0.25 ? 0.0 : level[static_cast<std::size_t>(U(rng) * level.size()) % level.size()];
    }
    if (x.maxCoeff() == 0.0) x[0] = level[0];
    const double a = multiplier_norm(E1, F, x, m, opts).value;
    const double b = norm(E2, x, m);
    rep.multiplier_values.push_back(a);
    rep.cl_values.push_back(b);
    const double f = (a > 0.0 && b > 0.0) ? std::max(a / b, b / a) : kInf;
    rep.factors.push_back(f);
    rep.max_factor = std::max(rep.max_factor, f);
  }
  return rep;
}

Json to_json(const MultiplierEstimate& e) {
  Json j;
  j["schema"] = "orlicz.multiplier/1";
  j["value"] = number_json(e.value);
  j["objective"] = number_json(e.objective);
  j["certificate"] = e.certificate ? number_json(*e.certificate) : Json(nullptr);
  j["certificate_source"] = e.certificate_source;
  j["gap"] = number_json(e.gap);
  j["starts"] = e.starts;
  j["search"] = e.search;
  j["optimizer"] = to_json(e.y);
  return j;
}

Json to_json(const Trichotomy& t) {
  Json j;
  j["schema"] = "orlicz.predict/1";
  j["case"] = t.case_id;
  j["space"] = t.space;
  Json per = Json::array();
  for (std::size_t i = 0; i < t.vs.size(); ++i) {
    Json w = Json::array();
    for (double x : t.window_max[i]) w.push_back(number_json(x));
    per.push_back({{"v", number_json(t.vs[i])}, {"trend", trend_name(t.trends[i])}, {"window_max", w}});
  }
  j["limsup"] = per;
  if (t.case_id == "i") {
    j["side_conditions"] = {{"monotone_fv", t.monotone_fv},
                            {"monotone_inverse_ratio", t.monotone_inverse_ratio},
                            {"delta2_phi2", t.delta2_phi2}};
    j["phi2_exact"] = t.phi2_exact;
    if (t.phi2) j["phi2"] = to_json(*t.phi2);
  }
  return j;
}

}  // namespace orlicz

#include "orlicz/space_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "orlicz/catalog.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/grid.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_shape(const StepFunction& x, const MeasureModel& m) {
  if (x.size() != m.size()) throw DomainError("step function has " + std::to_string(x.size()) + " values for " +
                                              std::to_string(m.size()) + " atoms");
}

double lp_sum(const Eigen::VectorXd& v, const Eigen::VectorXd& mu, double p) {
  const double top = v.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0.0;
  if (std::isinf(top)) return kInf;
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double r = std::fabs(v[i]) / top;
    if (r > 0.0) s += mu[i] * std::pow(r, p);
  }
  return top * std::pow(s, 1.0 / p);
}

double lorentz_norm(const Profile& phi, const DecreasingProfile& d) {
  double s = 0.0;
  for (std::size_t k = 0; k < d.value.size(); ++k) s += d.value[k] * (phi(d.t[k + 1]) - phi(d.t[k]));
  return s;
}

double marcinkiewicz_norm(const Profile& phi, const DecreasingProfile& d) {
  if (d.value.empty()) return 0.0;
  double best = phi.at_zero() * d.value.front();
  if (std::isnan(best)) best = 0.0;
  for (std::size_t k = 0; k < d.value.size(); ++k) {
    const double a = d.t[k], b = d.t[k + 1];
    const double I0 = d.integral[k], v = d.value[k];
    auto h = [&](double s) { return s > 0.0 ? phi(s) / s * (I0 + v * (s - a)) : phi.at_zero() * v; };
    const double ha = h(a), hb = h(b);
    double top = std::max(ha, hb);
    best = std::max(best, hb);
    if (a > 0.0) best = std::max(best, ha);
    // Interior maxima only when a probe beats both endpoints.
    double arg = -1.0, hv = top;
    for (double f : {0.25, 0.5, 0.75}) {
      const double s = a + f * (b - a);
      const double hs = h(s);
      if (hs > hv) {
        hv = hs;
        arg = s;
      }
    }
    if (arg < 0.0) continue;
    double lo = std::max(a, arg - 0.25 * (b - a)), hi = std::min(b, arg + 0.25 * (b - a));
    const double r = 0.6180339887498949;
    double c = hi - r * (hi - lo), e = lo + r * (hi - lo);
    double hc = h(c), he = h(e);
    for (int it = 0; it < 60 && hi - lo > 1e-14 * b; ++it) {
      if (hc >= he) {
        hi = e;
        e = c;
        he = hc;
        c = hi - r * (hi - lo);
        hc = h(c);
      } else {
        lo = c;
        c = e;
        hc = he;
        e = lo + r * (hi - lo);
        he = h(e);
      }
    }
    best = std::max({best, hv, hc, he});
  }
  return best;
}

}  // namespace

double MeasureModel::left(Eigen::Index i) const { return weights.head(i).sum(); }

double MeasureModel::midpoint(Eigen::Index i) const { return left(i) + 0.5 * weights[i]; }

bool MeasureModel::uniform() const {
  if (weights.size() == 0) return true;
  return (weights.array() == weights[0]).all();
}

MeasureModel MeasureModel::grid01(Eigen::Index n) {
  if (n < 1) throw ValidationError("grid01 needs at least one atom");
  MeasureModel m;
  m.label = Label::grid01;
  m.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  return m;
}

MeasureModel MeasureModel::half_line(double T, Eigen::Index n, double t_min) {
  if (n < 2 || !(t_min > 0.0) || !(T > t_min)) throw ValidationError("half_line needs n >= 2 and 0 < t_min < T");
  const auto g = geometric_grid(t_min, T, static_cast<std::size_t>(n));
  MeasureModel m;
  m.label = Label::half_line;
  m.horizon = T;
  m.weights.resize(n);
  m.weights[0] = t_min;
  for (Eigen::Index i = 1; i < n; ++i) m.weights[i] = g[i] - g[i - 1];
  return m;
}

MeasureModel MeasureModel::counting(Eigen::Index n) {
  if (n < 1) throw ValidationError("counting needs at least one atom");
  MeasureModel m;
  m.label = Label::counting;
  m.weights = Eigen::VectorXd::Ones(n);
  return m;
}

MeasureModel MeasureModel::custom(Eigen::VectorXd weights) {
  if (weights.size() == 0) throw ValidationError("custom model needs atoms");
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) throw ValidationError("atom weights must be positive and finite");
  }
  MeasureModel m;
  m.label = Label::custom;
  m.weights = std::move(weights);
  return m;
}

std::string label_name(MeasureModel::Label l) {
  switch (l) {
    case MeasureModel::Label::grid01:
      return "grid01";
    case MeasureModel::Label::half_line:
      return "half_line";
    case MeasureModel::Label::counting:
      return "counting";
    case MeasureModel::Label::custom:
      break;
  }
  return "custom";
}

EmbeddingKind embedding_kind(const MeasureModel& m) {
  switch (m.label) {
    case MeasureModel::Label::counting:
      return EmbeddingKind::sequence;
    case MeasureModel::Label::half_line:
      return EmbeddingKind::function_infinite_measure;
    default:
      break;
  }
  return EmbeddingKind::function_finite_measure;
}

double DecreasingProfile::star(double s) const {
  if (s >= support()) return 0.0;
  const auto it = std::upper_bound(t.begin(), t.end(), s);
  return value[static_cast<std::size_t>(it - t.begin()) - 1];
}

double DecreasingProfile::star_star(double s) const {
  if (!(s > 0.0)) throw DomainError("x** needs s > 0");
  if (value.empty()) return 0.0;
  if (s >= support()) return integral.back() / s;
  const auto it = std::upper_bound(t.begin(), t.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - t.begin()) - 1;
  return (integral[k] + value[k] * (s - t[k])) / s;
}

DecreasingProfile rearrange(const StepFunction& x, const MeasureModel& m) {
  check_shape(x, m);
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) { return std::fabs(x[a]) > std::fabs(x[b]); });
  DecreasingProfile d;
  d.t.push_back(0.0);
  d.integral.push_back(0.0);
  for (Eigen::Index i : idx) {
    const double v = std::fabs(x[i]);
    if (!d.value.empty() && d.value.back() == v) {
      d.t.back() += m.weights[i];
    } else {
      d.value.push_back(v);
      d.t.push_back(d.t.back() + m.weights[i]);
    }
  }
  for (std::size_t k = 0; k < d.value.size(); ++k) d.integral.push_back(d.integral[k] + d.value[k] * (d.t[k + 1] - d.t[k]));
  return d;
}

IdealSpace make_lp(double p, Weight w) {
  IdealSpace s = LpSpace{p, w};
  validate_space(s);
  return s;
}

IdealSpace make_linf(Weight w) { return LinfSpace{w}; }
IdealSpace make_lorentz(Profile phi) {
  IdealSpace s = LorentzSpace{std::move(phi)};
  validate_space(s);
  return s;
}
IdealSpace make_marcinkiewicz(Profile phi) {
  IdealSpace s = MarcinkiewiczSpace{std::move(phi)};
  validate_space(s);
  return s;
}
IdealSpace make_cl(IdealSpace base, YoungFunction phi) {
  return CLSpace{std::make_shared<const IdealSpace>(std::move(base)), std::make_shared<const YoungFunction>(std::move(phi))};
}

bool is_symmetric(const IdealSpace& s) {
  return std::visit(overloaded{[](const LpSpace& x) { return x.w.alpha == 0.0; },
                               [](const LinfSpace& x) { return x.w.alpha == 0.0; },
                               [](const LorentzSpace&) { return true; }, [](const MarcinkiewiczSpace&) { return true; },
                               [](const CLSpace& x) { return is_symmetric(*x.base); }},
                    s);
}

void validate_space(const IdealSpace& s) {
  const auto probe = geometric_grid(1e-6, 1e6, 241);
  auto check_weight = [](const Weight& w) {
    if (!(w.c > 0.0) || !std::isfinite(w.c) || !std::isfinite(w.alpha)) throw ValidationError("weight needs c > 0 and finite alpha");
  };
  std::visit(overloaded{[&](const LpSpace& x) {
                          if (!(x.p >= 1.0) || !std::isfinite(x.p)) throw ValidationError("Lp needs 1 <= p < inf");
                          check_weight(x.w);
                        },
                        [&](const LinfSpace& x) { check_weight(x.w); },
                        [&](const LorentzSpace& x) {
                          if (x.phi.at_zero() != 0.0) throw ValidationError("Lorentz parameter needs phi(0+) = 0");
                          if (!is_concave_on(x.phi, probe, 1e-9)) throw ValidationError("Lorentz parameter must be concave");
                        },
                        [&](const MarcinkiewiczSpace& x) {
                          if (!is_quasi_concave_on(x.phi, probe, 1e-9))
                            throw ValidationError("Marcinkiewicz parameter must be quasi-concave");
                        },
                        [&](const CLSpace& x) {
                          if (!x.base || !x.phi) throw ValidationError("CL space needs a base and a Young function");
                          validate_space(*x.base);
                        }},
             s);
}

std::string describe(const IdealSpace& s) {
  auto wstr = [](const Weight& w) {
    return w.trivial() ? std::string() : "(w=" + format_double(w.c) + "*t^" + format_double(w.alpha) + ")";
  };
  return std::visit(overloaded{[&](const LpSpace& x) { return "L^" + format_double(x.p) + wstr(x.w); },
                               [&](const LinfSpace& x) { return "L^inf" + wstr(x.w); },
                               [](const LorentzSpace& x) { return "Lambda[" + x.phi.describe() + "]"; },
                               [](const MarcinkiewiczSpace& x) { return "M[" + x.phi.describe() + "]"; },
                               [](const CLSpace& x) { return "CL(" + describe(*x.base) + ")"; }},
                    s);
}

Eigen::VectorXd weight_values(const Weight& w, const MeasureModel& m) {
  Eigen::VectorXd v(m.size());
  double left = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const double mid = left + 0.5 * m.weights[i];
    v[i] = w.alpha == 0.0 ? w.c : w.c * std::pow(mid, w.alpha);
    left += m.weights[i];
  }
  return v;
}

double norm(const IdealSpace& s, const StepFunction& x, const MeasureModel& m) {
  check_shape(x, m);
  return std::visit(
      overloaded{[&](const LpSpace& sp) {
                   const Eigen::VectorXd v = sp.w.trivial() ? x.cwiseAbs().eval()
                                                            : x.cwiseAbs().cwiseProduct(weight_values(sp.w, m)).eval();
                   return lp_sum(v, m.weights, sp.p);
                 },
                 [&](const LinfSpace& sp) {
                   if (x.size() == 0) return 0.0;
                   return sp.w.trivial() ? x.cwiseAbs().maxCoeff() : x.cwiseAbs().cwiseProduct(weight_values(sp.w, m)).maxCoeff();
                 },
                 [&](const LorentzSpace& sp) { return lorentz_norm(sp.phi, rearrange(x, m)); },
                 [&](const MarcinkiewiczSpace& sp) { return marcinkiewicz_norm(sp.phi, rearrange(x, m)); },
                 [&](const CLSpace& sp) { return luxemburg_norm(*sp.base, *sp.phi, x, m); }},
      s);
}

ExtReal cl_modular(const IdealSpace& base, const YoungFunction& phi, const StepFunction& x, const MeasureModel& m) {
  check_shape(x, m);
  StepFunction c(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const ExtReal v = phi(std::fabs(x[i]));
    if (v.is_infinite()) return ExtReal::infinity();
    c[i] = v.value();
  }
  return ExtReal(norm(base, c, m));
}

LuxemburgResult luxemburg(const IdealSpace& base, const YoungFunction& phi, const StepFunction& x, const MeasureModel& m,
                          const LuxemburgOptions& opts) {
  check_shape(x, m);
  LuxemburgResult res;
  const double xmax = x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
  if (xmax == 0.0) return res;
  if (!std::isfinite(xmax)) throw DomainError("luxemburg: step function has non-finite values");

  auto modular = [&](double lambda) {
    const ExtReal v = cl_modular(base, phi, x / lambda, m);
    ++res.iterations;
    if (opts.keep_trace) res.trace.emplace_back(lambda, v);
    return v;
  };

  double lo = 0.0, hi;
  const ExtReal b = phi.b();
  if (b.is_finite()) {
    // x / lambda_b puts the largest atom exactly at b.
    const double lb = xmax / b.value();
    StepFunction z = x.cwiseAbs() * (b.value() / xmax);
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      if (std::fabs(x[i]) == xmax) z[i] = b.value();
    }
    const ExtReal at_b = cl_modular(base, phi, z, m);
    ++res.iterations;
    if (opts.keep_trace) res.trace.emplace_back(lb, at_b);
    if (at_b <= ExtReal(1.0)) {
      res.value = lb;
      res.at_jump = true;
      return res;
    }
    lo = lb;
    hi = 2.0 * lb;
  } else {
    hi = xmax;
  }

  int k = 0;
  while (!(modular(hi) <= ExtReal(1.0))) {
    lo = hi;
    hi *= 2.0;
    if (++k > opts.max_doublings) throw NumericError("luxemburg: no feasible lambda within the doubling budget");
  }
  if (lo == 0.0) {
    lo = hi;
    k = 0;
    while (modular(lo) <= ExtReal(1.0)) {
      hi = lo;
      lo *= 0.5;
      if (++k > opts.max_doublings) throw NumericError("luxemburg: modular stays below 1 under halving");
    }
  }
  for (int it = 0; it < 400 && hi - lo > opts.rtol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (modular(mid) <= ExtReal(1.0))
      hi = mid;
    else
      lo = mid;
  }
  res.value = hi;
  return res;
}

double luxemburg_norm(const IdealSpace& base, const YoungFunction& phi, const StepFunction& x, const MeasureModel& m) {
  return luxemburg(base, phi, x, m).value;
}

StepFunction indicator(const MeasureModel& m, Eigen::Index first_atoms) {
  if (first_atoms < 0 || first_atoms > m.size()) throw DomainError("indicator: atom count out of range");
  StepFunction x = StepFunction::Zero(m.size());
  x.head(first_atoms).setOnes();
  return x;
}

Eigen::Index atoms_for_measure(const MeasureModel& m, double t) {
  if (!(t >= 0.0)) throw DomainError("measure must be non-negative");
  double acc = 0.0;
  const double tol = 1e-12 * std::max(1.0, t);
  if (std::fabs(t) <= tol) return 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    acc += m.weights[i];
    if (std::fabs(acc - t) <= tol) return i + 1;
    if (acc > t + tol) break;
  }
  if (t > m.total() + tol) throw DomainError("measure " + format_double(t) + " exceeds the total measure");
  throw DomainError("measure " + format_double(t) + " is not a union of leading atoms");
}

double fundamental_function(const IdealSpace& s, const MeasureModel& m, double t) {
  return norm(s, indicator(m, atoms_for_measure(m, t)), m);
}

double cl_fundamental_formula(const IdealSpace& base, const YoungFunction& phi, const MeasureModel& m, double t) {
  const double fe = fundamental_function(base, m, t);
  if (fe == 0.0) return 0.0;
  return 1.0 / inverse(phi, ExtReal(1.0 / fe));
}

Json to_json(const MeasureModel& m) {
  Json j;
  j["label"] = label_name(m.label);
  j["atoms"] = m.size();
  if (m.label == MeasureModel::Label::half_line) {
    j["T"] = number_json(m.horizon);
    j["t_min"] = number_json(m.weights[0]);
  }
  if (m.label == MeasureModel::Label::custom) {
    Json w = Json::array();
    for (Eigen::Index i = 0; i < m.size(); ++i) w.push_back(format_double(m.weights[i]));
    j["weights"] = w;
  }
  return j;
}

Json to_json(const StepFunction& x) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) a.push_back(format_double(x[i]));
  return a;
}

Json to_json(const IdealSpace& s) {
  auto wj = [](const Weight& w) { return Json{{"c", format_double(w.c)}, {"alpha", format_double(w.alpha)}}; };
  return std::visit(overloaded{[&](const LpSpace& x) { return Json{{"kind", "Lp"}, {"p", format_double(x.p)}, {"weight", wj(x.w)}}; },
                               [&](const LinfSpace& x) { return Json{{"kind", "Linf"}, {"weight", wj(x.w)}}; },
                               [](const LorentzSpace& x) { return Json{{"kind", "Lorentz"}, {"phi", to_json(x.phi)}}; },
                               [](const MarcinkiewiczSpace& x) { return Json{{"kind", "Marcinkiewicz"}, {"phi", to_json(x.phi)}}; },
                               [](const CLSpace& x) { return Json{{"kind", "CL"}, {"base", to_json(*x.base)}, {"phi", to_json(*x.phi)}}; }},
                    s);
}

namespace {

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      throw DescriptorError(path + "/" + it.key(), "unknown field '" + it.key() + "'");
  }
}

Weight weight_from_json(const Json& j, const std::string& path) {
  Weight w;
  if (!j.is_object()) throw DescriptorError(path, "weight must be an object");
  only_keys(j, {"c", "alpha"}, path);
  if (j.contains("c")) w.c = parse_decimal(j["c"], path + "/c");
  if (j.contains("alpha")) w.alpha = parse_decimal(j["alpha"], path + "/alpha");
  return w;
}

}  // namespace

MeasureModel measure_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    // "grid01:512", "counting:8", "half_line:65536:1024"
    const std::string s = j;
    const auto c1 = s.find(':');
    const std::string name = s.substr(0, c1);
    std::vector<double> args;
    std::size_t pos = c1;
    while (pos != std::string::npos) {
      const auto next = s.find(':', pos + 1);
      args.push_back(parse_decimal(Json(s.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1)), path));
      pos = next;
    }
    auto n_at = [&](std::size_t i, double d) { return static_cast<Eigen::Index>(i < args.size() ? args[i] : d); };
    if (name == "grid01") return MeasureModel::grid01(n_at(0, 512));
    if (name == "counting") return MeasureModel::counting(n_at(0, 8));
    if (name == "half_line") return MeasureModel::half_line(args.size() > 0 ? args[0] : 65536.0, n_at(1, 1024));
    throw DescriptorError(path, "unknown measure model '" + name + "'");
  }
  if (!j.is_object() || !j.contains("label")) throw DescriptorError(path + "/label", "measure model needs a label");
  only_keys(j, {"label", "atoms", "T", "t_min", "weights"}, path);
  const std::string label = j["label"];
  const Eigen::Index n = j.contains("atoms") ? j["atoms"].get<Eigen::Index>() : 0;
  if (label == "grid01") return MeasureModel::grid01(n ? n : 512);
  if (label == "counting") return MeasureModel::counting(n ? n : 8);
  if (label == "half_line")
    return MeasureModel::half_line(j.contains("T") ? parse_decimal(j["T"], path + "/T") : 65536.0, n ? n : 1024,
                                   j.contains("t_min") ? parse_decimal(j["t_min"], path + "/t_min") : 1.0 / 65536.0);
  if (label == "custom") {
    if (!j.contains("weights") || !j["weights"].is_array()) throw DescriptorError(path + "/weights", "custom model needs weights");
    Eigen::VectorXd w(static_cast<Eigen::Index>(j["weights"].size()));
    for (std::size_t i = 0; i < j["weights"].size(); ++i)
      w[static_cast<Eigen::Index>(i)] = parse_decimal(j["weights"][i], path + "/weights/" + std::to_string(i));
    return MeasureModel::custom(std::move(w));
  }
  throw DescriptorError(path + "/label", "unknown measure label '" + label + "'");
}

StepFunction step_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw DescriptorError(path, "step function must be an array");
  StepFunction x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double v = parse_decimal(j[i], path + "/" + std::to_string(i));
    if (!std::isfinite(v) || v < 0.0) throw DescriptorError(path + "/" + std::to_string(i), "values must be finite and non-negative");
    x[static_cast<Eigen::Index>(i)] = v;
  }
  return x;
}

IdealSpace space_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    // "L1", "L2", "Linf", "L2.5"
    const std::string s = j;
    if (s == "Linf") return make_linf();
    if (s.size() > 1 && s[0] == 'L') return make_lp(parse_decimal(Json(s.substr(1)), path));
    throw DescriptorError(path, "unknown space shorthand '" + s + "'");
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw DescriptorError(path + "/kind", "space needs a kind");
  const std::string kind = j["kind"];
  try {
    if (kind == "Lp") {
      only_keys(j, {"kind", "p", "weight"}, path);
      if (!j.contains("p")) throw DescriptorError(path + "/p", "Lp needs p");
      return make_lp(parse_decimal(j["p"], path + "/p"), j.contains("weight") ? weight_from_json(j["weight"], path + "/weight") : Weight{});
    }
    if (kind == "Linf") {
      only_keys(j, {"kind", "weight"}, path);
      return make_linf(j.contains("weight") ? weight_from_json(j["weight"], path + "/weight") : Weight{});
    }
    if (kind == "Lorentz" || kind == "Marcinkiewicz") {
      only_keys(j, {"kind", "phi"}, path);
      if (!j.contains("phi")) throw DescriptorError(path + "/phi", kind + " needs phi");
      Profile p = profile_from_json(j["phi"], path + "/phi");
      return kind == "Lorentz" ? make_lorentz(std::move(p)) : make_marcinkiewicz(std::move(p));
    }
    if (kind == "CL") {
      only_keys(j, {"kind", "base", "phi"}, path);
      if (!j.contains("base") || !j.contains("phi")) throw DescriptorError(path, "CL needs base and phi");
      YoungFunction phi = j["phi"].is_string() ? catalog::parse(j["phi"].get<std::string>()) : young_from_json(j["phi"]);
      return make_cl(space_from_json(j["base"], path + "/base"), std::move(phi));
    }
  } catch (const ValidationError& e) {
    throw DescriptorError(path, e.what());
  }
  throw DescriptorError(path + "/kind", "unknown space kind '" + kind + "'");
}

}  // namespace orlicz

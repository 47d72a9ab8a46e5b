#include "orlicz/pathology.hpp"

#include <cmath>
#include <sstream>

#include "orlicz/catalog.hpp"
#include "orlicz/conjugation.hpp"
#include "orlicz/grid.hpp"

namespace orlicz {

using boost::multiprecision::cpp_int;

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string rational_str(const Rational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Generator factorial_generator() {
  return [](int n) {
    cpp_int f = 1;
    for (int k = 2; k <= n + 2; ++k) f *= k;
    return Rational(f);
  };
}

Generator geometric_generator(Rational ratio) {
  return [ratio](int n) {
    Rational r = 1;
    for (int k = 0; k < n; ++k) r *= ratio;
    return r;
  };
}

Generator list_generator(std::vector<Rational> values) {
  return [values](int n) {
    if (n < 1 || static_cast<std::size_t>(n) > values.size()) throw DomainError("list generator exhausted at n = " + std::to_string(n));
    return values[n - 1];
  };
}

GapSequence gap_sequence(int n, const Generator& gen) {
  GapSequence s;
  s.u.push_back(0);
  for (int k = 1; k <= n; ++k) {
    s.a.push_back(gen(k));
    s.u.push_back(2 * s.a.back() - s.u.back());
  }
  return s;
}

std::vector<GapViolation> check_gap_sequence(const GapSequence& s) {
  std::vector<GapViolation> v;
  const int n = static_cast<int>(s.size());
  for (int k = 1; k <= n; ++k) {
    if (s.a[k - 1] <= 0) v.push_back({"a_n > 0", k});
    if ((s.u[k] + s.u[k - 1]) / 2 != s.a[k - 1]) v.push_back({"(u_n + u_{n-1})/2 = a_n", k});
    if (s.u[k] <= s.u[k - 1]) v.push_back({"u_n > u_{n-1}", k});
  }
  for (int k = 1; k + 1 <= n; ++k) {
    if (s.u[k + 1] <= 2 * s.u[k]) v.push_back({"u_{n+1} > 2 u_n", k});
  }
  for (int k = 2; k + 1 <= n; ++k) {
    if (s.a[k] / s.a[k - 1] <= s.a[k - 1] / s.a[k - 2]) v.push_back({"a_{n+1}/a_n strictly increasing", k});
  }
  return v;
}

GapSequence build_gap_sequence(int n, const Generator& gen) {
  if (n < 2) throw ConstructionError("gap sequence needs at least 2 terms", {});
  GapSequence s = gap_sequence(n, gen);
  auto v = check_gap_sequence(s);
  if (!v.empty()) {
    std::string msg = "gap sequence violates " + v.front().condition + " at n = " + std::to_string(v.front().index);
    throw ConstructionError(msg, std::move(v));
  }
  return s;
}

Rational psi_exact(const GapSequence& s, const Rational& u) {
  if (u < 0) throw DomainError("psi_exact: negative argument");
  const std::size_t n = s.size();
  if (u >= s.u[n]) return u * u / 2;
  std::size_t k = 1;
  while (u >= s.u[k]) ++k;
  const Rational& left = s.u[k - 1];
  return left * left / 2 + s.a[k - 1] * (u - left);
}

YoungFunction build_psi(const GapSequence& s) {
  Descriptor d;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    const Rational& left = s.u[k - 1];
    const Rational intercept = left * left / 2 - s.a[k - 1] * left;
    d.pieces.push_back({to_double(left), formula::Affine{to_double(s.a[k - 1]), to_double(intercept)}});
  }
  d.pieces.push_back({to_double(s.u[s.size()]), formula::Power{0.5, 2.0, 0.0}});
  return YoungFunction(std::move(d));
}

bool PathologyReport::ok() const {
  return violations.empty() && equality_exact && domination_exact && domination_float && delta2_identity_holds &&
         delta2_increasing && ominus_zero_below_one && ominus_divergent_above_one;
}

PathologyReport verify_pathology(int n, const Generator& gen) {
  if (n < 1) throw DomainError("verify_pathology: need at least one witness");
  PathologyReport r;
  r.n = n;
  r.seq = gap_sequence(n + 1, gen);
  r.violations = check_gap_sequence(r.seq);
  if (!r.violations.empty()) return r;
  const GapSequence& s = r.seq;
  const YoungFunction psi = build_psi(s);
  const YoungFunction phi = catalog::power(2.0, 0.5);

  for (int k = 1; k <= n + 1; ++k) {
    if (psi_exact(s, s.u[k]) != s.u[k] * s.u[k] / 2) r.equality_exact = false;
  }

  const std::size_t m = 10000;
  const Rational top = s.u[std::min<std::size_t>(3, s.size())];
  for (std::size_t i = 0; i <= m; ++i) {
    const Rational u = top * Rational(static_cast<long long>(i), static_cast<long long>(m));
    if (psi_exact(s, u) < u * u / 2) r.domination_exact = false;
  }
  r.domination_points = m + 1;

  const double hi = 2.0 * to_double(s.u[s.size()]);
  r.domination_min_gap = std::numeric_limits<double>::infinity();
  for (double u : linear_grid(0.0, hi, m)) {
    const double p = psi(u).value(), q = 0.5 * u * u;
    const double gap = (p - q) / std::max(1.0, q);
    r.domination_min_gap = std::min(r.domination_min_gap, gap);
  }
  r.domination_float = r.domination_min_gap >= -1e-12;

  for (int k = 1; k <= n; ++k) {
    const Rational& u = s.u[k];
    const Rational R = psi_exact(s, 2 * u) / psi_exact(s, u);
    r.delta2_ratio.push_back(R);
    r.delta2_identity.push_back(1 + 2 * s.a[k] / u);
    r.delta2_lower_bound.push_back(1 + s.a[k] / s.a[k - 1]);
    if (R != r.delta2_identity.back()) r.delta2_identity_holds = false;
    if (k > 1 && !(R > r.delta2_ratio[k - 2])) r.delta2_increasing = false;

    const Rational w1 = psi_exact(s, u);
    r.t_to_one.push_back(to_double(1 / w1));
    // psi^-1(w1) = u_n and phi^-1(w1) = sqrt(2 w1) = u_n.
    r.ratio_to_one.push_back(inverse(psi, ExtReal(to_double(w1))) / inverse(phi, ExtReal(to_double(w1))));

    const Rational w0 = psi_exact(s, 2 * u);
    r.t_to_zero.push_back(to_double(1 / w0));
    // (2u_n)^2 / (2 w0) = 4 / R_n.
    r.ratio_to_zero_squared.push_back(4 * u * u / (2 * w0));
    r.ratio_to_zero.push_back(inverse(psi, ExtReal(to_double(w0))) / inverse(phi, ExtReal(to_double(w0))));

    r.nonmonotone_witnesses.emplace_back(to_double(u), 1.0);
    r.nonmonotone_witnesses.emplace_back(to_double(2 * u), to_double(R / 4));
  }

  for (double u : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0, 1.01, 1.1, 1.5, 2.0, 5.0, 10.0}) {
    const ExtReal v = ominus(phi, psi, u);
    r.ominus_samples.emplace_back(u, v);
    if (u <= 1.0 && !(v == ExtReal(0.0))) r.ominus_zero_below_one = false;
    if (u > 1.0 && !v.is_infinite()) r.ominus_divergent_above_one = false;
  }

  r.identity_chain = {
      {"M(L^psi, L^phi) = L^inf on [0,1]", "assumed"},
      {"M(L^inf, L^phi) = L^phi", "catalog"},
      {"L^phi != L^psi: psi^-1/phi^-1 has a subsequence tending to 0", "verified"},
      {"M(M(L^psi, L^phi), L^phi) = L^phi != L^psi, so L^psi is not L^phi-perfect", "verified"},
  };
  return r;
}

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_str(q));
  return a;
}

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number_json(x));
  return a;
}

}  // namespace

Json to_json(const PathologyReport& r) {
  Json j;
  j["schema"] = "orlicz.pathology/1";
  j["n"] = r.n;
  j["a"] = rationals(r.seq.a);
  j["u"] = rationals(r.seq.u);
  Json viol = Json::array();
  for (const auto& v : r.violations) viol.push_back({{"condition", v.condition}, {"index", v.index}});
  j["violations"] = viol;
  j["equality_exact"] = r.equality_exact;
  j["domination"] = {{"exact", r.domination_exact},
                     {"points", r.domination_points},
                     {"float_ok", r.domination_float},
                     {"float_min_relative_gap", number_json(r.domination_min_gap)}};
  j["delta2"] = {{"ratio", rationals(r.delta2_ratio)},
                 {"identity_1_plus_2a_next_over_u", rationals(r.delta2_identity)},
                 {"lower_bound_1_plus_a_next_over_a", rationals(r.delta2_lower_bound)},
                 {"identity_holds", r.delta2_identity_holds},
                 {"increasing", r.delta2_increasing}};
  Json om = Json::array();
  for (const auto& [u, v] : r.ominus_samples) om.push_back({{"u", number_json(u)}, {"value", ext_json(v)}});
  j["ominus"] = {{"samples", om},
                 {"zero_on_0_1", r.ominus_zero_below_one},
                 {"divergent_above_1", r.ominus_divergent_above_one}};
  j["fundamental_ratio"] = {{"to_one", {{"t", doubles(r.t_to_one)}, {"ratio", doubles(r.ratio_to_one)}}},
                            {"to_zero",
                             {{"t", doubles(r.t_to_zero)},
                              {"ratio", doubles(r.ratio_to_zero)},
                              {"ratio_squared", rationals(r.ratio_to_zero_squared)}}}};
  Json nm = Json::array();
  for (const auto& [u, q] : r.nonmonotone_witnesses) nm.push_back({number_json(u), number_json(q)});
  j["psi_over_phi_witnesses"] = nm;
  Json chain = Json::array();
  for (const auto& st : r.identity_chain) chain.push_back({{"statement", st.statement}, {"status", st.status}});
  j["identity_chain"] = chain;
  j["ok"] = r.ok();
  return j;
}

std::string pathology_csv(const PathologyReport& r, std::size_t points) {
  std::ostringstream os;
  os << "u,psi,phi\n";
  if (r.seq.size() == 0 || !r.violations.empty()) return os.str();
  const Rational hi = 2 * r.seq.u[r.seq.size()];
  for (std::size_t i = 0; i <= points; ++i) {
    const Rational u = hi * Rational(static_cast<long long>(i), static_cast<long long>(points));
    os << format_double(to_double(u)) << ',' << format_double(to_double(psi_exact(r.seq, u))) << ','
       << format_double(to_double(u * u / 2)) << '\n';
  }
  return os.str();
}

ExternalRefutation psi_refutation(const PathologyReport& r) {
  ExternalRefutation e;
  e.direction = Direction::right;
  e.range = RangeKind::large;
  e.source = "exact: phi^-1/psi^-1 = sqrt(R_n)/2 at w_n = psi(2u_n), R_n unbounded";
  for (std::size_t k = 0; k < r.delta2_ratio.size(); ++k) {
    const double w = to_double(psi_exact(r.seq, 2 * r.seq.u[k + 1]));
    e.witnesses.emplace_back(w, std::sqrt(to_double(r.delta2_ratio[k])) / 2.0);
  }
  return e;
}

}  // namespace orlicz

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "orlicz/catalog.hpp"
#include "orlicz/conjugation.hpp"
#include "orlicz/descriptor_json.hpp"
#include "orlicz/equivalence.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/multipliers.hpp"
#include "orlicz/pathology.hpp"
#include "orlicz/space_models.hpp"

namespace orlicz::cli {

namespace {

std::vector<double> decimals(const std::vector<std::string>& items, const std::string& flag) {
  std::vector<double> out;
  for (std::size_t i = 0; i < items.size(); ++i) out.push_back(parse_decimal(Json(items[i]), "/" + flag + "/" + std::to_string(i)));
  return out;
}

Json load_json(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw DescriptorError("", "cannot open '" + spec.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return Json::parse(ss.str());
  }
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) return Json::parse(spec);
  return Json(spec);
}

IdealSpace space_arg(const std::string& spec) { return space_from_json(load_json(spec)); }
MeasureModel model_arg(const std::string& spec) { return measure_from_json(load_json(spec)); }
StepFunction step_arg(const std::string& spec) { return step_from_json(load_json(spec)); }

RangeKind range_arg(const std::string& s) {
  if (s == "all") return RangeKind::all;
  if (s == "large") return RangeKind::large;
  if (s == "small") return RangeKind::small;
  throw DomainError("range must be all, large or small");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json relation_json(const RelationResult& r) {
  Json w = Json::array();
  for (const auto& [u, q] : r.witnesses) w.push_back({number_json(u), number_json(q)});
  Json ext = Json::array();
  for (double x : r.extremal) ext.push_back(number_json(x));
  return {{"direction", direction_name(r.direction)},
          {"range", {{"kind", range_name(r.range.kind)}, {"threshold", number_json(r.range.threshold)}}},
          {"verdict", verdict_name(r.verdict)},
          {"constant", number_json(r.constant)},
          {"sampled_min_ratio", number_json(r.sampled_min_ratio)},
          {"sampled_max_ratio", number_json(r.sampled_max_ratio)},
          {"grid", {{"spacing", r.grid.spacing}, {"lo", number_json(r.grid.lo)}, {"hi", number_json(r.grid.hi)}, {"points", r.grid.points}}},
          {"extremal", ext},
          {"skipped", r.skipped.size()},
          {"witnesses", w},
          {"source", r.source}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Young functions, Orlicz-type spaces and pointwise multipliers on finite models", "orlicz"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string phi_s, phi1_s, phi2_s, space_s, model_s = "grid01:512", x_s, E_s, F_s, dir_s = "left", range_s = "large",
                                                   cert_s;
  std::vector<std::string> us_s;
  bool json = false, zero = false, csv = false;
  std::size_t grid = 64, points = 10001;
  double umin = 1e-3, umax = 1e3, threshold = 1.0;
  int n = 8;
  std::function<int()> action;

  auto* eval = app.add_subcommand("eval", "Evaluate phi at the given points");
  eval->add_option("--phi", phi_s, "Function spec (shorthand, inline JSON or @file)")->required();
  eval->add_option("--u", us_s, "Comma-separated points")->required()->delimiter(',');
  eval->add_flag("--json", json, "JSON output");
  eval->callback([&] {
    action = [&] {
      const YoungFunction phi = catalog::parse(phi_s);
      const auto us = decimals(us_s, "u");
      if (json) {
        Json rows = Json::array();
        for (double u : us) rows.push_back({{"u", number_json(u)}, {"value", ext_json(phi(u))}});
        emit(out, {{"schema", "orlicz.eval/1"}, {"rows", rows}});
      } else {
        out << "u,value\n";
        for (double u : us) out << format_double(u) << ',' << phi(u).str() << '\n';
      }
      return 0;
    };
  });

  auto* inv = app.add_subcommand("inverse", "Generalized inverse inf{u : phi(u) > v}");
  inv->add_option("--phi", phi_s, "Function spec")->required();
  inv->add_option("--v", us_s, "Comma-separated levels (inf allowed)")->required()->delimiter(',');
  inv->add_flag("--json", json, "JSON output");
  inv->callback([&] {
    action = [&] {
      const YoungFunction phi = catalog::parse(phi_s);
      const auto vs = decimals(us_s, "v");
      if (json) {
        Json rows = Json::array();
        for (double v : vs) rows.push_back({{"v", number_json(v)}, {"inverse", number_json(inverse(phi, ExtReal(v)))}});
        emit(out, {{"schema", "orlicz.inverse/1"}, {"rows", rows}});
      } else {
        out << "v,inverse\n";
        for (double v : vs) out << format_double(v) << ',' << format_double(inverse(phi, ExtReal(v))) << '\n';
      }
      return 0;
    };
  });

  auto* om = app.add_subcommand("ominus", "Tabulate sup_v [phi(uv) - phi1(v)]");
  om->add_option("--phi", phi_s, "phi")->required();
  om->add_option("--phi1", phi1_s, "phi1")->required();
  om->add_option("--grid", grid, "Number of u points (geometric)")->capture_default_str();
  om->add_option("--umin", umin, "Smallest u")->capture_default_str();
  om->add_option("--umax", umax, "Largest u")->capture_default_str();
  om->add_flag("--zero", zero, "Restrict v to (0, 1]");
  om->add_flag("--json", json, "JSON output");
  om->callback([&] {
    action = [&] {
      const YoungFunction phi = catalog::parse(phi_s), phi1 = catalog::parse(phi1_s);
      const auto res = tabulate(phi, phi1, geometric_grid(umin, umax, grid), zero);
      if (json) {
        Json rows = Json::array();
        for (const auto& r : res.rows)
          rows.push_back({{"u", number_json(r.u)}, {"value", ext_json(r.value)}, {"maximizer_v", number_json(r.maximizer)}});
        emit(out, {{"schema", "orlicz.ominus/1"},
                   {"zero_variant", zero},
                   {"rows", rows},
                   {"monotone", res.monotone},
                   {"convex", res.convex},
                   {"closed_form", res.closed_form ? to_json(*res.closed_form) : Json(nullptr)}});
      } else {
        if (res.closed_form) out << "# closed_form " << to_json(*res.closed_form).dump() << '\n';
        out << "u,value,maximizer_v\n";
        for (const auto& r : res.rows) out << format_double(r.u) << ',' << r.value.str() << ',' << format_double(r.maximizer) << '\n';
      }
      return 0;
    };
  });

  auto* ce = app.add_subcommand("check-equiv", "Compare phi^-1 with phi1^-1 phi2^-1 over a range");
  ce->add_option("--phi1", phi1_s, "phi1")->required();
  ce->add_option("--phi2", phi2_s, "phi2")->required();
  ce->add_option("--phi", phi_s, "phi")->required();
  ce->add_option("--direction", dir_s, "left: C phi1^-1 phi2^-1 <= phi^-1; right: phi^-1 <= D phi1^-1 phi2^-1")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  ce->add_option("--range", range_s, "all, large or small")->check(CLI::IsMember({"all", "large", "small"}))->capture_default_str();
  ce->add_option("--threshold", threshold, "u0 for large/small ranges")->capture_default_str();
  ce->add_option("--points", points, "Base grid size")->capture_default_str();
  ce->add_option("--certificate", cert_s, "External refutation: example9:N");
  ce->add_flag("--json", json, "JSON output (default)");
  ce->callback([&] {
    action = [&] {
      EquivOptions o;
      o.points = points;
      if (!cert_s.empty()) {
        if (cert_s.rfind("example9:", 0) != 0) throw DomainError("certificate must be example9:N");
        const int k = static_cast<int>(parse_decimal(Json(cert_s.substr(9)), "/certificate"));
        o.certificate = psi_refutation(verify_pathology(k));
      }
      const auto r = check_product_relation(catalog::parse(phi1_s), catalog::parse(phi2_s), catalog::parse(phi_s),
                                            dir_s == "left" ? Direction::left : Direction::right, {range_arg(range_s), threshold}, o);
      Json j = relation_json(r);
      j["schema"] = "orlicz.equiv/1";
      emit(out, j);
      return r.verdict == Verdict::refuted ? 2 : 0;
    };
  });

  auto* nm = app.add_subcommand("norm", "Norm of a step function; with --phi the Luxemburg norm over --space");
  nm->add_option("--space", space_s, "Space: L1, L2, Linf, inline JSON or @file")->required();
  nm->add_option("--phi", phi_s, "Young function for the Calderon-Lozanovskii space over --space");
  nm->add_option("--model", model_s, "Measure model: grid01:n, counting:n, half_line:T:n or JSON")->capture_default_str();
  nm->add_option("--x", x_s, "Step function values as a JSON array or @file")->required();
  nm->add_flag("--json", json, "JSON output (default)");
  nm->callback([&] {
    action = [&] {
      const IdealSpace base = space_arg(space_s);
      const MeasureModel m = model_arg(model_s);
      const StepFunction x = step_arg(x_s);
      Json j{{"schema", "orlicz.norm/1"}, {"model", to_json(m)}};
      if (!phi_s.empty()) {
        const YoungFunction phi = catalog::parse(phi_s);
        LuxemburgOptions lo;
        lo.keep_trace = true;
        const auto r = luxemburg(base, phi, x, m, lo);
        Json tr = Json::array();
        for (const auto& [lambda, v] : r.trace) tr.push_back({{"lambda", number_json(lambda)}, {"modular", ext_json(v)}});
        j["space"] = to_json(make_cl(base, phi));
        j["norm"] = number_json(r.value);
        j["at_jump"] = r.at_jump;
        j["trace"] = tr;
      } else {
        j["space"] = to_json(base);
        j["norm"] = number_json(norm(base, x, m));
      }
      emit(out, j);
      return 0;
    };
  });

  auto* mn = app.add_subcommand("mult-norm", "Multiplier norm of x from E to F");
  mn->add_option("--E", E_s, "Source space")->required();
  mn->add_option("--F", F_s, "Target space")->required();
  mn->add_option("--model", model_s, "Measure model")->capture_default_str();
  mn->add_option("--x", x_s, "Step function")->required();
  mn->add_flag("--json", json, "JSON output (default)");
  mn->callback([&] {
    action = [&] {
      const MeasureModel m = model_arg(model_s);
      emit(out, to_json(multiplier_norm(space_arg(E_s), space_arg(F_s), step_arg(x_s), m)));
      return 0;
    };
  });

  auto* pr = app.add_subcommand("predict", "Classify M(E_phi1, E_phi) from limsup phi(uv)/phi1(u)");
  pr->add_option("--phi1", phi1_s, "phi1")->required();
  pr->add_option("--phi", phi_s, "phi")->required();
  pr->add_flag("--json", json, "JSON output (default)");
  pr->callback([&] {
    action = [&] {
      emit(out, to_json(predict_multiplier_space(catalog::parse(phi1_s), catalog::parse(phi_s))));
      return 0;
    };
  });

  auto* pa = app.add_subcommand("pathology", "Gap-sequence Orlicz function report");
  pa->add_option("--n", n, "Number of witnesses")->capture_default_str()->check(CLI::Range(1, 30));
  pa->add_flag("--csv", csv, "Emit u,psi,phi rows instead of the report");
  pa->add_flag("--json", json, "JSON output (default)");
  pa->callback([&] {
    action = [&] {
      const auto r = verify_pathology(n);
      if (csv)
        out << pathology_csv(r);
      else
        emit(out, to_json(r));
      return r.ok() ? 0 : 1;
    };
  });

  auto* rp = app.add_subcommand("report", "Characteristics, axiom checks and Delta2 summary of phi");
  rp->add_option("--phi", phi_s, "Function spec")->required();
  rp->add_flag("--json", json, "JSON output (default)");
  rp->callback([&] {
    action = [&] {
      const YoungFunction phi = catalog::parse(phi_s);
      const auto& ch = phi.characteristics();
      Json checks = Json::array();
      for (const auto& c : validate(phi.descriptor()).checks) checks.push_back({{"axiom", c.axiom}, {"passed", c.passed}});
      Json d2 = Json::object();
      for (RangeKind rk : {RangeKind::all, RangeKind::large, RangeKind::small}) {
        try {
          const auto rep = delta2(phi, {rk, 1.0});
          d2[range_name(rk)] = {{"satisfied", rep.satisfied}, {"constant", ext_json(rep.constant)}};
        } catch (const DomainError&) {
          d2[range_name(rk)] = "not applicable";
        }
      }
      emit(out, {{"schema", "orlicz.report/1"},
                 {"descriptor", to_json(phi)},
                 {"a", number_json(ch.a)},
                 {"b", ext_json(ch.b)},
                 {"value_at_b", ext_json(ch.value_at_b)},
                 {"class", class_name(ch.cls)},
                 {"u0", ext_json(ch.u0)},
                 {"two_valued", ch.two_valued},
                 {"flags", phi.flags()},
                 {"axioms", checks},
                 {"delta2", d2}});
      return 0;
    };
  });

  auto error = [&](const std::string& type, const std::string& msg, const std::string& path) {
    Json e{{"type", type}, {"message", msg}};
    if (!path.empty() || type == "descriptor") e["path"] = path;
    err << Json{{"error", e}}.dump() << '\n';
    return 1;
  };

  std::vector<std::string> argv_s{"orlicz"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    return error("usage", e.what(), "");
  }
  try {
    return action();
  } catch (const DescriptorError& e) {
    return error("descriptor", e.what(), e.path());
  } catch (const Json::exception& e) {
    return error("descriptor", e.what(), "");
  } catch (const ValidationError& e) {
    return error("validation", e.what(), "");
  } catch (const DomainError& e) {
    return error("domain", e.what(), "");
  } catch (const NumericError& e) {
    return error("numeric", e.what(), "");
  }
}

}  // namespace orlicz::cli

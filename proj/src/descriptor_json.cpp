#include "orlicz/descriptor_json.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json number_array(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(format_double(x));
  return a;
}

Json params_json(const Formula& f) {
  return std::visit(Overloaded{
                        [](const formula::Power& p) { return Json{{"c", p.c}, {"p", p.p}, {"d", p.d}}; },
                        [](const formula::Affine& a) { return Json{{"slope", a.slope}, {"intercept", a.intercept}}; },
                        [](const formula::Exp& x) { return Json{{"c", x.c}, {"k", x.k}, {"q", x.q}, {"d", x.d}}; },
                        [](const formula::LogPow& l) { return Json{{"c", l.c}, {"p", l.p}, {"s", l.s}, {"d", l.d}}; },
                        [](const formula::Pole& p) { return Json{{"c", p.c}, {"p", p.p}}; },
                        [](const formula::Table& t) { return Json{{"u", number_array(t.u)}, {"v", number_array(t.v)}}; },
                    },
                    f);
}

using ParamMap = std::map<std::string, double*>;

void read_params(const Json& params, const std::string& path, const ParamMap& slots) {
  if (!params.is_object()) throw DescriptorError(path, "params must be an object");
  for (const auto& [key, value] : params.items()) {
    auto it = slots.find(key);
    if (it == slots.end()) throw DescriptorError(path + "/" + key, "unknown parameter '" + key + "'");
    *it->second = parse_decimal(value, path + "/" + key);
  }
}

std::vector<double> read_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw DescriptorError(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_decimal(j[i], path + "/" + std::to_string(i)));
  return out;
}

}  // namespace

double parse_decimal(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
      throw DescriptorError(path, "not a decimal number: '" + s + "'");
    return v;
  }
  throw DescriptorError(path, "expected a number or decimal string");
}

Json number_json(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(x)) return Json("nan");
  return Json(x);
}

Json ext_json(ExtReal x) { return number_json(x.value()); }

Json to_json(const Descriptor& d) {
  Json pieces = Json::array();
  for (const auto& pc : d.pieces) {
    pieces.push_back(Json{{"from", format_double(pc.from)}, {"kind", kind_name(kind_of(pc.f))}, {"params", params_json(pc.f)}});
  }
  Json j{{"pieces", pieces}, {"tail", d.b ? "infinite" : "none"}};
  if (d.b) j["b"] = format_double(*d.b);
  return j;
}

Json to_json(const YoungFunction& phi) { return to_json(phi.descriptor()); }

Descriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw DescriptorError("", "descriptor must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "pieces" && key != "tail" && key != "b") throw DescriptorError("/" + key, "unknown field '" + key + "'");
  }
  if (!j.contains("pieces")) throw DescriptorError("/pieces", "missing field");
  const Json& pieces = j.at("pieces");
  if (!pieces.is_array() || pieces.empty()) throw DescriptorError("/pieces", "must be a non-empty array");

  Descriptor d;
  std::string tail = "none";
  if (j.contains("tail")) {
    if (!j.at("tail").is_string()) throw DescriptorError("/tail", "must be \"infinite\" or \"none\"");
    tail = j.at("tail").get<std::string>();
    if (tail != "infinite" && tail != "none") throw DescriptorError("/tail", "must be \"infinite\" or \"none\"");
  }
  if (tail == "infinite") {
    if (!j.contains("b")) throw DescriptorError("/b", "an infinite tail needs its starting point b");
    d.b = parse_decimal(j.at("b"), "/b");
  } else if (j.contains("b")) {
    throw DescriptorError("/b", "b given but tail is \"none\"");
  }

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string base = "/pieces/" + std::to_string(i);
    const Json& p = pieces[i];
    if (!p.is_object()) throw DescriptorError(base, "piece must be an object");
    for (const auto& [key, value] : p.items()) {
      if (key != "from" && key != "kind" && key != "params") throw DescriptorError(base + "/" + key, "unknown field '" + key + "'");
    }
    if (!p.contains("from")) throw DescriptorError(base + "/from", "missing field");
    if (!p.contains("kind") || !p.at("kind").is_string()) throw DescriptorError(base + "/kind", "missing or not a string");
    Piece pc;
    pc.from = parse_decimal(p.at("from"), base + "/from");
    const std::string kind = p.at("kind").get<std::string>();
    const Json params = p.contains("params") ? p.at("params") : Json::object();
    const std::string pp = base + "/params";
    if (kind == "power") {
      formula::Power f;
      read_params(params, pp, {{"c", &f.c}, {"p", &f.p}, {"d", &f.d}});
      pc.f = f;
    } else if (kind == "affine") {
      formula::Affine f;
      read_params(params, pp, {{"slope", &f.slope}, {"intercept", &f.intercept}});
      pc.f = f;
    } else if (kind == "exp") {
      formula::Exp f;
      read_params(params, pp, {{"c", &f.c}, {"k", &f.k}, {"q", &f.q}, {"d", &f.d}});
      pc.f = f;
    } else if (kind == "logpow") {
      formula::LogPow f;
      read_params(params, pp, {{"c", &f.c}, {"p", &f.p}, {"s", &f.s}, {"d", &f.d}});
      pc.f = f;
    } else if (kind == "pole") {
      formula::Pole f;
      read_params(params, pp, {{"c", &f.c}, {"p", &f.p}});
      if (!d.b) throw DescriptorError(base + "/kind", "pole needs an infinite tail");
      f.b = *d.b;
      pc.f = f;
    } else if (kind == "table") {
      if (!params.is_object()) throw DescriptorError(pp, "params must be an object");
      formula::Table f;
      for (const auto& [key, value] : params.items()) {
        if (key == "u") f.u = read_array(value, pp + "/u");
        else if (key == "v") f.v = read_array(value, pp + "/v");
        else throw DescriptorError(pp + "/" + key, "unknown parameter '" + key + "'");
      }
      pc.f = f;
    } else {
      throw DescriptorError(base + "/kind", "unknown kind '" + kind + "'");
    }
    d.pieces.push_back(std::move(pc));
  }
  return d;
}

YoungFunction young_from_json(const Json& j) { return YoungFunction(descriptor_from_json(j)); }

}  // namespace orlicz

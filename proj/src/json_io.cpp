#include "convalg/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace convalg::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

double require_number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw ParseError(std::string("key \"") + key + "\" must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(std::string("key \"") + key + "\" must be finite");
  return d;
}

std::int64_t as_integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

Complex complex_from(const json& v, const char* what) {
  if (!v.is_object()) throw ParseError(std::string(what) + " must be an object {re, im}");
  return {require_number(v, "re"), require_number(v, "im")};
}

void dump_value(const json& v, std::string& out);

void dump_double(double d, std::string& out) {
  if (!std::isfinite(d)) throw ValidationError("cannot serialize non-finite number");
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  out += buf;
}

void dump_value(const json& v, std::string& out) {
  switch (v.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case json::value_t::number_float:
      dump_double(v.get<double>(), out);
      break;
    case json::value_t::string:
      out += json(v.get<std::string>()).dump();
      break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        dump_value(e, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    default:
      throw ValidationError("cannot serialize binary JSON value");
  }
}

}  // namespace

json parse(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  return doc;
}

std::string canonical_dump(const json& doc) {
  std::string out;
  dump_value(doc, out);
  return out;
}

json to_json(const MonoidDescriptor& m) {
  return json{{"monoid", m.kind == MonoidKind::NatPow ? "nat" : "int"}, {"dim", m.dim}};
}

MonoidDescriptor monoid_from_json(const json& j) {
  const json& name = require(j, "monoid");
  if (!name.is_string()) throw ParseError("\"monoid\" must be \"nat\" or \"int\"");
  const std::string s = name.get<std::string>();
  MonoidKind kind;
  if (s == "nat") {
    kind = MonoidKind::NatPow;
  } else if (s == "int") {
    kind = MonoidKind::IntPow;
  } else {
    throw ParseError("unknown monoid \"" + s + "\"");
  }
  const std::int64_t dim = as_integer(require(j, "dim"), "\"dim\"");
  if (dim < 1 || dim > 64) throw ValidationError("monoid dimension out of range");
  return {kind, static_cast<int>(dim)};
}

json to_json(const Element& a) {
  json arr = json::array();
  for (std::int64_t c : a.coords) arr.push_back(c);
  return arr;
}

Element element_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("element must be an integer array");
  Element a;
  a.coords.reserve(j.size());
  for (const auto& v : j) a.coords.push_back(as_integer(v, "element coordinate"));
  return a;
}

json complex_to_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json to_json(const FiniteSupportFunction& f) {
  json terms = json::array();
  for (const auto& [a, c] : f.terms()) {
    terms.push_back(json{{"elem", to_json(a)}, {"re", c.real()}, {"im", c.imag()}});
  }
  return json{{"monoid", to_json(f.monoid())}, {"terms", std::move(terms)}};
}

FiniteSupportFunction finite_support_from_json(const json& j) {
  const MonoidDescriptor m = monoid_from_json(require(j, "monoid"));
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  FiniteSupportFunction f(m);
  for (const auto& t : terms) {
    const Element a = element_from_json(require(t, "elem"));
    f.add_term(a, Complex{require_number(t, "re"), require_number(t, "im")});
  }
  return f;
}

json to_json(const SummableFunction& f) {
  json j = to_json(f.finite_part());
  j["tail_bound"] = f.tail_bound();
  return j;
}

SummableFunction summable_from_json(const json& j) {
  FiniteSupportFunction finite = finite_support_from_json(j);
  double tail = 0.0;
  if (j.contains("tail_bound")) tail = require_number(j, "tail_bound");
  return SummableFunction(std::move(finite), tail);
}

bool is_summable_doc(const json& j) { return j.is_object() && j.contains("tail_bound"); }

json to_json(const Character& chi) {
  json base = json::array();
  for (const Complex& z : chi.base()) base.push_back(complex_to_json(z));
  return json{{"char", json{{"monoid", to_json(chi.monoid())}, {"base", std::move(base)}}}};
}

Character character_from_json(const json& j) {
  const json& inner = require(j, "char");
  const MonoidDescriptor m = monoid_from_json(require(inner, "monoid"));
  const json& base = require(inner, "base");
  if (!base.is_array()) throw ParseError("\"base\" must be an array");
  std::vector<Complex> entries;
  entries.reserve(base.size());
  for (const auto& z : base) entries.push_back(complex_from(z, "base entry"));
  return Character(m, std::move(entries));
}

json to_json(const ConvexCone& cone) {
  json gens = json::array();
  for (const auto& g : cone.generators()) {
    json row = json::array();
    for (double v : g) row.push_back(v);
    gens.push_back(std::move(row));
  }
  return json{{"generators", std::move(gens)}};
}

ConvexCone cone_from_json(const json& j) {
  const json& gens = require(j, "generators");
  if (!gens.is_array() || gens.empty()) {
    throw ParseError("\"generators\" must be a nonempty array of vectors");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    if (!g.is_array()) throw ParseError("generator must be an array of numbers");
    std::vector<double> row;
    row.reserve(g.size());
    for (const auto& v : g) {
      if (!v.is_number()) throw ParseError("generator entry must be a number");
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  const int dim = static_cast<int>(rows.front().size());
  return ConvexCone(dim, std::move(rows));
}

json to_json(const GridFunction& g) {
  json j{{"dim", g.geometry().dim},
         {"extent", g.geometry().extent},
         {"spacing", g.geometry().spacing}};
  bool origin_nonzero = false;
  for (int a = 0; a < g.geometry().dim; ++a) {
    origin_nonzero = origin_nonzero || g.geometry().origin_coord(a) != 0.0;
  }
  if (origin_nonzero) {
    json origin = json::array();
    for (int a = 0; a < g.geometry().dim; ++a) origin.push_back(g.geometry().origin_coord(a));
    j["origin"] = std::move(origin);
  }
  if (g.cone()) j["cone"] = to_json(*g.cone());
  json values = json::array();
  for (const Complex& v : g.values()) {
    values.push_back(v.real());
    values.push_back(v.imag());
  }
  j["values"] = std::move(values);
  return j;
}

GridFunction grid_from_json(const json& j) {
  GridGeometry geom;
  geom.dim = static_cast<int>(as_integer(require(j, "dim"), "\"dim\""));
  geom.extent = require_number(j, "extent");
  geom.spacing = require_number(j, "spacing");
  if (j.contains("origin")) {
    const json& origin = require(j, "origin");
    if (!origin.is_array()) throw ParseError("\"origin\" must be an array");
    for (const auto& v : origin) {
      if (!v.is_number()) throw ParseError("origin entry must be a number");
      geom.origin.push_back(v.get<double>());
    }
  }
  geom.validate();

  std::optional<ConvexCone> cone;
  if (j.contains("cone")) cone = cone_from_json(require(j, "cone"));

  const json& values = require(j, "values");
  if (!values.is_array()) throw ParseError("\"values\" must be an array");
  if (values.size() != 2 * geom.total_points()) {
    throw ParseError("\"values\" must hold 2 * point-count numbers (re, im interleaved)");
  }
  std::vector<Complex> samples;
  samples.reserve(geom.total_points());
  for (std::size_t i = 0; i + 1 < values.size(); i += 2) {
    if (!values[i].is_number() || !values[i + 1].is_number()) {
      throw ParseError("grid value must be a number");
    }
    samples.emplace_back(values[i].get<double>(), values[i + 1].get<double>());
  }
  return GridFunction(std::move(geom), std::move(samples), std::move(cone));
}

}  // namespace convalg::io

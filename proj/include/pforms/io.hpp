#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pforms/chains.hpp"
#include "pforms/electrodynamics.hpp"
#include "pforms/polyform.hpp"

namespace pforms {

using Json = nlohmann::ordered_json;

/// Structured scenario/file diagnostics. `code` is machine-readable and
/// stable; `where` names the offending field.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string code, std::string where, const std::string& message)
      : std::runtime_error(code + " at " + where + ": " + message),
        code_(std::move(code)),
        where_(std::move(where)) {}

  const std::string& code() const { return code_; }
  const std::string& where() const { return where_; }

private:
  std::string code_;
  std::string where_;
};

namespace codes {
inline constexpr const char* BAD_JSON = "BAD_JSON";
inline constexpr const char* BAD_SCHEMA_VERSION = "BAD_SCHEMA_VERSION";
inline constexpr const char* UNKNOWN_KIND = "UNKNOWN_KIND";
inline constexpr const char* MISSING_FIELD = "MISSING_FIELD";
inline constexpr const char* BAD_RATIONAL = "BAD_RATIONAL";
inline constexpr const char* NONCANONICAL_INDEX = "NONCANONICAL_INDEX";
inline constexpr const char* DEGREE_MISMATCH = "DEGREE_MISMATCH";
inline constexpr const char* BAD_VALUE = "BAD_VALUE";
}  // namespace codes

namespace io {

inline Json rational_to_json(const Rational& r) { return Json(r.str()); }

inline Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(codes::BAD_RATIONAL, where, e.what());
  }
  throw ParseError(codes::BAD_RATIONAL, where, "expected \"num/den\" string or integer");
}

inline Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(rational_to_json(c));
  return out;
}

inline Point point_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(codes::BAD_VALUE, where, "expected an array of rationals");
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i)
    p.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return p;
}

inline Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exponents"] = e;
    term["coefficient"] = rational_to_json(c);
    terms.push_back(std::move(term));
  }
  return terms;
}

inline Polynomial polynomial_from_json(const Json& j, int n_vars, const std::string& where) {
  if (!j.is_array()) throw ParseError(codes::BAD_VALUE, where, "expected an array of terms");
  Polynomial p(n_vars);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& term = j[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coefficient"))
      throw ParseError(codes::MISSING_FIELD, at, "term needs exponents and coefficient");
    const Json& ej = term["exponents"];
    if (!ej.is_array() || static_cast<int>(ej.size()) != n_vars)
      throw ParseError(codes::BAD_VALUE, at + ".exponents",
                       "expected " + std::to_string(n_vars) + " exponents");
    Exponents e;
    for (const auto& x : ej) {
      if (!x.is_number_integer() || x.get<int>() < 0)
        throw ParseError(codes::BAD_VALUE, at + ".exponents", "exponents are non-negative integers");
      e.push_back(x.get<int>());
    }
    p.add_term(e, rational_from_json(term["coefficient"], at + ".coefficient"));
  }
  return p;
}

inline Json multi_index_to_json(const MultiIndex& m) { return Json(m.axes()); }

inline MultiIndex multi_index_from_json(const Json& j, int n, int degree,
                                        const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != degree)
    throw ParseError(codes::DEGREE_MISMATCH, where,
                     "expected " + std::to_string(degree) + " indices");
  std::vector<int> axes;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw ParseError(codes::BAD_VALUE, where, "indices are integers");
    axes.push_back(x.get<int>());
  }
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] < 1 || axes[i] > n)
      throw ParseError(codes::BAD_VALUE, where, "index out of range 1..n");
    if (i > 0 && axes[i] <= axes[i - 1])
      throw ParseError(codes::NONCANONICAL_INDEX, where, "indices must be strictly increasing");
  }
  return MultiIndex(std::move(axes));
}

inline Json form_to_json(const PolyForm& w) {
  Json out;
  out["n"] = w.ambient();
  out["degree"] = w.degree();
  Json terms = Json::array();
  for (const auto& [key, poly] : w.coeffs()) {
    Json t;
    t["indices"] = multi_index_to_json(key);
    t["polynomial"] = polynomial_to_json(poly);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

inline PolyForm form_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("n") || !j.contains("degree"))
    throw ParseError(codes::MISSING_FIELD, where, "form needs n and degree");
  if (!j["n"].is_number_integer() || !j["degree"].is_number_integer())
    throw ParseError(codes::BAD_VALUE, where, "n and degree are integers");
  const int n = j["n"].get<int>();
  const int degree = j["degree"].get<int>();
  if (n < 0 || degree < 0) throw ParseError(codes::BAD_VALUE, where, "n and degree are non-negative");
  PolyForm w(n, degree);
  if (j.contains("terms")) {
    const Json& terms = j["terms"];
    if (!terms.is_array()) throw ParseError(codes::BAD_VALUE, where + ".terms", "expected array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string at = where + ".terms[" + std::to_string(i) + "]";
      const Json& t = terms[i];
      if (!t.is_object() || !t.contains("indices") || !t.contains("polynomial"))
        throw ParseError(codes::MISSING_FIELD, at, "term needs indices and polynomial");
      MultiIndex key = multi_index_from_json(t["indices"], n, degree, at + ".indices");
      w.add(key, polynomial_from_json(t["polynomial"], n, at + ".polynomial"));
    }
  }
  return w;
}

inline Json vector_field_to_json(const PolyVectorField& v) {
  Json out;
  out["n"] = v.ambient();
  Json comps = Json::array();
  for (const auto& c : v.components()) comps.push_back(polynomial_to_json(c));
  out["components"] = std::move(comps);
  return out;
}

inline PolyVectorField vector_field_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("n") || !j.contains("components"))
    throw ParseError(codes::MISSING_FIELD, where, "vector field needs n and components");
  const int n = j["n"].get<int>();
  const Json& comps = j["components"];
  if (!comps.is_array() || static_cast<int>(comps.size()) != n)
    throw ParseError(codes::BAD_VALUE, where + ".components",
                     "expected " + std::to_string(n) + " components");
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < comps.size(); ++i)
    polys.push_back(polynomial_from_json(comps[i], n, where + ".components[" + std::to_string(i) + "]"));
  return PolyVectorField(std::move(polys));
}

inline Json chain_to_json(const Chain& c) {
  Json out;
  out["n"] = c.ambient();
  out["k"] = c.dimension();
  Json cells = Json::array();
  for (const auto& term : c.terms()) {
    Json t;
    t["weight"] = rational_to_json(term.weight);
    if (std::holds_alternative<Simplex>(term.cell)) {
      const auto& s = std::get<Simplex>(term.cell);
      Json verts = Json::array();
      for (const auto& v : s.vertices) verts.push_back(point_to_json(v));
      t["simplex"] = std::move(verts);
    } else {
      const auto& b = std::get<BoxCell>(term.cell);
      Json box;
      box["origin"] = point_to_json(b.origin);
      Json edges = Json::array();
      for (const auto& e : b.edges) edges.push_back(point_to_json(e));
      box["edges"] = std::move(edges);
      t["box"] = std::move(box);
    }
    cells.push_back(std::move(t));
  }
  out["cells"] = std::move(cells);
  return out;
}

inline Chain chain_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k"))
    throw ParseError(codes::MISSING_FIELD, where, "chain needs n and k");
  const int n = j["n"].get<int>();
  const int k = j["k"].get<int>();
  if (n < 0 || k < 0 || k > n) throw ParseError(codes::BAD_VALUE, where, "need 0 <= k <= n");
  Chain c(n, k);
  if (!j.contains("cells")) return c;
  const Json& cells = j["cells"];
  if (!cells.is_array()) throw ParseError(codes::BAD_VALUE, where + ".cells", "expected array");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string at = where + ".cells[" + std::to_string(i) + "]";
    const Json& t = cells[i];
    if (!t.is_object() || !t.contains("weight"))
      throw ParseError(codes::MISSING_FIELD, at, "cell needs a weight");
    Rational weight = rational_from_json(t["weight"], at + ".weight");
    if (t.contains("simplex") == t.contains("box"))
      throw ParseError(codes::BAD_VALUE, at, "cell needs exactly one of simplex or box");
    try {
      if (t.contains("simplex")) {
        const Json& verts = t["simplex"];
        if (!verts.is_array() || static_cast<int>(verts.size()) != k + 1)
          throw ParseError(codes::DEGREE_MISMATCH, at + ".simplex",
                           "expected " + std::to_string(k + 1) + " vertices");
        Simplex s;
        for (std::size_t v = 0; v < verts.size(); ++v) {
          Point p = point_from_json(verts[v], at + ".simplex[" + std::to_string(v) + "]");
          if (static_cast<int>(p.size()) != n)
            throw ParseError(codes::BAD_VALUE, at + ".simplex", "vertex dimension != n");
          s.vertices.push_back(std::move(p));
        }
        c.add(std::move(weight), std::move(s));
      } else {
        const Json& box = t["box"];
        if (!box.is_object() || !box.contains("origin") || !box.contains("edges"))
          throw ParseError(codes::MISSING_FIELD, at + ".box", "box needs origin and edges");
        BoxCell b;
        b.origin = point_from_json(box["origin"], at + ".box.origin");
        if (static_cast<int>(b.origin.size()) != n)
          throw ParseError(codes::BAD_VALUE, at + ".box.origin", "origin dimension != n");
        const Json& edges = box["edges"];
        if (!edges.is_array() || static_cast<int>(edges.size()) != k)
          throw ParseError(codes::DEGREE_MISMATCH, at + ".box.edges",
                           "expected " + std::to_string(k) + " edges");
        for (std::size_t e = 0; e < edges.size(); ++e) {
          Point p = point_from_json(edges[e], at + ".box.edges[" + std::to_string(e) + "]");
          if (static_cast<int>(p.size()) != n)
            throw ParseError(codes::BAD_VALUE, at + ".box.edges", "edge dimension != n");
          b.edges.push_back(std::move(p));
        }
        c.add(std::move(weight), std::move(b));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(codes::BAD_VALUE, at, e.what());
    }
  }
  return c;
}

inline Json spatial3_to_json(const Spatial3& a) {
  Json out = Json::array();
  for (const auto& p : a) out.push_back(polynomial_to_json(p));
  return out;
}

inline Spatial3 spatial3_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(codes::BAD_VALUE, where, "expected 3 polynomial components");
  return {polynomial_from_json(j[0], 4, where + "[0]"),
          polynomial_from_json(j[1], 4, where + "[1]"),
          polynomial_from_json(j[2], 4, where + "[2]")};
}

/// Classical field record; absent members default to zero.
inline Classical4DFields classical_fields_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(codes::BAD_VALUE, where, "expected an object");
  Classical4DFields f;
  auto vec = [&](const char* name, Spatial3& dst) {
    if (j.contains(name)) dst = spatial3_from_json(j[name], where + "." + name);
  };
  vec("E", f.E);
  vec("B", f.B);
  vec("H", f.H);
  vec("D", f.D);
  vec("J", f.J);
  vec("A", f.A);
  if (j.contains("rho")) f.rho = polynomial_from_json(j["rho"], 4, where + ".rho");
  if (j.contains("phi")) f.phi = polynomial_from_json(j["phi"], 4, where + ".phi");
  return f;
}

inline Json classical_fields_to_json(const Classical4DFields& f) {
  Json out;
  out["E"] = spatial3_to_json(f.E);
  out["B"] = spatial3_to_json(f.B);
  out["H"] = spatial3_to_json(f.H);
  out["D"] = spatial3_to_json(f.D);
  out["rho"] = polynomial_to_json(f.rho);
  out["J"] = spatial3_to_json(f.J);
  out["phi"] = polynomial_to_json(f.phi);
  out["A"] = spatial3_to_json(f.A);
  return out;
}

}  // namespace io
}  // namespace pforms

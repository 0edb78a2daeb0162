#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pforms/io.hpp"
#include "pforms/random_gen.hpp"

namespace pforms {

enum class ScenarioKind { FormOp, Stokes, Mechanics, PFormEm, ClassicalEm };

inline const char* kind_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::FormOp: return "form-op";
    case ScenarioKind::Stokes: return "stokes";
    case ScenarioKind::Mechanics: return "mechanics";
    case ScenarioKind::PFormEm: return "pform-em";
    case ScenarioKind::ClassicalEm: return "classical-em";
  }
  return "?";
}

/// One verification scenario, as loaded from a file. Optional members are the
/// kind-specific payload pieces; parse_scenario checks that each kind has what
/// it needs. Randomized suites carry their seed here so runs are reproducible.
struct ScenarioFile {
  std::string schema_version;
  std::string id;
  ScenarioKind kind = ScenarioKind::FormOp;
  std::uint64_t seed = 0;
  int cases = 0;
  int n = 3;
  int p = 1;
  int max_degree = 3;

  std::optional<PolyForm> form;
  std::optional<PolyForm> second_form;
  std::optional<Chain> chain;
  std::optional<Polynomial> scalar;        // 0-form for directional-derivative checks
  std::optional<Point> point;
  std::optional<Point> vector;

  std::optional<PolyVectorField> field_h;  // mechanics / bridge payloads
  std::optional<PolyVectorField> field_w;
  std::optional<CauchyStress3D> stress;
  std::optional<Chain> region;

  std::optional<PolyForm> alpha;           // pform-em payloads
  std::optional<PolyForm> g;

  std::optional<Classical4DFields> fields; // classical-em payload
  std::vector<std::string> expect_zero;
  std::vector<std::string> expect_nonzero;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string lhs;  // optional; set for scalar equality checks
  std::string rhs;
  std::vector<std::pair<std::string, std::string>> residuals;  // label -> polynomial
};

struct Report {
  std::string scenario_id;
  std::string kind;
  std::vector<CheckRecord> checks;

  int passed() const {
    int k = 0;
    for (const auto& c : checks) k += c.pass ? 1 : 0;
    return k;
  }
  bool all_pass() const { return passed() == static_cast<int>(checks.size()); }
};

enum class ReportFormat { Json, Text };

namespace detail {

inline ScenarioKind kind_from_string(const std::string& s, const std::string& where) {
  if (s == "form-op") return ScenarioKind::FormOp;
  if (s == "stokes") return ScenarioKind::Stokes;
  if (s == "mechanics") return ScenarioKind::Mechanics;
  if (s == "pform-em") return ScenarioKind::PFormEm;
  if (s == "classical-em") return ScenarioKind::ClassicalEm;
  throw ParseError(codes::UNKNOWN_KIND, where, "unrecognized scenario kind '" + s + "'");
}

inline const std::vector<std::string>& residual_names() {
  static const std::vector<std::string> names{"div_b",  "faraday_1", "faraday_2", "faraday_3",
                                              "gauss", "ampere_1",  "ampere_2",  "ampere_3"};
  return names;
}

inline CauchyStress3D cauchy_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(codes::BAD_VALUE, where, "expected a 3x3 matrix of polynomials");
  CauchyStress3D s;
  for (int i = 0; i < 3; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3)
      throw ParseError(codes::BAD_VALUE, where, "expected a 3x3 matrix of polynomials");
    for (int k = 0; k < 3; ++k)
      s.set(i + 1, k + 1,
            io::polynomial_from_json(row[static_cast<std::size_t>(k)], 3,
                                     where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  return s;
}

}  // namespace detail

/// Parses and validates one scenario document. Throws ParseError with a
/// stable diagnostic code on any malformed input.
inline ScenarioFile parse_scenario(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(codes::BAD_JSON, "$", "not valid JSON");
  if (!j.is_object()) throw ParseError(codes::BAD_JSON, "$", "expected a JSON object");
  ScenarioFile s;
  if (!j.contains("schema_version") || !j["schema_version"].is_string())
    throw ParseError(codes::MISSING_FIELD, "$.schema_version", "required string");
  s.schema_version = j["schema_version"].get<std::string>();
  if (s.schema_version != "1")
    throw ParseError(codes::BAD_SCHEMA_VERSION, "$.schema_version",
                     "unsupported version '" + s.schema_version + "'");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError(codes::MISSING_FIELD, "$.kind", "required string");
  s.kind = detail::kind_from_string(j["kind"].get<std::string>(), "$.kind");
  if (!j.contains("id") || !j["id"].is_string())
    throw ParseError(codes::MISSING_FIELD, "$.id", "required string");
  s.id = j["id"].get<std::string>();

  auto get_int = [&](const char* name, int dflt) {
    if (!j.contains(name)) return dflt;
    if (!j[name].is_number_integer())
      throw ParseError(codes::BAD_VALUE, std::string("$.") + name, "expected integer");
    return j[name].get<int>();
  };
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<std::int64_t>() < 0)
      throw ParseError(codes::BAD_VALUE, "$.seed", "expected non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  s.cases = get_int("cases", 0);
  s.n = get_int("n", 3);
  s.p = get_int("p", 1);
  s.max_degree = get_int("max_degree", 3);
  if (s.cases < 0 || s.max_degree < 0)
    throw ParseError(codes::BAD_VALUE, "$", "cases and max_degree are non-negative");

  if (j.contains("form")) s.form = io::form_from_json(j["form"], "$.form");
  if (j.contains("second_form"))
    s.second_form = io::form_from_json(j["second_form"], "$.second_form");
  if (j.contains("chain")) s.chain = io::chain_from_json(j["chain"], "$.chain");
  if (j.contains("region")) s.region = io::chain_from_json(j["region"], "$.region");
  if (j.contains("point")) s.point = io::point_from_json(j["point"], "$.point");
  if (j.contains("vector")) s.vector = io::point_from_json(j["vector"], "$.vector");
  if (j.contains("H")) s.field_h = io::vector_field_from_json(j["H"], "$.H");
  if (j.contains("w")) s.field_w = io::vector_field_from_json(j["w"], "$.w");
  if (j.contains("stress")) s.stress = detail::cauchy_from_json(j["stress"], "$.stress");
  if (j.contains("alpha")) s.alpha = io::form_from_json(j["alpha"], "$.alpha");
  if (j.contains("g")) s.g = io::form_from_json(j["g"], "$.g");
  if (j.contains("fields"))
    s.fields = io::classical_fields_from_json(j["fields"], "$.fields");
  if (j.contains("scalar")) {
    int vars = s.form ? s.form->ambient() : s.n;
    s.scalar = io::polynomial_from_json(j["scalar"], vars, "$.scalar");
  }

  auto read_expect = [&](const char* name, std::vector<std::string>& dst) {
    if (!j.contains(name)) return;
    if (!j[name].is_array())
      throw ParseError(codes::BAD_VALUE, std::string("$.") + name, "expected array of names");
    for (const auto& e : j[name]) {
      if (!e.is_string())
        throw ParseError(codes::BAD_VALUE, std::string("$.") + name, "expected array of names");
      const std::string name_str = e.get<std::string>();
      const auto& known = detail::residual_names();
      if (std::find(known.begin(), known.end(), name_str) == known.end())
        throw ParseError(codes::BAD_VALUE, std::string("$.") + name,
                         "unknown residual '" + name_str + "'");
      dst.push_back(name_str);
    }
  };
  read_expect("expect_zero", s.expect_zero);
  read_expect("expect_nonzero", s.expect_nonzero);

  // per-kind requirements
  switch (s.kind) {
    case ScenarioKind::FormOp:
      if (!s.form && s.cases == 0)
        throw ParseError(codes::MISSING_FIELD, "$.form", "form-op needs a form or cases > 0");
      break;
    case ScenarioKind::Stokes:
      if (!(s.form && s.chain) && s.cases == 0 && !(s.field_h && s.region))
        throw ParseError(codes::MISSING_FIELD, "$",
                         "stokes needs form+chain, H+region, or cases > 0");
      if (s.form && s.chain && s.form->degree() + 1 != s.chain->dimension())
        throw ParseError(codes::DEGREE_MISMATCH, "$.form",
                         "form degree must be chain dimension - 1");
      break;
    case ScenarioKind::Mechanics:
      if (!(s.field_h && s.field_w && s.region) && !s.stress && s.cases == 0)
        throw ParseError(codes::MISSING_FIELD, "$",
                         "mechanics needs H+w+region, a stress matrix, or cases > 0");
      break;
    case ScenarioKind::PFormEm: {
      if (s.n < 2 || s.p < 0 || s.p > s.n - 1)
        throw ParseError(codes::BAD_VALUE, "$", "pform-em needs n >= 2 and 0 <= p <= n-1");
      if (s.alpha && s.alpha->degree() != s.p)
        throw ParseError(codes::DEGREE_MISMATCH, "$.alpha", "alpha degree != p");
      if (s.g && s.g->degree() != s.n - s.p - 1)
        throw ParseError(codes::DEGREE_MISMATCH, "$.g", "g degree != n-p-1");
      if (!(s.alpha && s.g) && s.cases == 0)
        throw ParseError(codes::MISSING_FIELD, "$", "pform-em needs alpha+g or cases > 0");
      break;
    }
    case ScenarioKind::ClassicalEm:
      if (!s.fields)
        throw ParseError(codes::MISSING_FIELD, "$.fields", "classical-em needs fields");
      break;
  }
  return s;
}

namespace detail {

inline CheckRecord scalar_check(const std::string& name, const Rational& lhs,
                                const Rational& rhs) {
  CheckRecord c;
  c.name = name;
  c.lhs = lhs.str();
  c.rhs = rhs.str();
  c.pass = (lhs == rhs);
  return c;
}

inline CheckRecord form_zero_check(const std::string& name, const PolyForm& w) {
  CheckRecord c;
  c.name = name;
  c.pass = w.is_zero();
  if (!c.pass)
    for (const auto& [key, poly] : w.coeffs()) {
      std::string label = "coeff(";
      for (std::size_t i = 0; i < key.size(); ++i)
        label += (i ? "," : "") + std::to_string(key[i]);
      label += ")";
      c.residuals.emplace_back(label, poly.str());
    }
  return c;
}

inline CheckRecord bool_check(const std::string& name, bool ok) {
  CheckRecord c;
  c.name = name;
  c.pass = ok;
  return c;
}

inline void run_form_triple(Report& rep, const std::string& tag, const PolyForm& a,
                            const std::optional<PolyForm>& b) {
  rep.checks.push_back(form_zero_check("d2_zero(" + tag + "a)",
                                       exterior_derivative(exterior_derivative(a))));
  if (!b) return;
  rep.checks.push_back(form_zero_check("d2_zero(" + tag + "b)",
                                       exterior_derivative(exterior_derivative(*b))));
  // d(a^b) = da^b + (-1)^r a^db
  PolyForm lhs = exterior_derivative(wedge_form(a, *b));
  PolyForm rhs = wedge_form(exterior_derivative(a), *b);
  PolyForm mixed = wedge_form(a, exterior_derivative(*b));
  rhs += (a.degree() % 2 == 0) ? mixed : -mixed;
  rep.checks.push_back(form_zero_check("leibniz(" + tag + ")", lhs - rhs));
  // a^b = (-1)^(r p) b^a
  PolyForm ba = wedge_form(*b, a);
  PolyForm expect = ((a.degree() * b->degree()) % 2 == 0) ? ba : -ba;
  rep.checks.push_back(
      form_zero_check("graded_commutativity(" + tag + ")", wedge_form(a, *b) - expect));
}

inline void run_form_op(const ScenarioFile& s, Report& rep) {
  if (s.form) {
    run_form_triple(rep, "", *s.form, s.second_form);
    if (s.point) {
      // pointwise evaluation commutes with the wedge, and alternation fixes
      // the evaluated tensor (it is already antisymmetric)
      const PolyForm& a = *s.form;
      AltTensor at_pt = eval_at(a, *s.point);
      rep.checks.push_back(bool_check("alternate_projection",
                                      alternate(at_pt.embed()) == at_pt));
      if (s.second_form) {
        AltTensor lhs = eval_at(wedge_form(a, *s.second_form), *s.point);
        AltTensor rhs = wedge(at_pt, eval_at(*s.second_form, *s.point));
        rep.checks.push_back(bool_check("eval_commutes_with_wedge", lhs == rhs));
      }
    }
  }
  if (s.scalar && s.point && s.vector) {
    auto [via_df, via_curve] = directional_derivative_check(*s.scalar, *s.vector, *s.point);
    rep.checks.push_back(scalar_check("directional_derivative", via_df, via_curve));
  }
  if (s.cases > 0) {
    RandomSource rng(s.seed);
    for (int i = 0; i < s.cases; ++i) {
      const int n = s.n;
      const int r = static_cast<int>(rng.next_int(0, n - 1));
      const int p = static_cast<int>(rng.next_int(0, n - 1 - r));
      PolyForm a = random_form(rng, n, r, s.max_degree);
      PolyForm b = random_form(rng, n, p, s.max_degree);
      run_form_triple(rep, "case" + std::to_string(i) + ".", a, std::optional<PolyForm>(b));
    }
  }
  // key enumeration against the dimension formula, on the ambient in play
  const int n = s.form ? s.form->ambient() : s.n;
  bool dims_ok = true;
  for (int r = 0; r <= n; ++r)
    dims_ok = dims_ok &&
              (static_cast<long long>(all_multi_indices(n, r).size()) == alt_dimension(n, r));
  rep.checks.push_back(bool_check("dimension_formula(n=" + std::to_string(n) + ")", dims_ok));
}

inline void run_stokes(const ScenarioFile& s, Report& rep) {
  if (s.form && s.chain) {
    StokesResult r = stokes_check(*s.form, *s.chain);
    rep.checks.push_back(scalar_check("stokes", r.boundary_integral, r.volume_integral));
  }
  if (s.field_h && s.region) {
    // classical bridges: both routes for the divergence theorem, and the
    // curl/div correspondences as exact form identities
    const PolyVectorField& h = *s.field_h;
    rep.checks.push_back(scalar_check("divergence_theorem", flux(h, boundary(*s.region)),
                                      integrate(volume_form(divergence(h)), *s.region)));
    rep.checks.push_back(form_zero_check(
        "curl_bridge", exterior_derivative(vec_to_1form(h)) - vec_to_2form(curl(h))));
    rep.checks.push_back(form_zero_check(
        "div_bridge", exterior_derivative(vec_to_2form(h)) - volume_form(divergence(h))));
  }
  if (s.cases > 0) {
    RandomSource rng(s.seed);
    for (int i = 0; i < s.cases; ++i) {
      const int n = s.n;
      const int k = static_cast<int>(rng.next_int(1, n));
      PolyForm w = random_form(rng, n, k - 1, s.max_degree);
      Chain c = random_chain(rng, n, k);
      StokesResult r = stokes_check(w, c);
      rep.checks.push_back(scalar_check("stokes[" + std::to_string(i) + "]",
                                        r.boundary_integral, r.volume_integral));
    }
  }
}

inline void run_mechanics(const ScenarioFile& s, Report& rep) {
  if (s.field_h && s.field_w && s.region) {
    MagnetostaticsPower m = power_decomposition_magnetostatics(*s.field_h, *s.field_w, *s.region);
    rep.checks.push_back(scalar_check("power_identity", m.boundary_term,
                                      m.curl_h_term - m.h_curl_w_term));
    // J = curl H and B = curl A are divergence-free as polynomials
    rep.checks.push_back(bool_check("div_curl_h_zero", divergence(curl(*s.field_h)).is_zero()));
    rep.checks.push_back(bool_check("div_curl_w_zero", divergence(curl(*s.field_w)).is_zero()));
  }
  if (s.stress) {
    const CauchyStress3D& sig = *s.stress;
    PolyVectorField h = axial_vector(sig);
    CauchyStress3D rebuilt = CauchyStress3D::from_axial(h);
    bool ok = true;
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k <= 3; ++k) {
        // from_axial reproduces the antisymmetric part (sigma - sigma^T)/2
        Polynomial anti = (sig.at(i, k) - sig.at(k, i)) * Rational(1, 2);
        ok = ok && (rebuilt.at(i, k) == anti);
      }
    rep.checks.push_back(bool_check("axial_roundtrip", ok));
    if (s.scalar) {
      CheckRecord c;
      c.name = "spin_power_density";
      if (!sig.is_antisymmetric()) {
        c.pass = false;
        c.residuals.emplace_back("error", "stress matrix is not antisymmetric");
      } else {
        Polynomial density = sig.power_density(grad(*s.scalar));
        c.pass = density.is_zero();
        if (!c.pass) c.residuals.emplace_back("density", density.str());
      }
      rep.checks.push_back(std::move(c));
    }
  }
  if (s.cases > 0) {
    RandomSource rng(s.seed);
    for (int i = 0; i < s.cases; ++i) {
      const int n = s.n;
      const int p = s.p;
      StressField sigma = random_stress_field(rng, n, p, s.max_degree);
      PolyForm w = random_form(rng, n, p, s.max_degree);
      Chain region = Chain::unit_cube(n, n);
      PolyForm flux_form = stress_apply(sigma, w);
      Rational traction = integrate(flux_form, boundary(region));
      Rational volume = integrate(exterior_derivative(flux_form), region);
      rep.checks.push_back(
          scalar_check("stress_stokes[" + std::to_string(i) + "]", traction, volume));

      BodyForceField b(n, p);
      for (const auto& in : all_multi_indices(n, p))
        b.set(in, random_polynomial(rng, n, s.max_degree));
      Rational total = total_power(sigma, b, w, region);
      Rational expected = integrate(body_force_apply(b, w), region) + volume;
      rep.checks.push_back(
          scalar_check("total_power[" + std::to_string(i) + "]", total, expected));

      // Cauchy-restriction analog: traction power of the boundary patches of
      // a simplex region sums to the volume integral of d(sigma(w))
      Simplex cell = random_simplex(rng, n, n);
      Chain simplex_region(n, n);
      simplex_region.add(Rational(1), cell);
      Chain faces = boundary(simplex_region);
      Rational patches(0);
      for (const auto& face : faces.terms())
        patches += face.weight * traction_restrict(sigma, w, std::get<Simplex>(face.cell));
      rep.checks.push_back(scalar_check(
          "traction_patches[" + std::to_string(i) + "]", patches,
          integrate(exterior_derivative(flux_form), simplex_region)));
    }
  }
}

inline void run_pform_case(Report& rep, const std::string& tag, const PFormScenario& sc) {
  rep.checks.push_back(
      form_zero_check("df_zero" + tag, exterior_derivative(faraday_from_potential(sc.alpha))));
  rep.checks.push_back(
      form_zero_check("dJ_zero" + tag, exterior_derivative(current_from_stress(sc.g))));
  // Assumption III as data: the stress table reproduces g ^ alpha
  StressField sigma = stress_from_form(sc.g, sc.p);
  rep.checks.push_back(form_zero_check(
      "stress_is_wedge" + tag, stress_apply(sigma, sc.alpha) - wedge_form(sc.g, sc.alpha)));
  PFormPower pw = power_pform(sc);
  const bool flip = ((sc.n - sc.p - 1) % 2) != 0;
  Rational rhs = flip ? pw.j_term - pw.gf_term : pw.j_term + pw.gf_term;
  CheckRecord c = scalar_check("power_decomposition" + tag, pw.boundary_term, rhs);
  c.residuals.emplace_back("J_term", pw.j_term.str());
  c.residuals.emplace_back("gf_term", pw.gf_term.str());
  rep.checks.push_back(std::move(c));
}

inline void run_pform_em(const ScenarioFile& s, Report& rep) {
  Chain region = s.region ? *s.region : Chain::unit_cube(s.n, s.n);
  if (s.alpha && s.g) run_pform_case(rep, "", PFormScenario(s.n, s.p, *s.alpha, *s.g, region));
  if (s.cases > 0) {
    RandomSource rng(s.seed);
    for (int i = 0; i < s.cases; ++i) {
      PolyForm alpha = random_form(rng, s.n, s.p, s.max_degree);
      PolyForm g = random_form(rng, s.n, s.n - s.p - 1, s.max_degree);
      run_pform_case(rep, "[" + std::to_string(i) + "]",
                     PFormScenario(s.n, s.p, alpha, g, region));
    }
  }
  // stress dimension audit: restricted (wedge-by-g) vs general table
  const long long restricted = alt_dimension(s.n, s.n - s.p - 1);
  const long long general = alt_dimension(s.n, s.p) * alt_dimension(s.n, s.n - 1);
  bool audit = restricted == static_cast<long long>(all_multi_indices(s.n, s.n - s.p - 1).size()) &&
               general == static_cast<long long>(all_multi_indices(s.n, s.p).size() *
                                                 all_multi_indices(s.n, s.n - 1).size());
  CheckRecord c = bool_check("stress_dimension_audit", audit);
  c.lhs = std::to_string(restricted);
  c.rhs = std::to_string(general);
  rep.checks.push_back(std::move(c));
}

inline void run_classical_em(const ScenarioFile& s, Report& rep) {
  const Classical4DFields& f = *s.fields;
  PolyForm faraday = pack_faraday(f);
  PolyForm maxwell = pack_maxwell(f);
  PolyForm current = pack_current(f);

  auto [e2, b2] = unpack_faraday(faraday);
  auto [h2, d2] = unpack_maxwell(maxwell);
  auto [rho2, j2] = unpack_current(current);
  bool round = e2 == f.E && b2 == f.B && h2 == f.H && d2 == f.D && rho2 == f.rho && j2 == f.J;
  rep.checks.push_back(bool_check("packing_roundtrip", round));

  MaxwellResiduals res = maxwell_expand(faraday, maxwell, current);
  std::vector<std::pair<std::string, const Polynomial*>> named{
      {"div_b", &res.div_b},       {"faraday_1", &res.faraday[0]},
      {"faraday_2", &res.faraday[1]}, {"faraday_3", &res.faraday[2]},
      {"gauss", &res.gauss},       {"ampere_1", &res.ampere[0]},
      {"ampere_2", &res.ampere[1]},   {"ampere_3", &res.ampere[2]}};
  CheckRecord residual_report;
  residual_report.name = "maxwell_residuals";
  residual_report.pass = true;
  for (const auto& [name, poly] : named) {
    residual_report.residuals.emplace_back(name, poly->str());
    bool want_zero =
        std::find(s.expect_zero.begin(), s.expect_zero.end(), name) != s.expect_zero.end();
    bool want_nonzero =
        std::find(s.expect_nonzero.begin(), s.expect_nonzero.end(), name) != s.expect_nonzero.end();
    if (want_zero && !poly->is_zero()) residual_report.pass = false;
    if (want_nonzero && poly->is_zero()) residual_report.pass = false;
  }
  rep.checks.push_back(std::move(residual_report));

  bool has_potential = !f.phi.is_zero() || !f.A[0].is_zero() || !f.A[1].is_zero() ||
                       !f.A[2].is_zero();
  if (has_potential) {
    PotentialConsistency pc = potential_consistency(f);
    CheckRecord c;
    c.name = "potential_consistency";
    c.pass = pc.consistent();
    for (std::size_t i = 0; i < 3; ++i)
      c.residuals.emplace_back("b_minus_curl_a_" + std::to_string(i + 1),
                               pc.b_residual[i].str());
    for (std::size_t i = 0; i < 3; ++i)
      c.residuals.emplace_back("e_minus_convention_" + std::to_string(i + 1),
                               pc.e_residual[i].str());
    rep.checks.push_back(std::move(c));
  }
}

}  // namespace detail

/// Runs a parsed scenario. Deterministic: the same bytes in produce the same
/// report out. Module errors surface as failed checks, not exceptions.
inline Report run(const ScenarioFile& s) {
  Report rep;
  rep.scenario_id = s.id;
  rep.kind = kind_name(s.kind);
  try {
    switch (s.kind) {
      case ScenarioKind::FormOp: detail::run_form_op(s, rep); break;
      case ScenarioKind::Stokes: detail::run_stokes(s, rep); break;
      case ScenarioKind::Mechanics: detail::run_mechanics(s, rep); break;
      case ScenarioKind::PFormEm: detail::run_pform_em(s, rep); break;
      case ScenarioKind::ClassicalEm: detail::run_classical_em(s, rep); break;
    }
  } catch (const std::exception& e) {
    CheckRecord c;
    c.name = "scenario_error";
    c.pass = false;
    c.residuals.emplace_back("error", e.what());
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/// Serializes a report. JSON output is stable-key-ordered and byte-identical
/// across runs; all numbers are exact rational strings.
inline std::string emit(const Report& rep, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json out;
    out["schema_version"] = "1";
    out["scenario"] = rep.scenario_id;
    out["kind"] = rep.kind;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      if (!c.lhs.empty() || !c.rhs.empty()) {
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
      }
      if (!c.residuals.empty()) {
        Json res;
        for (const auto& [k, v] : c.residuals) res[k] = v;
        jc["residuals"] = std::move(res);
      }
      checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    Json summary;
    summary["passed"] = rep.passed();
    summary["total"] = static_cast<int>(rep.checks.size());
    summary["all_pass"] = rep.all_pass();
    out["summary"] = std::move(summary);
    return out.dump(2) + "\n";
  }
  std::string out = "scenario " + rep.scenario_id + " (" + rep.kind + ")\n";
  for (const auto& c : rep.checks) {
    out += c.pass ? "ok   " : "FAIL ";
    out += c.name;
    if (!c.lhs.empty() || !c.rhs.empty()) out += "  lhs=" + c.lhs + " rhs=" + c.rhs;
    out += "\n";
    for (const auto& [k, v] : c.residuals) out += "       " + k + " = " + v + "\n";
  }
  out += "summary: " + std::to_string(rep.passed()) + "/" + std::to_string(rep.checks.size()) +
         " passed\n";
  return out;
}

}  // namespace pforms

#include <catch2/catch_amalgamated.hpp>

#include "pforms/electrodynamics.hpp"
#include "pforms/random_gen.hpp"

using namespace pforms;

namespace {

Polynomial c4(long v) { return Polynomial::constant(4, Rational(v)); }
Polynomial x(int axis) { return Polynomial::variable(4, axis); }

Spatial3 zero3() { return {Polynomial(4), Polynomial(4), Polynomial(4)}; }

Spatial3 random_spatial(RandomSource& rng, int max_degree, bool time_independent = false) {
  Spatial3 out = zero3();
  for (auto& p : out) {
    Polynomial q = random_polynomial(rng, time_independent ? 3 : 4, max_degree);
    if (time_independent) {
      // lift a 3-variable polynomial onto the spatial slots x2..x4
      std::vector<Polynomial> images{x(2), x(3), x(4)};
      q = q.substitute(images);
    }
    p = q;
  }
  return out;
}

/// Push a 4-variable, time-independent polynomial down to 3 spatial variables.
Polynomial to_spatial_vars(const Polynomial& p) {
  std::vector<Polynomial> images{Polynomial(3), Polynomial::variable(3, 1),
                                 Polynomial::variable(3, 2), Polynomial::variable(3, 3)};
  return p.substitute(images);
}

PolyVectorField to_spatial_field(const Spatial3& a) {
  return PolyVectorField({to_spatial_vars(a[0]), to_spatial_vars(a[1]), to_spatial_vars(a[2])});
}

}  // namespace

TEST_CASE("field strength and current from potentials") {
  SECTION("zero potential gives zero field") {
    CHECK(faraday_from_potential(PolyForm(4, 1)).is_zero());
    CHECK(current_from_stress(PolyForm(4, 2)).is_zero());
  }
  SECTION("one-term potential: f = d(x2 dx1) = -dx1^dx2") {
    PolyForm alpha(4, 1);
    alpha.set(MultiIndex({1}), x(2));
    PolyForm f = faraday_from_potential(alpha);
    CHECK(f.get(MultiIndex({1, 2})) == -c4(1));
    CHECK(f.coeffs().size() == 1);
  }
  SECTION("one-term stress form: J = d(x1 dx3^dx4) = dx1^dx3^dx4") {
    PolyForm g(4, 2);
    g.set(MultiIndex({3, 4}), x(1));
    PolyForm j = current_from_stress(g);
    CHECK(j.get(MultiIndex({1, 3, 4})) == c4(1));
    CHECK(j.coeffs().size() == 1);
  }
  SECTION("conservation laws hold for random data, n <= 5") {
    RandomSource rng(61);
    for (int i = 0; i < 50; ++i) {
      const int n = static_cast<int>(rng.next_int(2, 5));
      const int p = static_cast<int>(rng.next_int(0, n - 2));
      PolyForm alpha = random_form(rng, n, p, 3);
      PolyForm g = random_form(rng, n, n - p - 1, 3);
      CHECK(exterior_derivative(faraday_from_potential(alpha)).is_zero());
      CHECK(exterior_derivative(current_from_stress(g)).is_zero());
    }
  }
}

TEST_CASE("wedge stress constructor") {
  SECTION("zero velocity") {
    PolyForm g(4, 2);
    g.set(MultiIndex({3, 4}), c4(1));
    CHECK(stress_apply(stress_from_form(g, 1), PolyForm(4, 1)).is_zero());
  }
  SECTION("reordering sign") {
    PolyForm g(4, 2);
    g.set(MultiIndex({3, 4}), c4(1));
    PolyForm alpha(4, 1);
    alpha.set(MultiIndex({2}), c4(1));
    PolyForm out = stress_apply(stress_from_form(g, 1), alpha);
    CHECK(out.get(MultiIndex({2, 3, 4})) == c4(1));
  }
  SECTION("degree guard") {
    PolyForm g(4, 2);
    CHECK_THROWS_AS(stress_from_form(g, 2), std::invalid_argument);
  }
  SECTION("dimension audit for (n, p) = (4, 1)") {
    CHECK(alt_dimension(4, 4 - 1 - 1) == 6);                      // wedge-by-g slots
    CHECK(alt_dimension(4, 1) * alt_dimension(4, 3) == 16);       // general stress slots
  }
}

TEST_CASE("p-form power decomposition") {
  SECTION("zero potential") {
    PFormScenario s(4, 1, PolyForm(4, 1), PolyForm(4, 2), Chain::unit_cube(4, 4));
    PFormPower pw = power_pform(s);
    CHECK(pw.boundary_term == Rational(0));
    CHECK(pw.j_term == Rational(0));
    CHECK(pw.gf_term == Rational(0));
    CHECK(pw.ok);
  }
  SECTION("worked (4, 1) example") {
    PolyForm alpha(4, 1);
    alpha.set(MultiIndex({2}), x(3));
    PolyForm g(4, 2);
    g.set(MultiIndex({3, 4}), x(1));
    PFormScenario s(4, 1, alpha, g, Chain::unit_cube(4, 4));
    PFormPower pw = power_pform(s);
    CHECK(pw.boundary_term == Rational(1, 2));
    CHECK(pw.j_term == Rational(1, 2));
    CHECK(pw.gf_term == Rational(0));
    CHECK(pw.ok);
  }
  SECTION("randomized sweep over (n, p) pairs") {
    RandomSource rng(67);
    const std::pair<int, int> cases[] = {{3, 1}, {4, 1}, {4, 2}, {5, 2}};
    for (auto [n, p] : cases)
      for (int i = 0; i < 3; ++i) {
        PolyForm alpha = random_form(rng, n, p, 2);
        PolyForm g = random_form(rng, n, n - p - 1, 2);
        PFormPower pw = power_pform(PFormScenario(n, p, alpha, g, Chain::unit_cube(n, n)));
        CHECK(pw.ok);
      }
  }
}

TEST_CASE("packing the classical fields") {
  SECTION("single E component") {
    Spatial3 e = zero3();
    e[0] = c4(1);
    PolyForm f = pack_faraday(e, zero3());
    CHECK(f.get(MultiIndex({1, 2})) == -c4(1));
    CHECK(f.coeffs().size() == 1);
  }
  SECTION("zero fields pack to zero forms") {
    CHECK(pack_faraday(zero3(), zero3()).is_zero());
    CHECK(pack_maxwell(zero3(), zero3()).is_zero());
    CHECK(pack_current(Polynomial(4), zero3()).is_zero());
  }
  SECTION("pure charge density") {
    PolyForm j = pack_current(c4(1), zero3());
    CHECK(j.get(MultiIndex({2, 3, 4})) == c4(1));
    CHECK(j.coeffs().size() == 1);
  }
  SECTION("matrix positions read back") {
    PolyForm f(4, 2);
    f.set(MultiIndex({3, 4}), c4(1));
    auto [e, b] = unpack_faraday(f);
    CHECK(e == zero3());
    CHECK(b[0] == c4(1));
    CHECK(b[1].is_zero());
    CHECK(b[2].is_zero());

    PolyForm f2(4, 2);
    f2.set(MultiIndex({1, 2}), c4(1));
    auto [e2, b2] = unpack_faraday(f2);
    CHECK(e2[0] == -c4(1));
    CHECK(b2 == zero3());
  }
  SECTION("field-record overloads agree with the component versions") {
    RandomSource rng(73);
    Classical4DFields f;
    f.E = random_spatial(rng, 2);
    f.B = random_spatial(rng, 2);
    f.H = random_spatial(rng, 2);
    f.D = random_spatial(rng, 2);
    f.J = random_spatial(rng, 2);
    f.A = random_spatial(rng, 2);
    f.rho = random_polynomial(rng, 4, 2);
    f.phi = random_polynomial(rng, 4, 2);
    CHECK(pack_faraday(f) == pack_faraday(f.E, f.B));
    CHECK(pack_maxwell(f) == pack_maxwell(f.H, f.D));
    CHECK(pack_current(f) == pack_current(f.rho, f.J));
    CHECK(potential_consistency(f).consistent());
  }
  SECTION("round trips on random fields") {
    RandomSource rng(71);
    for (int i = 0; i < 10; ++i) {
      Spatial3 e = random_spatial(rng, 2), b = random_spatial(rng, 2);
      Spatial3 h = random_spatial(rng, 2), d = random_spatial(rng, 2);
      Polynomial rho = random_polynomial(rng, 4, 2);
      Spatial3 j = random_spatial(rng, 2);
      auto [e2, b2] = unpack_faraday(pack_faraday(e, b));
      CHECK(e2 == e);
      CHECK(b2 == b);
      auto [h2, d2] = unpack_maxwell(pack_maxwell(h, d));
      CHECK(h2 == h);
      CHECK(d2 == d);
      auto [rho2, j2] = unpack_current(pack_current(rho, j));
      CHECK(rho2 == rho);
      CHECK(j2 == j);
      // and pack after unpack is the identity on 2-forms
      PolyForm f = pack_faraday(e, b);
      auto [eu, bu] = unpack_faraday(f);
      CHECK(pack_faraday(eu, bu) == f);
    }
  }
}

TEST_CASE("classical residuals from the 4-D equations") {
  SECTION("Gauss scenario: D = (x2, 0, 0), rho = 1") {
    Spatial3 d = zero3();
    d[0] = x(2);
    PolyForm f = pack_faraday(zero3(), zero3());
    PolyForm g = pack_maxwell(zero3(), d);
    PolyForm j = pack_current(c4(1), zero3());
    MaxwellResiduals res = maxwell_expand(f, g, j);
    CHECK(res.gauss.is_zero());
    CHECK(res.homogeneous_zero());
    // perturbing the charge density breaks it
    MaxwellResiduals bad = maxwell_expand(f, g, pack_current(c4(2), zero3()));
    CHECK(bad.gauss == -c4(1));
  }
  SECTION("time-dependent B needs a compensating E") {
    Spatial3 b = zero3();
    b[2] = x(1) * x(1);  // B3 = t^2
    PolyForm f = pack_faraday(zero3(), b);
    MaxwellResiduals res = maxwell_expand(f, pack_maxwell(zero3(), zero3()),
                                          pack_current(Polynomial(4), zero3()));
    CHECK(res.div_b.is_zero());
    CHECK(res.faraday[2] == c4(2) * x(1));  // dB3/dt = 2t
    CHECK(res.faraday[0].is_zero());
    CHECK(res.faraday[1].is_zero());
  }
  SECTION("all-zero fields give all-zero residuals") {
    MaxwellResiduals res =
        maxwell_expand(PolyForm(4, 2), PolyForm(4, 2), PolyForm(4, 3));
    CHECK(res.homogeneous_zero());
    CHECK(res.source_zero());
  }
  SECTION("induced Ampere convention: curl H + J + dD/dt = 0") {
    // H = (0, 0, x2) has curl (0, -1, 0); with D static the residual vanishes
    // exactly when J = (0, 1, 0).
    Spatial3 h = zero3();
    h[2] = x(2);
    Spatial3 j = zero3();
    j[1] = c4(1);
    MaxwellResiduals res = maxwell_expand(pack_faraday(zero3(), zero3()),
                                          pack_maxwell(h, zero3()),
                                          pack_current(Polynomial(4), j));
    CHECK(res.source_zero());
  }
  SECTION("potentials always satisfy the homogeneous equations") {
    RandomSource rng(79);
    for (int i = 0; i < 15; ++i) {
      PolyForm alpha = random_form(rng, 4, 1, 3);
      PolyForm f = faraday_from_potential(alpha);
      MaxwellResiduals res =
          maxwell_expand(f, PolyForm(4, 2), PolyForm(4, 3));
      CHECK(res.homogeneous_zero());
    }
  }
}

TEST_CASE("potential consistency") {
  SECTION("pure vector potential: B' = curl A") {
    Spatial3 a = zero3();
    a[1] = x(2);  // A = (0, x2, 0) in chart coordinates
    PotentialConsistency pc = potential_consistency(Polynomial(4), a);
    CHECK(pc.consistent());
    CHECK(pc.b_field[2] == c4(1));  // curl A = (0, 0, 1)
    CHECK(pc.b_field[0].is_zero());
    CHECK(pc.e_field == zero3());
  }
  SECTION("pure scalar potential: E' = grad phi") {
    PotentialConsistency pc = potential_consistency(x(2), zero3());
    CHECK(pc.consistent());
    CHECK(pc.e_field[0] == c4(1));
    CHECK(pc.b_field == zero3());
  }
  SECTION("zero potential") {
    PotentialConsistency pc = potential_consistency(Polynomial(4), zero3());
    CHECK(pc.consistent());
    CHECK(pc.e_field == zero3());
    CHECK(pc.b_field == zero3());
  }
  SECTION("random potentials stay consistent") {
    RandomSource rng(83);
    for (int i = 0; i < 15; ++i) {
      Polynomial phi = random_polynomial(rng, 4, 3);
      Spatial3 a = random_spatial(rng, 3);
      CHECK(potential_consistency(phi, a).consistent());
    }
  }
}

TEST_CASE("magnetostatics correspondence of the p-form power") {
  // Time-independent (4, 1) scenario with H-only stress data: the power
  // splits into int J.A dV - int H.B dV with J = curl H and B = curl A,
  // each term matching the classical 3-D integral.
  RandomSource rng(89);
  for (int i = 0; i < 5; ++i) {
    Spatial3 h = random_spatial(rng, 2, /*time_independent=*/true);
    Spatial3 a = random_spatial(rng, 2, /*time_independent=*/true);
    PolyForm g = pack_maxwell(h, zero3());
    PolyForm alpha = potential_one_form(Polynomial(4), a);
    PFormScenario s(4, 1, alpha, g, Chain::unit_cube(4, 4));
    PFormPower pw = power_pform(s);
    CHECK(pw.ok);

    PolyVectorField h3 = to_spatial_field(h);
    PolyVectorField a3 = to_spatial_field(a);
    Chain cube3 = Chain::unit_cube(3, 3);
    Rational j_dot_a = integrate(volume_form(dot(curl(h3), a3)), cube3);
    Rational h_dot_b = integrate(volume_form(dot(h3, curl(a3))), cube3);
    CHECK(pw.j_term == j_dot_a);
    CHECK(pw.gf_term == -h_dot_b);
    CHECK(pw.boundary_term == j_dot_a - h_dot_b);
  }
}

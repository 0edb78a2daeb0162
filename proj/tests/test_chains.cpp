#include <catch2/catch_amalgamated.hpp>

#include "pforms/chains.hpp"
#include "pforms/random_gen.hpp"

using namespace pforms;

namespace {

Point pt(std::initializer_list<long> cs) {
  Point p;
  for (long c : cs) p.push_back(Rational(c));
  return p;
}

Chain single(int n, Cell cell) {
  Chain c(n, cell_dimension(cell));
  c.add(Rational(1), std::move(cell));
  return c;
}

Rational rat_factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return f;
}

// Test-side monomial rules, kept separate from the library's integrator.
Rational oracle_monomial_simplex(const Exponents& e) {
  Rational num(1);
  int total = static_cast<int>(e.size());
  for (int a : e) {
    num *= rat_factorial(a);
    total += a;
  }
  return num / rat_factorial(total);
}

Rational oracle_monomial_cube(const Exponents& e) {
  Rational v(1);
  for (int a : e) v *= Rational(1, a + 1);
  return v;
}

// Classical flux through one affine 2-cell: parametrize, take the constant
// normal t1 x t2, and integrate h(phi(u,v)) . (t1 x t2) over the parameter
// domain. Entirely cross-product based; shares nothing with the pullback
// machinery under test.
Rational oracle_flux_cell(const PolyVectorField& h, const Point& base, const Point& t1,
                          const Point& t2, bool simplex_domain) {
  Point normal{t1[1] * t2[2] - t1[2] * t2[1], t1[2] * t2[0] - t1[0] * t2[2],
               t1[0] * t2[1] - t1[1] * t2[0]};
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial img = Polynomial::constant(2, base[i]);
    img += Polynomial::variable(2, 1) * t1[i];
    img += Polynomial::variable(2, 2) * t2[i];
    images.push_back(img);
  }
  Polynomial integrand(2);
  for (std::size_t i = 0; i < 3; ++i)
    integrand += h[i].substitute(images) * normal[i];
  Rational total(0);
  for (const auto& [e, c] : integrand.terms())
    total += c * (simplex_domain ? oracle_monomial_simplex(e) : oracle_monomial_cube(e));
  return total;
}

Rational oracle_flux(const PolyVectorField& h, const Chain& surface) {
  Rational total(0);
  for (const auto& term : surface.terms()) {
    Rational v(0);
    if (std::holds_alternative<Simplex>(term.cell)) {
      const auto& s = std::get<Simplex>(term.cell);
      Point t1(s.vertices[1]), t2(s.vertices[2]);
      for (std::size_t i = 0; i < 3; ++i) {
        t1[i] -= s.vertices[0][i];
        t2[i] -= s.vertices[0][i];
      }
      v = oracle_flux_cell(h, s.vertices[0], t1, t2, true);
    } else {
      const auto& b = std::get<BoxCell>(term.cell);
      v = oracle_flux_cell(h, b.origin, b.edges[0], b.edges[1], false);
    }
    total += term.weight * v;
  }
  return total;
}

}  // namespace

TEST_CASE("boundary of a segment is endpoint minus start") {
  Chain seg = single(1, Simplex{{pt({0}), pt({1})}});
  Chain bdry = boundary(seg);
  REQUIRE(bdry.terms().size() == 2);
  // integrate the 0-form x1 over it: f(1) - f(0) = 1
  PolyForm f = scalar_form(Polynomial::variable(1, 1));
  CHECK(integrate(f, bdry) == Rational(1));
  CHECK_THROWS_AS(boundary(bdry), std::invalid_argument);
}

TEST_CASE("boundary of the unit square traverses the perimeter consistently") {
  Chain square = Chain::unit_cube(2, 2);
  Chain bdry = boundary(square);
  CHECK(bdry.terms().size() == 4);
  // x1 dx2 integrates to the enclosed area over any consistent perimeter
  PolyForm w(2, 1);
  w.set(MultiIndex({2}), Polynomial::variable(2, 1));
  CHECK(integrate(w, bdry) == Rational(1));
  // and a gradient form integrates to zero around the loop
  PolyForm df = exterior_derivative(scalar_form(Polynomial::variable(2, 1) *
                                                Polynomial::variable(2, 2)));
  CHECK(integrate(df, bdry) == Rational(0));
}

TEST_CASE("boundary of boundary cancels") {
  SECTION("3-simplex") {
    Chain c = single(3, Simplex{{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}});
    CHECK(boundary(boundary(c)).simplified().empty());
  }
  SECTION("4-simplex") {
    Chain c(4, 4);
    Simplex s;
    s.vertices = {pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}),
                  pt({0, 0, 0, 1})};
    c.add(Rational(1), s);
    CHECK(boundary(boundary(c)).simplified().empty());
  }
  SECTION("boxes up to k = 4, skewed edges and random weights") {
    RandomSource rng(7);
    for (int k = 2; k <= 4; ++k) {
      const int n = k + 1;
      Chain c(n, k);
      c.add(rng.next_nonzero_rational(), random_box(rng, n, k));
      c.add(rng.next_nonzero_rational(), random_box(rng, n, k));
      CHECK(boundary(boundary(c)).simplified().empty());
    }
  }
}

TEST_CASE("exact integration over cells") {
  SECTION("unit square, identity integrand") {
    PolyForm area(2, 2);
    area.set(MultiIndex({1, 2}), Polynomial::constant(2, Rational(1)));
    CHECK(integrate(area, Chain::unit_cube(2, 2)) == Rational(1));
  }
  SECTION("segment, x dx") {
    Chain seg = single(1, Simplex{{pt({0}), pt({1})}});
    PolyForm w(1, 1);
    w.set(MultiIndex({1}), Polynomial::variable(1, 1));
    CHECK(integrate(w, seg) == Rational(1, 2));
  }
  SECTION("standard 2-simplex has area 1/2") {
    Chain tri = single(2, Simplex{{pt({0, 0}), pt({1, 0}), pt({0, 1})}});
    PolyForm area(2, 2);
    area.set(MultiIndex({1, 2}), Polynomial::constant(2, Rational(1)));
    CHECK(integrate(area, tri) == Rational(1, 2));
  }
  SECTION("degenerate cells integrate to zero") {
    Chain degen = single(2, Simplex{{pt({0, 0}), pt({1, 1}), pt({1, 1})}});
    PolyForm area(2, 2);
    area.set(MultiIndex({1, 2}), Polynomial::constant(2, Rational(1)));
    CHECK(integrate(area, degen) == Rational(0));

    BoxCell flat;
    flat.origin = pt({0, 0});
    flat.edges = {pt({1, 0}), pt({0, 0})};
    CHECK(integrate(area, single(2, flat)) == Rational(0));
  }
  SECTION("orientation reverses the sign") {
    RandomSource rng(19);
    PolyForm w = random_form(rng, 3, 2, 2);
    Chain c(3, 2);
    BoxCell b = random_box(rng, 3, 2);
    c.add(Rational(1), b);
    CHECK(integrate(w, -c) == -integrate(w, c));
    BoxCell swapped = b;
    std::swap(swapped.edges[0], swapped.edges[1]);
    CHECK(integrate(w, single(3, swapped)) == -integrate(w, c));
  }
  SECTION("degree mismatch rejected") {
    PolyForm w(2, 1);
    CHECK_THROWS_AS(integrate(w, Chain::unit_cube(2, 2)), std::invalid_argument);
    PolyForm other(3, 2);
    CHECK_THROWS_AS(integrate(other, Chain::unit_cube(2, 2)), std::invalid_argument);
  }
}

TEST_CASE("simplex rule cross-checked against the cube rule by subdivision") {
  SECTION("frozen value: x1 x2 over the standard 2-simplex") {
    Chain tri = single(2, Simplex{{pt({0, 0}), pt({1, 0}), pt({0, 1})}});
    PolyForm w(2, 2);
    w.set(MultiIndex({1, 2}), Polynomial::variable(2, 1) * Polynomial::variable(2, 2));
    CHECK(integrate(w, tri) == Rational(1, 24));
  }
  SECTION("unit square as two triangles") {
    Chain tris(2, 2);
    tris.add(Rational(1), Simplex{{pt({0, 0}), pt({1, 0}), pt({1, 1})}});
    tris.add(Rational(1), Simplex{{pt({0, 0}), pt({1, 1}), pt({0, 1})}});
    RandomSource rng(61);
    for (int i = 0; i < 10; ++i) {
      PolyForm w = random_form(rng, 2, 2, 4);
      CHECK(integrate(w, tris) == integrate(w, Chain::unit_cube(2, 2)));
    }
    // interior diagonal edges cancel, so Stokes sees only the perimeter
    PolyForm one_form = random_form(rng, 2, 1, 3);
    CHECK(integrate(one_form, boundary(tris)) ==
          integrate(one_form, boundary(Chain::unit_cube(2, 2))));
  }
  SECTION("unit cube as six signed permutation tetrahedra") {
    // Kuhn decomposition: for each permutation pi, the simplex
    // 0 -> e_pi(1) -> e_pi(1)+e_pi(2) -> (1,1,1), oriented by sign(pi).
    Chain tets(3, 3);
    std::vector<int> perm{0, 1, 2};
    do {
      Simplex s;
      Point v(3, Rational(0));
      s.vertices.push_back(v);
      for (int step = 0; step < 3; ++step) {
        v[static_cast<std::size_t>(perm[static_cast<std::size_t>(step)])] = Rational(1);
        s.vertices.push_back(v);
      }
      tets.add(Rational(permutation_sign(perm)), std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    RandomSource rng(67);
    for (int i = 0; i < 5; ++i) {
      PolyForm w = random_form(rng, 3, 3, 3);
      CHECK(integrate(w, tets) == integrate(w, Chain::unit_cube(3, 3)));
    }
  }
}

TEST_CASE("Stokes identity") {
  SECTION("x1 dx2 over the unit square") {
    PolyForm w(2, 1);
    w.set(MultiIndex({2}), Polynomial::variable(2, 1));
    StokesResult r = stokes_check(w, Chain::unit_cube(2, 2));
    CHECK(r.boundary_integral == Rational(1));
    CHECK(r.volume_integral == Rational(1));
    CHECK(r.equal);
  }
  SECTION("constants over a segment") {
    Chain seg = single(2, Simplex{{pt({0, 0}), pt({3, 1})}});
    StokesResult r = stokes_check(scalar_form(Polynomial::constant(2, Rational(4))), seg);
    CHECK(r.boundary_integral == Rational(0));
    CHECK(r.volume_integral == Rational(0));
    CHECK(r.equal);
  }
  SECTION("random 2-form over the unit cube") {
    RandomSource rng(31);
    PolyForm w = random_form(rng, 3, 2, 3);
    StokesResult r = stokes_check(w, Chain::unit_cube(3, 3));
    CHECK(r.equal);
  }
  SECTION("randomized forms and chains, simplices and boxes, n <= 4") {
    RandomSource rng(43);
    for (int i = 0; i < 25; ++i) {
      const int n = static_cast<int>(rng.next_int(2, 4));
      const int k = static_cast<int>(rng.next_int(1, n));
      PolyForm w = random_form(rng, n, k - 1, 3);
      Chain c = random_chain(rng, n, k);
      StokesResult r = stokes_check(w, c);
      CHECK(r.equal);
    }
  }
}

TEST_CASE("flux through surfaces") {
  Chain square = Chain::unit_cube(3, 2);  // spanned by e1, e2
  SECTION("unit normal flux") {
    PolyVectorField h(3);
    h[2] = Polynomial::constant(3, Rational(1));
    CHECK(flux(h, square) == Rational(1));
  }
  SECTION("linear density") {
    PolyVectorField h(3);
    h[2] = Polynomial::variable(3, 1);
    CHECK(flux(h, square) == Rational(1, 2));
  }
  SECTION("edge order flips the sign") {
    PolyVectorField h(3);
    h[2] = Polynomial::constant(3, Rational(1));
    BoxCell reversed;
    reversed.origin = pt({0, 0, 0});
    reversed.edges = {pt({0, 1, 0}), pt({1, 0, 0})};
    CHECK(flux(h, single(3, reversed)) == Rational(-1));
  }
  SECTION("agrees with the parametric double-integral oracle") {
    RandomSource rng(53);
    for (int i = 0; i < 10; ++i) {
      PolyVectorField h = random_vector_field(rng, 3, 3);
      Chain surface = random_chain(rng, 3, 2, 3);
      CHECK(flux(h, surface) == oracle_flux(h, surface));
    }
  }
  SECTION("only in R^3") {
    CHECK_THROWS_AS(flux(PolyVectorField(4), Chain::unit_cube(4, 2)), std::invalid_argument);
  }
}

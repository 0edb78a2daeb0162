#pragma once

#include <array>
#include <stdexcept>
#include <utility>

#include "pforms/chains.hpp"
#include "pforms/mechanics.hpp"
#include "pforms/polyform.hpp"

namespace pforms {

// Chart convention used throughout this module: x1 = t, x2..x4 = space,
// epsilon_1234 = +1. The Faraday and Maxwell matrices are taken verbatim:
//   f_12 = -E1, f_13 = -E2, f_14 = -E3, f_34 = B1, f_24 = -B2, f_23 = B3,
// and g likewise with H in the time row and D in the spatial block.
// Whatever classical sign conventions these choices induce are derived by
// symbolic expansion (see maxwell_expand, potential_consistency) and recorded
// in the README, not assumed.

/// Field strength from the potential: f = d(alpha). d(f) = 0 follows.
inline PolyForm faraday_from_potential(const PolyForm& alpha) {
  return exterior_derivative(alpha);
}

/// Current from the stress form: J = d(g). d(J) = 0 follows.
inline PolyForm current_from_stress(const PolyForm& g) {
  return exterior_derivative(g);
}

/// The wedge-by-g stress: the table whose action on any degree-p form alpha
/// is g ^ alpha. g must have degree n-p-1 so the output is an (n-1)-form.
inline StressField stress_from_form(const PolyForm& g, int p) {
  const int n = g.ambient();
  if (g.degree() != n - p - 1)
    throw std::invalid_argument("stress_from_form: g must have degree n-p-1");
  StressField sigma(n, p);
  for (const auto& [gl, poly] : g.coeffs()) {
    for (const auto& in : all_multi_indices(n, p)) {
      auto [out, sign] = merge_indices(gl, in);
      if (sign == 0) continue;
      sigma.add(in, out, sign == 1 ? poly : -poly);
    }
  }
  return sigma;
}

/// One p-form electrodynamics scenario: potential alpha (degree p), stress
/// form g (degree n-p-1), and an integration region of top cells.
struct PFormScenario {
  int n;
  int p;
  PolyForm alpha;
  PolyForm g;
  Chain region;

  PFormScenario(int n_, int p_, PolyForm alpha_, PolyForm g_, Chain region_)
      : n(n_), p(p_), alpha(std::move(alpha_)), g(std::move(g_)), region(std::move(region_)) {
    if (alpha.ambient() != n || g.ambient() != n || region.ambient() != n)
      throw std::invalid_argument("PFormScenario: ambient dimension mismatch");
    if (alpha.degree() != p) throw std::invalid_argument("PFormScenario: alpha degree != p");
    if (g.degree() != n - p - 1)
      throw std::invalid_argument("PFormScenario: g degree != n-p-1");
    if (region.dimension() != n)
      throw std::invalid_argument("PFormScenario: region must consist of n-cells");
  }
};

struct PFormPower {
  Rational boundary_term;  // int_bdry g ^ alpha
  Rational j_term;         // int dg ^ alpha
  Rational gf_term;        // int g ^ d(alpha)
  bool ok;                 // boundary = j + (-1)^(n-p-1) gf
};

/// The power decomposition P = int J^alpha + (-1)^(n-p-1) int g^f, checked
/// against the boundary integral of g^alpha. All three terms are exact.
inline PFormPower power_pform(const PFormScenario& s) {
  PFormPower out{Rational(0), Rational(0), Rational(0), false};
  out.boundary_term = integrate(wedge_form(s.g, s.alpha), boundary(s.region));
  out.j_term = integrate(wedge_form(exterior_derivative(s.g), s.alpha), s.region);
  out.gf_term = integrate(wedge_form(s.g, exterior_derivative(s.alpha)), s.region);
  const bool flip = ((s.n - s.p - 1) % 2) != 0;
  Rational rhs = flip ? out.j_term - out.gf_term : out.j_term + out.gf_term;
  out.ok = (out.boundary_term == rhs);
  return out;
}

/// Classical electromagnetic data on the 4-D chart: three-component fields
/// whose entries are polynomials in (x1=t, x2, x3, x4).
struct Classical4DFields {
  std::array<Polynomial, 3> E{Polynomial(4), Polynomial(4), Polynomial(4)};
  std::array<Polynomial, 3> B{Polynomial(4), Polynomial(4), Polynomial(4)};
  std::array<Polynomial, 3> H{Polynomial(4), Polynomial(4), Polynomial(4)};
  std::array<Polynomial, 3> D{Polynomial(4), Polynomial(4), Polynomial(4)};
  std::array<Polynomial, 3> J{Polynomial(4), Polynomial(4), Polynomial(4)};
  std::array<Polynomial, 3> A{Polynomial(4), Polynomial(4), Polynomial(4)};
  Polynomial rho{4};
  Polynomial phi{4};
};

using Spatial3 = std::array<Polynomial, 3>;

namespace detail {

inline void require_vars4(const Polynomial& p, const char* who) {
  if (p.n_vars() != 4) throw std::invalid_argument(std::string(who) + ": needs 4-variable polynomials");
}

/// Packs a (time_row, space_block) pair into an antisymmetric 2-form:
/// w_1i = -time[i-1], spatial block from the flux pattern of `space`.
inline PolyForm pack_two_form(const Spatial3& time_row, const Spatial3& space_block) {
  for (const auto& p : time_row) require_vars4(p, "pack_two_form");
  for (const auto& p : space_block) require_vars4(p, "pack_two_form");
  PolyForm out(4, 2);
  out.set(MultiIndex({1, 2}), -time_row[0]);
  out.set(MultiIndex({1, 3}), -time_row[1]);
  out.set(MultiIndex({1, 4}), -time_row[2]);
  out.set(MultiIndex({3, 4}), space_block[0]);
  out.set(MultiIndex({2, 4}), -space_block[1]);
  out.set(MultiIndex({2, 3}), space_block[2]);
  return out;
}

inline std::pair<Spatial3, Spatial3> unpack_two_form(const PolyForm& f, const char* who) {
  if (f.ambient() != 4 || f.degree() != 2)
    throw std::invalid_argument(std::string(who) + ": needs a 2-form on the 4-D chart");
  Spatial3 time_row{-f.get(MultiIndex({1, 2})), -f.get(MultiIndex({1, 3})),
                    -f.get(MultiIndex({1, 4}))};
  Spatial3 space_block{f.get(MultiIndex({3, 4})), -f.get(MultiIndex({2, 4})),
                       f.get(MultiIndex({2, 3}))};
  return {std::move(time_row), std::move(space_block)};
}

}  // namespace detail

/// Faraday 2-form from (E, B) per the fixed matrix.
inline PolyForm pack_faraday(const Spatial3& e, const Spatial3& b) {
  return detail::pack_two_form(e, b);
}

/// Maxwell 2-form from (H, D) per the fixed matrix.
inline PolyForm pack_maxwell(const Spatial3& h, const Spatial3& d) {
  return detail::pack_two_form(h, d);
}

/// Current 3-form from (rho, J) via the contraction with epsilon_1234 = +1:
/// coefficients (2,3,4) = rho, (1,3,4) = -J1, (1,2,4) = +J2, (1,2,3) = -J3.
inline PolyForm pack_current(const Polynomial& rho, const Spatial3& j) {
  detail::require_vars4(rho, "pack_current");
  for (const auto& p : j) detail::require_vars4(p, "pack_current");
  PolyForm out(4, 3);
  out.set(MultiIndex({2, 3, 4}), rho);
  out.set(MultiIndex({1, 3, 4}), -j[0]);
  out.set(MultiIndex({1, 2, 4}), j[1]);
  out.set(MultiIndex({1, 2, 3}), -j[2]);
  return out;
}

inline std::pair<Spatial3, Spatial3> unpack_faraday(const PolyForm& f) {
  return detail::unpack_two_form(f, "unpack_faraday");
}

inline std::pair<Spatial3, Spatial3> unpack_maxwell(const PolyForm& g) {
  return detail::unpack_two_form(g, "unpack_maxwell");
}

inline std::pair<Polynomial, Spatial3> unpack_current(const PolyForm& jf) {
  if (jf.ambient() != 4 || jf.degree() != 3)
    throw std::invalid_argument("unpack_current: needs a 3-form on the 4-D chart");
  Polynomial rho = jf.get(MultiIndex({2, 3, 4}));
  Spatial3 j{-jf.get(MultiIndex({1, 3, 4})), jf.get(MultiIndex({1, 2, 4})),
             -jf.get(MultiIndex({1, 2, 3}))};
  return {std::move(rho), std::move(j)};
}

// Spatial operators on the 4-D chart (axes 2..4; axis 1 is time).

inline Spatial3 spatial_grad(const Polynomial& f) {
  detail::require_vars4(f, "spatial_grad");
  return {f.derivative(2), f.derivative(3), f.derivative(4)};
}

inline Spatial3 spatial_curl(const Spatial3& a) {
  return {a[2].derivative(3) - a[1].derivative(4),
          a[0].derivative(4) - a[2].derivative(2),
          a[1].derivative(2) - a[0].derivative(3)};
}

inline Polynomial spatial_div(const Spatial3& a) {
  return a[0].derivative(2) + a[1].derivative(3) + a[2].derivative(4);
}

inline Spatial3 time_derivative(const Spatial3& a) {
  return {a[0].derivative(1), a[1].derivative(1), a[2].derivative(1)};
}

/// The component residuals of d(f) = 0 and d(g) = J, mapped to classical
/// names through the fixed conventions. Expansion gives
///   div_b      = div B,
///   faraday_i  = (curl E + dB/dt)_i,
///   gauss      = div D - rho,
///   ampere_i   = (curl H + J + dD/dt)_i,
/// so each residual is the zero polynomial exactly when the corresponding
/// induced equation holds. Note the induced Ampere law carries + signs on the
/// source side; that is what the fixed matrices produce.
struct MaxwellResiduals {
  Polynomial div_b{4};
  Spatial3 faraday{Polynomial(4), Polynomial(4), Polynomial(4)};
  Polynomial gauss{4};
  Spatial3 ampere{Polynomial(4), Polynomial(4), Polynomial(4)};

  bool homogeneous_zero() const {
    return div_b.is_zero() && faraday[0].is_zero() && faraday[1].is_zero() &&
           faraday[2].is_zero();
  }
  bool source_zero() const {
    return gauss.is_zero() && ampere[0].is_zero() && ampere[1].is_zero() && ampere[2].is_zero();
  }
};

inline MaxwellResiduals maxwell_expand(const PolyForm& f, const PolyForm& g,
                                       const PolyForm& current) {
  if (f.ambient() != 4 || f.degree() != 2 || g.ambient() != 4 || g.degree() != 2 ||
      current.ambient() != 4 || current.degree() != 3)
    throw std::invalid_argument("maxwell_expand: needs 4-D forms of degrees 2, 2, 3");
  PolyForm df = exterior_derivative(f);
  PolyForm residual = exterior_derivative(g) - current;
  MaxwellResiduals out;
  out.div_b = df.get(MultiIndex({2, 3, 4}));
  out.faraday = {df.get(MultiIndex({1, 3, 4})), -df.get(MultiIndex({1, 2, 4})),
                 df.get(MultiIndex({1, 2, 3}))};
  out.gauss = residual.get(MultiIndex({2, 3, 4}));
  out.ampere = {residual.get(MultiIndex({1, 3, 4})), -residual.get(MultiIndex({1, 2, 4})),
                residual.get(MultiIndex({1, 2, 3}))};
  return out;
}

/// Potential consistency report. alpha = phi dx1 + A_1 dx2 + A_2 dx3 + A_3 dx4;
/// f = d(alpha) is unpacked to (E', B'). B' = curl A holds identically; the
/// derived electric relation under the fixed matrices is E' = grad phi - dA/dt,
/// so e_residual below is identically zero as well.
struct PotentialConsistency {
  Spatial3 b_residual{Polynomial(4), Polynomial(4), Polynomial(4)};  // B' - curl A
  Spatial3 e_residual{Polynomial(4), Polynomial(4), Polynomial(4)};  // E' - (grad phi - dA/dt)
  Spatial3 e_field{Polynomial(4), Polynomial(4), Polynomial(4)};     // E' as unpacked
  Spatial3 b_field{Polynomial(4), Polynomial(4), Polynomial(4)};     // B' as unpacked

  bool consistent() const {
    for (const auto& p : b_residual)
      if (!p.is_zero()) return false;
    for (const auto& p : e_residual)
      if (!p.is_zero()) return false;
    return true;
  }
};

inline PolyForm potential_one_form(const Polynomial& phi, const Spatial3& a) {
  detail::require_vars4(phi, "potential_one_form");
  for (const auto& p : a) detail::require_vars4(p, "potential_one_form");
  PolyForm alpha(4, 1);
  alpha.set(MultiIndex({1}), phi);
  alpha.set(MultiIndex({2}), a[0]);
  alpha.set(MultiIndex({3}), a[1]);
  alpha.set(MultiIndex({4}), a[2]);
  return alpha;
}

inline PotentialConsistency potential_consistency(const Polynomial& phi, const Spatial3& a) {
  PolyForm f = exterior_derivative(potential_one_form(phi, a));
  auto [e_prime, b_prime] = unpack_faraday(f);
  PotentialConsistency out;
  out.e_field = e_prime;
  out.b_field = b_prime;
  Spatial3 curl_a = spatial_curl(a);
  Spatial3 grad_phi = spatial_grad(phi);
  Spatial3 a_dot = time_derivative(a);
  for (std::size_t i = 0; i < 3; ++i) {
    out.b_residual[i] = b_prime[i] - curl_a[i];
    out.e_residual[i] = e_prime[i] - (grad_phi[i] - a_dot[i]);
  }
  return out;
}

// Field-record views of the same operations.

inline PolyForm pack_faraday(const Classical4DFields& f) { return pack_faraday(f.E, f.B); }
inline PolyForm pack_maxwell(const Classical4DFields& f) { return pack_maxwell(f.H, f.D); }
inline PolyForm pack_current(const Classical4DFields& f) { return pack_current(f.rho, f.J); }

inline PotentialConsistency potential_consistency(const Classical4DFields& f) {
  return potential_consistency(f.phi, f.A);
}

}  // namespace pforms

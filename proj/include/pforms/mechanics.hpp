#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "pforms/chains.hpp"
#include "pforms/polyform.hpp"

namespace pforms {

/// Stress field on the chart: a field of linear maps taking degree-p form
/// values (generalized velocities) to degree-(n-1) form values (power flux).
/// Stored as a dense bi-indexed table of polynomial entries; the wedge-by-g
/// stress of electrodynamics is a constructor producing such a table.
class StressField {
public:
  StressField(int n, int p) : n_(n), p_(p) {
    if (n < 1 || p < 0) throw std::invalid_argument("StressField: bad dimensions");
  }

  int ambient() const { return n_; }
  int input_degree() const { return p_; }
  int output_degree() const { return n_ - 1; }

  using Key = std::pair<MultiIndex, MultiIndex>;  // (input, output)
  const std::map<Key, Polynomial>& table() const { return table_; }

  void set(const MultiIndex& in, const MultiIndex& out, const Polynomial& entry) {
    if (static_cast<int>(in.size()) != p_ || in.max_axis() > n_)
      throw std::invalid_argument("StressField: bad input index");
    if (static_cast<int>(out.size()) != n_ - 1 || out.max_axis() > n_)
      throw std::invalid_argument("StressField: bad output index");
    if (entry.n_vars() != n_)
      throw std::invalid_argument("StressField: entry variable count mismatch");
    if (entry.is_zero())
      table_.erase({in, out});
    else
      table_.insert_or_assign({in, out}, entry);
  }

  void add(const MultiIndex& in, const MultiIndex& out, const Polynomial& entry) {
    auto it = table_.find({in, out});
    if (it == table_.end()) {
      set(in, out, entry);
    } else {
      it->second += entry;
      if (it->second.is_zero()) table_.erase(it);
    }
  }

private:
  int n_;
  int p_;
  std::map<Key, Polynomial> table_;
};

/// Pointwise action of the stress on a generalized velocity form: the power
/// flux (n-1)-form sigma(w).
inline PolyForm stress_apply(const StressField& sigma, const PolyForm& w) {
  if (w.ambient() != sigma.ambient() || w.degree() != sigma.input_degree())
    throw std::invalid_argument("stress_apply: degree or dimension mismatch");
  PolyForm out(sigma.ambient(), sigma.output_degree());
  for (const auto& [key, entry] : sigma.table()) {
    const auto& [in, out_idx] = key;
    Polynomial w_in = w.get(in);
    if (w_in.is_zero()) continue;
    out.add(out_idx, entry * w_in);
  }
  return out;
}

/// Body force field: linear map from degree-p form values to top-degree
/// densities. The output has the single independent component (1..n).
class BodyForceField {
public:
  BodyForceField(int n, int p) : n_(n), p_(p) {
    if (n < 1 || p < 0) throw std::invalid_argument("BodyForceField: bad dimensions");
  }

  int ambient() const { return n_; }
  int input_degree() const { return p_; }

  const std::map<MultiIndex, Polynomial>& table() const { return table_; }

  void set(const MultiIndex& in, const Polynomial& density) {
    if (static_cast<int>(in.size()) != p_ || in.max_axis() > n_)
      throw std::invalid_argument("BodyForceField: bad input index");
    if (density.n_vars() != n_)
      throw std::invalid_argument("BodyForceField: density variable count mismatch");
    if (density.is_zero())
      table_.erase(in);
    else
      table_.insert_or_assign(in, density);
  }

private:
  int n_;
  int p_;
  std::map<MultiIndex, Polynomial> table_;  // input index -> density of b(w)
};

inline PolyForm body_force_apply(const BodyForceField& b, const PolyForm& w) {
  if (w.ambient() != b.ambient() || w.degree() != b.input_degree())
    throw std::invalid_argument("body_force_apply: degree or dimension mismatch");
  Polynomial density(b.ambient());
  for (const auto& [in, entry] : b.table()) {
    Polynomial w_in = w.get(in);
    if (!w_in.is_zero()) density += entry * w_in;
  }
  return volume_form(density);
}

/// Surface-force power through one boundary patch: the Cauchy-formula analog
/// is restriction, so this is just the integral of sigma(w) over the cell.
inline Rational traction_restrict(const StressField& sigma, const PolyForm& w,
                                  const Simplex& cell) {
  if (cell.dimension() != sigma.ambient() - 1)
    throw std::invalid_argument("traction_restrict: cell must have dimension n-1");
  Chain patch(sigma.ambient(), sigma.ambient() - 1);
  patch.add(Rational(1), cell);
  return integrate(stress_apply(sigma, w), patch);
}

/// Total power: body term over the region plus traction term over its
/// boundary. The traction term equals the integral of d(sigma(w)) over the
/// region (Stokes), which property tests pin down.
inline Rational total_power(const StressField& sigma, const BodyForceField& b,
                            const PolyForm& w, const Chain& region) {
  if (region.dimension() != sigma.ambient())
    throw std::invalid_argument("total_power: region must consist of top cells");
  Rational body = integrate(body_force_apply(b, w), region);
  Rational traction = integrate(stress_apply(sigma, w), boundary(region));
  return body + traction;
}

/// Cauchy stress on R^3 as a plain 3x3 matrix of polynomials. Symmetry is not
/// assumed; the antisymmetric case is the one of interest here.
class CauchyStress3D {
public:
  CauchyStress3D() : comps_{zero_row(), zero_row(), zero_row()} {}

  const Polynomial& at(int i, int j) const { return comps_[check(i)][check(j)]; }
  void set(int i, int j, const Polynomial& p) {
    if (p.n_vars() != 3) throw std::invalid_argument("CauchyStress3D: needs 3-variable entries");
    comps_[check(i)][check(j)] = p;
  }

  bool is_antisymmetric() const {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (!(at(i, j) + at(j, i)).is_zero()) return false;
    return true;
  }

  /// sigma_jk = epsilon_jkp H_p.
  static CauchyStress3D from_axial(const PolyVectorField& h) {
    require_dim3(h.ambient(), "CauchyStress3D::from_axial");
    CauchyStress3D s;
    s.set(1, 2, h[2]);
    s.set(2, 1, -h[2]);
    s.set(2, 3, h[0]);
    s.set(3, 2, -h[0]);
    s.set(3, 1, h[1]);
    s.set(1, 3, -h[1]);
    return s;
  }

  /// Pointwise power density sigma_ij w_i,j (comma = partial derivative).
  Polynomial power_density(const PolyVectorField& w) const {
    require_dim3(w.ambient(), "CauchyStress3D::power_density");
    Polynomial out(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        out += at(i, j) * w[static_cast<std::size_t>(i - 1)].derivative(j);
    return out;
  }

private:
  static std::size_t check(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("CauchyStress3D: index out of range");
    return static_cast<std::size_t>(i - 1);
  }

  static std::array<Polynomial, 3> zero_row() {
    return {Polynomial(3), Polynomial(3), Polynomial(3)};
  }

  std::array<std::array<Polynomial, 3>, 3> comps_;
};

/// Axial vector of the antisymmetric part: H_p = (1/2) epsilon_pjk sigma_jk,
/// with epsilon_123 = +1.
inline PolyVectorField axial_vector(const CauchyStress3D& sigma) {
  Rational half(1, 2);
  std::vector<Polynomial> h{(sigma.at(2, 3) - sigma.at(3, 2)) * half,
                            (sigma.at(3, 1) - sigma.at(1, 3)) * half,
                            (sigma.at(1, 2) - sigma.at(2, 1)) * half};
  return PolyVectorField(std::move(h));
}

struct MagnetostaticsPower {
  Rational boundary_term;   // surface flux of H x w
  Rational curl_h_term;     // volume integral of (curl H) . w
  Rational h_curl_w_term;   // volume integral of H . (curl w)
  bool identity_ok;         // boundary = curl_h - h_curl_w
};

/// The antisymmetric-stress power decomposition on R^3:
/// int_bdry (H x w).n dA = int (curl H).w dV - int H.(curl w) dV,
/// with every integral exact.
inline MagnetostaticsPower power_decomposition_magnetostatics(const PolyVectorField& h,
                                                              const PolyVectorField& w,
                                                              const Chain& region) {
  require_dim3(h.ambient(), "power_decomposition_magnetostatics");
  require_dim3(w.ambient(), "power_decomposition_magnetostatics");
  if (region.ambient() != 3 || region.dimension() != 3)
    throw std::invalid_argument("power_decomposition_magnetostatics: region must be 3-cells in R^3");
  MagnetostaticsPower out{Rational(0), Rational(0), Rational(0), false};
  out.boundary_term = integrate(vec_to_2form(cross(h, w)), boundary(region));
  out.curl_h_term = integrate(volume_form(dot(curl(h), w)), region);
  out.h_curl_w_term = integrate(volume_form(dot(h, curl(w))), region);
  out.identity_ok = (out.boundary_term == out.curl_h_term - out.h_curl_w_term);
  return out;
}

}  // namespace pforms

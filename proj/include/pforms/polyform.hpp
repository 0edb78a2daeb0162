#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pforms/alt_tensor.hpp"
#include "pforms/multi_index.hpp"
#include "pforms/polynomial.hpp"

namespace pforms {

/// Differential p-form on a single global chart of R^n, with multivariate
/// polynomial coefficients on strictly increasing multi-indices.
class PolyForm {
public:
  PolyForm(int n, int degree) : n_(n), degree_(degree) {
    if (n < 0 || degree < 0) throw std::invalid_argument("PolyForm: negative dimension");
  }

  static PolyForm zero(int n, int degree) { return PolyForm(n, degree); }

  int ambient() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<MultiIndex, Polynomial>& coeffs() const { return coeffs_; }

  void set(const MultiIndex& key, const Polynomial& poly) {
    check_key(key);
    if (poly.n_vars() != n_)
      throw std::invalid_argument("PolyForm: coefficient variable count != ambient dimension");
    if (poly.is_zero())
      coeffs_.erase(key);
    else
      coeffs_.insert_or_assign(key, poly);
  }

  void add(const MultiIndex& key, const Polynomial& poly) {
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
      set(key, poly);
    } else {
      it->second += poly;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  Polynomial get(const MultiIndex& key) const {
    check_key(key);
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Polynomial(n_) : it->second;
  }

  PolyForm& operator+=(const PolyForm& o) {
    require_same_shape(o);
    for (const auto& [key, poly] : o.coeffs_) add(key, poly);
    return *this;
  }

  PolyForm operator-() const {
    PolyForm out(n_, degree_);
    for (const auto& [key, poly] : coeffs_) out.coeffs_.insert_or_assign(key, -poly);
    return out;
  }

  PolyForm& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [key, poly] : coeffs_) poly *= s;
    return *this;
  }

  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a += -b; }
  friend PolyForm operator*(PolyForm a, const Rational& s) { return a *= s; }

  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

private:
  void check_key(const MultiIndex& key) const {
    if (static_cast<int>(key.size()) != degree_)
      throw std::invalid_argument("PolyForm: key length != degree");
    if (key.max_axis() > n_) throw std::invalid_argument("PolyForm: axis out of range");
  }

  void require_same_shape(const PolyForm& o) const {
    if (n_ != o.n_ || degree_ != o.degree_)
      throw std::invalid_argument("PolyForm: shape mismatch");
  }

  int n_;
  int degree_;
  std::map<MultiIndex, Polynomial> coeffs_;
};

/// (d omega)_K = sum over i in K of (-1)^(position of i in K) d(omega_{K\i})/dx^i.
/// For degree n the result is the zero (n+1)-form.
inline PolyForm exterior_derivative(const PolyForm& w) {
  PolyForm out(w.ambient(), w.degree() + 1);
  for (const auto& [key, poly] : w.coeffs()) {
    for (int axis = 1; axis <= w.ambient(); ++axis) {
      if (key.contains(axis)) continue;
      Polynomial dp = poly.derivative(axis);
      if (dp.is_zero()) continue;
      auto [bigger, sign] = key.insert(axis);
      out.add(bigger, sign == 1 ? dp : -dp);
    }
  }
  return out;
}

/// Pointwise exterior product of forms; shuffle-signed merge of coefficients.
inline PolyForm wedge_form(const PolyForm& a, const PolyForm& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("wedge_form: ambient dimension mismatch");
  PolyForm out(a.ambient(), a.degree() + b.degree());
  for (const auto& [ia, pa] : a.coeffs())
    for (const auto& [ib, pb] : b.coeffs()) {
      auto [key, sign] = merge_indices(ia, ib);
      if (sign == 0) continue;
      Polynomial prod = pa * pb;
      out.add(key, sign == 1 ? prod : -prod);
    }
  return out;
}

inline AltTensor eval_at(const PolyForm& w, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != w.ambient())
    throw std::invalid_argument("eval_at: point dimension mismatch");
  AltTensor out(w.ambient(), w.degree());
  for (const auto& [key, poly] : w.coeffs()) out.set(key, poly.eval(point));
  return out;
}

/// A 0-form wrapping a scalar polynomial.
inline PolyForm scalar_form(const Polynomial& f) {
  PolyForm out(f.n_vars(), 0);
  out.set(MultiIndex(), f);
  return out;
}

/// d f evaluated at a point against v, next to the curve-route derivative
/// d/dt f(point + t v) at t = 0. The two agree; both are returned so callers
/// can check.
inline std::pair<Rational, Rational> directional_derivative_check(
    const Polynomial& f, const std::vector<Rational>& v, const std::vector<Rational>& point) {
  if (static_cast<int>(v.size()) != f.n_vars() || v.size() != point.size())
    throw std::invalid_argument("directional_derivative_check: dimension mismatch");
  Rational via_df = eval_at(exterior_derivative(scalar_form(f)), point).evaluate({v});
  // g(t) = f(point + t v); the symbolic derivative at 0 is the t-coefficient.
  std::vector<Polynomial> images;
  images.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Polynomial img = Polynomial::constant(1, point[i]);
    img += Polynomial::variable(1, 1) * v[i];
    images.push_back(img);
  }
  Rational via_curve = f.substitute(images).coefficient({1});
  return {via_df, via_curve};
}

/// Polynomial vector field on the chart: n components in n variables.
class PolyVectorField {
public:
  explicit PolyVectorField(int n) : n_(n), components_(static_cast<std::size_t>(n), Polynomial(n)) {
    if (n < 0) throw std::invalid_argument("PolyVectorField: negative dimension");
  }

  explicit PolyVectorField(std::vector<Polynomial> components)
      : n_(static_cast<int>(components.size())), components_(std::move(components)) {
    for (const auto& c : components_)
      if (c.n_vars() != n_)
        throw std::invalid_argument("PolyVectorField: component variable count mismatch");
  }

  int ambient() const { return n_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  Polynomial& operator[](std::size_t i) { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }

  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.components_ == b.components_;
  }

private:
  int n_;
  std::vector<Polynomial> components_;
};

inline void require_dim3(int n, const char* who) {
  if (n != 3) throw std::invalid_argument(std::string(who) + ": requires ambient dimension 3");
}

/// Work 1-form of a classical field: sum h_i dx^i.  (R^3 bridge.)
inline PolyForm vec_to_1form(const PolyVectorField& h) {
  require_dim3(h.ambient(), "vec_to_1form");
  PolyForm out(3, 1);
  for (int i = 1; i <= 3; ++i) out.set(MultiIndex({i}), h[static_cast<std::size_t>(i - 1)]);
  return out;
}

/// Flux 2-form of a classical field:
/// h1 dx2^dx3 - h2 dx1^dx3 + h3 dx1^dx2.  (R^3 bridge.)
inline PolyForm vec_to_2form(const PolyVectorField& h) {
  require_dim3(h.ambient(), "vec_to_2form");
  PolyForm out(3, 2);
  out.set(MultiIndex({2, 3}), h[0]);
  out.set(MultiIndex({1, 3}), -h[1]);
  out.set(MultiIndex({1, 2}), h[2]);
  return out;
}

inline PolyVectorField grad(const Polynomial& f) {
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(f.n_vars()));
  for (int i = 1; i <= f.n_vars(); ++i) comps.push_back(f.derivative(i));
  return PolyVectorField(std::move(comps));
}

inline PolyVectorField curl(const PolyVectorField& h) {
  require_dim3(h.ambient(), "curl");
  std::vector<Polynomial> c{h[2].derivative(2) - h[1].derivative(3),
                            h[0].derivative(3) - h[2].derivative(1),
                            h[1].derivative(1) - h[0].derivative(2)};
  return PolyVectorField(std::move(c));
}

inline Polynomial divergence(const PolyVectorField& h) {
  Polynomial out(h.ambient());
  for (int i = 1; i <= h.ambient(); ++i)
    out += h[static_cast<std::size_t>(i - 1)].derivative(i);
  return out;
}

inline PolyVectorField cross(const PolyVectorField& a, const PolyVectorField& b) {
  require_dim3(a.ambient(), "cross");
  require_dim3(b.ambient(), "cross");
  std::vector<Polynomial> c{a[1] * b[2] - a[2] * b[1],
                            a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]};
  return PolyVectorField(std::move(c));
}

inline Polynomial dot(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("dot: dimension mismatch");
  Polynomial out(a.ambient());
  for (std::size_t i = 0; i < a.components().size(); ++i) out += a[i] * b[i];
  return out;
}

/// Top-degree form (density) dV = f dx1^...^dxn.
inline PolyForm volume_form(const Polynomial& density) {
  const int n = density.n_vars();
  PolyForm out(n, n);
  std::vector<int> axes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) axes[static_cast<std::size_t>(i)] = i + 1;
  out.set(MultiIndex(std::move(axes)), density);
  return out;
}

}  // namespace pforms

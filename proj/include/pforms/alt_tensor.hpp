#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "pforms/multi_index.hpp"
#include "pforms/rational.hpp"

namespace pforms {

using RationalVector = std::vector<Rational>;

/// General (not necessarily antisymmetric) r-tensor on R^n, stored as a sparse
/// map from arbitrary r-tuples of axes to values. Exists mostly as the domain
/// of the alternation projection.
class DenseTensor {
public:
  DenseTensor(int n, int r) : n_(n), r_(r) {
    if (n < 0 || r < 0) throw std::invalid_argument("DenseTensor: negative dimension");
  }

  int ambient() const { return n_; }
  int degree() const { return r_; }

  void set(const std::vector<int>& axes, const Rational& value) {
    check_tuple(axes);
    if (value.is_zero())
      entries_.erase(axes);
    else
      entries_[axes] = value;
  }

  Rational get(const std::vector<int>& axes) const {
    check_tuple(axes);
    auto it = entries_.find(axes);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const std::map<std::vector<int>, Rational>& entries() const { return entries_; }

  /// Multilinear evaluation: sum over stored tuples of entry * prod of picked
  /// vector components.
  Rational evaluate(const std::vector<RationalVector>& vectors) const {
    if (static_cast<int>(vectors.size()) != r_)
      throw std::invalid_argument("DenseTensor::evaluate: need exactly r vectors");
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("DenseTensor::evaluate: vector dimension mismatch");
    Rational total(0);
    for (const auto& [axes, value] : entries_) {
      Rational prod = value;
      for (std::size_t slot = 0; slot < axes.size(); ++slot)
        prod *= vectors[slot][static_cast<std::size_t>(axes[slot] - 1)];
      total += prod;
    }
    return total;
  }

private:
  void check_tuple(const std::vector<int>& axes) const {
    if (static_cast<int>(axes.size()) != r_)
      throw std::invalid_argument("DenseTensor: tuple length != degree");
    for (int a : axes)
      if (a < 1 || a > n_) throw std::invalid_argument("DenseTensor: axis out of range");
  }

  int n_;
  int r_;
  std::map<std::vector<int>, Rational> entries_;
};

/// Pointwise antisymmetric r-tensor on R^n. Components are stored only on
/// strictly increasing multi-indices; all others follow by sign. Absent key
/// means zero. Degrees r > n are legal and identically zero.
class AltTensor {
public:
  AltTensor(int n, int r) : n_(n), r_(r) {
    if (n < 0 || r < 0) throw std::invalid_argument("AltTensor: negative dimension");
  }

  int ambient() const { return n_; }
  int degree() const { return r_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }

  void set(const MultiIndex& key, const Rational& value) {
    check_key(key);
    if (value.is_zero())
      coeffs_.erase(key);
    else
      coeffs_[key] = value;
  }

  void add(const MultiIndex& key, const Rational& value) { set(key, get(key) + value); }

  Rational get(const MultiIndex& key) const {
    check_key(key);
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  /// Component on an arbitrary tuple: sorts and applies the permutation sign.
  Rational component(const std::vector<int>& axes) const {
    auto [key, sign] = MultiIndex::from_unsorted(axes);
    if (sign == 0) return Rational(0);
    Rational c = get(key);
    return sign == 1 ? c : -c;
  }

  AltTensor& operator+=(const AltTensor& o) {
    require_same_shape(o);
    for (const auto& [key, value] : o.coeffs_) add(key, value);
    return *this;
  }

  AltTensor operator-() const {
    AltTensor out(n_, r_);
    for (const auto& [key, value] : coeffs_) out.coeffs_[key] = -value;
    return out;
  }

  AltTensor& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [key, value] : coeffs_) value *= s;
    return *this;
  }

  friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
  friend AltTensor operator*(AltTensor a, const Rational& s) { return a *= s; }

  friend bool operator==(const AltTensor& a, const AltTensor& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
  }

  /// Evaluation on r vectors: sum over stored keys of coeff * det of the
  /// picked rows of the column matrix [v_1 ... v_r].
  Rational evaluate(const std::vector<RationalVector>& vectors) const {
    if (static_cast<int>(vectors.size()) != r_)
      throw std::invalid_argument("AltTensor::evaluate: need exactly r vectors");
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("AltTensor::evaluate: vector dimension mismatch");
    Rational total(0);
    for (const auto& [key, value] : coeffs_) {
      std::vector<RationalVector> minor(key.size(), RationalVector(key.size()));
      for (std::size_t row = 0; row < key.size(); ++row)
        for (std::size_t col = 0; col < key.size(); ++col)
          minor[row][col] = vectors[col][static_cast<std::size_t>(key[row] - 1)];
      total += value * determinant(minor);
    }
    return total;
  }

  /// Expansion into a DenseTensor carrying every permuted key with its sign.
  DenseTensor embed() const {
    DenseTensor out(n_, r_);
    for (const auto& [key, value] : coeffs_) {
      std::vector<int> perm(key.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      do {
        std::vector<int> axes(key.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
          axes[i] = key[static_cast<std::size_t>(perm[i])];
        int sign = permutation_sign(perm);
        out.set(axes, sign == 1 ? value : -value);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }

  static Rational determinant(const std::vector<RationalVector>& m) {
    const std::size_t k = m.size();
    if (k == 0) return Rational(1);
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Rational total(0);
    int sign = 1;
    for (std::size_t col = 0; col < k; ++col) {
      if (!m[0][col].is_zero()) {
        std::vector<RationalVector> minor(k - 1, RationalVector(k - 1));
        for (std::size_t r = 1; r < k; ++r) {
          std::size_t mc = 0;
          for (std::size_t c = 0; c < k; ++c) {
            if (c == col) continue;
            minor[r - 1][mc++] = m[r][c];
          }
        }
        Rational term = m[0][col] * determinant(minor);
        total += sign == 1 ? term : -term;
      }
      sign = -sign;
    }
    return total;
  }

private:
  void check_key(const MultiIndex& key) const {
    if (static_cast<int>(key.size()) != r_)
      throw std::invalid_argument("AltTensor: key length != degree");
    if (key.max_axis() > n_) throw std::invalid_argument("AltTensor: axis out of range");
  }

  void require_same_shape(const AltTensor& o) const {
    if (n_ != o.n_ || r_ != o.r_)
      throw std::invalid_argument("AltTensor: shape mismatch");
  }

  int n_;
  int r_;
  std::map<MultiIndex, Rational> coeffs_;
};

/// Projection of a general tensor onto its antisymmetric part:
/// coeff(I) = (1/r!) sum over permutations pi of sign(pi) * T[pi(I)].
inline AltTensor alternate(const DenseTensor& t) {
  AltTensor out(t.ambient(), t.degree());
  const int r = t.degree();
  Rational inv_fact(mpz_class(1), factorial(static_cast<unsigned>(r)));
  for (const auto& key : all_multi_indices(t.ambient(), r)) {
    std::vector<int> perm(key.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    Rational acc(0);
    do {
      std::vector<int> axes(key.size());
      for (std::size_t i = 0; i < perm.size(); ++i)
        axes[i] = key[static_cast<std::size_t>(perm[i])];
      int sign = permutation_sign(perm);
      Rational v = t.get(axes);
      acc += sign == 1 ? v : -v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.set(key, acc * inv_fact);
  }
  return out;
}

/// Exterior product. Coefficient on K is the shuffle-signed sum over splits of
/// K into an r-part and a p-part; degrees beyond n give the zero tensor.
inline AltTensor wedge(const AltTensor& a, const AltTensor& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("wedge: ambient dimension mismatch");
  AltTensor out(a.ambient(), a.degree() + b.degree());
  for (const auto& [ia, va] : a.coeffs())
    for (const auto& [ib, vb] : b.coeffs()) {
      auto [key, sign] = merge_indices(ia, ib);
      if (sign == 0) continue;
      out.add(key, sign == 1 ? va * vb : -(va * vb));
    }
  return out;
}

}  // namespace pforms

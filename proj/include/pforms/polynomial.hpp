#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pforms/rational.hpp"

namespace pforms {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex. This is the
/// canonical monomial order for storage, iteration, and rendering.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

/// Multivariate polynomial with exact rational coefficients, sparse over
/// monomials. Closed under the operations the calculus needs: sums, products,
/// partial derivatives, substitution.
class Polynomial {
public:
  explicit Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 0) throw std::invalid_argument("Polynomial: negative variable count");
  }

  static Polynomial constant(int n_vars, const Rational& c) {
    Polynomial p(n_vars);
    p.add_term(Exponents(static_cast<std::size_t>(n_vars), 0), c);
    return p;
  }

  /// The coordinate x_axis (1-based).
  static Polynomial variable(int n_vars, int axis) {
    if (axis < 1 || axis > n_vars) throw std::invalid_argument("Polynomial: axis out of range");
    Polynomial p(n_vars);
    Exponents e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(axis - 1)] = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  static Polynomial monomial(int n_vars, const Exponents& exps, const Rational& c) {
    Polynomial p(n_vars);
    p.add_term(exps, c);
    return p;
  }

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }

  int total_degree() const {
    if (terms_.empty()) return 0;
    const Exponents& lead = terms_.rbegin()->first;
    int d = 0;
    for (int e : lead) d += e;
    return d;
  }

  void add_term(const Exponents& exps, const Rational& c) {
    check_exponents(exps);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& exps) const {
    check_exponents(exps);
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial operator-() const {
    Polynomial out(n_vars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_vars(b);
    Polynomial out(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial acc = constant(n_vars_, Rational(1));
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
  }

  /// Partial derivative with respect to x_axis (1-based).
  Polynomial derivative(int axis) const {
    if (axis < 1 || axis > n_vars_) throw std::invalid_argument("Polynomial: axis out of range");
    const std::size_t idx = static_cast<std::size_t>(axis - 1);
    Polynomial out(n_vars_);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponents d(e);
      const int k = d[idx]--;
      out.add_term(d, c * Rational(k));
    }
    return out;
  }

  Rational eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_vars_)
      throw std::invalid_argument("Polynomial::eval: point dimension mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational prod = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) prod *= point[i];
      total += prod;
    }
    return total;
  }

  /// Substitutes x_i := images[i-1]; images are polynomials in a common fresh
  /// variable set. Result lives in that set.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != n_vars_)
      throw std::invalid_argument("Polynomial::substitute: image count mismatch");
    const int m = images.empty() ? 0 : images[0].n_vars();
    for (const auto& img : images)
      if (img.n_vars() != m)
        throw std::invalid_argument("Polynomial::substitute: inconsistent image variables");
    // memoize powers of each image
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      powers[i].push_back(constant(m, Rational(1)));
    Polynomial out(m);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(m, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        while (static_cast<int>(powers[i].size()) <= e[i])
          powers[i].push_back(powers[i].back() * images[i]);
        if (e[i] > 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
      }
      out += term;
    }
    return out;
  }

  /// Renders in descending graded-lex order, e.g. "3*x1^2*x3 - 1/2*x2 + 5".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = c.sign() < 0 ? -c : c;
      if (out.empty())
        out += c.sign() < 0 ? "-" : "";
      else
        out += c.sign() < 0 ? " - " : " + ";
      std::string vars;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += "x" + std::to_string(i + 1);
        if (e[i] > 1) vars += "^" + std::to_string(e[i]);
      }
      if (vars.empty()) {
        out += mag.str();
      } else if (mag == Rational(1)) {
        out += vars;
      } else {
        out += mag.str() + "*" + vars;
      }
    }
    return out;
  }

private:
  void check_exponents(const Exponents& e) const {
    if (static_cast<int>(e.size()) != n_vars_)
      throw std::invalid_argument("Polynomial: exponent tuple length mismatch");
    for (int k : e)
      if (k < 0) throw std::invalid_argument("Polynomial: negative exponent");
  }

  void require_same_vars(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_)
      throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  int n_vars_;
  std::map<Exponents, Rational, GradedLexLess> terms_;
};

}  // namespace pforms

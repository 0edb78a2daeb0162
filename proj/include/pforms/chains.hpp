#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "pforms/polyform.hpp"

namespace pforms {

using Point = std::vector<Rational>;

/// Oriented affine k-simplex in R^n: k+1 vertices, orientation by vertex
/// order. Degenerate simplices are legal and integrate to zero.
struct Simplex {
  std::vector<Point> vertices;

  int ambient() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }
  int dimension() const { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices == b.vertices; }
};

/// Oriented affine k-parallelepiped: origin plus k edge vectors.
struct BoxCell {
  Point origin;
  std::vector<Point> edges;

  int ambient() const { return static_cast<int>(origin.size()); }
  int dimension() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const BoxCell& a, const BoxCell& b) {
    return a.origin == b.origin && a.edges == b.edges;
  }
};

using Cell = std::variant<Simplex, BoxCell>;

inline int cell_ambient(const Cell& c) {
  return std::visit([](const auto& x) { return x.ambient(); }, c);
}
inline int cell_dimension(const Cell& c) {
  return std::visit([](const auto& x) { return x.dimension(); }, c);
}

struct WeightedCell {
  Rational weight;
  Cell cell;
};

/// Formal rational combination of oriented affine k-cells sharing one ambient
/// dimension. Chains are flat lists; no complex or adjacency structure.
class Chain {
public:
  Chain(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 0) throw std::invalid_argument("Chain: negative dimension");
    if (k > n) throw std::invalid_argument("Chain: cell dimension exceeds ambient");
  }

  int ambient() const { return n_; }
  int dimension() const { return k_; }
  const std::vector<WeightedCell>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(Rational weight, Cell cell) {
    if (weight.is_zero()) return;
    if (cell_ambient(cell) != n_) throw std::invalid_argument("Chain: ambient mismatch");
    if (cell_dimension(cell) != k_) throw std::invalid_argument("Chain: cell dimension mismatch");
    terms_.push_back({std::move(weight), std::move(cell)});
  }

  Chain operator-() const {
    Chain out(n_, k_);
    for (const auto& t : terms_) out.terms_.push_back({-t.weight, t.cell});
    return out;
  }

  /// Combines terms with identical cell representation and drops zero
  /// weights. Cells that are equal as sets but ordered differently are not
  /// recognized; boundary output cancels exactly, which is all this is for.
  Chain simplified() const {
    Chain out(n_, k_);
    for (const auto& term : terms_) {
      bool merged = false;
      for (auto& acc : out.terms_) {
        if (acc.cell == term.cell) {
          acc.weight += term.weight;
          merged = true;
          break;
        }
      }
      if (!merged) out.terms_.push_back(term);
    }
    std::erase_if(out.terms_, [](const WeightedCell& t) { return t.weight.is_zero(); });
    return out;
  }

  /// Axis-aligned unit k-cube at the origin of R^n (edges e_1..e_k).
  static Chain unit_cube(int n, int k) {
    Chain out(n, k);
    BoxCell box;
    box.origin = Point(static_cast<std::size_t>(n), Rational(0));
    for (int j = 0; j < k; ++j) {
      Point e(static_cast<std::size_t>(n), Rational(0));
      e[static_cast<std::size_t>(j)] = Rational(1);
      box.edges.push_back(std::move(e));
    }
    out.add(Rational(1), std::move(box));
    return out;
  }

private:
  int n_;
  int k_;
  std::vector<WeightedCell> terms_;
};

/// Simplicial boundary: [v0..vk] -> sum_i (-1)^i [v0..^vi..vk].
/// Cubical boundary: per edge j (1-based), (-1)^(j-1) (far face - near face),
/// faces keeping the remaining edges in order.
inline Chain boundary(const Chain& c) {
  if (c.dimension() < 1) throw std::invalid_argument("boundary: chain of 0-cells");
  Chain out(c.ambient(), c.dimension() - 1);
  for (const auto& term : c.terms()) {
    if (std::holds_alternative<Simplex>(term.cell)) {
      const auto& s = std::get<Simplex>(term.cell);
      for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
        Simplex face;
        for (std::size_t i = 0; i < s.vertices.size(); ++i)
          if (i != skip) face.vertices.push_back(s.vertices[i]);
        Rational w = (skip % 2 == 0) ? term.weight : -term.weight;
        out.add(w, std::move(face));
      }
    } else {
      const auto& b = std::get<BoxCell>(term.cell);
      for (std::size_t j = 0; j < b.edges.size(); ++j) {
        BoxCell near_face, far_face;
        near_face.origin = b.origin;
        far_face.origin = b.origin;
        for (std::size_t i = 0; i < far_face.origin.size(); ++i)
          far_face.origin[i] += b.edges[j][i];
        for (std::size_t i = 0; i < b.edges.size(); ++i) {
          if (i == j) continue;
          near_face.edges.push_back(b.edges[i]);
          far_face.edges.push_back(b.edges[i]);
        }
        Rational w = (j % 2 == 0) ? term.weight : -term.weight;
        out.add(w, std::move(far_face));
        out.add(-w, std::move(near_face));
      }
    }
  }
  return out;
}

namespace detail {

/// Integral of the monomial prod u_j^(a_j) over the standard k-simplex
/// {u_j >= 0, sum u_j <= 1}: (prod a_j!) / (k + sum a_j)!.
inline Rational monomial_integral_simplex(const Exponents& a) {
  mpz_class num(1);
  unsigned total = static_cast<unsigned>(a.size());
  for (int e : a) {
    num *= factorial(static_cast<unsigned>(e));
    total += static_cast<unsigned>(e);
  }
  return Rational(num, factorial(total));
}

/// Integral of the monomial over the unit k-cube: prod 1/(a_j + 1).
inline Rational monomial_integral_cube(const Exponents& a) {
  mpz_class den(1);
  for (int e : a) den *= (e + 1);
  return Rational(mpz_class(1), den);
}

template <typename MonomialRule>
Rational integrate_affine_cell(const PolyForm& w, const Point& base,
                               const std::vector<Point>& edges, MonomialRule rule) {
  const int k = static_cast<int>(edges.size());
  // substitution images x_i := base_i + sum_j edges[j][i] * u_j
  std::vector<Polynomial> images;
  images.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    Polynomial img = Polynomial::constant(k, base[i]);
    for (int j = 1; j <= k; ++j) {
      const Rational& coef = edges[static_cast<std::size_t>(j - 1)][i];
      if (!coef.is_zero()) img += Polynomial::variable(k, j) * coef;
    }
    images.push_back(std::move(img));
  }
  Rational total(0);
  for (const auto& [key, poly] : w.coeffs()) {
    // Jacobian factor: det of the rows of the edge matrix picked by the key.
    std::vector<std::vector<Rational>> minor(key.size(), std::vector<Rational>(key.size()));
    for (std::size_t row = 0; row < key.size(); ++row)
      for (std::size_t col = 0; col < key.size(); ++col)
        minor[row][col] = edges[col][static_cast<std::size_t>(key[row] - 1)];
    Rational det = AltTensor::determinant(minor);
    if (det.is_zero()) continue;
    Polynomial pulled = poly.substitute(images);
    Rational cell_integral(0);
    for (const auto& [e, coeff] : pulled.terms()) cell_integral += coeff * rule(e);
    total += det * cell_integral;
  }
  return total;
}

}  // namespace detail

/// Exact integral of a degree-k polynomial form over a chain of k-cells.
/// Each cell is pulled back through its affine parametrization and integrated
/// by the closed-form monomial rules; no quadrature, no error.
inline Rational integrate(const PolyForm& w, const Chain& c) {
  if (w.degree() != c.dimension())
    throw std::invalid_argument("integrate: form degree != chain dimension");
  if (w.ambient() != c.ambient())
    throw std::invalid_argument("integrate: ambient dimension mismatch");
  Rational total(0);
  for (const auto& term : c.terms()) {
    Rational value(0);
    if (std::holds_alternative<Simplex>(term.cell)) {
      const auto& s = std::get<Simplex>(term.cell);
      if (s.dimension() == 0) {
        value = eval_at(w, s.vertices[0]).get(MultiIndex());
      } else {
        std::vector<Point> edges;
        edges.reserve(s.vertices.size() - 1);
        for (std::size_t j = 1; j < s.vertices.size(); ++j) {
          Point e(s.vertices[j]);
          for (std::size_t i = 0; i < e.size(); ++i) e[i] -= s.vertices[0][i];
          edges.push_back(std::move(e));
        }
        value = detail::integrate_affine_cell(w, s.vertices[0], edges,
                                              detail::monomial_integral_simplex);
      }
    } else {
      const auto& b = std::get<BoxCell>(term.cell);
      if (b.dimension() == 0) {
        value = eval_at(w, b.origin).get(MultiIndex());
      } else {
        value = detail::integrate_affine_cell(w, b.origin, b.edges,
                                              detail::monomial_integral_cube);
      }
    }
    total += term.weight * value;
  }
  return total;
}

struct StokesResult {
  Rational boundary_integral;
  Rational volume_integral;
  bool equal;
};

/// Both sides of the Stokes identity for a (k-1)-form over a k-chain. The
/// contract is exact equality; the caller gets both values regardless.
inline StokesResult stokes_check(const PolyForm& w, const Chain& c) {
  if (w.degree() + 1 != c.dimension())
    throw std::invalid_argument("stokes_check: form degree must be chain dimension - 1");
  Rational lhs = integrate(w, boundary(c));
  Rational rhs = integrate(exterior_derivative(w), c);
  return {lhs, rhs, lhs == rhs};
}

/// Classical flux of a field through an oriented surface chain, computed as
/// the integral of the flux 2-form.
inline Rational flux(const PolyVectorField& h, const Chain& surface) {
  require_dim3(h.ambient(), "flux");
  if (surface.ambient() != 3 || surface.dimension() != 2)
    throw std::invalid_argument("flux: needs 2-cells in R^3");
  return integrate(vec_to_2form(h), surface);
}

}  // namespace pforms

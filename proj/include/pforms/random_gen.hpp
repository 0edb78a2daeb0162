#pragma once

#include <cstdint>
#include <random>

#include "pforms/chains.hpp"
#include "pforms/mechanics.hpp"
#include "pforms/polyform.hpp"

namespace pforms {

/// Seeded source of small exact values. Draws go through the raw engine
/// output, not std::uniform_int_distribution, so a given seed produces the
/// same stream on every platform; scenario files carry seeds and reports must
/// be byte-reproducible.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  Rational next_rational(int max_abs_num = 4, int max_den = 3) {
    return Rational(next_int(-max_abs_num, max_abs_num), next_int(1, max_den));
  }

  Rational next_nonzero_rational(int max_abs_num = 4, int max_den = 3) {
    Rational r = next_rational(max_abs_num, max_den);
    while (r.is_zero()) r = next_rational(max_abs_num, max_den);
    return r;
  }

private:
  std::mt19937_64 engine_;
};

inline Polynomial random_polynomial(RandomSource& rng, int n_vars, int max_degree,
                                    int max_terms = 3) {
  Polynomial p(n_vars);
  const int terms = static_cast<int>(rng.next_int(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(n_vars), 0);
    int budget = static_cast<int>(rng.next_int(0, max_degree));
    for (int b = 0; b < budget && n_vars > 0; ++b)
      ++e[static_cast<std::size_t>(rng.next_int(0, n_vars - 1))];
    p.add_term(e, rng.next_rational());
  }
  return p;
}

inline PolyForm random_form(RandomSource& rng, int n, int degree, int max_poly_degree,
                            int max_terms = 2) {
  PolyForm w(n, degree);
  for (const auto& key : all_multi_indices(n, degree))
    w.add(key, random_polynomial(rng, n, max_poly_degree, max_terms));
  return w;
}

inline PolyVectorField random_vector_field(RandomSource& rng, int n, int max_poly_degree) {
  PolyVectorField v(n);
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = random_polynomial(rng, n, max_poly_degree);
  return v;
}

inline Point random_point(RandomSource& rng, int n, int span = 2) {
  Point p(static_cast<std::size_t>(n));
  for (auto& c : p) c = Rational(rng.next_int(-span, span), rng.next_int(1, 2));
  return p;
}

inline Simplex random_simplex(RandomSource& rng, int n, int k) {
  Simplex s;
  for (int i = 0; i <= k; ++i) s.vertices.push_back(random_point(rng, n));
  return s;
}

inline BoxCell random_box(RandomSource& rng, int n, int k) {
  BoxCell b;
  b.origin = random_point(rng, n);
  for (int j = 0; j < k; ++j) b.edges.push_back(random_point(rng, n));
  return b;
}

/// A chain of 1..max_cells random cells, mixing simplices and boxes.
inline Chain random_chain(RandomSource& rng, int n, int k, int max_cells = 2) {
  Chain c(n, k);
  const int cells = static_cast<int>(rng.next_int(1, max_cells));
  for (int i = 0; i < cells; ++i) {
    Rational w = rng.next_nonzero_rational(3, 2);
    if (rng.next_int(0, 1) == 0)
      c.add(w, random_simplex(rng, n, k));
    else
      c.add(w, random_box(rng, n, k));
  }
  return c;
}

inline DenseTensor random_dense_tensor(RandomSource& rng, int n, int r, int max_entries = 6) {
  DenseTensor t(n, r);
  const int entries = static_cast<int>(rng.next_int(1, max_entries));
  for (int i = 0; i < entries; ++i) {
    std::vector<int> axes(static_cast<std::size_t>(r));
    for (auto& a : axes) a = static_cast<int>(rng.next_int(1, n));
    t.set(axes, rng.next_rational());
  }
  return t;
}

inline CauchyStress3D random_antisymmetric_stress(RandomSource& rng, int max_poly_degree) {
  return CauchyStress3D::from_axial(random_vector_field(rng, 3, max_poly_degree));
}

inline StressField random_stress_field(RandomSource& rng, int n, int p, int max_poly_degree,
                                       int max_entries = 4) {
  StressField sigma(n, p);
  const auto inputs = all_multi_indices(n, p);
  const auto outputs = all_multi_indices(n, n - 1);
  const int entries = static_cast<int>(rng.next_int(1, max_entries));
  for (int i = 0; i < entries; ++i) {
    const auto& in = inputs[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(inputs.size()) - 1))];
    const auto& out = outputs[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(outputs.size()) - 1))];
    sigma.add(in, out, random_polynomial(rng, n, max_poly_degree));
  }
  return sigma;
}

}  // namespace pforms

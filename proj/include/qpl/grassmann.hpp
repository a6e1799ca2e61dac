#pragma once

// Gaussian binomials as Poincaré polynomials (in q = t^2) of Grassmannians
// of b-dimensional quotients of an a-dimensional space.

#include <cstddef>

#include "qpl/polyseries.hpp"

namespace qpl {

struct GrassParams {
  int ambient = 0;
  int quotient_dim = 0;

  /// Throws InvalidParams unless 0 <= quotient_dim <= ambient.
  static GrassParams make(int ambient, int quotient_dim);
};

/// [a choose b]_q. Throws InvalidParams unless 0 <= b <= a.
IntPolynomial gaussian_binomial(int a, int b);
IntPolynomial gaussian_binomial(const GrassParams& g);

/// Like gaussian_binomial, but an empty Grassmannian (b > a) yields the zero
/// polynomial. Negative arguments still throw.
IntPolynomial grass_poincare_or_empty(int a, int b);

/// Number of F_q-points of Grass(a, b); zero when b > a.
BigInt grass_point_count(int a, int b, const BigInt& q);

/// prod_{i=1}^{b} 1 / (1 - q^i): the stable Grassmannian of b-dimensional quotients.
TruncatedSeries stable_grass_series(int b, std::size_t precision);

/// Hilbert series of Z[c_1, ..., c_d] / (c_d^r) with deg c_i = 2i:
/// prod_{i<d} 1/(1 - q^i) * (1 - q^{dr}) / (1 - q^d).
TruncatedSeries target_ring_series(int d, int r, std::size_t precision);

}  // namespace qpl

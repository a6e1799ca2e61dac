#pragma once

// Torus-fixed points and Białynicki-Birula cell dimensions of the Hilbert
// scheme of two points on A^n x P^{r-1}, for weights
//   0 < gamma_1 < ... < gamma_r < lambda_1 < ... < lambda_n.
//
// Fixed points come in four kinds, all supported over 0 x [e_i]:
//   A(i,j), i<j : the reduced pair {0 x [e_i]} u {0 x [e_j]}
//   B(i,j), i<j : double point at [e_i] with tangent y_{j/i}
//   C(i,j), j<i : double point at [e_i] with tangent y_{j/i}
//   D(i,k)      : double point at [e_i] with tangent x_k

#include <string>
#include <vector>

#include "qpl/polyseries.hpp"

namespace qpl {

enum class FixedPointKind { A, B, C, D };

char kind_letter(FixedPointKind kind);

struct Hilb2FixedPoint {
  FixedPointKind kind;
  int i;
  /// j for kinds A, B, C; k for kind D.
  int second;

  friend bool operator==(const Hilb2FixedPoint&, const Hilb2FixedPoint&) = default;
};

/// "A(1,2)", "D(2,1)", ...
std::string to_string(const Hilb2FixedPoint& fp);

struct CellRecord {
  Hilb2FixedPoint point;
  int positive_dim;
  int negative_dim;
};

/// Kind A, B, C (each lexicographic in (i, j)), then D lexicographic in (i, k).
std::vector<Hilb2FixedPoint> enumerate_fixed_points(int n, int r);

std::vector<CellRecord> cell_dimensions(int n, int r);

/// Negative-cell generating polynomials per kind; their sum is the Poincaré polynomial.
struct Hilb2Summands {
  IntPolynomial a;
  IntPolynomial b;
  IntPolynomial c;
  IntPolynomial d;

  IntPolynomial total() const { return a + b + c + d; }
};

Hilb2Summands hilb2_poincare_summands(int n, int r);

/// Sum over fixed points of q^{negative_dim}.
IntPolynomial hilb2_poincare_cells(int n, int r);

/// Sum over fixed points of q^{positive_dim}; its value at a prime power q is
/// the number of F_q-points.
IntPolynomial hilb2_count_polynomial(int n, int r);

}  // namespace qpl

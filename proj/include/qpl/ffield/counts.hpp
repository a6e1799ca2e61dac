#pragma once

// Brute-force F_p point counts of Quot schemes of points, and the
// independent counts they are checked against.

#include "qpl/polyseries.hpp"

namespace qpl {

struct QuotCount {
  /// Tuples ((X_1..X_n), (v_1..v_r)) with commuting X_i and F_p[X] <v> = F_p^d.
  BigInt raw_total;
  /// |GL_d(F_p)|
  BigInt gl_order;
  /// raw_total / gl_order: the number of F_p-points of Quot_d.
  BigInt points;
  /// Same, restricted to tuples where every X_i is scalar.
  BigInt scalar_raw;
  BigInt scalar_points;
};

/// prod_{i<d} (p^d - p^i)
BigInt gl_order(int d, const BigInt& p);

/// Enumerates every tuple. Throws SearchBudgetExceeded when p^{d^2 n + d r}
/// exceeds the work budget and NotDivisibleByGL if a raw total is not a
/// multiple of |GL_d|.
QuotCount quot_point_count(int d, int n, int r, int p);

/// |Hilb_2(A^n x P^{r-1})(F_q)| by species: split reduced pairs, Galois
/// conjugate pairs, and points with a tangent direction.
BigInt hilb2_point_count_species(int n, int r, const BigInt& q);

struct BlowupCountReport {
  BigInt brute_force;
  BigInt hilb;
  BigInt z;
  BigInt zprime;
  BigInt assembled;
  BigInt raw_total;
  BigInt gl_order;
};

/// |Quot_2| = |Hilb_2(A^n x P^{r-1})| + |Z| - |Z'| with Z = A^n x Grass(r,2)
/// and Z' a P^2-bundle over Z. Throws MismatchError if brute force disagrees.
BlowupCountReport blowup_count_identity(int n, int r, int p);

/// Quot_2 points where every X_i is scalar, by enumeration. Throws
/// MismatchError unless it equals p^n |Grass(r,2)(F_p)|.
BigInt singular_count(int n, int r, int p);

}  // namespace qpl

#pragma once

// Unital commutative subalgebras of End(F_p^d): closure of a generating set,
// the r-spanning index, and the square-zero spaces W.

#include <span>
#include <string>
#include <vector>

#include "qpl/ffield/matrix.hpp"

namespace qpl {

/// A subalgebra given by a basis in reduced echelon form (matrices read
/// row-major as vectors of length d^2). Equal algebras have equal bases.
struct Algebra {
  int p = 2;
  int d = 1;
  std::vector<MatrixModP> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
  /// Byte string identifying the algebra; usable as a map key.
  std::string key() const;
};

/// Unital algebra generated by pairwise commuting matrices (identity always
/// included). Throws NonCommuting with the first offending pair.
Algebra algebra_closure(std::span<const MatrixModP> gens, int p, int d);

/// An r-tuple of vectors whose submodule A * <v_1..v_r> is tested against V.
struct SpanningWitness {
  std::vector<VectorModP> vectors;
};

/// True if A * <witness> = F_p^d.
bool spans(const Algebra& algebra, const SpanningWitness& witness);

/// Smallest r such that some r-dimensional U has A * U = F_p^d. Throws
/// NotSpanning if A * V is a proper subspace and SearchBudgetExceeded if the
/// number of subspaces to try exceeds the work budget.
int spanning_index(const Algebra& algebra);

/// W_{d-k,k}: entries in the first d-k rows and last k columns.
struct WSpace {
  int d;
  int k;
  std::vector<MatrixModP> basis;
};

/// Throws InvalidParams unless 1 <= k < d.
WSpace w_space(int d, int k, int p = 2);

/// Structural test for <Id> + W_{d-r,r} up to conjugation. Applies to
/// algebras whose elements are upper triangular with constant diagonal (as
/// produced from strictly upper triangular generators): the part N with zero
/// diagonal must satisfy N * N = 0, dim common kernel >= d - r and
/// dim sum of images <= d - r. Returns false for any other algebra.
bool matches_w_shape(const Algebra& algebra, int r);

}  // namespace qpl

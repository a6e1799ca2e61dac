#pragma once

// Closed-form Poincaré polynomials and dimension counts for Quot schemes of
// points: Hilb_2(A^n x P^{r-1}), Quot_2 via the blowup square, stable limits,
// the R-loci, l_max, and the dimension window of the loci Z_{n,r,l}.

#include <cstddef>

#include <gmpxx.h>

#include "qpl/polyseries.hpp"

namespace qpl {

using Rational = mpq_class;

struct QuotParams {
  int n = 1;
  int r = 1;
  int d = 1;

  static QuotParams make(int n, int r, int d);
};

/// (q^r-1)(q^{n+r} + q^{n+r-1} + q^{r+1} - q^2 - q - 1) / ((q-1)^2 (q+1))
IntPolynomial hilb2_series_closed(int n, int r);

/// Poincaré polynomial of Grass(r, 2); zero for r < 2.
IntPolynomial grass_r2_series(int r);

/// grass_r2_series(r) * (1 + q + q^2): the P^2-bundle over the singular locus.
IntPolynomial zprime_series(int r);

/// (q^r-1)(q^{n+r} + q^{n+r-1} - q^r - 1) / ((q-1)^2 (q+1))
IntPolynomial quot2_series(int n, int r);

/// (1-q^{2r})/((1-q^2)(1-q)) + q^{n+r-1} (q^r-1)/(1-q)^2, evaluated as a
/// polynomial. Independent grouping of quot2_series.
IntPolynomial quot2_series_grouped(int n, int r);

/// hilb2 + grass(r,2) - zprime. Throws NegativeCoefficient if the result has one.
IntPolynomial blowup_assemble(int n, int r);

/// (1 - q^{2r}) / ((1 - q^2)(1 - q))
TruncatedSeries stable_quot2_series(int r, std::size_t precision);

struct DegreeAgreement {
  /// Largest exponent through which quot2 and its stable limit agree.
  std::size_t agrees_to;
  std::size_t first_mismatch;
};

DegreeAgreement degree_agreement(int n, int r);

/// 1 + q + ... + q^{r-1}
IntPolynomial quot_d1_series(int n, int r);

/// Largest dimension of an r-spanning commutative subalgebra of d x d matrices.
/// Throws Unclassified for d = 3, r >= 2 and InvalidParams outside 1 <= r <= d.
int lmax(int d, int r);

struct LociDimBounds {
  BigInt lower;
  Rational upper;
};

/// n l + r d - d^2 <= dim Z_{n,r,l} <= that + d^4/4, assuming the locus is
/// nonempty. Requires n >= d^2 and 0 <= l <= d^2.
LociDimBounds loci_dim_bounds(int n, int r, int d, int l);

/// Lower bound on the codimension of the complement of the maximal locus:
/// n - d^4/4. Grows with slope 1 in n.
Rational complement_codim_lower_bound(int n, int r, int d);

enum class RLocusRegime {
  /// 1 < r < (d+1)/2: Grass(n r, d - r)
  Small,
  /// d = 2k, r >= k: Grass(r, k) x Grass(n k, k)
  EvenLarge,
  /// d = 2k+1, r >= k+1: sum of two Grassmannian products
  OddLarge,
};

/// Throws RegimeError outside all three regimes. EvenLarge is preferred when
/// d is even and r >= d/2 (the two formulas agree at r = d/2).
RLocusRegime r_locus_regime(int d, int r);

IntPolynomial r_locus_poincare(int d, int r, int n);

}  // namespace qpl

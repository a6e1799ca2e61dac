#pragma once

// Fixed points and tangent characters for the torus action on the loci R°
// built from an m-subset S of the r generators and an s-subset P of the
// positions [n] x [m] (position (i, j) stands for X_i e_{s_j}).
//
// The cell generating polynomial is compared against the same count on
// Grass(r, m) x Grass(n*m, s), where e_{i,j} carries weight gamma_i + lambda_j.

#include <utility>
#include <vector>

#include "qpl/polyseries.hpp"

namespace qpl {

struct RCellParams {
  int r = 0;
  int m = 0;
  int s = 0;
  int n = 0;

  /// Throws InvalidParams unless 0 <= m <= r, 0 <= s <= n*m, n >= 1.
  static RCellParams make(int r, int m, int s, int n);
};

/// lambda: r strictly increasing positive weights on the generators.
/// gamma: n weights on the variables with gamma_1 > lambda_r and
/// gamma_i - gamma_{i-1} > lambda_r.
struct WeightAssignment {
  std::vector<long> lambda;
  std::vector<long> gamma;

  /// lambda_j = j, gamma_i = (r + 1) i.
  static WeightAssignment standard(int r, int n);
  bool admissible() const;
};

struct RCellFixedPoint {
  /// s_1 < ... < s_m, 1-based.
  std::vector<int> generators;
  /// (i, j) in [n] x [m], sorted lexicographically, 1-based.
  std::vector<std::pair<int, int>> positions;

  friend bool operator==(const RCellFixedPoint&, const RCellFixedPoint&) = default;
};

/// All C(r,m) * C(nm,s) fixed points; generator subsets in lexicographic
/// order, positions lexicographic within each.
std::vector<RCellFixedPoint> enumerate_r_fixed_points(const RCellParams& params);

struct SignProfile {
  int positive = 0;
  int negative = 0;
};

/// Counts tangent characters by sign at a fixed point of R°.
/// Throws ZeroCharacter if any character vanishes.
SignProfile tangent_sign_profile(const RCellParams& params, const RCellFixedPoint& fp,
                                 const WeightAssignment& w);

/// Same count on Grass(r,m) x Grass(nm,s) at the fixed point with the same labels.
SignProfile product_sign_profile(const RCellParams& params, const RCellFixedPoint& fp,
                                 const WeightAssignment& w);

enum class CellSide { Negative, Positive };

/// Sum over fixed points of q^{negative count} (or q^{positive count}).
IntPolynomial r_circ_poincare(const RCellParams& params, const WeightAssignment& w,
                              CellSide side = CellSide::Negative);

IntPolynomial product_grassmannian_profile(const RCellParams& params, const WeightAssignment& w,
                                           CellSide side = CellSide::Negative);

/// gaussian(r, m) * gaussian(n m, s)
IntPolynomial r_circ_expected(const RCellParams& params);

}  // namespace qpl

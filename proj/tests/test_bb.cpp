#include <gtest/gtest.h>

#include <vector>

#include "qpl/bb_hilb2.hpp"
#include "qpl/bb_rcells.hpp"
#include "qpl/errors.hpp"
#include "qpl/grassmann.hpp"

using qpl::FixedPointKind;
using qpl::Hilb2FixedPoint;
using qpl::IntPolynomial;

namespace {

// Tangent space at a reduced pair {x, y} is T_x + T_y; at 0 x [e_i] the
// characters are lambda_k on A^n (all positive) and gamma_j - gamma_i on
// P^{r-1}, positive exactly when j > i.
std::pair<int, int> reduced_pair_dims(int n, int r, int i, int j) {
  auto at = [&](int idx) { return std::pair<int, int>{n + (r - idx), idx - 1}; };
  return {at(i).first + at(j).first, at(i).second + at(j).second};
}

std::vector<qpl::WeightAssignment> weight_sets(int r, int n) {
  std::vector<qpl::WeightAssignment> out{qpl::WeightAssignment::standard(r, n)};
  qpl::WeightAssignment sparse;
  const long sparse_lambda[] = {1, 3, 4, 9};
  for (int j = 0; j < r; ++j) sparse.lambda.push_back(sparse_lambda[j]);
  long g = sparse.lambda.back() + 2;
  for (int i = 1; i <= n; ++i) {
    sparse.gamma.push_back(g);
    g += sparse.lambda.back() + 1 + i;
  }
  out.push_back(sparse);
  qpl::WeightAssignment wide;
  for (int j = 1; j <= r; ++j) wide.lambda.push_back(5 * j + j * j);
  for (int i = 1; i <= n; ++i) wide.gamma.push_back(7 * (wide.lambda.back() + 1) * i);
  out.push_back(wide);
  return out;
}

}  // namespace

TEST(Hilb2FixedPoints, Examples) {
  const auto pts = qpl::enumerate_fixed_points(1, 2);
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(qpl::to_string(p));
  EXPECT_EQ(names, (std::vector<std::string>{"A(1,2)", "B(1,2)", "C(2,1)", "D(1,1)", "D(2,1)"}));
  ASSERT_EQ(qpl::enumerate_fixed_points(1, 1).size(), 1u);
  EXPECT_EQ(qpl::enumerate_fixed_points(1, 1)[0], (Hilb2FixedPoint{FixedPointKind::D, 1, 1}));
  EXPECT_EQ(qpl::enumerate_fixed_points(3, 2).size(), 9u);
  EXPECT_THROW(qpl::enumerate_fixed_points(0, 2), qpl::InvalidParams);
  EXPECT_THROW(qpl::enumerate_fixed_points(1, 0), qpl::InvalidParams);
}

TEST(Hilb2FixedPoints, CountFormula) {
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= 6; ++r)
      EXPECT_EQ(qpl::enumerate_fixed_points(n, r).size(), static_cast<std::size_t>(3 * r * (r - 1) / 2 + r * n));
}

TEST(Hilb2Cells, Examples) {
  const auto cells = qpl::cell_dimensions(1, 2);
  std::vector<std::pair<int, int>> dims;
  for (const auto& c : cells) dims.emplace_back(c.positive_dim, c.negative_dim);
  EXPECT_EQ(dims, (std::vector<std::pair<int, int>>{{3, 1}, {4, 0}, {2, 2}, {3, 1}, {2, 2}}));
  EXPECT_EQ(cells[2].point, (Hilb2FixedPoint{FixedPointKind::C, 2, 1}));
  EXPECT_EQ(cells[1].point, (Hilb2FixedPoint{FixedPointKind::B, 1, 2}));
  const auto single = qpl::cell_dimensions(1, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].positive_dim, 2);
  EXPECT_EQ(single[0].negative_dim, 0);
}

TEST(Hilb2Cells, ReducedPairsMatchTangentWeights) {
  for (int n = 1; n <= 5; ++n) {
    for (int r = 2; r <= 5; ++r) {
      for (const auto& c : qpl::cell_dimensions(n, r)) {
        if (c.point.kind != FixedPointKind::A) continue;
        const auto [pos, neg] = reduced_pair_dims(n, r, c.point.i, c.point.second);
        EXPECT_EQ(c.positive_dim, pos);
        EXPECT_EQ(c.negative_dim, neg);
      }
    }
  }
}

TEST(Hilb2Cells, DimensionsSumToTotalDimension) {
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= 8; ++r)
      for (const auto& c : qpl::cell_dimensions(n, r)) {
        EXPECT_EQ(c.positive_dim + c.negative_dim, 2 * (n + r - 1));
        EXPECT_GE(c.negative_dim, 0);
        EXPECT_GE(c.positive_dim, 0);
      }
}

TEST(Hilb2Polynomials, Examples) {
  EXPECT_EQ(qpl::hilb2_poincare_cells(1, 2), IntPolynomial({1, 2, 2}));
  EXPECT_EQ(qpl::hilb2_poincare_cells(1, 1), IntPolynomial({1}));
  EXPECT_EQ(qpl::hilb2_count_polynomial(1, 2), IntPolynomial({0, 0, 2, 2, 1}));
  EXPECT_EQ(qpl::hilb2_count_polynomial(1, 1), IntPolynomial({0, 0, 1}));
  EXPECT_EQ(qpl::eval(qpl::hilb2_count_polynomial(1, 2), 2), 40);
}

TEST(Hilb2Polynomials, SummandsAddUp) {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 5; ++r)
      EXPECT_EQ(qpl::hilb2_poincare_summands(n, r).total(), qpl::hilb2_poincare_cells(n, r));
}

TEST(RCells, EnumerationExamples) {
  EXPECT_EQ(qpl::enumerate_r_fixed_points(qpl::RCellParams::make(2, 2, 2, 2)).size(), 6u);
  const auto one = qpl::enumerate_r_fixed_points(qpl::RCellParams::make(1, 1, 0, 1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].generators, std::vector<int>{1});
  EXPECT_TRUE(one[0].positions.empty());
  EXPECT_EQ(qpl::enumerate_r_fixed_points(qpl::RCellParams::make(3, 1, 2, 2)).size(), 3u);
  EXPECT_THROW(qpl::RCellParams::make(2, 3, 0, 1), qpl::InvalidParams);
  EXPECT_THROW(qpl::RCellParams::make(2, 1, 3, 2), qpl::InvalidParams);
}

TEST(RCells, SignProfileExamples) {
  const auto params = qpl::RCellParams::make(2, 1, 0, 1);
  const qpl::WeightAssignment w{{1, 2}, {3}};
  ASSERT_TRUE(w.admissible());
  const auto first = qpl::tangent_sign_profile(params, {{1}, {}}, w);
  EXPECT_EQ(first.positive, 0);
  EXPECT_EQ(first.negative, 1);
  const auto second = qpl::tangent_sign_profile(params, {{2}, {}}, w);
  EXPECT_EQ(second.positive, 1);
  EXPECT_EQ(second.negative, 0);
}

TEST(RCells, InadmissibleWeightsAreRejected) {
  const auto params = qpl::RCellParams::make(2, 1, 0, 1);
  const qpl::WeightAssignment bad{{1, 2}, {2}};
  EXPECT_FALSE(bad.admissible());
  EXPECT_THROW(qpl::r_circ_poincare(params, bad), qpl::InvalidParams);
}

TEST(RCells, PoincareExamples) {
  const auto p2222 = qpl::RCellParams::make(2, 2, 2, 2);
  const qpl::WeightAssignment w{{1, 2}, {3, 6}};
  EXPECT_EQ(qpl::r_circ_poincare(p2222, w), IntPolynomial({1, 1, 2, 1, 1}));
  EXPECT_EQ(qpl::product_grassmannian_profile(p2222, w), IntPolynomial({1, 1, 2, 1, 1}));
  const auto p3221 = qpl::RCellParams::make(3, 2, 2, 1);
  EXPECT_EQ(qpl::r_circ_poincare(p3221, qpl::WeightAssignment::standard(3, 1)), IntPolynomial({1, 1, 1}));
  const auto p1101 = qpl::RCellParams::make(1, 1, 0, 1);
  EXPECT_EQ(qpl::r_circ_poincare(p1101, qpl::WeightAssignment::standard(1, 1)), IntPolynomial({1}));
  const auto p2111 = qpl::RCellParams::make(2, 1, 1, 1);
  EXPECT_EQ(qpl::product_grassmannian_profile(p2111, qpl::WeightAssignment::standard(2, 1)),
            IntPolynomial({1, 1}));
}

TEST(RCells, WeightIndependenceAndBothSides) {
  for (int r = 1; r <= 4; ++r) {
    for (int m = 0; m <= r; ++m) {
      for (int n = 1; n <= 3; ++n) {
        for (int s = 0; s <= n * m; ++s) {
          const auto params = qpl::RCellParams::make(r, m, s, n);
          const IntPolynomial expected = qpl::r_circ_expected(params);
          for (const auto& w : weight_sets(r, n)) {
            ASSERT_TRUE(w.admissible());
            ASSERT_EQ(qpl::r_circ_poincare(params, w), expected) << r << m << s << n;
            ASSERT_EQ(qpl::r_circ_poincare(params, w, qpl::CellSide::Positive), expected);
            ASSERT_EQ(qpl::product_grassmannian_profile(params, w), expected);
            ASSERT_EQ(qpl::product_grassmannian_profile(params, w, qpl::CellSide::Positive), expected);
          }
        }
      }
    }
  }
}

TEST(RCells, ProfilesAgreePointByPoint) {
  const auto params = qpl::RCellParams::make(4, 2, 3, 3);
  const auto w = qpl::WeightAssignment::standard(4, 3);
  for (const auto& fp : qpl::enumerate_r_fixed_points(params)) {
    const auto a = qpl::tangent_sign_profile(params, fp, w);
    const auto b = qpl::product_sign_profile(params, fp, w);
    EXPECT_EQ(a.positive, b.positive);
    EXPECT_EQ(a.negative, b.negative);
    EXPECT_EQ(a.positive + a.negative, 2 * (4 - 2) + 3 * (6 - 3));
  }
}

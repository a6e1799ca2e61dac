#include <gtest/gtest.h>

#include "qpl/bb_hilb2.hpp"
#include "qpl/errors.hpp"
#include "qpl/grassmann.hpp"
#include "qpl/quot_formulas.hpp"

using qpl::IntPolynomial;
using qpl::Rational;

namespace {

Rational frac(long num, long den) {
  Rational x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace

TEST(Hilb2Closed, Examples) {
  EXPECT_EQ(qpl::hilb2_series_closed(1, 1), IntPolynomial({1}));
  EXPECT_EQ(qpl::hilb2_series_closed(1, 2), IntPolynomial({1, 2, 2}));
  EXPECT_EQ(qpl::hilb2_series_closed(2, 1), IntPolynomial({1, 1}));
  EXPECT_THROW(qpl::hilb2_series_closed(0, 1), qpl::InvalidParams);
}

TEST(Hilb2Closed, MatchesCellSum) {
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= 10; ++r)
      EXPECT_EQ(qpl::hilb2_series_closed(n, r), qpl::hilb2_poincare_cells(n, r)) << n << "," << r;
}

TEST(SingularLocus, GrassAndBundleSeries) {
  EXPECT_EQ(qpl::grass_r2_series(2), IntPolynomial({1}));
  EXPECT_EQ(qpl::grass_r2_series(3), IntPolynomial({1, 1, 1}));
  EXPECT_TRUE(qpl::grass_r2_series(1).is_zero());
  EXPECT_EQ(qpl::zprime_series(2), IntPolynomial({1, 1, 1}));
  EXPECT_TRUE(qpl::zprime_series(1).is_zero());
  EXPECT_EQ(qpl::zprime_series(3), IntPolynomial({1, 2, 3, 2, 1}));
}

TEST(Quot2, Examples) {
  EXPECT_EQ(qpl::quot2_series(2, 1), IntPolynomial({1, 1}));
  EXPECT_EQ(qpl::quot2_series(1, 1), IntPolynomial({1}));
  EXPECT_EQ(qpl::quot2_series(1, 2), IntPolynomial({1, 1, 1}));
  EXPECT_EQ(qpl::blowup_assemble(2, 1), IntPolynomial({1, 1}));
  EXPECT_EQ(qpl::blowup_assemble(1, 2), IntPolynomial({1, 1, 1}));
}

TEST(Quot2, ThreeRoutesAgree) {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= 10; ++r) {
      const IntPolynomial q = qpl::quot2_series(n, r);
      EXPECT_EQ(qpl::blowup_assemble(n, r), q);
      EXPECT_EQ(qpl::quot2_series_grouped(n, r), q);
      EXPECT_TRUE(q.has_nonnegative_coeffs());
      const std::size_t expected_degree = (n == 1 && r == 1) ? 0 : static_cast<std::size_t>(n + 2 * r - 3);
      EXPECT_EQ(q.degree(), expected_degree);
    }
  }
}

TEST(Quot2, StableLimit) {
  auto coeffs = [](const qpl::TruncatedSeries& s) {
    std::vector<long> out;
    for (const auto& c : s.coeffs()) out.push_back(c.get_si());
    return out;
  };
  EXPECT_EQ(coeffs(qpl::stable_quot2_series(1, 6)), (std::vector<long>{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(coeffs(qpl::stable_quot2_series(2, 5)), (std::vector<long>{1, 1, 2, 2, 2}));
  for (int r = 1; r <= 10; ++r)
    for (std::size_t prec : {1u, 7u, 50u})
      EXPECT_EQ(qpl::stable_quot2_series(r, prec), qpl::target_ring_series(2, r, prec));
}

TEST(Quot2, DegreeAgreement) {
  auto check = [](int n, int r, std::size_t to, std::size_t mismatch) {
    const auto a = qpl::degree_agreement(n, r);
    EXPECT_EQ(a.agrees_to, to);
    EXPECT_EQ(a.first_mismatch, mismatch);
  };
  check(2, 1, 1, 2);
  check(1, 1, 0, 1);
  check(1, 2, 1, 2);
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= 10; ++r) check(n, r, static_cast<std::size_t>(n + r - 2), static_cast<std::size_t>(n + r - 1));
}

TEST(QuotD1, Examples) {
  EXPECT_EQ(qpl::quot_d1_series(5, 1), IntPolynomial({1}));
  EXPECT_EQ(qpl::quot_d1_series(1, 3), IntPolynomial({1, 1, 1}));
  for (int r = 1; r <= 6; ++r)
    EXPECT_EQ(qpl::target_ring_series(1, r, 12), qpl::TruncatedSeries::from_polynomial(qpl::quot_d1_series(3, r), 12));
}

TEST(Lmax, Examples) {
  EXPECT_EQ(qpl::lmax(4, 2), 5);
  EXPECT_EQ(qpl::lmax(6, 3), 10);
  EXPECT_EQ(qpl::lmax(5, 3), 7);
  EXPECT_EQ(qpl::lmax(2, 1), 2);
  EXPECT_EQ(qpl::lmax(2, 2), 2);
  EXPECT_EQ(qpl::lmax(1, 1), 1);
  EXPECT_EQ(qpl::lmax(7, 1), 7);
  EXPECT_THROW(qpl::lmax(3, 2), qpl::Unclassified);
  EXPECT_THROW(qpl::lmax(3, 3), qpl::Unclassified);
  EXPECT_THROW(qpl::lmax(3, 4), qpl::InvalidParams);
  EXPECT_THROW(qpl::lmax(3, 0), qpl::InvalidParams);
}

TEST(Lmax, RegimesMeetAndMatchWSpaces) {
  for (int d = 4; d <= 12; ++d) {
    for (int r = 2; 2 * r < d + 1; ++r) EXPECT_EQ(qpl::lmax(d, r), r * (d - r) + 1);
    if (d % 2 == 0) {
      const int k = d / 2;
      EXPECT_EQ(qpl::lmax(d, k), k * (d - k) + 1);
      for (int r = k; r <= d; ++r) EXPECT_EQ(qpl::lmax(d, r), k * k + 1);
    } else {
      const int k = d / 2;
      for (int r = k + 1; r <= d; ++r) EXPECT_EQ(qpl::lmax(d, r), k * (k + 1) + 1);
    }
  }
}

TEST(LociBounds, Examples) {
  const auto a = qpl::loci_dim_bounds(16, 1, 2, 2);
  EXPECT_EQ(a.lower, 30);
  EXPECT_EQ(a.upper, Rational(34));
  const auto b = qpl::loci_dim_bounds(25, 2, 2, 0);
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, Rational(4));
  EXPECT_EQ(qpl::loci_dim_bounds(9, 1, 3, 1).upper - qpl::loci_dim_bounds(9, 1, 3, 1).lower, frac(81, 4));
  EXPECT_THROW(qpl::loci_dim_bounds(3, 1, 2, 1), qpl::InvalidParams);
  EXPECT_THROW(qpl::loci_dim_bounds(16, 1, 2, 5), qpl::InvalidParams);
}

TEST(LociBounds, ComplementCodimensionGrowsWithSlopeOne) {
  for (int d : {2, 4, 5}) {
    const int r = 1;
    const int n0 = d * d;
    const Rational c0 = qpl::complement_codim_lower_bound(n0, r, d);
    EXPECT_EQ(c0, Rational(n0) - frac(d * d * d * d, 4));
    for (int step = 1; step <= 5; ++step) {
      EXPECT_EQ(qpl::complement_codim_lower_bound(n0 + step, r, d) - c0, Rational(step));
    }
  }
}

TEST(RLocus, Examples) {
  EXPECT_EQ(qpl::r_locus_regime(5, 2), qpl::RLocusRegime::Small);
  EXPECT_EQ(qpl::r_locus_poincare(5, 2, 2), IntPolynomial({1, 1, 1, 1}));
  EXPECT_EQ(qpl::r_locus_poincare(4, 2, 1), IntPolynomial({1}));
  EXPECT_EQ(qpl::r_locus_poincare(4, 3, 2), IntPolynomial({1, 1, 1}) * IntPolynomial({1, 1, 2, 1, 1}));
  EXPECT_EQ(qpl::r_locus_regime(5, 3), qpl::RLocusRegime::OddLarge);
  EXPECT_EQ(qpl::r_locus_regime(6, 3), qpl::RLocusRegime::EvenLarge);
}

TEST(RLocus, EvenBoundaryAgreesWithSmallRegimeFormula) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 3; ++n) {
      const IntPolynomial even = qpl::r_locus_poincare(2 * k, k, n);
      EXPECT_EQ(even, qpl::gaussian_binomial(n * k, 2 * k - k));
    }
  }
}

TEST(RLocus, OddRegimeIsTheSumOfTwoProducts) {
  for (int k = 1; k <= 3; ++k) {
    const int d = 2 * k + 1;
    for (int r = k + 1; r <= d; ++r) {
      for (int n = 1; n <= 3; ++n) {
        const IntPolynomial expected =
            qpl::grass_poincare_or_empty(r, k) * qpl::grass_poincare_or_empty(n * k, k + 1) +
            qpl::grass_poincare_or_empty(r, k + 1) * qpl::grass_poincare_or_empty(n * (k + 1), k);
        EXPECT_EQ(qpl::r_locus_poincare(d, r, n), expected);
      }
    }
  }
}

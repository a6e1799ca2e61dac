#include "qpl/grassmann.hpp"

#include <string>

namespace qpl {

namespace {

/// 1 - q^k
IntPolynomial one_minus_q_pow(std::size_t k) {
  return IntPolynomial::constant(1) - IntPolynomial::monomial(1, k);
}

}  // namespace

GrassParams GrassParams::make(int ambient, int quotient_dim) {
  if (ambient < 0 || quotient_dim < 0 || quotient_dim > ambient) {
    throw InvalidParams("Grass(" + std::to_string(ambient) + ", " + std::to_string(quotient_dim) +
                        ") needs 0 <= b <= a");
  }
  return GrassParams{ambient, quotient_dim};
}

IntPolynomial gaussian_binomial(const GrassParams& g) {
  const int a = g.ambient;
  const int b = g.quotient_dim;
  IntPolynomial num = IntPolynomial::constant(1);
  IntPolynomial den = IntPolynomial::constant(1);
  for (int i = 1; i <= b; ++i) {
    num *= one_minus_q_pow(static_cast<std::size_t>(a - b + i));
    den *= one_minus_q_pow(static_cast<std::size_t>(i));
  }
  return exact_div(num, den);
}

IntPolynomial gaussian_binomial(int a, int b) { return gaussian_binomial(GrassParams::make(a, b)); }

IntPolynomial grass_poincare_or_empty(int a, int b) {
  if (a < 0 || b < 0) throw InvalidParams("Grassmannian parameters must be nonnegative");
  if (b > a) return {};
  return gaussian_binomial(a, b);
}

BigInt grass_point_count(int a, int b, const BigInt& q) {
  if (q < 2) throw InvalidParams("field size must be at least 2");
  return eval(grass_poincare_or_empty(a, b), q);
}

TruncatedSeries stable_grass_series(int b, std::size_t precision) {
  if (b < 0) throw InvalidParams("stable Grassmannian needs b >= 0");
  IntPolynomial den = IntPolynomial::constant(1);
  for (int i = 1; i <= b; ++i) den *= one_minus_q_pow(static_cast<std::size_t>(i));
  return series_from_rational(IntPolynomial::constant(1), den, precision);
}

TruncatedSeries target_ring_series(int d, int r, std::size_t precision) {
  if (d < 1 || r < 1) throw InvalidParams("target ring needs d >= 1 and r >= 1");
  IntPolynomial den = one_minus_q_pow(static_cast<std::size_t>(d));
  for (int i = 1; i < d; ++i) den *= one_minus_q_pow(static_cast<std::size_t>(i));
  const IntPolynomial num = one_minus_q_pow(static_cast<std::size_t>(d) * static_cast<std::size_t>(r));
  return series_from_rational(num, den, precision);
}

}  // namespace qpl

#include "qpl/quot_formulas.hpp"

#include <string>

#include "qpl/grassmann.hpp"

namespace qpl {

namespace {

IntPolynomial q_pow(std::size_t e) { return IntPolynomial::monomial(1, e); }
IntPolynomial one() { return IntPolynomial::constant(1); }
IntPolynomial q() { return q_pow(1); }
std::size_t as_size(int x) { return static_cast<std::size_t>(x); }

/// (q - 1)^2 (q + 1)
IntPolynomial common_denominator() {
  const IntPolynomial qm1 = q() - one();
  return qm1 * qm1 * (q() + one());
}

void check_nr(int n, int r) {
  if (n < 1 || r < 1) throw InvalidParams("need n >= 1 and r >= 1");
}

}  // namespace

QuotParams QuotParams::make(int n, int r, int d) {
  if (n < 1 || r < 1 || d < 1) throw InvalidParams("need n, r, d >= 1");
  return QuotParams{n, r, d};
}

IntPolynomial hilb2_series_closed(int n, int r) {
  check_nr(n, r);
  const std::size_t R = as_size(r);
  const std::size_t N = as_size(n);
  const IntPolynomial left = q_pow(R) - one();
  const IntPolynomial right =
      q_pow(N + R) + q_pow(N + R - 1) + q_pow(R + 1) - q_pow(2) - q() - one();
  return exact_div(left * right, common_denominator());
}

IntPolynomial grass_r2_series(int r) {
  if (r < 1) throw InvalidParams("need r >= 1");
  if (r < 2) return {};
  const std::size_t R = as_size(r);
  return exact_div((q_pow(R) - one()) * (q_pow(R - 1) - one()), common_denominator());
}

IntPolynomial zprime_series(int r) {
  return grass_r2_series(r) * IntPolynomial{1, 1, 1};
}

IntPolynomial quot2_series(int n, int r) {
  check_nr(n, r);
  const std::size_t R = as_size(r);
  const std::size_t N = as_size(n);
  const IntPolynomial left = q_pow(R) - one();
  const IntPolynomial right = q_pow(N + R) + q_pow(N + R - 1) - q_pow(R) - one();
  return exact_div(left * right, common_denominator());
}

IntPolynomial quot2_series_grouped(int n, int r) {
  check_nr(n, r);
  const std::size_t R = as_size(r);
  const std::size_t N = as_size(n);
  const IntPolynomial stable_num = one() - q_pow(2 * R);
  const IntPolynomial tail_num = q_pow(N + R - 1) * (q_pow(R) - one()) * (one() + q());
  return exact_div(stable_num + tail_num, (one() - q_pow(2)) * (one() - q()));
}

IntPolynomial blowup_assemble(int n, int r) {
  check_nr(n, r);
  IntPolynomial out = hilb2_series_closed(n, r) + grass_r2_series(r) - zprime_series(r);
  if (!out.has_nonnegative_coeffs()) {
    throw NegativeCoefficient("blowup assembly produced " + to_string(out));
  }
  return out;
}

TruncatedSeries stable_quot2_series(int r, std::size_t precision) {
  if (r < 1) throw InvalidParams("need r >= 1");
  const IntPolynomial num = one() - q_pow(2 * as_size(r));
  const IntPolynomial den = (one() - q_pow(2)) * (one() - q());
  return series_from_rational(num, den, precision);
}

DegreeAgreement degree_agreement(int n, int r) {
  const IntPolynomial finite = quot2_series(n, r);
  // The two sides differ by q^{n+r-1} (q^r - 1)/(1-q)^2, so a window a little
  // past n + r always contains the first mismatch.
  const std::size_t window = as_size(n + r) + 2;
  const TruncatedSeries stable = stable_quot2_series(r, window + 1);
  const Agreement a = agree_up_to(finite, stable, window);
  if (a.agrees) throw Error("quot2 agrees with its stable limit past the expected window");
  return DegreeAgreement{*a.first_mismatch - 1, *a.first_mismatch};
}

IntPolynomial quot_d1_series(int n, int r) {
  check_nr(n, r);
  return IntPolynomial::q_integer(as_size(r));
}

int lmax(int d, int r) {
  if (d < 1 || r < 1 || r > d) {
    throw InvalidParams("lmax needs 1 <= r <= d (got d=" + std::to_string(d) +
                        ", r=" + std::to_string(r) + ")");
  }
  if (r == 1 || d <= 2) return d;
  if (d == 3) throw Unclassified("lmax is not classified for d = 3, r >= 2");
  if (2 * r < d + 1) return r * (d - r) + 1;
  const int k = d / 2;
  if (d % 2 == 0) return k * k + 1;
  return k * (k + 1) + 1;
}

LociDimBounds loci_dim_bounds(int n, int r, int d, int l) {
  const QuotParams p = QuotParams::make(n, r, d);
  if (p.n < p.d * p.d) throw InvalidParams("loci bounds need n >= d^2");
  if (l < 0 || l > p.d * p.d) throw InvalidParams("loci bounds need 0 <= l <= d^2");
  const BigInt D = p.d;
  BigInt lower = BigInt(p.n) * l + BigInt(p.r) * D - D * D;
  Rational upper = Rational(lower) + Rational(D * D * D * D, 4);
  upper.canonicalize();
  return LociDimBounds{std::move(lower), std::move(upper)};
}

Rational complement_codim_lower_bound(int n, int r, int d) {
  const int top = lmax(d, r);
  const LociDimBounds max_locus = loci_dim_bounds(n, r, d, top);
  const LociDimBounds below = loci_dim_bounds(n, r, d, top - 1);
  Rational out = Rational(max_locus.lower) - below.upper;
  out.canonicalize();
  return out;
}

RLocusRegime r_locus_regime(int d, int r) {
  if (d < 1 || r < 1) throw RegimeError("R-loci need d >= 1 and r >= 1");
  if (d % 2 == 0 && 2 * r >= d) return RLocusRegime::EvenLarge;
  if (r > 1 && 2 * r < d + 1) return RLocusRegime::Small;
  if (d % 2 == 1 && 2 * r >= d + 1) return RLocusRegime::OddLarge;
  throw RegimeError("no closed form for R-locus with d=" + std::to_string(d) +
                    ", r=" + std::to_string(r));
}

IntPolynomial r_locus_poincare(int d, int r, int n) {
  if (n < 1) throw InvalidParams("need n >= 1");
  switch (r_locus_regime(d, r)) {
    case RLocusRegime::Small:
      return grass_poincare_or_empty(n * r, d - r);
    case RLocusRegime::EvenLarge: {
      const int k = d / 2;
      return grass_poincare_or_empty(r, k) * grass_poincare_or_empty(n * k, k);
    }
    case RLocusRegime::OddLarge: {
      const int k = d / 2;
      return grass_poincare_or_empty(r, k) * grass_poincare_or_empty(n * k, k + 1) +
             grass_poincare_or_empty(r, k + 1) * grass_poincare_or_empty(n * (k + 1), k);
    }
  }
  throw RegimeError("unreachable");
}

}  // namespace qpl

#pragma once

// Exact integer polynomials and truncated power series in one variable q.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qpl/errors.hpp"

namespace qpl {

using BigInt = mpz_class;

/// Dense polynomial with exact integer coefficients, ascending in q.
///
/// The coefficient list is kept canonical: the last entry is nonzero, and
/// the zero polynomial is the empty list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// c * q^exponent
  static IntPolynomial monomial(const BigInt& c, std::size_t exponent);
  /// 1 + q + ... + q^(n-1); zero for n == 0.
  static IntPolynomial q_integer(std::size_t n);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of q^exponent; zero past the degree.
  BigInt coeff(std::size_t exponent) const;
  bool has_nonnegative_coeffs() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Raised by exact_div when the division leaves a remainder.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(IntPolynomial remainder);
  const IntPolynomial& remainder() const noexcept { return remainder_; }

 private:
  IntPolynomial remainder_;
};

/// Quotient of num by den; throws NotDivisible unless den * quotient == num.
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

/// Horner evaluation at an integer.
BigInt eval(const IntPolynomial& p, const BigInt& x);

/// Human-readable form such as "1 + 2q + q^2"; "0" for zero.
std::string to_string(const IntPolynomial& p, const std::string& var = "q");

/// Power series known for exponents 0 .. precision-1.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Pads with zeros or truncates coeffs to exactly `precision` entries.
  TruncatedSeries(std::vector<BigInt> coeffs, std::size_t precision);

  static TruncatedSeries from_polynomial(const IntPolynomial& p, std::size_t precision);

  std::size_t precision() const noexcept { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& coeff(std::size_t exponent) const;
  TruncatedSeries truncated(std::size_t precision) const;

  /// Arithmetic keeps the smaller of the two precisions.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigInt> coeffs_;
};

std::string to_string(const TruncatedSeries& s, const std::string& var = "q");

/// The series s with den * s == num modulo q^precision.
TruncatedSeries series_from_rational(const IntPolynomial& num, const IntPolynomial& den,
                                     std::size_t precision);

struct Agreement {
  bool agrees = true;
  std::optional<std::size_t> first_mismatch;
};

/// Compares coefficients for exponents 0..deg. Throws InsufficientPrecision
/// when a series operand is not known up to deg.
Agreement agree_up_to(const IntPolynomial& a, const IntPolynomial& b, std::size_t deg);
Agreement agree_up_to(const IntPolynomial& a, const TruncatedSeries& b, std::size_t deg);
Agreement agree_up_to(const TruncatedSeries& a, const IntPolynomial& b, std::size_t deg);
Agreement agree_up_to(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t deg);

}  // namespace qpl

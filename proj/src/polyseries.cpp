#include "qpl/polyseries.hpp"

#include <algorithm>
#include <sstream>

namespace qpl {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t exponent) {
  std::vector<BigInt> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::q_integer(std::size_t n) {
  return IntPolynomial(std::vector<BigInt>(n, BigInt(1)));
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPolynomial::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
}

bool IntPolynomial::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

NotDivisible::NotDivisible(IntPolynomial remainder)
    : Error("polynomial division leaves remainder " + to_string(remainder)),
      remainder_(std::move(remainder)) {}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw InvalidParams("division by the zero polynomial");
  if (num.is_zero()) return {};

  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  const BigInt& lead = d.back();
  if (rem.size() < d.size()) throw NotDivisible(num);

  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible(IntPolynomial(std::move(rem)));
    }
    BigInt factor = rem[k] / lead;
    const std::size_t shift = k - dd;
    for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= factor * d[j];
    quot[shift] = std::move(factor);
  }
  IntPolynomial remainder(std::move(rem));
  if (!remainder.is_zero()) throw NotDivisible(std::move(remainder));
  return IntPolynomial(std::move(quot));
}

BigInt eval(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

void append_term(std::ostringstream& os, const BigInt& c, std::size_t e, const std::string& var,
                 bool first) {
  BigInt mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << '-';
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  if (e == 0 || mag != 1) os << mag.get_str();
  if (e >= 1) os << var;
  if (e >= 2) os << '^' << e;
}

std::string render(const std::vector<BigInt>& coeffs, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    append_term(os, coeffs[e], e, var, first);
    first = false;
  }
  return first ? std::string("0") : os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) {
  return render(p.coeffs(), var);
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs, std::size_t precision)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(precision);
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, std::size_t precision) {
  return TruncatedSeries(p.coeffs(), precision);
}

const BigInt& TruncatedSeries::coeff(std::size_t exponent) const {
  if (exponent >= coeffs_.size()) {
    throw InsufficientPrecision("exponent " + std::to_string(exponent) +
                                " beyond series precision " + std::to_string(coeffs_.size()));
  }
  return coeffs_[exponent];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
  if (precision > coeffs_.size()) {
    throw InsufficientPrecision("cannot extend a series past its precision");
  }
  return TruncatedSeries(coeffs_, precision);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t prec = std::min(a.precision(), b.precision());
  std::vector<BigInt> out(prec);
  for (std::size_t i = 0; i < prec; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
  return TruncatedSeries(std::move(out), prec);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t prec = std::min(a.precision(), b.precision());
  std::vector<BigInt> out(prec);
  for (std::size_t i = 0; i < prec; ++i) out[i] = a.coeffs_[i] - b.coeffs_[i];
  return TruncatedSeries(std::move(out), prec);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t prec = std::min(a.precision(), b.precision());
  std::vector<BigInt> out(prec);
  for (std::size_t i = 0; i < prec; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < prec; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(std::move(out), prec);
}

std::string to_string(const TruncatedSeries& s, const std::string& var) {
  std::string body = render(s.coeffs(), var);
  return body + " + O(" + var + "^" + std::to_string(s.precision()) + ")";
}

TruncatedSeries series_from_rational(const IntPolynomial& num, const IntPolynomial& den,
                                     std::size_t precision) {
  const BigInt d0 = den.coeff(0);
  if (d0 == 0) throw ZeroConstantTerm();
  std::vector<BigInt> out(precision);
  for (std::size_t k = 0; k < precision; ++k) {
    BigInt acc = num.coeff(k);
    const std::size_t upto = std::min(k, den.coeffs().size() - 1);
    for (std::size_t j = 1; j <= upto; ++j) acc -= den.coeffs()[j] * out[k - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) {
      throw NotDivisible(IntPolynomial::monomial(acc, k));
    }
    out[k] = acc / d0;
  }
  return TruncatedSeries(std::move(out), precision);
}

namespace {

std::size_t known_to(const IntPolynomial&) { return static_cast<std::size_t>(-1); }
std::size_t known_to(const TruncatedSeries& s) { return s.precision(); }
BigInt coeff_at(const IntPolynomial& p, std::size_t e) { return p.coeff(e); }
BigInt coeff_at(const TruncatedSeries& s, std::size_t e) { return s.coeff(e); }

template <class A, class B>
Agreement compare(const A& a, const B& b, std::size_t deg) {
  if (deg >= known_to(a) || deg >= known_to(b)) {
    throw InsufficientPrecision("operand not known up to exponent " + std::to_string(deg));
  }
  for (std::size_t e = 0; e <= deg; ++e) {
    if (coeff_at(a, e) != coeff_at(b, e)) return Agreement{false, e};
  }
  return Agreement{};
}

}  // namespace

Agreement agree_up_to(const IntPolynomial& a, const IntPolynomial& b, std::size_t deg) {
  return compare(a, b, deg);
}
Agreement agree_up_to(const IntPolynomial& a, const TruncatedSeries& b, std::size_t deg) {
  return compare(a, b, deg);
}
Agreement agree_up_to(const TruncatedSeries& a, const IntPolynomial& b, std::size_t deg) {
  return compare(a, b, deg);
}
Agreement agree_up_to(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t deg) {
  return compare(a, b, deg);
}

}  // namespace qpl

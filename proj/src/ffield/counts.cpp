#include "qpl/ffield/counts.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpl/bb_hilb2.hpp"
#include "qpl/budget.hpp"
#include "qpl/ffield/algebra.hpp"
#include "qpl/ffield/classify.hpp"
#include "qpl/grassmann.hpp"

namespace qpl {

namespace {

BigInt power(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

/// Every vector of F_p^len, in counting order (first coordinate fastest).
std::vector<VectorModP> all_vectors(int p, int len) {
  std::vector<VectorModP> out;
  VectorModP v(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == p) v[i++] = 0;
    if (i == v.size()) return out;
  }
}

/// Number of r-tuples of vectors v with A <v_1..v_r> = F_p^d.
std::uint64_t count_spanning_tuples(const Algebra& algebra, int r,
                                    const std::vector<VectorModP>& vectors) {
  const std::size_t nv = vectors.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  SpanningWitness witness;
  witness.vectors.resize(static_cast<std::size_t>(r));
  std::uint64_t count = 0;
  while (true) {
    for (std::size_t j = 0; j < idx.size(); ++j) witness.vectors[j] = vectors[idx[j]];
    if (spans(algebra, witness)) ++count;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == nv) idx[j++] = 0;
    if (j == idx.size()) return count;
  }
}

BigInt exact_quotient(const BigInt& total, const BigInt& gl, const char* what) {
  if (!mpz_divisible_p(total.get_mpz_t(), gl.get_mpz_t())) {
    throw NotDivisibleByGL(std::string(what) + " total " + total.get_str() +
                           " is not divisible by |GL| = " + gl.get_str());
  }
  return total / gl;
}

BigInt from_u64(std::uint64_t x) { return BigInt(std::to_string(x)); }

}  // namespace

BigInt gl_order(int d, const BigInt& p) {
  const BigInt pd = power(p, static_cast<unsigned long>(d));
  BigInt out = 1;
  for (int i = 0; i < d; ++i) out *= pd - power(p, static_cast<unsigned long>(i));
  return out;
}

QuotCount quot_point_count(int d, int n, int r, int p) {
  check_prime(p);
  if (d < 1 || n < 1 || r < 1) throw InvalidParams("quot_point_count needs d, n, r >= 1");
  require_within_budget(power(p, static_cast<unsigned long>(d * d * n + d * r)),
                        "Quot point count");

  std::vector<MatrixModP> matrices;
  for (const auto& entries : all_vectors(p, d * d)) {
    matrices.push_back(MatrixModP::from_entries(p, d, entries));
  }
  const std::vector<VectorModP> vectors = all_vectors(p, d);

  std::map<std::string, std::uint64_t> spanning_by_algebra;
  std::uint64_t raw = 0;
  std::uint64_t scalar_raw = 0;

  std::vector<MatrixModP> tuple;
  tuple.reserve(static_cast<std::size_t>(n));
  auto visit_complete = [&]() {
    const Algebra algebra = algebra_closure(tuple, p, d);
    const std::string key = algebra.key();
    auto it = spanning_by_algebra.find(key);
    if (it == spanning_by_algebra.end()) {
      it = spanning_by_algebra.emplace(key, count_spanning_tuples(algebra, r, vectors)).first;
    }
    raw += it->second;
    const bool scalar = d == 2 ? classify_d2(tuple) == D2Class::Scalar
                               : std::all_of(tuple.begin(), tuple.end(),
                                             [](const MatrixModP& m) { return m.is_scalar(); });
    if (scalar) scalar_raw += it->second;
  };

  // Depth-first over tuples, extending only by matrices that commute with
  // everything already chosen.
  auto extend = [&](auto&& self) -> void {
    if (tuple.size() == static_cast<std::size_t>(n)) {
      visit_complete();
      return;
    }
    for (const auto& m : matrices) {
      bool ok = true;
      for (const auto& prev : tuple) {
        if (!prev.commutes_with(m)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      tuple.push_back(m);
      self(self);
      tuple.pop_back();
    }
  };
  extend(extend);

  QuotCount out;
  out.raw_total = from_u64(raw);
  out.gl_order = gl_order(d, p);
  out.points = exact_quotient(out.raw_total, out.gl_order, "Quot tuple");
  out.scalar_raw = from_u64(scalar_raw);
  out.scalar_points = exact_quotient(out.scalar_raw, out.gl_order, "scalar tuple");
  return out;
}

BigInt hilb2_point_count_species(int n, int r, const BigInt& q) {
  if (n < 1 || r < 1) throw InvalidParams("species count needs n, r >= 1");
  if (q < 2) throw InvalidParams("field size must be at least 2");
  // |A^n x P^{r-1}| over a field of size x.
  auto points = [&](const BigInt& x) -> BigInt {
    return power(x, static_cast<unsigned long>(n)) *
           ((power(x, static_cast<unsigned long>(r)) - 1) / (x - 1));
  };
  const BigInt N = points(q);
  const BigInt N2 = points(q * q);
  const BigInt tangent_directions = (power(q, static_cast<unsigned long>(n + r - 1)) - 1) / (q - 1);
  return N * (N - 1) / 2 + (N2 - N) / 2 + N * tangent_directions;
}

BlowupCountReport blowup_count_identity(int n, int r, int p) {
  const QuotCount brute = quot_point_count(2, n, r, p);
  const BigInt P = p;
  BlowupCountReport rep;
  rep.brute_force = brute.points;
  rep.raw_total = brute.raw_total;
  rep.gl_order = brute.gl_order;
  rep.hilb = eval(hilb2_count_polynomial(n, r), P);
  rep.z = power(P, static_cast<unsigned long>(n)) * grass_point_count(r, 2, P);
  rep.zprime = rep.z * (P * P + P + 1);
  rep.assembled = rep.hilb + rep.z - rep.zprime;
  if (rep.assembled != rep.brute_force) {
    throw MismatchError("blowup count identity fails at n=" + std::to_string(n) +
                            " r=" + std::to_string(r) + " p=" + std::to_string(p),
                        BigInt(rep.brute_force - rep.assembled).get_str());
  }
  return rep;
}

BigInt singular_count(int n, int r, int p) {
  const QuotCount brute = quot_point_count(2, n, r, p);
  const BigInt P = p;
  const BigInt expected = power(P, static_cast<unsigned long>(n)) * grass_point_count(r, 2, P);
  if (brute.scalar_points != expected) {
    throw MismatchError("singular locus count fails at n=" + std::to_string(n) +
                            " r=" + std::to_string(r) + " p=" + std::to_string(p),
                        BigInt(brute.scalar_points - expected).get_str());
  }
  return brute.scalar_points;
}

}  // namespace qpl

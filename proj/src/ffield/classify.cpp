#include "qpl/ffield/classify.hpp"

#include <vector>

#include "qpl/errors.hpp"

namespace qpl {

namespace {

enum class Eigen2 { Scalar, Distinct, Repeated, None };

Eigen2 eigen_shape(const MatrixModP& m) {
  if (m.is_scalar()) return Eigen2::Scalar;
  const int p = m.p();
  const int tr = (m(0, 0) + m(1, 1)) % p;
  const int det = ((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) % p + p) % p;
  int roots = 0;
  for (int t = 0; t < p; ++t) {
    if (((t * t - tr * t + det) % p + p) % p == 0) ++roots;
  }
  if (roots == 2) return Eigen2::Distinct;
  if (roots == 1) return Eigen2::Repeated;
  return Eigen2::None;
}

bool is_rational_square(const mpq_class& x) {
  return mpz_perfect_square_p(x.get_num_mpz_t()) != 0 && mpz_perfect_square_p(x.get_den_mpz_t()) != 0;
}

Eigen2 eigen_shape(const RationalMatrix2& m) {
  if (m[1] == 0 && m[2] == 0 && m[0] == m[3]) return Eigen2::Scalar;
  const mpq_class tr = m[0] + m[3];
  const mpq_class det = m[0] * m[3] - m[1] * m[2];
  const mpq_class disc = tr * tr - 4 * det;
  if (disc == 0) return Eigen2::Repeated;
  if (sgn(disc) > 0 && is_rational_square(disc)) return Eigen2::Distinct;
  return Eigen2::None;
}

bool commute(const MatrixModP& a, const MatrixModP& b) { return a.commutes_with(b); }

bool commute(const RationalMatrix2& a, const RationalMatrix2& b) {
  auto mul = [](const RationalMatrix2& x, const RationalMatrix2& y) {
    return RationalMatrix2{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                           x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  return mul(a, b) == mul(b, a);
}

template <class M>
D2Class classify(std::span<const M> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) throw NonCommuting(i, j);
    }
  }
  // A nonscalar generator fixes the whole (2-dimensional) algebra, so the
  // first one found decides.
  for (const auto& g : gens) {
    switch (eigen_shape(g)) {
      case Eigen2::Scalar: continue;
      case Eigen2::Distinct: return D2Class::Split;
      case Eigen2::Repeated: return D2Class::NilpotentType;
      case Eigen2::None: return D2Class::NonSplit;
    }
  }
  return D2Class::Scalar;
}

}  // namespace

std::string to_string(D2Class c) {
  switch (c) {
    case D2Class::Scalar: return "Scalar";
    case D2Class::Split: return "Split";
    case D2Class::NilpotentType: return "NilpotentType";
    case D2Class::NonSplit: return "NonSplit";
  }
  return "?";
}

D2Class classify_d2(std::span<const MatrixModP> gens) {
  for (const auto& g : gens) {
    if (g.dim() != 2) throw InvalidParams("classify_d2 expects 2x2 matrices");
  }
  return classify(gens);
}

D2Class classify_d2(std::span<const RationalMatrix2> gens) { return classify(gens); }

}  // namespace qpl

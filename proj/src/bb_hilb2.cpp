#include "qpl/bb_hilb2.hpp"

namespace qpl {

namespace {

void check_params(int n, int r) {
  if (n < 1 || r < 1) throw InvalidParams("Hilb2(A^n x P^{r-1}) needs n >= 1 and r >= 1");
}

int positive_dim(const Hilb2FixedPoint& fp, int n, int r) {
  const int i = fp.i;
  const int s = fp.second;
  switch (fp.kind) {
    case FixedPointKind::A: return 2 * n + 2 * r - i - s;
    case FixedPointKind::B: return 2 * n + 2 * r - i - s + 1;
    case FixedPointKind::C: return 2 * n + 2 * r - i - s - 1;
    case FixedPointKind::D: return 2 * n + r - i - s + 1;
  }
  return 0;
}

int negative_dim(const Hilb2FixedPoint& fp, int r) {
  const int i = fp.i;
  const int s = fp.second;
  switch (fp.kind) {
    case FixedPointKind::A: return i + s - 2;
    case FixedPointKind::B: return i + s - 3;
    case FixedPointKind::C: return i + s - 1;
    case FixedPointKind::D: return r + i + s - 3;
  }
  return 0;
}

IntPolynomial q_pow(int e) { return IntPolynomial::monomial(1, static_cast<std::size_t>(e)); }

}  // namespace

char kind_letter(FixedPointKind kind) {
  switch (kind) {
    case FixedPointKind::A: return 'A';
    case FixedPointKind::B: return 'B';
    case FixedPointKind::C: return 'C';
    case FixedPointKind::D: return 'D';
  }
  return '?';
}

std::string to_string(const Hilb2FixedPoint& fp) {
  return std::string(1, kind_letter(fp.kind)) + "(" + std::to_string(fp.i) + "," +
         std::to_string(fp.second) + ")";
}

std::vector<Hilb2FixedPoint> enumerate_fixed_points(int n, int r) {
  check_params(n, r);
  std::vector<Hilb2FixedPoint> out;
  out.reserve(static_cast<std::size_t>(3 * r * (r - 1) / 2 + r * n));
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) out.push_back({FixedPointKind::A, i, j});
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) out.push_back({FixedPointKind::B, i, j});
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < i; ++j) out.push_back({FixedPointKind::C, i, j});
  for (int i = 1; i <= r; ++i)
    for (int k = 1; k <= n; ++k) out.push_back({FixedPointKind::D, i, k});
  return out;
}

std::vector<CellRecord> cell_dimensions(int n, int r) {
  std::vector<CellRecord> out;
  for (const auto& fp : enumerate_fixed_points(n, r)) {
    out.push_back({fp, positive_dim(fp, n, r), negative_dim(fp, r)});
  }
  return out;
}

Hilb2Summands hilb2_poincare_summands(int n, int r) {
  Hilb2Summands s;
  for (const auto& rec : cell_dimensions(n, r)) {
    const IntPolynomial term = q_pow(rec.negative_dim);
    switch (rec.point.kind) {
      case FixedPointKind::A: s.a += term; break;
      case FixedPointKind::B: s.b += term; break;
      case FixedPointKind::C: s.c += term; break;
      case FixedPointKind::D: s.d += term; break;
    }
  }
  return s;
}

IntPolynomial hilb2_poincare_cells(int n, int r) {
  IntPolynomial out;
  for (const auto& rec : cell_dimensions(n, r)) out += q_pow(rec.negative_dim);
  return out;
}

IntPolynomial hilb2_count_polynomial(int n, int r) {
  IntPolynomial out;
  for (const auto& rec : cell_dimensions(n, r)) out += q_pow(rec.positive_dim);
  return out;
}

}  // namespace qpl

#include "qpl/ffield/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "qpl/errors.hpp"

namespace qpl {

void check_prime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw InvalidParams("unsupported field size " + std::to_string(p) + " (use 2, 3, 5 or 7)");
  }
}

int inverse_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  throw InvalidParams("zero has no inverse");
}

MatrixModP::MatrixModP(int p, int dim)
    : p_(p), dim_(dim), e_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0) {
  check_prime(p);
  if (dim < 1) throw InvalidParams("matrix dimension must be positive");
}

MatrixModP MatrixModP::identity(int p, int dim) { return scalar(p, dim, 1); }

MatrixModP MatrixModP::scalar(int p, int dim, int c) {
  MatrixModP m(p, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, c);
  return m;
}

MatrixModP MatrixModP::elementary(int p, int dim, int row, int col) {
  MatrixModP m(p, dim);
  m.set(row, col, 1);
  return m;
}

MatrixModP MatrixModP::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  const int dim = static_cast<int>(rows.size());
  MatrixModP m(p, dim);
  for (int i = 0; i < dim; ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != rows.size()) {
      throw InvalidParams("matrix rows must form a square");
    }
    for (int j = 0; j < dim; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

MatrixModP MatrixModP::from_entries(int p, int dim, std::span<const Residue> entries) {
  MatrixModP m(p, dim);
  if (entries.size() != m.e_.size()) throw InvalidParams("wrong number of matrix entries");
  for (std::size_t i = 0; i < entries.size(); ++i) m.e_[i] = static_cast<Residue>(entries[i] % p);
  return m;
}

void MatrixModP::set(int row, int col, int value) {
  if (row < 0 || col < 0 || row >= dim_ || col >= dim_) throw InvalidParams("matrix index out of range");
  int v = value % p_;
  if (v < 0) v += p_;
  e_[index(row, col)] = static_cast<Residue>(v);
}

bool MatrixModP::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Residue x) { return x == 0; });
}

bool MatrixModP::is_scalar() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
      if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
    }
  }
  return true;
}

bool MatrixModP::commutes_with(const MatrixModP& other) const { return *this * other == other * *this; }

VectorModP MatrixModP::apply(const VectorModP& v) const {
  VectorModP out(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i) {
    int acc = 0;
    for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = static_cast<Residue>(acc % p_);
  }
  return out;
}

MatrixModP operator*(const MatrixModP& a, const MatrixModP& b) {
  const int d = a.dim_;
  MatrixModP out(a.p_, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      int acc = 0;
      for (int k = 0; k < d; ++k) acc += a(i, k) * b(k, j);
      out.e_[out.index(i, j)] = static_cast<Residue>(acc % a.p_);
    }
  }
  return out;
}

MatrixModP operator+(const MatrixModP& a, const MatrixModP& b) {
  MatrixModP out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) {
    out.e_[i] = static_cast<Residue>((a.e_[i] + b.e_[i]) % a.p_);
  }
  return out;
}

MatrixModP operator-(const MatrixModP& a, const MatrixModP& b) {
  MatrixModP out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) {
    out.e_[i] = static_cast<Residue>((a.e_[i] + a.p_ - b.e_[i]) % a.p_);
  }
  return out;
}

MatrixModP operator*(int c, const MatrixModP& a) {
  MatrixModP out = a;
  int cc = c % a.p_;
  if (cc < 0) cc += a.p_;
  for (auto& x : out.e_) x = static_cast<Residue>((x * cc) % a.p_);
  return out;
}

std::string to_string(const MatrixModP& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.dim(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  os << ']';
  return os.str();
}

EchelonSpace::EchelonSpace(int p, std::size_t length) : p_(p), length_(length) { check_prime(p); }

VectorModP EchelonSpace::reduce(std::span<const Residue> v) const {
  VectorModP w(v.begin(), v.end());
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const int c = w[pivots_[t]];
    if (c == 0) continue;
    const int factor = p_ - c;
    const auto& row = rows_[t];
    for (std::size_t j = pivots_[t]; j < length_; ++j) {
      w[j] = static_cast<Residue>((w[j] + factor * row[j]) % p_);
    }
  }
  return w;
}

bool EchelonSpace::contains(std::span<const Residue> v) const {
  const VectorModP w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool EchelonSpace::insert(std::span<const Residue> v) {
  if (v.size() != length_) throw InvalidParams("vector length does not match the space");
  VectorModP w = reduce(v);
  const auto lead = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (lead == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
  const int inv = inverse_mod(*lead, p_);
  for (auto& x : w) x = static_cast<Residue>((x * inv) % p_);

  // Clear the new pivot column from the existing rows to stay reduced.
  for (auto& row : rows_) {
    const int c = row[pivot];
    if (c == 0) continue;
    const int factor = p_ - c;
    for (std::size_t j = pivot; j < length_; ++j) {
      row[j] = static_cast<Residue>((row[j] + factor * w[j]) % p_);
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

std::size_t rank_mod_p(const std::vector<VectorModP>& vectors, int p, std::size_t length) {
  EchelonSpace space(p, length);
  for (const auto& v : vectors) {
    space.insert(v);
    if (space.rank() == length) break;
  }
  return space.rank();
}

}  // namespace qpl

#pragma once

// Small dense matrices and row spaces over a prime field F_p, p in {2,3,5,7}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qpl {

using Residue = std::uint8_t;
using VectorModP = std::vector<Residue>;

/// Throws InvalidParams unless p is one of the supported primes.
void check_prime(int p);

/// Multiplicative inverse of a nonzero residue.
int inverse_mod(int a, int p);

class MatrixModP {
 public:
  MatrixModP() = default;
  /// Zero matrix.
  MatrixModP(int p, int dim);

  static MatrixModP identity(int p, int dim);
  static MatrixModP scalar(int p, int dim, int c);
  /// Unit matrix E_{row,col} (0-based).
  static MatrixModP elementary(int p, int dim, int row, int col);
  static MatrixModP from_rows(int p, const std::vector<std::vector<int>>& rows);
  /// Entries packed row-major; values are reduced mod p.
  static MatrixModP from_entries(int p, int dim, std::span<const Residue> entries);

  int p() const noexcept { return p_; }
  int dim() const noexcept { return dim_; }
  int operator()(int row, int col) const { return e_[index(row, col)]; }
  void set(int row, int col, int value);
  std::span<const Residue> entries() const noexcept { return e_; }

  bool is_zero() const;
  bool is_scalar() const;
  bool commutes_with(const MatrixModP& other) const;
  VectorModP apply(const VectorModP& v) const;

  friend MatrixModP operator*(const MatrixModP& a, const MatrixModP& b);
  friend MatrixModP operator+(const MatrixModP& a, const MatrixModP& b);
  friend MatrixModP operator-(const MatrixModP& a, const MatrixModP& b);
  friend MatrixModP operator*(int c, const MatrixModP& a);
  friend bool operator==(const MatrixModP& a, const MatrixModP& b) {
    return a.p_ == b.p_ && a.dim_ == b.dim_ && a.e_ == b.e_;
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(col);
  }

  int p_ = 2;
  int dim_ = 0;
  std::vector<Residue> e_;
};

std::string to_string(const MatrixModP& m);

/// Row space kept in reduced row echelon form.
class EchelonSpace {
 public:
  EchelonSpace(int p, std::size_t length);

  /// Adds v to the space; returns false if v was already in it.
  bool insert(std::span<const Residue> v);
  bool contains(std::span<const Residue> v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  int p() const noexcept { return p_; }
  std::size_t length() const noexcept { return length_; }

  /// Rows in canonical order (ascending pivot column). Equal spaces give equal output.
  const std::vector<VectorModP>& rows() const noexcept { return rows_; }

 private:
  VectorModP reduce(std::span<const Residue> v) const;

  int p_;
  std::size_t length_;
  std::vector<VectorModP> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a list of vectors over F_p.
std::size_t rank_mod_p(const std::vector<VectorModP>& vectors, int p, std::size_t length);

}  // namespace qpl

#pragma once

// Commuting 2 x 2 matrices up to conjugation, by the algebra they generate.

#include <array>
#include <span>
#include <string>

#include <gmpxx.h>

#include "qpl/ffield/matrix.hpp"

namespace qpl {

enum class D2Class {
  /// every generator is a multiple of the identity
  Scalar,
  /// some generator has two distinct eigenvalues in the field (diagonalizable)
  Split,
  /// some generator is identity plus a nonzero nilpotent: <Id> + W_{1,1}
  NilpotentType,
  /// some generator has an irreducible characteristic polynomial
  NonSplit,
};

std::string to_string(D2Class c);

/// Row-major 2 x 2 matrix over Q.
using RationalMatrix2 = std::array<mpq_class, 4>;

/// Throws NonCommuting for a non-commuting pair and InvalidParams for non-2x2 input.
D2Class classify_d2(std::span<const MatrixModP> gens);
D2Class classify_d2(std::span<const RationalMatrix2> gens);

}  // namespace qpl

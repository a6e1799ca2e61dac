#pragma once

#include <cstdint>
#include <vector>

#include "qpl/ffield/algebra.hpp"
#include "qpl/polyseries.hpp"

namespace qpl {

struct LmaxSearchResult {
  /// Largest dimension of an r-spanning closure; 0 if none qualifies.
  std::size_t max_dim = 0;
  /// Distinct algebras of dimension max_dim, ordered by Algebra::key().
  std::vector<Algebra> achievers;
  /// (number of strictly upper triangular matrices)^max_gens
  BigInt tuples_enumerated;
  /// Tuples whose entries pairwise commute.
  BigInt commuting_tuples;
  /// Distinct closures of commuting tuples.
  std::size_t distinct_algebras = 0;
  bool all_achievers_w_shape = false;
};

/// Closes every max_gens-tuple of pairwise commuting strictly upper triangular
/// d x d matrices over F_p, keeps closures with spanning_index <= r and reports
/// the largest. Tuples are grouped by the algebra generated by their prefix:
/// a matrix commutes with each entry of a prefix exactly when it commutes with
/// the algebra the prefix generates, so extending the distinct prefix algebras
/// (with multiplicities) visits the same closures as extending every tuple.
/// Throws SearchBudgetExceeded if the tuple count exceeds the work budget.
LmaxSearchResult lmax_search(int d, int r, int p, int max_gens);

}  // namespace qpl

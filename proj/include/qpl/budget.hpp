#pragma once

#include <cstdint>

#include "qpl/polyseries.hpp"

namespace qpl {

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000;

/// Cap on enumeration work, read from QPL_MAX_BUDGET (default 10^9).
/// Throws InvalidParams if the variable is set but not a positive integer.
std::uint64_t work_budget();

/// Throws SearchBudgetExceeded when work > work_budget().
void require_within_budget(const BigInt& work, const char* what);

}  // namespace qpl

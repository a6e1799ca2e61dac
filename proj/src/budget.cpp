#include "qpl/budget.hpp"

#include <cstdlib>
#include <string>

namespace qpl {

std::uint64_t work_budget() {
  const char* raw = std::getenv("QPL_MAX_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultWorkBudget;
  if (*raw < '0' || *raw > '9') {
    throw InvalidParams(std::string("QPL_MAX_BUDGET is not a positive integer: ") + raw);
  }
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw InvalidParams(std::string("QPL_MAX_BUDGET is not a positive integer: ") + raw);
  }
}

void require_within_budget(const BigInt& work, const char* what) {
  const BigInt cap(std::to_string(work_budget()));
  if (work > cap) {
    throw SearchBudgetExceeded(std::string(what) + " needs " + work.get_str() +
                               " steps, budget is " + cap.get_str());
  }
}

}  // namespace qpl

#include "qpl/ffield/lmax_search.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qpl/budget.hpp"
#include "qpl/errors.hpp"

namespace qpl {

namespace {

std::vector<MatrixModP> strictly_upper_matrices(int p, int d) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) slots.emplace_back(i, j);
  }
  std::vector<MatrixModP> out;
  std::vector<int> counter(slots.size(), 0);
  while (true) {
    MatrixModP m(p, d);
    for (std::size_t s = 0; s < slots.size(); ++s) m.set(slots[s].first, slots[s].second, counter[s]);
    out.push_back(std::move(m));
    std::size_t s = 0;
    while (s < counter.size() && ++counter[s] == p) counter[s++] = 0;
    if (s == counter.size()) return out;
  }
}

bool commutes_with_algebra(const MatrixModP& g, const Algebra& a) {
  return std::all_of(a.basis.begin(), a.basis.end(),
                     [&](const MatrixModP& b) { return g.commutes_with(b); });
}

struct Weighted {
  Algebra algebra;
  BigInt tuples;
};

}  // namespace

LmaxSearchResult lmax_search(int d, int r, int p, int max_gens) {
  check_prime(p);
  if (d < 1) throw InvalidParams("lmax_search needs d >= 1");
  if (r < 1 || r > d) throw InvalidParams("lmax_search needs 1 <= r <= d");
  if (max_gens < 0) throw InvalidParams("lmax_search needs max_gens >= 0");

  const std::vector<MatrixModP> gens = strictly_upper_matrices(p, d);
  LmaxSearchResult out;
  mpz_pow_ui(out.tuples_enumerated.get_mpz_t(), BigInt(static_cast<unsigned long>(gens.size())).get_mpz_t(),
             static_cast<unsigned long>(max_gens));
  require_within_budget(out.tuples_enumerated, "lmax search");

  std::map<std::string, Weighted> level;
  {
    Algebra unit = algebra_closure(std::span<const MatrixModP>{}, p, d);
    level.emplace(unit.key(), Weighted{std::move(unit), BigInt(1)});
  }
  for (int step = 0; step < max_gens; ++step) {
    std::map<std::string, Weighted> next;
    for (const auto& [key, w] : level) {
      for (const auto& g : gens) {
        if (!commutes_with_algebra(g, w.algebra)) continue;
        std::vector<MatrixModP> span_gens = w.algebra.basis;
        span_gens.push_back(g);
        Algebra closed = algebra_closure(span_gens, p, d);
        std::string k = closed.key();
        auto it = next.find(k);
        if (it == next.end()) {
          next.emplace(std::move(k), Weighted{std::move(closed), w.tuples});
        } else {
          it->second.tuples += w.tuples;
        }
      }
    }
    level = std::move(next);
  }

  out.commuting_tuples = 0;
  out.distinct_algebras = level.size();
  for (const auto& [key, w] : level) {
    out.commuting_tuples += w.tuples;
    if (spanning_index(w.algebra) > r) continue;
    const std::size_t dim = w.algebra.dimension();
    if (dim > out.max_dim) {
      out.max_dim = dim;
      out.achievers.clear();
    }
    if (dim == out.max_dim) out.achievers.push_back(w.algebra);
  }
  out.all_achievers_w_shape =
      !out.achievers.empty() &&
      std::all_of(out.achievers.begin(), out.achievers.end(),
                  [&](const Algebra& a) { return matches_w_shape(a, r); });
  return out;
}

}  // namespace qpl

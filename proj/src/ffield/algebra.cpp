#include "qpl/ffield/algebra.hpp"

#include <functional>

#include "qpl/budget.hpp"
#include "qpl/errors.hpp"
#include "qpl/grassmann.hpp"

namespace qpl {

namespace {

std::size_t sq(int d) { return static_cast<std::size_t>(d) * static_cast<std::size_t>(d); }

/// Calls visit on every subspace of F_p^d of dimension k, each given by the
/// rows of its reduced echelon basis.
void for_each_subspace(int p, int d, int k,
                       const std::function<bool(const std::vector<VectorModP>&)>& visit) {
  std::vector<int> pivots(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) pivots[static_cast<std::size_t>(t)] = t;
  while (true) {
    // Free slots: row t, columns after its pivot that are not pivots.
    std::vector<std::pair<int, int>> free_slots;
    for (int t = 0; t < k; ++t) {
      for (int c = pivots[static_cast<std::size_t>(t)] + 1; c < d; ++c) {
        bool is_pivot = false;
        for (int pc : pivots) is_pivot = is_pivot || pc == c;
        if (!is_pivot) free_slots.emplace_back(t, c);
      }
    }
    std::vector<int> counter(free_slots.size(), 0);
    std::vector<VectorModP> rows(static_cast<std::size_t>(k), VectorModP(static_cast<std::size_t>(d), 0));
    while (true) {
      for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
      for (int t = 0; t < k; ++t) rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(t)])] = 1;
      for (std::size_t f = 0; f < free_slots.size(); ++f) {
        rows[static_cast<std::size_t>(free_slots[f].first)][static_cast<std::size_t>(free_slots[f].second)] =
            static_cast<Residue>(counter[f]);
      }
      if (!visit(rows)) return;
      std::size_t f = 0;
      while (f < counter.size() && ++counter[f] == p) counter[f++] = 0;
      if (f == counter.size()) break;
    }
    int t = k - 1;
    while (t >= 0 && pivots[static_cast<std::size_t>(t)] == d - k + t) --t;
    if (t < 0) return;
    ++pivots[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) pivots[static_cast<std::size_t>(u)] = pivots[static_cast<std::size_t>(u - 1)] + 1;
  }
}

bool generates_everything(const Algebra& algebra, const std::vector<VectorModP>& vectors) {
  EchelonSpace image(algebra.p, static_cast<std::size_t>(algebra.d));
  for (const auto& b : algebra.basis) {
    for (const auto& v : vectors) {
      image.insert(b.apply(v));
      if (image.rank() == static_cast<std::size_t>(algebra.d)) return true;
    }
  }
  return false;
}

}  // namespace

std::string Algebra::key() const {
  std::string out;
  out.reserve(basis.size() * sq(d) + 2);
  out.push_back(static_cast<char>(p));
  out.push_back(static_cast<char>(d));
  for (const auto& b : basis) {
    for (Residue x : b.entries()) out.push_back(static_cast<char>(x));
  }
  return out;
}

Algebra algebra_closure(std::span<const MatrixModP> gens, int p, int d) {
  check_prime(p);
  if (d < 1) throw InvalidParams("matrix dimension must be positive");
  for (const auto& g : gens) {
    if (g.p() != p || g.dim() != d) throw InvalidParams("generator has the wrong field or size");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) throw NonCommuting(i, j);
    }
  }

  EchelonSpace space(p, sq(d));
  std::vector<MatrixModP> spanning;
  auto add = [&](const MatrixModP& m) {
    if (space.insert(m.entries())) spanning.push_back(m);
  };
  add(MatrixModP::identity(p, d));
  for (const auto& g : gens) add(g);

  // Products of spanning elements; each newly found element is multiplied
  // against everything found so far.
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) add(spanning[i] * spanning[j]);
  }

  Algebra out{p, d, {}};
  for (const auto& row : space.rows()) out.basis.push_back(MatrixModP::from_entries(p, d, row));
  return out;
}

bool spans(const Algebra& algebra, const SpanningWitness& witness) {
  return generates_everything(algebra, witness.vectors);
}

int spanning_index(const Algebra& algebra) {
  const int p = algebra.p;
  const int d = algebra.d;
  std::vector<VectorModP> full;
  for (int i = 0; i < d; ++i) {
    VectorModP e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    full.push_back(std::move(e));
  }
  if (!generates_everything(algebra, full)) throw NotSpanning();

  BigInt work = 0;
  for (int k = 0; k <= d; ++k) work += grass_point_count(d, k, p);
  require_within_budget(work, "spanning index search");

  for (int k = 0; k <= d; ++k) {
    bool found = false;
    for_each_subspace(p, d, k, [&](const std::vector<VectorModP>& rows) {
      found = generates_everything(algebra, rows);
      return !found;
    });
    if (found) return k;
  }
  throw NotSpanning();
}

WSpace w_space(int d, int k, int p) {
  if (k < 1 || k >= d) throw InvalidParams("W space needs 1 <= k < d");
  WSpace w{d, k, {}};
  for (int row = 0; row < d - k; ++row) {
    for (int col = d - k; col < d; ++col) w.basis.push_back(MatrixModP::elementary(p, d, row, col));
  }
  return w;
}

bool matches_w_shape(const Algebra& algebra, int r) {
  const int d = algebra.d;
  const int p = algebra.p;
  if (r < 0 || r > d) return false;
  std::vector<MatrixModP> nilpotent;
  for (const auto& b : algebra.basis) {
    for (int i = 0; i < d; ++i) {
      if (b(i, i) != b(0, 0)) return false;
      for (int j = 0; j < i; ++j) {
        if (b(i, j) != 0) return false;
      }
    }
    const MatrixModP n = b - MatrixModP::scalar(p, d, b(0, 0));
    if (!n.is_zero()) nilpotent.push_back(n);
  }
  for (const auto& a : nilpotent) {
    for (const auto& b : nilpotent) {
      if (!(a * b).is_zero()) return false;
    }
  }
  // Stacking rows of every element: its rank is d minus the common kernel.
  // Stacking columns: its rank is the dimension of the sum of images.
  std::vector<VectorModP> rows;
  std::vector<VectorModP> cols;
  for (const auto& m : nilpotent) {
    for (int i = 0; i < d; ++i) {
      VectorModP row(static_cast<std::size_t>(d));
      VectorModP col(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) {
        row[static_cast<std::size_t>(j)] = static_cast<Residue>(m(i, j));
        col[static_cast<std::size_t>(j)] = static_cast<Residue>(m(j, i));
      }
      rows.push_back(std::move(row));
      cols.push_back(std::move(col));
    }
  }
  const std::size_t ud = static_cast<std::size_t>(d);
  const std::size_t kernel_dim = ud - rank_mod_p(rows, p, ud);
  const std::size_t image_dim = rank_mod_p(cols, p, ud);
  const std::size_t bound = static_cast<std::size_t>(d - r);
  return kernel_dim >= bound && image_dim <= bound;
}

}  // namespace qpl

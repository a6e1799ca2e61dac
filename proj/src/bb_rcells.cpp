#include "qpl/bb_rcells.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "qpl/grassmann.hpp"

namespace qpl {

namespace {

/// Calls visit on every k-subset of {0..size-1}, in lexicographic order.
void for_each_subset(int size, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t;
  while (true) {
    visit(idx);
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == size - k + t) --t;
    if (t < 0) return;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
  }
}

void check_weights(const RCellParams& p, const WeightAssignment& w) {
  if (w.lambda.size() != static_cast<std::size_t>(p.r) ||
      w.gamma.size() != static_cast<std::size_t>(p.n)) {
    throw InvalidParams("weight assignment has the wrong number of entries");
  }
  if (!w.admissible()) throw InvalidParams("weight assignment is not admissible");
}

// Weights are 1-based in the formulas; these keep the indexing readable.
long lam(const WeightAssignment& w, int j) { return w.lambda[static_cast<std::size_t>(j - 1)]; }
long gam(const WeightAssignment& w, int i) { return w.gamma[static_cast<std::size_t>(i - 1)]; }

void tally(SignProfile& out, long character) {
  if (character == 0) throw ZeroCharacter("tangent character vanished");
  if (character > 0) {
    ++out.positive;
  } else {
    ++out.negative;
  }
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

/// Walks every tangent direction at fp: generator swaps first, then position
/// swaps, handing the moved-from and moved-to labels to the callbacks.
template <class GenChar, class PosChar>
SignProfile profile(const RCellParams& p, const RCellFixedPoint& fp, GenChar gen_char,
                    PosChar pos_char) {
  SignProfile out;
  for (int from : fp.generators) {
    for (int to = 1; to <= p.r; ++to) {
      if (!contains(fp.generators, to)) tally(out, gen_char(from, to));
    }
  }
  for (const auto& from : fp.positions) {
    for (int i = 1; i <= p.n; ++i) {
      for (int j = 1; j <= p.m; ++j) {
        const std::pair<int, int> to{i, j};
        if (std::find(fp.positions.begin(), fp.positions.end(), to) == fp.positions.end()) {
          tally(out, pos_char(from, to));
        }
      }
    }
  }
  return out;
}

IntPolynomial sum_over_points(const RCellParams& p, CellSide side,
                              const std::function<SignProfile(const RCellFixedPoint&)>& prof) {
  IntPolynomial out;
  for (const auto& fp : enumerate_r_fixed_points(p)) {
    const SignProfile sp = prof(fp);
    const int e = side == CellSide::Negative ? sp.negative : sp.positive;
    out += IntPolynomial::monomial(1, static_cast<std::size_t>(e));
  }
  return out;
}

}  // namespace

RCellParams RCellParams::make(int r, int m, int s, int n) {
  if (r < 1 || n < 1 || m < 0 || m > r || s < 0 || s > n * m) {
    throw InvalidParams("R-cell parameters need 0 <= m <= r, 0 <= s <= n*m, n >= 1 (got r=" +
                        std::to_string(r) + " m=" + std::to_string(m) + " s=" + std::to_string(s) +
                        " n=" + std::to_string(n) + ")");
  }
  return RCellParams{r, m, s, n};
}

WeightAssignment WeightAssignment::standard(int r, int n) {
  WeightAssignment w;
  for (int j = 1; j <= r; ++j) w.lambda.push_back(j);
  for (int i = 1; i <= n; ++i) w.gamma.push_back(static_cast<long>(r + 1) * i);
  return w;
}

bool WeightAssignment::admissible() const {
  if (lambda.empty()) return false;
  if (lambda.front() <= 0) return false;
  for (std::size_t j = 1; j < lambda.size(); ++j) {
    if (lambda[j] <= lambda[j - 1]) return false;
  }
  const long top = lambda.back();
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const long prev = i == 0 ? 0 : gamma[i - 1];
    if (gamma[i] - prev <= top) return false;
  }
  return true;
}

std::vector<RCellFixedPoint> enumerate_r_fixed_points(const RCellParams& params) {
  const RCellParams p = RCellParams::make(params.r, params.m, params.s, params.n);
  std::vector<RCellFixedPoint> out;
  for_each_subset(p.r, p.m, [&](const std::vector<int>& gens) {
    for_each_subset(p.n * p.m, p.s, [&](const std::vector<int>& pos) {
      RCellFixedPoint fp;
      for (int g : gens) fp.generators.push_back(g + 1);
      for (int x : pos) fp.positions.emplace_back(x / p.m + 1, x % p.m + 1);
      out.push_back(std::move(fp));
    });
  });
  return out;
}

SignProfile tangent_sign_profile(const RCellParams& params, const RCellFixedPoint& fp,
                                 const WeightAssignment& w) {
  check_weights(params, w);
  const auto& gens = fp.generators;
  return profile(
      params, fp, [&](int from, int to) { return lam(w, from) - lam(w, to); },
      [&](std::pair<int, int> from, std::pair<int, int> to) {
        const int sj = gens[static_cast<std::size_t>(from.second - 1)];
        const int sj2 = gens[static_cast<std::size_t>(to.second - 1)];
        return lam(w, sj) - lam(w, sj2) + gam(w, from.first) - gam(w, to.first);
      });
}

SignProfile product_sign_profile(const RCellParams& params, const RCellFixedPoint& fp,
                                 const WeightAssignment& w) {
  check_weights(params, w);
  return profile(
      params, fp, [&](int from, int to) { return lam(w, from) - lam(w, to); },
      [&](std::pair<int, int> from, std::pair<int, int> to) {
        return (gam(w, from.first) + lam(w, from.second)) - (gam(w, to.first) + lam(w, to.second));
      });
}

IntPolynomial r_circ_poincare(const RCellParams& params, const WeightAssignment& w, CellSide side) {
  return sum_over_points(params, side, [&](const RCellFixedPoint& fp) {
    return tangent_sign_profile(params, fp, w);
  });
}

IntPolynomial product_grassmannian_profile(const RCellParams& params, const WeightAssignment& w,
                                           CellSide side) {
  return sum_over_points(params, side, [&](const RCellFixedPoint& fp) {
    return product_sign_profile(params, fp, w);
  });
}

IntPolynomial r_circ_expected(const RCellParams& params) {
  const RCellParams p = RCellParams::make(params.r, params.m, params.s, params.n);
  return gaussian_binomial(p.r, p.m) * gaussian_binomial(p.n * p.m, p.s);
}

}  // namespace qpl

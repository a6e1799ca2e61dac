#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "commands.hpp"
#include "qpl/bb_hilb2.hpp"
#include "qpl/errors.hpp"
#include "qpl/ffield/algebra.hpp"
#include "qpl/ffield/counts.hpp"
#include "qpl/ffield/lmax_search.hpp"
#include "qpl/grassmann.hpp"
#include "qpl/quot_formulas.hpp"

namespace qpl::cli {

namespace {

std::string kv(const char* k, int v) { return std::string(k) + "=" + std::to_string(v); }

class Sweep {
 public:
  explicit Sweep(Report& rep) : rep_(rep) {}

  void row(const std::string& check, const std::string& params, bool ok) {
    rep_.csv_row({check, params, ok ? "pass" : "fail"});
    auto& [total, failed] = tallies_[check];
    ++total;
    if (!ok) {
      ++failed;
      rep_.mismatch(check + " (" + params + ")");
    }
  }

  void finish() {
    for (const auto& [check, t] : tallies_) {
      rep_.boolean(check, t.second == 0);
      rep_.note(check + ": " + std::to_string(t.first - t.second) + "/" + std::to_string(t.first) + " pass");
    }
  }

 private:
  Report& rep_;
  // check name -> (rows, failed rows)
  std::map<std::string, std::pair<int, int>> tallies_;
};

}  // namespace

Report verify_all(const VerifyBounds& bounds) {
  if (bounds.max_n < 1 || bounds.max_r < 1) throw InvalidParams("--max-n and --max-r must be positive");
  if (bounds.fields.empty()) throw InvalidParams("--fields must list at least one prime");
  for (int p : bounds.fields) check_prime(p);

  Report rep("verify all");
  rep.param("max_n", bounds.max_n);
  rep.param("max_r", bounds.max_r);
  std::string fields;
  for (int p : bounds.fields) fields += (fields.empty() ? "" : ",") + std::to_string(p);
  rep.param("fields", fields);
  rep.csv_header({"check", "params", "status"});
  Sweep sweep(rep);

  for (int n = 1; n <= bounds.max_n; ++n) {
    for (int r = 1; r <= bounds.max_r; ++r) {
      const std::string at = kv("n", n) + ";" + kv("r", r);
      sweep.row("cells_vs_closed_form", at, hilb2_poincare_cells(n, r) == hilb2_series_closed(n, r));
      const IntPolynomial quot2 = quot2_series(n, r);
      sweep.row("blowup_assembly", at, blowup_assemble(n, r) == quot2 && quot2_series_grouped(n, r) == quot2);
      sweep.row("degree_agreement", at, degree_agreement(n, r).first_mismatch == static_cast<std::size_t>(n + r - 1));
      const BigInt fixed = 3 * (r * (r - 1) / 2) + r * n;
      bool euler = eval(hilb2_poincare_cells(n, r), 1) == fixed && eval(hilb2_count_polynomial(n, r), 1) == fixed;
      for (const auto& c : cell_dimensions(n, r)) euler = euler && c.positive_dim + c.negative_dim == 2 * (n + r - 1);
      sweep.row("euler_characteristic", at, euler);
    }
  }
  for (int r = 1; r <= bounds.max_r; ++r) {
    sweep.row("stable_vs_target", kv("r", r), stable_quot2_series(r, 50) == target_ring_series(2, r, 50));
  }

  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int p : bounds.fields) {
        sweep.row("species_vs_cells", kv("n", n) + ";" + kv("r", r) + ";" + kv("p", p),
                  hilb2_point_count_species(n, r, p) == eval(hilb2_count_polynomial(n, r), p));
      }

  constexpr std::array<std::array<int, 3>, 6> kEnvelope{{{1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {2, 1, 2}, {1, 2, 3}, {2, 2, 2}}};
  for (const auto& [n, r, p] : kEnvelope) {
    if (std::find(bounds.fields.begin(), bounds.fields.end(), p) == bounds.fields.end()) continue;
    const std::string at = kv("n", n) + ";" + kv("r", r) + ";" + kv("p", p);
    bool blowup = true;
    bool singular = true;
    try {
      blowup_count_identity(n, r, p);
    } catch (const MismatchError&) {
      blowup = false;
    }
    try {
      singular_count(n, r, p);
    } catch (const MismatchError&) {
      singular = false;
    }
    sweep.row("quot2_brute_force_blowup", at, blowup);
    sweep.row("singular_locus", at, singular);
  }

  for (int r = 1; r <= 4; ++r)
    for (int m = 0; m <= r; ++m)
      for (int n = 1; n <= 3; ++n)
        for (int s = 0; s <= n * m; ++s) {
          const RCellParams params = RCellParams::make(r, m, s, n);
          const IntPolynomial expected = r_circ_expected(params);
          bool ok = true;
          for (const auto& w : weight_family(r, n)) {
            ok = ok && r_circ_poincare(params, w) == expected && product_grassmannian_profile(params, w) == expected;
          }
          sweep.row("r_cells", kv("r", r) + ";" + kv("m", m) + ";" + kv("s", s) + ";" + kv("n", n), ok);
        }

  {
    const auto big = lmax_search(4, 2, 2, 4);
    sweep.row("lmax_search", "d=4;r=2;p=2;gens=4", big.max_dim == 5 && big.all_achievers_w_shape);
    const auto small = lmax_search(2, 1, 2, 2);
    sweep.row("lmax_search", "d=2;r=1;p=2;gens=2", small.max_dim == 2);
  }
  for (int d = 2; d <= 6; ++d) {
    for (int k = 1; k < d; ++k) {
      const WSpace w = w_space(d, k);
      bool ok = true;
      for (const auto& a : w.basis)
        for (const auto& b : w.basis) ok = ok && (a * b).is_zero();
      const Algebra alg = algebra_closure(w.basis, 2, d);
      ok = ok && alg.dimension() == static_cast<std::size_t>((d - k) * k + 1) && spanning_index(alg) == k;
      sweep.row("w_space_laws", kv("d", d) + ";" + kv("k", k), ok);
    }
  }

  for (int a = 0; a <= 20; ++a) {
    bool ok = true;
    for (int b = 0; b <= a; ++b) {
      const IntPolynomial g = gaussian_binomial(a, b);
      const auto& c = g.coeffs();
      ok = ok && g == gaussian_binomial(a, a - b) && std::equal(c.begin(), c.end(), c.rbegin());
      if (b > 0 && b < a) {
        ok = ok && g == gaussian_binomial(a - 1, b - 1) +
                            IntPolynomial::monomial(1, static_cast<std::size_t>(b)) * gaussian_binomial(a - 1, b);
      }
    }
    sweep.row("gaussian_properties", kv("a", a), ok);
  }

  sweep.finish();
  return rep;
}

}  // namespace qpl::cli

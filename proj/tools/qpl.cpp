#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qpl/errors.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Output {
  bool json = false;
  bool csv = false;
};

struct Leaf {
  CLI::App* app;
  std::function<qpl::cli::Report()> run;
};

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Output& out) {
  CLI::App* app = parent->add_subcommand(name, help);
  app->add_flag("--json", out.json, "Emit the machine-readable JSON report");
  return app;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qpl::cli;
  CLI::App app{"Cohomology and point counts of Quot schemes of points"};
  app.require_subcommand(1);
  Output out;
  std::vector<Leaf> leaves;

  int n = 1, r = 1, d = 1, l = 0, p = 2, prec = 10, a = 0, b = 0, m = 0, s = 0, gens = 2, max_d = 6;
  std::string side = "both";
  VerifyBounds bounds;

  auto* series = app.add_subcommand("series", "Poincare polynomials and stable series");
  series->require_subcommand(1);
  {
    auto* c = leaf(series, "hilb2", "Hilb_2(A^n x P^{r-1})", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    leaves.push_back({c, [&] { return series_hilb2(n, r); }});

    c = leaf(series, "quot2", "Quot scheme of length-2 quotients of O^r on A^n", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    leaves.push_back({c, [&] { return series_quot2(n, r); }});

    c = leaf(series, "stable", "Stable (n -> infinity) limit of the Quot_2 series", out);
    c->add_option("--r", r)->required();
    c->add_option("--prec", prec, "Number of coefficients")->capture_default_str();
    leaves.push_back({c, [&] { return series_stable(r, prec); }});

    c = leaf(series, "target", "Hilbert series of Z[c_1..c_d]/(c_d^r)", out);
    c->add_option("--d", d)->required();
    c->add_option("--r", r)->required();
    c->add_option("--prec", prec, "Number of coefficients")->capture_default_str();
    leaves.push_back({c, [&] { return series_target(d, r, prec); }});

    c = leaf(series, "d1", "Quot scheme of length-1 quotients", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    leaves.push_back({c, [&] { return series_d1(n, r); }});

    c = leaf(series, "rlocus", "Poincare polynomial of the R-locus", out);
    c->add_option("--d", d)->required();
    c->add_option("--r", r)->required();
    c->add_option("--n", n)->required();
    leaves.push_back({c, [&] { return series_rlocus(d, r, n); }});

    c = leaf(series, "grass", "Gaussian binomial [a choose b]", out);
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    leaves.push_back({c, [&] { return series_grass(a, b); }});

    c = leaf(series, "blowup", "Quot_2 assembled from Hilb_2, Z and Z'", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    leaves.push_back({c, [&] { return series_blowup(n, r); }});
  }

  auto* loci = app.add_subcommand("loci", "Dimension bounds and l_max");
  loci->require_subcommand(1);
  {
    auto* c = leaf(loci, "bounds", "Dimension window of Z_{n,r,l}", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    c->add_option("--d", d)->required();
    c->add_option("--l", l)->required();
    leaves.push_back({c, [&] { return loci_bounds(n, r, d, l); }});

    c = leaf(loci, "lmax", "Largest dimension of an r-spanning commutative algebra", out);
    c->add_option("--d", d)->required();
    c->add_option("--r", r)->required();
    leaves.push_back({c, [&] { return loci_lmax(d, r); }});
  }

  auto* bb = app.add_subcommand("bb", "Torus fixed points and cell dimensions");
  bb->require_subcommand(1);
  {
    auto* c = leaf(bb, "hilb2", "Fixed points of Hilb_2(A^n x P^{r-1})", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    c->add_option("--side", side, "pos, neg or both")
        ->check(CLI::IsMember({"pos", "neg", "both"}))
        ->capture_default_str();
    leaves.push_back({c, [&] {
                        const Side sd = side == "pos" ? Side::Positive : side == "neg" ? Side::Negative : Side::Both;
                        return bb_hilb2(n, r, sd);
                      }});

    c = leaf(bb, "rcells", "Cells of an R-locus against the Grassmannian product", out);
    c->add_option("--r", r)->required();
    c->add_option("--m", m)->required();
    c->add_option("--s", s)->required();
    c->add_option("--n", n)->required();
    leaves.push_back({c, [&] { return bb_rcells(r, m, s, n); }});
  }

  auto* count = app.add_subcommand("count", "Point counts over F_p");
  count->require_subcommand(1);
  {
    auto* c = leaf(count, "quot", "Brute-force count of Quot_d points", out);
    c->add_option("--d", d)->required();
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    c->add_option("--p", p)->required();
    leaves.push_back({c, [&] { return count_quot(d, n, r, p); }});

    c = leaf(count, "hilb2", "Hilb_2 count by species against the cell polynomial", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    c->add_option("--p", p)->required();
    leaves.push_back({c, [&] { return count_hilb2(n, r, p); }});
  }

  auto* verify = app.add_subcommand("verify", "Cross-checks between independent computations");
  verify->require_subcommand(1);
  {
    auto* c = leaf(verify, "all", "Run every check", out);
    c->add_option("--max-n", bounds.max_n)->capture_default_str();
    c->add_option("--max-r", bounds.max_r)->capture_default_str();
    c->add_option("--fields", bounds.fields, "Comma-separated primes")->delimiter(',');
    c->add_flag("--csv", out.csv, "Emit one CSV row per checked parameter tuple");
    leaves.push_back({c, [&] { return verify_all(bounds); }});

    c = leaf(verify, "blowup", "Brute-force Quot_2 count against the blowup identity", out);
    c->add_option("--n", n)->required();
    c->add_option("--r", r)->required();
    c->add_option("--p", p)->required();
    leaves.push_back({c, [&] { return verify_blowup(n, r, p); }});

    c = leaf(verify, "lmax", "Search commuting upper triangular tuples for l_max", out);
    c->add_option("--d", d)->required();
    c->add_option("--r", r)->required();
    c->add_option("--p", p)->required();
    c->add_option("--gens", gens)->required();
    leaves.push_back({c, [&] { return verify_lmax(d, r, p, gens); }});

    c = leaf(verify, "wspace", "Laws of the square-zero spaces W", out);
    c->add_option("--max-d", max_d)->capture_default_str();
    leaves.push_back({c, [&] { return verify_wspace(max_d); }});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  for (const auto& lf : leaves) {
    if (!lf.app->parsed()) continue;
    try {
      const Report rep = lf.run();
      if (out.json) {
        std::cout << rep.to_json().dump(2) << "\n";
      } else if (out.csv) {
        std::cout << rep.csv();
      } else {
        std::cout << rep.human();
      }
      return rep.passed() ? 0 : kExitMismatch;
    } catch (const qpl::InvalidParams& e) {
      std::cerr << "invalid input: " << e.what() << "\n";
      return kExitInvalid;
    } catch (const qpl::RegimeError& e) {
      std::cerr << "invalid input: " << e.what() << "\n";
      return kExitInvalid;
    } catch (const qpl::Unclassified& e) {
      std::cerr << "invalid input: " << e.what() << "\n";
      return kExitInvalid;
    } catch (const qpl::SearchBudgetExceeded& e) {
      std::cerr << "invalid input: " << e.what() << " (raise QPL_MAX_BUDGET to allow it)\n";
      return kExitInvalid;
    } catch (const qpl::Error& e) {
      std::cerr << "check failed: " << e.what() << "\n";
      return kExitMismatch;
    }
  }
  return kExitInvalid;
}

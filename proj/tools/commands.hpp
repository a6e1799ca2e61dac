#pragma once

#include <vector>

#include "qpl/bb_rcells.hpp"
#include "report.hpp"

namespace qpl::cli {

Report series_hilb2(int n, int r);
Report series_quot2(int n, int r);
Report series_stable(int r, int prec);
Report series_target(int d, int r, int prec);
Report series_d1(int n, int r);
Report series_rlocus(int d, int r, int n);
Report series_grass(int a, int b);
Report series_blowup(int n, int r);

Report loci_bounds(int n, int r, int d, int l);
Report loci_lmax(int d, int r);

enum class Side { Positive, Negative, Both };
Report bb_hilb2(int n, int r, Side side);
Report bb_rcells(int r, int m, int s, int n);

Report count_quot(int d, int n, int r, int p);
Report count_hilb2(int n, int r, int p);

Report verify_blowup(int n, int r, int p);
Report verify_lmax(int d, int r, int p, int gens);
Report verify_wspace(int max_d);

struct VerifyBounds {
  int max_n = 10;
  int max_r = 10;
  std::vector<int> fields{2, 3};
};
Report verify_all(const VerifyBounds& bounds);

/// Three admissible weight assignments for the R-cell checks.
std::vector<WeightAssignment> weight_family(int r, int n);

}  // namespace qpl::cli

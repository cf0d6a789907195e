#pragma once

#include <vecvar/variety.hpp>

#include <string>
#include <vector>

namespace vecvar {

struct FdcReport {
  int d = 0;
  long c = 0;
  // branch_values[0] = n_0 (degree >= 2, no long columns: C(k+1,2) branch),
  // branch_values[1] = n_1 (degree 1, slope > d branch),
  // branch_values[x] = n_x for 2 <= x <= d (C(k,x) branch).
  std::vector<long> branch_values;
  long F = 0;
};

// The explicit stability bound from the linear-type singularity theorem:
// each branch value is the least k from which its inequality holds for all
// larger k; eventual validity is certified by a one-step slope comparison
// (the left side's forward difference is nondecreasing, so once it exceeds
// the right side's slope d the inequality persists).
FdcReport fdc_bound(int d, long c);

// Convenience: does the branch inequality hold at k?
bool fdc_branch_holds(int branch, int d, long c, long k);

// dim X(K^n) = dim X(K^d) + d (n - d) for n >= d.
long dim_formula(const LinearTypeProfile& profile, long n);

// Dimension of the Zariski tangent space at p embedded into X(K^n) by zero
// padding: ambient dim minus the exact Jacobian rank at the embedded point.
long tangent_dimension(const VarietySpec& x, const TensorPoint& p, int n);

struct DichotomyRow {
  long k = 0;
  long n = 0;
  long tangent_dim = 0;
  long variety_dim = 0;
  bool equal = false;
};

struct DichotomyReport {
  LinearTypeProfile profile;
  long fdc = 0;
  long k_max = 0;
  std::vector<DichotomyRow> rows;
  // "equality" when the tangent dimension matches the dimension law at
  // every k; otherwise "tangent_exceeds".
  std::string branch;
  // the gap tangent - dim is a positive constant over the whole window;
  // flagged because dimension data alone cannot separate this case further
  bool constant_gap = false;
  // branch is the same at every checked k >= fdc (when any are in range)
  bool consistent_from_fdc = true;
};

// Compares the tangent dimension at p (a point of X(K^d)) embedded into
// X(K^{d+k}) against the dimension law, for k = 0..k_max.
DichotomyReport singular_dichotomy_check(const VarietySpec& x,
                                         const LinearTypeProfile& profile,
                                         const TensorPoint& p, long k_max);

}  // namespace vecvar

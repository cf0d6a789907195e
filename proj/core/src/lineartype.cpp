#include <vecvar/lineartype.hpp>

#include <algorithm>

namespace vecvar {

namespace {

// Left side of the branch inequality. branch 0: C(k+1,2); branch 1: (d+1)k;
// branch x >= 2: C(k,x).
Int branch_lhs(int branch, int d, long k) {
  if (branch == 0) return binomial_int(k + 1, 2);
  if (branch == 1) return Int(d + 1) * k;
  return binomial_int(k, branch);
}

Int branch_rhs(int d, long c, long k) { return Int(d) * (d + k) + c; }

long branch_minimum(int branch, int d, long c) {
  // Find the first k where the inequality holds and the left side's forward
  // difference exceeds d; from such a k the inequality holds for all larger
  // k because the forward difference is nondecreasing. Then walk back while
  // the inequality still holds to reach the true minimum.
  const long limit = 8 * (static_cast<long>(d) * d + c + 10);
  long certified = -1;
  for (long k = 0; k <= limit; ++k) {
    if (branch_lhs(branch, d, k) > branch_rhs(d, c, k) &&
        branch_lhs(branch, d, k + 1) - branch_lhs(branch, d, k) > d) {
      certified = k;
      break;
    }
  }
  if (certified < 0) throw DomainError("branch scan limit exceeded");
  long k = certified;
  while (k > 0 && branch_lhs(branch, d, k - 1) > branch_rhs(d, c, k - 1)) --k;
  return k;
}

}  // namespace

bool fdc_branch_holds(int branch, int d, long c, long k) {
  return branch_lhs(branch, d, k) > branch_rhs(d, c, k);
}

FdcReport fdc_bound(int d, long c) {
  if (d < 1) throw DomainError("fdc_bound requires d >= 1");
  if (c < 0) throw DomainError("fdc_bound requires c >= 0");
  FdcReport rep;
  rep.d = d;
  rep.c = c;
  rep.branch_values.push_back(branch_minimum(0, d, c));
  rep.branch_values.push_back(branch_minimum(1, d, c));
  for (int x = 2; x <= d; ++x) rep.branch_values.push_back(branch_minimum(x, d, c));
  rep.F = *std::max_element(rep.branch_values.begin(), rep.branch_values.end());
  return rep;
}

long dim_formula(const LinearTypeProfile& profile, long n) {
  if (n < profile.d) throw DomainError("dim_formula requires n >= d");
  return profile.dim_at_d + static_cast<long>(profile.d) * (n - profile.d);
}

long tangent_dimension(const VarietySpec& x, const TensorPoint& p, int n) {
  if (!x.has_equations()) throw DomainError("parametrization-only variety");
  int m = p.space.n;
  if (m > n) throw DomainError("cannot embed into a smaller space");
  // Zero-padding embedding; any injective map gives the same dimension.
  RatMatrix incl(n, m);
  for (int i = 0; i < m; ++i) incl(i, i) = 1;
  TensorPoint q = apply_map(p, incl);
  MinorSystem eq = x.equations(n);
  if (!eq.is_member(q.coords)) throw DomainError("membership failure");
  return eq.ambient_dimension() - eq.jacobian_rank(q.coords);
}

DichotomyReport singular_dichotomy_check(const VarietySpec& x,
                                         const LinearTypeProfile& profile,
                                         const TensorPoint& p, long k_max) {
  if (p.space.n != profile.d)
    throw DomainError("dichotomy expects a point of X(K^d)");
  DichotomyReport rep;
  rep.profile = profile;
  rep.fdc = fdc_bound(profile.d, profile.c).F;
  rep.k_max = k_max;
  bool all_equal = true;
  for (long k = 0; k <= k_max; ++k) {
    DichotomyRow row;
    row.k = k;
    row.n = profile.d + k;
    row.tangent_dim = tangent_dimension(x, p, static_cast<int>(row.n));
    row.variety_dim = dim_formula(profile, row.n);
    row.equal = row.tangent_dim == row.variety_dim;
    all_equal = all_equal && row.equal;
    rep.rows.push_back(row);
  }
  rep.branch = all_equal ? "equality" : "tangent_exceeds";
  if (!all_equal) {
    bool gap_constant = true;
    long gap = rep.rows.empty() ? 0 : rep.rows[0].tangent_dim - rep.rows[0].variety_dim;
    for (const auto& row : rep.rows)
      gap_constant = gap_constant && (row.tangent_dim - row.variety_dim == gap);
    rep.constant_gap = gap_constant && gap > 0;
  }
  bool first = true;
  bool branch_equal = false;
  for (const auto& row : rep.rows) {
    if (row.k < rep.fdc) continue;
    if (first) {
      branch_equal = row.equal;
      first = false;
    } else if (row.equal != branch_equal) {
      rep.consistent_from_fdc = false;
    }
  }
  return rep;
}

}  // namespace vecvar

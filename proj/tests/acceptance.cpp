// Acceptance suite: one line per criterion, exact checks throughout.
// Exit status is nonzero if any criterion fails.

#include <vecvar/lineartype.hpp>
#include <vecvar/resolution.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace vecvar;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

VarietySpec matrices(int r) {
  return VarietySpec::builtin("matrices_rank_le", {{"r", r}});
}
VarietySpec sym_matrices(int r) {
  return VarietySpec::builtin("sym_matrices_rank_le", {{"r", r}});
}

bool lr_dimension_identity(std::string& detail) {
  long checked = 0;
  for (const Partition& lam : partitions_up_to(6, 6)) {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        long rhs = 0;
        for (const Partition& mu : partitions_up_to(lam.size(), lam.length())) {
          if (!lam.contains(mu)) continue;
          long dim_mu = schur_dimension(mu, a);
          if (dim_mu == 0) continue;
          for (const Partition& nu : partitions_of(lam.size() - mu.size(), lam.length())) {
            long c = lr_coefficient(mu, nu, lam);
            if (c != 0) rhs += c * dim_mu * schur_dimension(nu, b);
          }
        }
        if (schur_dimension(lam, a + b) != rhs) {
          detail = "mismatch at lambda=(" + lam.to_string() + "), a=" +
                   std::to_string(a) + ", b=" + std::to_string(b);
          return false;
        }
        ++checked;
      }
  }
  detail = std::to_string(checked) + " identities exact";
  return true;
}

bool shift_example(std::string& detail) {
  PolynomialFunctor t2 = PolynomialFunctor::parse("0 + 1*[2] + 1*[1,1]");
  for (int u = 1; u <= 3; ++u) {
    PolynomialFunctor s = shift(t2, u);
    bool good = s.constant_dim == static_cast<long>(u) * u &&
                s.summands.size() == 3 &&
                s.summands.at(Partition({1})) == 2 * u &&
                s.summands.at(Partition({2})) == 1 &&
                s.summands.at(Partition({1, 1})) == 1;
    if (!good) {
      detail = "wrong decomposition at u=" + std::to_string(u) + ": " + s.to_string();
      return false;
    }
  }
  detail = "Sh_{K^u} T^2 = T^2(K^u) + (S^1)^{2u} + S^2 + Wedge^2 for u=1,2,3";
  return true;
}

bool singular_locus_law(std::string& detail) {
  long total = 0;
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}}) {
    SingLocusReport rep = verify_sing_locus_determinantal(r, n, 100, 1);
    total += rep.checked;
    if (!rep.pass) {
      detail = "misclassification at r=" + std::to_string(r) + ", n=" + std::to_string(n);
      return false;
    }
  }
  detail = std::to_string(total) + " samples classified correctly";
  return true;
}

bool dimension_law(std::string& detail) {
  for (int r = 1; r <= 2; ++r)
    for (int n = r; n <= 5; ++n) {
      long expect = 2L * r * n - static_cast<long>(r) * r;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        long got = generic_dimension_lower_bound(matrices(r), n, seed);
        if (got != expect) {
          detail = "r=" + std::to_string(r) + ", n=" + std::to_string(n) + ", seed=" +
                   std::to_string(seed) + ": got " + std::to_string(got) +
                   ", want " + std::to_string(expect);
          return false;
        }
      }
    }
  detail = "2rn - r^2 exact and seed-stable for r in {1,2}, n in {r..5}, seeds 1..5";
  return true;
}

// Independent windowed scan: least k such that the branch inequality holds
// at every k' in [k, k+window].
long oracle_branch_min(int branch, int d, long c, long window) {
  for (long k = 0;; ++k) {
    bool all = true;
    for (long kk = k; kk <= k + window; ++kk)
      if (!fdc_branch_holds(branch, d, c, kk)) {
        all = false;
        break;
      }
    if (all) return k;
  }
}

bool fdc_criterion(std::string& detail) {
  if (fdc_bound(1, 0).F != 3 || fdc_bound(2, 0).F != 7) {
    detail = "F(1,0) or F(2,0) differs from the pinned values 3 and 7";
    return false;
  }
  for (int d = 1; d <= 3; ++d) {
    long prev = -1;
    for (long c = 0; c <= 5; ++c) {
      FdcReport rep = fdc_bound(d, c);
      if (rep.F < prev) {
        detail = "not monotone in c at d=" + std::to_string(d);
        return false;
      }
      prev = rep.F;
      for (int branch = 0; branch < static_cast<int>(rep.branch_values.size()); ++branch) {
        long nx = rep.branch_values[branch];
        if (nx != oracle_branch_min(branch, d, c, 40)) {
          detail = "scan oracle disagrees at d=" + std::to_string(d) + ", c=" +
                   std::to_string(c) + ", branch " + std::to_string(branch);
          return false;
        }
        if (nx > 0 && fdc_branch_holds(branch, d, c, nx - 1)) {
          detail = "branch value not minimal";
          return false;
        }
        for (long k = nx; k <= nx + 20; ++k)
          if (!fdc_branch_holds(branch, d, c, k)) {
            detail = "branch inequality fails inside the validity window";
            return false;
          }
      }
    }
  }
  detail = "F(1,0)=3, F(2,0)=7; minimality, 20-wide windows and c-monotonicity verified";
  return true;
}

RatMatrix random_full_rank(int rows, int cols, SmallIntSampler& s) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = s.next_rat();
    if (rank(m) == std::min(rows, cols)) return m;
  }
  throw DomainError("no full-rank sample");
}

TensorPoint tensor_point_from_matrix(const RatMatrix& m) {
  int n = m.rows();
  TensorPoint p = TensorPoint::zero(SpaceDescriptor{{{AtomKind::Tensor, 2}}, n});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.coords[static_cast<long>(a) * n + b] = m(a, b);
  return p;
}

// Admissible z for matrices_rank_le(r): p0 of rank r inside U (x) W with
// U + W = K^{2r}.
bool sample_matrix_omega(int r, int n, SmallIntSampler& s, VarietySpec& fam,
                         OmegaPoint& out) {
  int d = 2 * r;
  for (int attempt = 0; attempt < 64; ++attempt) {
    RatMatrix ub = random_full_rank(r, d, s);
    RatMatrix wb = random_full_rank(r, d, s);
    RatMatrix stacked(2 * r, d);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < d; ++j) {
        stacked(i, j) = ub(i, j);
        stacked(r + i, j) = wb(i, j);
      }
    if (rank(stacked) != d) continue;
    RatMatrix coeff = random_full_rank(r, r, s);
    RatMatrix m0(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Rat acc(0);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) acc += ub(i, a) * coeff(i, j) * wb(j, b);
        m0(a, b) = acc;
      }
    if (rank(m0) != r) continue;
    RatMatrix phi = random_full_rank(n, d, s);
    out = canonicalize(fam, phi, tensor_point_from_matrix(m0), row_space_basis(ub),
                       row_space_basis(wb));
    return true;
  }
  return false;
}

bool resolution_roundtrips(std::string& detail) {
  // matrices_rank_le(2) at n=5
  VarietySpec fam2 = matrices(2);
  int done = 0;
  for (std::uint64_t seed = 1; done < 100 && seed <= 400; ++seed) {
    TensorPoint p = sample_matrix_of_rank(5, 2, derive_seed(seed, 5, 2));
    if (minimal_subspace(p).size() != 4) continue;
    OmegaPoint w = local_inverse(fam2, p, 5);
    if (!(rho(w, 5) == p)) {
      detail = "rho(local_inverse(p)) != p at seed " + std::to_string(seed);
      return false;
    }
    SmallIntSampler s(derive_seed(seed, 99, 2));
    OmegaPoint omega{fam2, RatMatrix(), TensorPoint{}, std::nullopt, std::nullopt};
    if (!sample_matrix_omega(2, 5, s, fam2, omega)) continue;
    TensorPoint image = rho(omega, 5);
    if (minimal_subspace(image).size() != 4) continue;
    if (!(local_inverse(fam2, image, 5) == omega)) {
      detail = "local_inverse(rho(omega)) != omega at seed " + std::to_string(seed);
      return false;
    }
    ++done;
  }
  if (done < 100) {
    detail = "only " + std::to_string(done) + " admissible matrix samples";
    return false;
  }
  // sym_matrices_rank_le(2) at n=4
  VarietySpec fams = sym_matrices(2);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    TensorPoint p = sample_sym_matrix_of_rank(4, 2, derive_seed(seed, 4, 7));
    OmegaPoint w = local_inverse(fams, p, 4);
    if (!(rho(w, 4) == p)) {
      detail = "sym: rho(local_inverse(p)) != p at seed " + std::to_string(seed);
      return false;
    }
    SmallIntSampler s(derive_seed(seed, 98, 7));
    TensorPoint p0 = sample_sym_matrix_of_rank(2, 2, derive_seed(seed, 97, 7));
    RatMatrix phi = random_full_rank(4, 2, s);
    OmegaPoint omega = canonicalize(fams, phi, p0);
    TensorPoint image = rho(omega, 4);
    if (!(local_inverse(fams, image, 4) == omega)) {
      detail = "sym: local_inverse(rho(omega)) != omega at seed " + std::to_string(seed);
      return false;
    }
  }
  // positive-dimensional fibre over a rank-1 point
  TensorPoint thin = sample_matrix_of_rank(5, 1, 1234);
  FiberReport fib = fiber_probe(fam2, thin, 5, 12, 77);
  if (!fib.distinct) {
    detail = "fiber probe found no second preimage over a rank-1 point";
    return false;
  }
  detail = "100+100 exact round-trips per direction and family; thin fibre has " +
           std::to_string(fib.preimages_found.size()) + " distinct preimages";
  return true;
}

bool minimal_subspace_criterion(std::string& detail) {
  // functoriality per atom type, 50 seeded pairs each
  struct AtomCase {
    AtomKind kind;
    int d, n, m;
  };
  for (AtomCase ac : {AtomCase{AtomKind::Tensor, 3, 3, 5}, AtomCase{AtomKind::Sym, 2, 3, 5},
                      AtomCase{AtomKind::Ext, 2, 4, 6}}) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      SmallIntSampler s(derive_seed(seed, ac.d, ac.n));
      TensorPoint p = TensorPoint::zero(SpaceDescriptor{{{ac.kind, ac.d}}, ac.n});
      for (auto& c : p.coords) c = s.next_rat();
      RatMatrix phi = random_full_rank(ac.m, ac.n, s);
      std::vector<RatVector> lhs = minimal_subspace(apply_map(p, phi));
      std::vector<RatVector> mapped;
      for (const auto& v : minimal_subspace(p)) mapped.push_back(phi.apply(v));
      bool equal;
      if (lhs.empty() || mapped.empty()) {
        equal = lhs.size() == mapped.size();
      } else {
        equal = row_space_basis(RatMatrix::from_rows(lhs)) ==
                row_space_basis(RatMatrix::from_rows(mapped));
      }
      if (!equal) {
        detail = "functoriality failed on an atom case at seed " + std::to_string(seed);
        return false;
      }
    }
  }

  // border-rank-2 samples in (K^5)^(x3): the criterion pins dim U_p <= 6
  // always and = 6 for >= 45/50 seeds
  VarietySpec border = VarietySpec::parse("border_rank_le_2:d=3");
  int six = 0;
  bool le6 = true;
  std::map<int, int> histogram;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    TensorPoint p = parametrize_sample(border, 5, seed);
    int dim = static_cast<int>(minimal_subspace(p).size());
    ++histogram[dim];
    if (dim > 6) le6 = false;
    if (dim == 6) ++six;
  }

  // semicontinuity spot checks along seeded pencils
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SmallIntSampler s(derive_seed(seed, 3, 1));
    TensorPoint tiny = TensorPoint::zero(SpaceDescriptor{{{AtomKind::Tensor, 2}}, 1});
    tiny.coords[0] = s.next_rat();
    RatMatrix incl = random_full_rank(4, 1, s);
    TensorPoint p0 = apply_map(tiny, incl);
    TensorPoint q = TensorPoint::zero(p0.space);
    for (auto& c : q.coords) c = s.next_rat();
    int base = static_cast<int>(minimal_subspace(p0).size());
    int first = -1;
    for (long t : {1L, 2L, 3L, 5L, 7L}) {
      TensorPoint pt = p0;
      for (size_t i = 0; i < pt.coords.size(); ++i) pt.coords[i] += Rat(t) * q.coords[i];
      int dim = static_cast<int>(minimal_subspace(pt).size());
      if (dim < base) {
        detail = "semicontinuity violated along a pencil";
        return false;
      }
      if (first < 0)
        first = dim;
      else if (dim != first) {
        detail = "pencil dimension not constant over nonzero parameters";
        return false;
      }
    }
  }

  std::ostringstream hist;
  for (auto [dim, count] : histogram) hist << " dim" << dim << "x" << count;
  if (!le6) {
    detail = "a border-rank-2 sample exceeded dim U_p = 6";
    return false;
  }
  if (six < 45) {
    // U_p is a subspace of K^5, so dim U_p = 6 is impossible there; the
    // measured generic value at n=5 is 5. Reported as stated, not relaxed.
    detail = "dim U_p = 6 reached by " + std::to_string(six) +
             "/50 seeds (measured histogram:" + hist.str() +
             "); a subspace of K^5 cannot have dimension 6";
    return false;
  }
  detail = "functoriality, bound and semicontinuity all hold;" + hist.str();
  return true;
}

bool border_rank_fills_k2(std::string& detail) {
  long got = generic_dimension_lower_bound(VarietySpec::parse("border_rank_le_2:d=3"), 2, 1);
  detail = "generic rank " + std::to_string(got) + " of 8";
  return got == 8;
}

bool dichotomy_criterion(std::string& detail) {
  long checked = 0;
  for (int r = 1; r <= 2; ++r) {
    VarietySpec x = matrices(r);
    LinearTypeProfile prof = x.profile();
    long F = fdc_bound(prof.d, prof.c).F;
    RatMatrix incl(2 * prof.d, prof.d);
    for (int i = 0; i < prof.d; ++i) incl(i, i) = 1;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      int s = static_cast<int>(seed % (r + 1));
      TensorPoint p = sample_matrix_of_rank(prof.d, s, derive_seed(seed, s, 50 + r));
      DichotomyReport rep = singular_dichotomy_check(x, prof, p, F);
      bool singular = is_singular(x, apply_map(p, incl)).is_singular;
      bool equal_at_F = rep.rows.back().equal;
      if (equal_at_F != !singular || !rep.consistent_from_fdc) {
        detail = "disagreement at r=" + std::to_string(r) + ", seed " +
                 std::to_string(seed);
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " points agree at k = F(d,c)";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 LR/dimension identity", lr_dimension_identity},
      {"2 shift of T^2", shift_example},
      {"3 singular-locus law", singular_locus_law},
      {"4 dimension law 2rn - r^2", dimension_law},
      {"5 F(d,c) bound", fdc_criterion},
      {"6 resolution round-trips", resolution_roundtrips},
      {"7 minimal subspace", minimal_subspace_criterion},
      {"8 border rank fills (K^2)^(x3)", border_rank_fills_k2},
      {"9 dichotomy vs Jacobian criterion", dichotomy_criterion},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(stop - start).count();
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << criterion.name << " ("
         << secs << " s)";
    if (!detail.empty()) line << ": " << detail;
    std::cout << line.str() << "\n";
    if (!pass) ++failures;
  }

  // Context for criterion 7's border-rank clause: the same statistic in
  // (K^6)^(x3), where a 6-dimensional U_p is possible. Not a criterion.
  {
    VarietySpec border = VarietySpec::parse("border_rank_le_2:d=3");
    std::map<int, int> histogram;
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
      ++histogram[static_cast<int>(minimal_subspace(parametrize_sample(border, 6, seed)).size())];
    std::ostringstream hist;
    for (auto [dim, count] : histogram) hist << " dim" << dim << "x" << count;
    std::cout << "INFO border-rank-2 samples at n=6:" << hist.str() << "\n";
  }

  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}

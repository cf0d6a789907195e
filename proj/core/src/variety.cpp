#include <vecvar/variety.hpp>

#include <algorithm>
#include <sstream>

namespace vecvar {

namespace {

std::vector<int> combination_unrank(long rank, int n, int m) {
  std::vector<int> out;
  out.reserve(m);
  int next = 0;
  for (int t = 0; t < m; ++t) {
    for (int v = next; v < n; ++v) {
      long c = binomial(n - 1 - v, m - t - 1);
      if (rank < c) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= c;
    }
  }
  return out;
}

template <typename Fn>
void for_each_combination(const std::vector<int>& pool, int m, Fn&& fn) {
  int k = static_cast<int>(pool.size());
  if (m > k) return;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::vector<int> cur(m);
  while (true) {
    for (int i = 0; i < m; ++i) cur[i] = pool[idx[i]];
    fn(cur);
    int i = m - 1;
    while (i >= 0 && idx[i] == k - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MinorSystem::MinorSystem(int n, int minor_size, bool symmetric)
    : n_(n), m_(minor_size), symmetric_(symmetric) {
  if (n < 0 || minor_size < 1) throw DomainError("bad minor system shape");
}

long MinorSystem::ambient_dimension() const {
  return symmetric_ ? binomial(n_ + 1, 2) : static_cast<long>(n_) * n_;
}

long MinorSystem::generator_count() const {
  long k = binomial(n_, m_);
  return symmetric_ ? k * (k + 1) / 2 : k * k;
}

long MinorSystem::coord_index(int a, int b) const {
  if (!symmetric_) return static_cast<long>(a) * n_ + b;
  int lo = std::min(a, b), hi = std::max(a, b);
  return sym_index_of({lo, hi}, n_);
}

RatMatrix MinorSystem::point_matrix(const RatVector& coords) const {
  if (static_cast<long>(coords.size()) != ambient_dimension())
    throw DomainError("point has wrong ambient dimension");
  RatMatrix m(n_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) m(a, b) = coords[coord_index(a, b)];
  return m;
}

std::pair<std::vector<int>, std::vector<int>> MinorSystem::generator(long g) const {
  long k = binomial(n_, m_);
  if (g < 0 || g >= generator_count()) throw DomainError("generator index out of range");
  long ri, ci;
  if (!symmetric_) {
    ri = g / k;
    ci = g % k;
  } else {
    // pairs (i, j) with i <= j in lexicographic order
    ri = 0;
    while (g >= k - ri) {
      g -= k - ri;
      ++ri;
    }
    ci = ri + g;
  }
  return {combination_unrank(ri, n_, m_), combination_unrank(ci, n_, m_)};
}

Rat MinorSystem::minor_det(const RatVector& coords, const std::vector<int>& rows,
                           const std::vector<int>& cols) const {
  RatMatrix sub(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) sub(i, j) = coords[coord_index(rows[i], cols[j])];
  return determinant(sub);
}

Rat MinorSystem::evaluate(long g, const RatVector& coords) const {
  auto [rows, cols] = generator(g);
  return minor_det(coords, rows, cols);
}

void MinorSystem::accumulate_gradient(const RatVector& coords,
                                      const std::vector<int>& rows,
                                      const std::vector<int>& cols,
                                      std::map<long, Rat>& out) const {
  // Cofactor (Laplace) expansion: d det / d M_{rows[t], cols[u]} is the
  // (t,u) cofactor; the chain rule folds entries onto shared coordinates in
  // the symmetric case.
  for (int t = 0; t < m_; ++t)
    for (int u = 0; u < m_; ++u) {
      RatMatrix sub(m_ - 1, m_ - 1);
      for (int i = 0, si = 0; i < m_; ++i) {
        if (i == t) continue;
        for (int j = 0, sj = 0; j < m_; ++j) {
          if (j == u) continue;
          sub(si, sj) = coords[coord_index(rows[i], cols[j])];
          ++sj;
        }
        ++si;
      }
      Rat cof = determinant(sub);
      if ((t + u) % 2 == 1) cof = -cof;
      if (cof == 0) continue;
      out[coord_index(rows[t], cols[u])] += cof;
    }
}

RatVector MinorSystem::gradient(long g, const RatVector& coords) const {
  auto [rows, cols] = generator(g);
  std::map<long, Rat> sparse;
  accumulate_gradient(coords, rows, cols, sparse);
  RatVector out(ambient_dimension(), Rat(0));
  for (const auto& [idx, v] : sparse) out[idx] = v;
  return out;
}

std::vector<int> MinorSystem::nonzero_rows(const RatVector& coords) const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (coords[coord_index(a, b)] != 0) {
        out.push_back(a);
        break;
      }
  return out;
}

std::vector<int> MinorSystem::nonzero_cols(const RatVector& coords) const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b)
    for (int a = 0; a < n_; ++a)
      if (coords[coord_index(a, b)] != 0) {
        out.push_back(b);
        break;
      }
  return out;
}

template <typename Fn>
void MinorSystem::for_each_support_subset(const std::vector<int>& nonzero,
                                          int min_hits, Fn&& fn) const {
  // All m-subsets of [n] meeting `nonzero` in at least min_hits indices,
  // grouped by the exact number of hits so nothing is visited twice.
  std::vector<int> complement;
  for (int v = 0; v < n_; ++v)
    if (!std::binary_search(nonzero.begin(), nonzero.end(), v))
      complement.push_back(v);
  int max_hits = std::min<int>(m_, static_cast<int>(nonzero.size()));
  for (int j = std::max(0, min_hits); j <= max_hits; ++j) {
    if (m_ - j > static_cast<int>(complement.size())) continue;
    for_each_combination(nonzero, j, [&](const std::vector<int>& inside) {
      for_each_combination(complement, m_ - j, [&](const std::vector<int>& outside) {
        std::vector<int> merged(inside);
        merged.insert(merged.end(), outside.begin(), outside.end());
        std::sort(merged.begin(), merged.end());
        fn(merged);
      });
    });
  }
}

bool MinorSystem::is_member(const RatVector& coords) const {
  // A minor with a zero row or column of the point matrix vanishes, so only
  // subsets fully inside the support can produce a nonzero value.
  std::vector<int> nzr = nonzero_rows(coords);
  std::vector<int> nzc = nonzero_cols(coords);
  bool member = true;
  for_each_support_subset(nzr, m_, [&](const std::vector<int>& rows) {
    if (!member) return;
    for_each_support_subset(nzc, m_, [&](const std::vector<int>& cols) {
      if (!member) return;
      if (symmetric_ && cols < rows) return;
      if (minor_det(coords, rows, cols) != 0) member = false;
    });
  });
  return member;
}

RatMatrix MinorSystem::jacobian(const RatVector& coords) const {
  long gens = generator_count();
  RatMatrix j(static_cast<int>(gens), static_cast<int>(ambient_dimension()));
  for (long g = 0; g < gens; ++g) {
    RatVector row = gradient(g, coords);
    for (long c = 0; c < ambient_dimension(); ++c) j(static_cast<int>(g), static_cast<int>(c)) = row[c];
  }
  return j;
}

int MinorSystem::jacobian_rank(const RatVector& coords) const {
  std::vector<int> nzr = nonzero_rows(coords);
  std::vector<int> nzc = nonzero_cols(coords);
  SparseRowEchelon ech;
  for_each_support_subset(nzr, m_ - 1, [&](const std::vector<int>& rows) {
    for_each_support_subset(nzc, m_ - 1, [&](const std::vector<int>& cols) {
      if (symmetric_ && cols < rows) return;
      std::map<long, Rat> sparse;
      accumulate_gradient(coords, rows, cols, sparse);
      SparseRowEchelon::SparseRow row;
      row.reserve(sparse.size());
      for (auto& [idx, v] : sparse)
        if (v != 0) row.emplace_back(static_cast<int>(idx), std::move(v));
      if (!row.empty()) ech.insert(std::move(row));
    });
  });
  return ech.rank();
}

VarietySpec::VarietySpec(Family f, std::string name, int r, int order)
    : family_(f), name_(std::move(name)), r_(r), order_(order) {}

VarietySpec VarietySpec::builtin(const std::string& name,
                                 const std::map<std::string, int>& params) {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
      throw DomainError("variety '" + name + "' requires parameter " + key);
    return it->second;
  };
  if (name == "matrices_rank_le") {
    int r = get("r");
    if (r < 1) throw DomainError("matrices_rank_le requires r >= 1");
    return VarietySpec(Family::MatricesRankLe, name, r, 2);
  }
  if (name == "sym_matrices_rank_le") {
    int r = get("r");
    if (r < 1) throw DomainError("sym_matrices_rank_le requires r >= 1");
    return VarietySpec(Family::SymMatricesRankLe, name, r, 2);
  }
  if (name == "slice_rank_le") {
    int r = get("r"), d = get("d");
    if (r < 1 || d < 2) throw DomainError("slice_rank_le requires r >= 1, d >= 2");
    return VarietySpec(Family::SliceRankLe, name, r, d);
  }
  if (name == "border_rank_le_2") {
    int d = get("d");
    if (d < 2) throw DomainError("border_rank_le_2 requires d >= 2");
    return VarietySpec(Family::BorderRankLe2, name, 2, d);
  }
  throw DomainError("unknown variety '" + name + "'");
}

VarietySpec VarietySpec::parse(const std::string& text) {
  std::string name = text;
  std::map<std::string, int> params;
  size_t colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw DomainError("malformed variety parameter '" + item + "'");
      try {
        params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw DomainError("malformed variety parameter '" + item + "'");
      }
    }
  }
  return builtin(name, params);
}

std::string VarietySpec::display_name() const {
  std::ostringstream os;
  os << name_ << ":";
  switch (family_) {
    case Family::MatricesRankLe:
    case Family::SymMatricesRankLe:
      os << "r=" << r_;
      break;
    case Family::SliceRankLe:
      os << "r=" << r_ << ",d=" << order_;
      break;
    case Family::BorderRankLe2:
      os << "d=" << order_;
      break;
  }
  return os.str();
}

SpaceDescriptor VarietySpec::ambient(int n) const {
  SpaceDescriptor s;
  s.n = n;
  switch (family_) {
    case Family::MatricesRankLe:
      s.atoms = {{AtomKind::Tensor, 2}};
      break;
    case Family::SymMatricesRankLe:
      s.atoms = {{AtomKind::Sym, 2}};
      break;
    case Family::SliceRankLe:
    case Family::BorderRankLe2:
      s.atoms = {{AtomKind::Tensor, order_}};
      break;
  }
  return s;
}

bool VarietySpec::has_equations() const {
  return family_ == Family::MatricesRankLe || family_ == Family::SymMatricesRankLe;
}

MinorSystem VarietySpec::equations(int n) const {
  if (!has_equations()) throw DomainError("parametrization-only variety");
  return MinorSystem(n, r_ + 1, family_ == Family::SymMatricesRankLe);
}

std::optional<long> VarietySpec::dim_law(int n) const {
  switch (family_) {
    case Family::MatricesRankLe:
      if (n <= r_) return static_cast<long>(n) * n;
      return 2L * r_ * n - static_cast<long>(r_) * r_;
    case Family::SymMatricesRankLe:
      if (n <= r_) return binomial(n + 1, 2);
      return static_cast<long>(r_) * n - static_cast<long>(r_) * (r_ - 1) / 2;
    default:
      return std::nullopt;
  }
}

LinearTypeProfile VarietySpec::profile() const {
  LinearTypeProfile p;
  switch (family_) {
    case Family::MatricesRankLe:
      p.d = 2 * r_;
      break;
    case Family::SymMatricesRankLe:
      p.d = r_;
      break;
    case Family::BorderRankLe2:
      p.d = 2 * order_;
      break;
    case Family::SliceRankLe:
      throw DomainError("slice-rank varieties are not of linear type");
  }
  p.c = 0;  // the dominant morphisms are (S^1)^d -> X, with a point as base
  long best = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    best = std::max(best, generic_dimension_lower_bound(*this, p.d, seed));
  p.dim_at_d = best;
  return p;
}

int VarietySpec::parameter_count(int n) const {
  switch (family_) {
    case Family::MatricesRankLe:
      return 2 * r_ * n;
    case Family::SymMatricesRankLe:
      return r_ * n;
    case Family::SliceRankLe: {
      long rest = 1;
      for (int i = 0; i < order_ - 1; ++i) rest *= n;
      return static_cast<int>(r_ * (n + rest));
    }
    case Family::BorderRankLe2:
      return 2 * order_ * n;
  }
  throw DomainError("unknown family");
}

TensorPoint VarietySpec::parametrize(const RatVector& params, int n) const {
  if (static_cast<int>(params.size()) != parameter_count(n))
    throw DomainError("wrong parameter count");
  TensorPoint p = TensorPoint::zero(ambient(n));
  switch (family_) {
    case Family::MatricesRankLe: {
      for (int i = 0; i < r_; ++i) {
        const Rat* u = &params[2 * i * n];
        const Rat* v = &params[(2 * i + 1) * n];
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) p.coords[static_cast<long>(a) * n + b] += u[a] * v[b];
      }
      break;
    }
    case Family::SymMatricesRankLe: {
      for (int i = 0; i < r_; ++i) {
        const Rat* u = &params[static_cast<long>(i) * n];
        for (int a = 0; a < n; ++a)
          for (int b = a; b < n; ++b) p.coords[sym_index_of({a, b}, n)] += u[a] * u[b];
      }
      break;
    }
    case Family::SliceRankLe: {
      long rest = 1;
      for (int i = 0; i < order_ - 1; ++i) rest *= n;
      long block = n + rest;
      for (int k = 0; k < r_; ++k) {
        int slot = k % order_;
        const Rat* v = &params[k * block];
        const Rat* t = &params[k * block + n];
        for (long full = 0; full < static_cast<long>(p.coords.size()); ++full) {
          std::vector<int> multi = tensor_multi_of(full, order_, n);
          std::vector<int> others;
          for (int s = 0; s < order_; ++s)
            if (s != slot) others.push_back(multi[s]);
          long ti = order_ == 1 ? 0 : tensor_index_of(others, n);
          p.coords[full] += v[multi[slot]] * t[ti];
        }
      }
      break;
    }
    case Family::BorderRankLe2: {
      for (int g = 0; g < 2; ++g) {
        const Rat* base = &params[static_cast<long>(g) * order_ * n];
        for (long full = 0; full < static_cast<long>(p.coords.size()); ++full) {
          std::vector<int> multi = tensor_multi_of(full, order_, n);
          Rat prod(1);
          for (int s = 0; s < order_ && prod != 0; ++s) prod *= base[s * n + multi[s]];
          p.coords[full] += prod;
        }
      }
      break;
    }
  }
  return p;
}

RatMatrix VarietySpec::parametrization_jacobian(const RatVector& params, int n) const {
  if (static_cast<int>(params.size()) != parameter_count(n))
    throw DomainError("wrong parameter count");
  long adim = ambient(n).dimension();
  RatMatrix j(static_cast<int>(adim), parameter_count(n));
  switch (family_) {
    case Family::MatricesRankLe: {
      for (int i = 0; i < r_; ++i) {
        const Rat* u = &params[2 * i * n];
        const Rat* v = &params[(2 * i + 1) * n];
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            long row = static_cast<long>(a) * n + b;
            j(static_cast<int>(row), 2 * i * n + a) += v[b];
            j(static_cast<int>(row), (2 * i + 1) * n + b) += u[a];
          }
      }
      break;
    }
    case Family::SymMatricesRankLe: {
      for (int i = 0; i < r_; ++i) {
        const Rat* u = &params[static_cast<long>(i) * n];
        for (int a = 0; a < n; ++a)
          for (int b = a; b < n; ++b) {
            long row = sym_index_of({a, b}, n);
            j(static_cast<int>(row), i * n + a) += u[b];
            j(static_cast<int>(row), i * n + b) += u[a];
          }
      }
      break;
    }
    case Family::SliceRankLe: {
      long rest = 1;
      for (int i = 0; i < order_ - 1; ++i) rest *= n;
      long block = n + rest;
      for (int k = 0; k < r_; ++k) {
        int slot = k % order_;
        const Rat* v = &params[k * block];
        const Rat* t = &params[k * block + n];
        for (long full = 0; full < adim; ++full) {
          std::vector<int> multi = tensor_multi_of(full, order_, n);
          std::vector<int> others;
          for (int s = 0; s < order_; ++s)
            if (s != slot) others.push_back(multi[s]);
          long ti = order_ == 1 ? 0 : tensor_index_of(others, n);
          j(static_cast<int>(full), static_cast<int>(k * block + multi[slot])) += t[ti];
          j(static_cast<int>(full), static_cast<int>(k * block + n + ti)) += v[multi[slot]];
        }
      }
      break;
    }
    case Family::BorderRankLe2: {
      for (int g = 0; g < 2; ++g) {
        long base = static_cast<long>(g) * order_ * n;
        for (long full = 0; full < adim; ++full) {
          std::vector<int> multi = tensor_multi_of(full, order_, n);
          for (int s = 0; s < order_; ++s) {
            Rat prod(1);
            for (int t = 0; t < order_ && prod != 0; ++t) {
              if (t == s) continue;
              prod *= params[base + t * n + multi[t]];
            }
            if (prod != 0)
              j(static_cast<int>(full), static_cast<int>(base + s * n + multi[s])) += prod;
          }
        }
      }
      break;
    }
  }
  return j;
}

bool is_member(const VarietySpec& x, const TensorPoint& p) {
  if (!x.has_equations()) throw DomainError("parametrization-only variety");
  if (!(p.space == x.ambient(p.space.n)))
    throw DomainError("point does not live in the variety's ambient space");
  return x.equations(p.space.n).is_member(p.coords);
}

RatMatrix jacobian_at(const VarietySpec& x, const TensorPoint& p) {
  if (!is_member(x, p)) throw DomainError("membership failure");
  return x.equations(p.space.n).jacobian(p.coords);
}

SingularityReport is_singular(const VarietySpec& x, const TensorPoint& p) {
  int n = p.space.n;
  auto dim = x.dim_law(n);
  if (!dim) throw DomainError("dimension law undefined for this variety");
  if (!is_member(x, p)) throw DomainError("membership failure");
  MinorSystem eq = x.equations(n);
  SingularityReport rep;
  rep.point = p;
  rep.ambient_dim = eq.ambient_dimension();
  rep.variety_dim = *dim;
  rep.jacobian_rank = eq.jacobian_rank(p.coords);
  rep.is_singular = rep.jacobian_rank < rep.ambient_dim - rep.variety_dim;
  return rep;
}

TensorPoint parametrize_sample(const VarietySpec& x, int n, std::uint64_t seed) {
  SmallIntSampler sampler(seed);
  return x.parametrize(sampler.next_vector(x.parameter_count(n)), n);
}

long generic_dimension_lower_bound(const VarietySpec& x, int n, std::uint64_t seed) {
  SmallIntSampler sampler(seed);
  RatVector params = sampler.next_vector(x.parameter_count(n));
  return rank(x.parametrization_jacobian(params, n));
}

TensorPoint sample_matrix_of_rank(int n, int s, std::uint64_t seed, int max_retries) {
  if (s < 0 || s > n) throw DomainError("rank out of range");
  SpaceDescriptor space{{{AtomKind::Tensor, 2}}, n};
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    SmallIntSampler sampler(seed + attempt);
    TensorPoint p = TensorPoint::zero(space);
    for (int i = 0; i < s; ++i) {
      RatVector u = sampler.next_vector(n), v = sampler.next_vector(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) p.coords[static_cast<long>(a) * n + b] += u[a] * v[b];
    }
    RatMatrix m(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) = p.coords[static_cast<long>(a) * n + b];
    if (rank(m) == s) return p;
  }
  throw DomainError("failed to sample a matrix of the requested rank");
}

TensorPoint sample_sym_matrix_of_rank(int n, int s, std::uint64_t seed, int max_retries) {
  if (s < 0 || s > n) throw DomainError("rank out of range");
  SpaceDescriptor space{{{AtomKind::Sym, 2}}, n};
  MinorSystem sys(n, 1, true);  // for the coordinate layout only
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    SmallIntSampler sampler(seed + attempt);
    TensorPoint p = TensorPoint::zero(space);
    for (int i = 0; i < s; ++i) {
      RatVector u = sampler.next_vector(n);
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) p.coords[sym_index_of({a, b}, n)] += u[a] * u[b];
    }
    if (rank(sys.point_matrix(p.coords)) == s) return p;
  }
  throw DomainError("failed to sample a symmetric matrix of the requested rank");
}

SingLocusReport verify_sing_locus_determinantal(int r, int n, int sample_count,
                                                std::uint64_t seed) {
  if (!(n > r && r >= 1)) throw DomainError("requires n > r >= 1");
  VarietySpec x = VarietySpec::builtin("matrices_rank_le", {{"r", r}});
  SingLocusReport rep;
  rep.r = r;
  rep.n = n;
  rep.samples_per_rank = sample_count;
  rep.seed = seed;
  rep.pass = true;
  for (int s = 0; s <= r; ++s) {
    for (int j = 0; j < sample_count; ++j) {
      std::uint64_t sub = derive_seed(seed, s, j);
      TensorPoint p = sample_matrix_of_rank(n, s, sub);
      SingularityReport sing = is_singular(x, p);
      ++rep.checked;
      bool expected = s <= r - 1;
      if (sing.is_singular != expected) {
        rep.pass = false;
        rep.counterexamples.push_back({s, sub, expected, sing.is_singular});
      }
    }
  }
  return rep;
}

}  // namespace vecvar

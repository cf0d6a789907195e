#include <vecvar/tensor.hpp>

#include <algorithm>
#include <numeric>

namespace vecvar {

namespace {

// Weakly increasing k-tuples over m values.
long multiset_count(long m, long k) { return binomial(m + k - 1, k); }

long power(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r < 0) throw DomainError("tensor dimension overflow");
  }
  return r;
}

int permutation_sign(const std::vector<int>& arr) {
  int inv = 0;
  for (size_t i = 0; i < arr.size(); ++i)
    for (size_t j = i + 1; j < arr.size(); ++j)
      if (arr[i] > arr[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

long atom_dimension(const Atom& a, int n) {
  switch (a.kind) {
    case AtomKind::Tensor:
      return power(n, a.d);
    case AtomKind::Sym:
      return binomial(n + a.d - 1, a.d);
    case AtomKind::Ext:
      return binomial(n, a.d);
    case AtomKind::Const:
      return a.d;
  }
  throw DomainError("unknown atom kind");
}

long SpaceDescriptor::dimension() const {
  long t = 0;
  for (const Atom& a : atoms) t += vecvar::atom_dimension(a, n);
  return t;
}

long SpaceDescriptor::atom_dimension(int atom_index) const {
  return vecvar::atom_dimension(atoms.at(atom_index), n);
}

long SpaceDescriptor::atom_offset(int atom_index) const {
  long off = 0;
  for (int i = 0; i < atom_index; ++i) off += atom_dimension(i);
  return off;
}

SpaceDescriptor SpaceDescriptor::with_ambient(int m) const {
  SpaceDescriptor s = *this;
  s.n = m;
  return s;
}

bool SpaceDescriptor::operator==(const SpaceDescriptor& o) const {
  if (n != o.n || atoms.size() != o.atoms.size()) return false;
  for (size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].kind != o.atoms[i].kind || atoms[i].d != o.atoms[i].d)
      return false;
  return true;
}

SpaceDescriptor SpaceDescriptor::from_functor(const PolynomialFunctor& p, int n) {
  SpaceDescriptor s;
  s.n = n;
  if (p.constant_dim > 0)
    s.atoms.push_back({AtomKind::Const, static_cast<int>(p.constant_dim)});
  for (const auto& [lam, mult] : p.summands) {
    Atom a;
    if (lam.length() == 1) {
      a = {AtomKind::Sym, lam.part(0)};
    } else if (lam.part(0) == 1) {
      a = {AtomKind::Ext, lam.length()};
    } else {
      throw DomainError("unsupported functor: general Schur atom [" +
                        lam.to_string() + "] is not evaluable");
    }
    for (long k = 0; k < mult; ++k) s.atoms.push_back(a);
  }
  return s;
}

long tensor_index_of(const std::vector<int>& multi, int n) {
  long idx = 0;
  for (int v : multi) {
    if (v < 0 || v >= n) throw DomainError("multi-index out of range");
    idx = idx * n + v;
  }
  return idx;
}

std::vector<int> tensor_multi_of(long index, int d, int n) {
  std::vector<int> multi(d);
  for (int t = d - 1; t >= 0; --t) {
    multi[t] = static_cast<int>(index % n);
    index /= n;
  }
  return multi;
}

long sym_index_of(const std::vector<int>& multi, int n) {
  long idx = 0;
  int d = static_cast<int>(multi.size());
  int prev = 0;
  for (int t = 0; t < d; ++t) {
    if (multi[t] < prev || multi[t] >= n)
      throw DomainError("not a weakly increasing multi-index");
    for (int v = prev; v < multi[t]; ++v)
      idx += multiset_count(n - v, d - t - 1);
    prev = multi[t];
  }
  return idx;
}

std::vector<int> sym_multi_of(long index, int d, int n) {
  std::vector<int> multi(d);
  int prev = 0;
  for (int t = 0; t < d; ++t) {
    for (int v = prev; v < n; ++v) {
      long c = multiset_count(n - v, d - t - 1);
      if (index < c) {
        multi[t] = v;
        prev = v;
        break;
      }
      index -= c;
    }
  }
  return multi;
}

long ext_index_of(const std::vector<int>& multi, int n) {
  long idx = 0;
  int d = static_cast<int>(multi.size());
  int prev = 0;
  for (int t = 0; t < d; ++t) {
    if (multi[t] < prev || multi[t] >= n)
      throw DomainError("not a strictly increasing multi-index");
    for (int v = prev; v < multi[t]; ++v)
      idx += binomial(n - 1 - v, d - t - 1);
    prev = multi[t] + 1;
  }
  return idx;
}

std::vector<int> ext_multi_of(long index, int d, int n) {
  std::vector<int> multi(d);
  int prev = 0;
  for (int t = 0; t < d; ++t) {
    for (int v = prev; v < n; ++v) {
      long c = binomial(n - 1 - v, d - t - 1);
      if (index < c) {
        multi[t] = v;
        prev = v + 1;
        break;
      }
      index -= c;
    }
  }
  return multi;
}

TensorPoint TensorPoint::zero(const SpaceDescriptor& s) {
  return TensorPoint{s, RatVector(s.dimension(), Rat(0))};
}

bool TensorPoint::is_zero() const {
  for (const Rat& c : coords)
    if (c != 0) return false;
  return true;
}

RatVector atom_as_full_tensor(const TensorPoint& p, int atom_index) {
  const Atom& a = p.space.atoms.at(atom_index);
  int n = p.space.n;
  long off = p.space.atom_offset(atom_index);
  long adim = p.space.atom_dimension(atom_index);
  if (a.kind == AtomKind::Const)
    throw DomainError("constant atom has no tensor coordinates");
  RatVector full(power(n, a.d), Rat(0));
  if (a.kind == AtomKind::Tensor) {
    for (long i = 0; i < adim; ++i) full[i] = p.coords[off + i];
    return full;
  }
  for (long i = 0; i < adim; ++i) {
    const Rat& c = p.coords[off + i];
    if (c == 0) continue;
    std::vector<int> multi = a.kind == AtomKind::Sym ? sym_multi_of(i, a.d, n)
                                                     : ext_multi_of(i, a.d, n);
    std::vector<int> arr = multi;
    do {
      if (a.kind == AtomKind::Sym) {
        full[tensor_index_of(arr, n)] += c;
      } else {
        full[tensor_index_of(arr, n)] += Rat(permutation_sign(arr)) * c;
      }
    } while (std::next_permutation(arr.begin(), arr.end()));
  }
  return full;
}

namespace {

// Contract leg t (0-based) of a full tensor with phi: dims[t] goes from
// its current value to phi.rows().
RatVector mode_multiply(const RatVector& cur, std::vector<long>& dims, int t,
                        const RatMatrix& phi) {
  long before = 1, after = 1;
  for (int i = 0; i < t; ++i) before *= dims[i];
  for (size_t i = t + 1; i < dims.size(); ++i) after *= dims[i];
  long old_nt = dims[t];
  long new_nt = phi.rows();
  RatVector out(before * new_nt * after, Rat(0));
  for (long b = 0; b < before; ++b)
    for (long x = 0; x < old_nt; ++x)
      for (long s = 0; s < after; ++s) {
        const Rat& v = cur[(b * old_nt + x) * after + s];
        if (v == 0) continue;
        for (long a = 0; a < new_nt; ++a) {
          const Rat& f = phi(static_cast<int>(a), static_cast<int>(x));
          if (f == 0) continue;
          out[(b * new_nt + a) * after + s] += f * v;
        }
      }
  dims[t] = new_nt;
  return out;
}

RatVector apply_full_tensor(RatVector full, int d, int n, const RatMatrix& phi) {
  std::vector<long> dims(d, n);
  for (int t = 0; t < d; ++t) full = mode_multiply(full, dims, t, phi);
  return full;
}

}  // namespace

TensorPoint apply_map(const TensorPoint& p, const RatMatrix& phi) {
  if (phi.cols() != p.space.n)
    throw DomainError("apply_map: matrix domain does not match ambient dimension");
  int m = phi.rows();
  TensorPoint out = TensorPoint::zero(p.space.with_ambient(m));
  for (size_t ai = 0; ai < p.space.atoms.size(); ++ai) {
    const Atom& a = p.space.atoms[ai];
    long off_in = p.space.atom_offset(static_cast<int>(ai));
    long off_out = out.space.atom_offset(static_cast<int>(ai));
    if (a.kind == AtomKind::Const) {
      for (int i = 0; i < a.d; ++i) out.coords[off_out + i] = p.coords[off_in + i];
      continue;
    }
    RatVector full = atom_as_full_tensor(p, static_cast<int>(ai));
    full = apply_full_tensor(std::move(full), a.d, p.space.n, phi);
    long adim_out = out.space.atom_dimension(static_cast<int>(ai));
    for (long i = 0; i < adim_out; ++i) {
      switch (a.kind) {
        case AtomKind::Tensor:
          out.coords[off_out + i] = full[i];
          break;
        case AtomKind::Sym:
          out.coords[off_out + i] = full[tensor_index_of(sym_multi_of(i, a.d, m), m)];
          break;
        case AtomKind::Ext:
          out.coords[off_out + i] = full[tensor_index_of(ext_multi_of(i, a.d, m), m)];
          break;
        case AtomKind::Const:
          break;
      }
    }
  }
  return out;
}

RatMatrix flattening(const TensorPoint& p, int atom_index, int leg) {
  const Atom& a = p.space.atoms.at(atom_index);
  if (a.kind == AtomKind::Const) throw DomainError("no flattening");
  if (leg < 1 || leg > a.d) throw DomainError("flattening leg out of range");
  int n = p.space.n;
  RatVector full = atom_as_full_tensor(p, atom_index);
  long rest = power(n, a.d - 1);
  RatMatrix out(n, static_cast<int>(rest));
  for (long idx = 0; idx < static_cast<long>(full.size()); ++idx) {
    if (full[idx] == 0) continue;
    std::vector<int> multi = tensor_multi_of(idx, a.d, n);
    int row = multi[leg - 1];
    std::vector<int> others;
    others.reserve(a.d - 1);
    for (int t = 0; t < a.d; ++t)
      if (t != leg - 1) others.push_back(multi[t]);
    long col = a.d == 1 ? 0 : tensor_index_of(others, n);
    out(row, static_cast<int>(col)) = full[idx];
  }
  return out;
}

std::vector<RatVector> minimal_subspace(const TensorPoint& p) {
  std::vector<RatVector> spanning;
  for (size_t ai = 0; ai < p.space.atoms.size(); ++ai) {
    const Atom& a = p.space.atoms[ai];
    if (a.kind == AtomKind::Const) continue;
    for (int leg = 1; leg <= a.d; ++leg) {
      RatMatrix f = flattening(p, static_cast<int>(ai), leg);
      for (int j = 0; j < f.cols(); ++j) {
        RatVector c = f.col(j);
        bool zero = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
        if (!zero) spanning.push_back(std::move(c));
      }
    }
  }
  if (spanning.empty()) return {};
  RatMatrix basis = row_space_basis(RatMatrix::from_rows(spanning));
  std::vector<RatVector> out;
  for (int i = 0; i < basis.rows(); ++i) out.push_back(basis.row(i));
  return out;
}

bool subspace_variety_member(const TensorPoint& p, int d) {
  return static_cast<int>(minimal_subspace(p).size()) <= d;
}

}  // namespace vecvar

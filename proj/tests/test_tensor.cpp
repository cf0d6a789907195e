#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vecvar/rng.hpp>
#include <vecvar/tensor.hpp>

#include <set>

using namespace vecvar;

namespace {

SpaceDescriptor tensor_space(int d, int n) { return {{{AtomKind::Tensor, d}}, n}; }
SpaceDescriptor sym_space(int d, int n) { return {{{AtomKind::Sym, d}}, n}; }
SpaceDescriptor ext_space(int d, int n) { return {{{AtomKind::Ext, d}}, n}; }

TensorPoint random_point(const SpaceDescriptor& s, SmallIntSampler& sampler) {
  TensorPoint p = TensorPoint::zero(s);
  for (auto& c : p.coords) c = sampler.next_rat();
  return p;
}

RatMatrix random_injective(int m, int n, SmallIntSampler& sampler) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    RatMatrix phi(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) phi(i, j) = sampler.next_rat();
    if (rank(phi) == n) return phi;
  }
  throw DomainError("no injective sample");
}

RatMatrix basis_to_rows(const std::vector<RatVector>& basis) {
  return RatMatrix::from_rows(basis);
}

bool same_subspace(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  if (a.empty() || b.empty()) return a.size() == b.size();
  return row_space_basis(basis_to_rows(a)) == row_space_basis(basis_to_rows(b));
}

std::vector<RatVector> map_subspace(const RatMatrix& phi,
                                    const std::vector<RatVector>& basis) {
  std::vector<RatVector> out;
  for (const auto& v : basis) out.push_back(phi.apply(v));
  return out;
}

}  // namespace

TEST_CASE("basis indexing round-trips in lexicographic order") {
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      long dim = atom_dimension({AtomKind::Sym, d}, n);
      std::vector<int> prev;
      for (long i = 0; i < dim; ++i) {
        auto multi = sym_multi_of(i, d, n);
        CHECK(sym_index_of(multi, n) == i);
        if (!prev.empty()) CHECK(prev < multi);
        prev = multi;
      }
      dim = atom_dimension({AtomKind::Ext, d}, n);
      prev.clear();
      for (long i = 0; i < dim; ++i) {
        auto multi = ext_multi_of(i, d, n);
        CHECK(ext_index_of(multi, n) == i);
        if (!prev.empty()) CHECK(prev < multi);
        prev = multi;
      }
      dim = atom_dimension({AtomKind::Tensor, d}, n);
      for (long i = 0; i < dim; ++i)
        CHECK(tensor_index_of(tensor_multi_of(i, d, n), n) == i);
    }
}

TEST_CASE("descriptor from functor") {
  PolynomialFunctor t2 = PolynomialFunctor::parse("0 + 1*[2] + 1*[1,1]");
  SpaceDescriptor s = SpaceDescriptor::from_functor(t2, 3);
  CHECK(s.dimension() == 9);  // S^2 + Wedge^2 at n=3: 6 + 3
  PolynomialFunctor shifted = shift(t2, 3);
  CHECK(SpaceDescriptor::from_functor(shifted, 2).dimension() ==
        dimension_polynomial(shifted).eval_at_int(2).get_si());
  CHECK_THROWS_AS(
      SpaceDescriptor::from_functor(PolynomialFunctor::parse("0 + 1*[2,1]"), 3),
      DomainError);
  CHECK_THROWS_AS(
      SpaceDescriptor::from_functor(PolynomialFunctor::parse("0 + 1*[2,2]"), 3),
      DomainError);
}

TEST_CASE("apply_map basics") {
  // identity
  SmallIntSampler s(3);
  TensorPoint p = random_point(tensor_space(2, 3), s);
  CHECK(apply_map(p, RatMatrix::identity(3)) == p);

  // basis swap on e1 (x) e1
  TensorPoint q = TensorPoint::zero(tensor_space(2, 2));
  q.coords[tensor_index_of({0, 0}, 2)] = 1;
  RatMatrix swap = RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  TensorPoint qq = apply_map(q, swap);
  CHECK(qq.coords[tensor_index_of({1, 1}, 2)] == 1);
  CHECK(qq.coords[tensor_index_of({0, 0}, 2)] == 0);

  // e1 e2 in SYM(2) under diag(2,3) picks up both scalings
  TensorPoint m = TensorPoint::zero(sym_space(2, 2));
  m.coords[sym_index_of({0, 1}, 2)] = 1;
  RatMatrix diag = RatMatrix::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
  TensorPoint mm = apply_map(m, diag);
  CHECK(mm.coords[sym_index_of({0, 1}, 2)] == 6);
  CHECK(mm.coords[sym_index_of({0, 0}, 2)] == 0);
  CHECK(mm.coords[sym_index_of({1, 1}, 2)] == 0);
}

TEST_CASE("exterior power action is given by minors") {
  SmallIntSampler s(5);
  RatMatrix phi = random_injective(4, 3, s);
  TensorPoint w = TensorPoint::zero(ext_space(2, 3));
  w.coords[ext_index_of({0, 1}, 3)] = 1;  // e1 ^ e2
  TensorPoint out = apply_map(w, phi);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      Rat minor = phi(a, 0) * phi(b, 1) - phi(a, 1) * phi(b, 0);
      CHECK(out.coords[ext_index_of({a, b}, 4)] == minor);
    }
}

TEST_CASE("apply_map is functorial") {
  SmallIntSampler s(7);
  for (const SpaceDescriptor& space :
       {tensor_space(2, 3), sym_space(2, 3), ext_space(2, 3), tensor_space(3, 2),
        SpaceDescriptor{{{AtomKind::Sym, 1}, {AtomKind::Tensor, 2}, {AtomKind::Const, 2}},
                        3}}) {
    for (int t = 0; t < 5; ++t) {
      TensorPoint p = random_point(space, s);
      RatMatrix phi = random_injective(4, 3, s);
      RatMatrix psi = random_injective(5, 4, s);
      if (space.n == 2) {
        phi = random_injective(3, 2, s);
        psi = random_injective(4, 3, s);
      }
      CHECK(apply_map(p, psi * phi) == apply_map(apply_map(p, phi), psi));
    }
  }
}

TEST_CASE("flattening examples") {
  TensorPoint p = TensorPoint::zero(tensor_space(2, 2));
  p.coords[tensor_index_of({0, 1}, 2)] = 1;  // e1 (x) e2
  RatMatrix f1 = flattening(p, 0, 1);
  // leg-1 flattening: column space spanned by e1
  CHECK(f1.rows() == 2);
  CHECK(f1.cols() == 2);
  CHECK(f1(0, 1) == 1);
  CHECK(rank(f1) == 1);
  RatMatrix f2 = flattening(p, 0, 2);
  CHECK(f2(1, 0) == 1);  // column space spanned by e2

  TensorPoint diag = TensorPoint::zero(tensor_space(2, 2));
  diag.coords[tensor_index_of({0, 0}, 2)] = 1;
  diag.coords[tensor_index_of({1, 1}, 2)] = 1;
  CHECK(rank(flattening(diag, 0, 1)) == 2);
  CHECK(rank(flattening(diag, 0, 2)) == 2);

  TensorPoint c = TensorPoint::zero(SpaceDescriptor{{{AtomKind::Const, 3}}, 2});
  CHECK_THROWS_WITH_AS(flattening(c, 0, 1), "no flattening", DomainError);
}

TEST_CASE("minimal subspace worked examples") {
  // rank-1 quadric e1^2 at n=2
  TensorPoint q = TensorPoint::zero(sym_space(2, 2));
  q.coords[sym_index_of({0, 0}, 2)] = 1;
  auto basis = minimal_subspace(q);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == RatVector{Rat(1), Rat(0)});

  // e1 (x) e2 - e2 (x) e1 at n=4
  TensorPoint w = TensorPoint::zero(tensor_space(2, 4));
  w.coords[tensor_index_of({0, 1}, 4)] = 1;
  w.coords[tensor_index_of({1, 0}, 4)] = -1;
  auto wb = minimal_subspace(w);
  REQUIRE(wb.size() == 2);
  CHECK(wb[0] == RatVector{Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(wb[1] == RatVector{Rat(0), Rat(1), Rat(0), Rat(0)});

  // zero point
  CHECK(minimal_subspace(TensorPoint::zero(tensor_space(3, 4))).empty());
  CHECK(subspace_variety_member(TensorPoint::zero(tensor_space(2, 3)), 0));
  CHECK(subspace_variety_member(q, 1));
  CHECK(!subspace_variety_member(w, 1));
}

TEST_CASE("minimal subspace of a sum of two triads, against the stacked-vector oracle") {
  // p = sum_{i<=2} u_i (x) v_i (x) w_i in K^5: U_p is the span of all six
  // vectors. Independent oracle: the rank of the stacked 6 x 5 matrix.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SmallIntSampler s(seed);
    std::vector<RatVector> vecs;
    TensorPoint p = TensorPoint::zero(tensor_space(3, 5));
    for (int i = 0; i < 2; ++i) {
      RatVector u = s.next_vector(5), v = s.next_vector(5), w = s.next_vector(5);
      vecs.push_back(u);
      vecs.push_back(v);
      vecs.push_back(w);
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
          for (int c = 0; c < 5; ++c)
            p.coords[tensor_index_of({a, b, c}, 5)] += u[a] * v[b] * w[c];
    }
    int oracle = rank(RatMatrix::from_rows(vecs));
    CHECK(static_cast<int>(minimal_subspace(p).size()) == oracle);
    // six generic vectors in K^5 span the whole space
    CHECK(oracle == 5);
  }
}

TEST_CASE("minimal subspace is functorial under injective maps") {
  SmallIntSampler s(11);
  for (const SpaceDescriptor& space :
       {tensor_space(2, 3), tensor_space(3, 3), sym_space(2, 3), sym_space(3, 3),
        ext_space(2, 4), ext_space(3, 4)}) {
    for (int t = 0; t < 8; ++t) {
      TensorPoint p = random_point(space, s);
      RatMatrix phi = random_injective(space.n + 2, space.n, s);
      auto lhs = minimal_subspace(apply_map(p, phi));
      auto rhs = map_subspace(phi, minimal_subspace(p));
      CHECK(same_subspace(lhs, rhs));
    }
  }
}

TEST_CASE("reconstruction: coordinates vanish outside U_p in an adapted basis") {
  SmallIntSampler s(13);
  for (int t = 0; t < 8; ++t) {
    // a point with a small minimal subspace: image of a rank-2 map
    TensorPoint small = random_point(tensor_space(2, 2), s);
    RatMatrix incl = random_injective(5, 2, s);
    TensorPoint p = apply_map(small, incl);
    auto basis = minimal_subspace(p);
    int u = static_cast<int>(basis.size());
    REQUIRE(u <= 2);
    if (u == 0) continue;
    // extend the U_p basis to a basis of K^5
    std::vector<RatVector> rows = basis;
    while (static_cast<int>(rows.size()) < 5) {
      RatVector v = s.next_vector(5);
      rows.push_back(v);
      if (rank(RatMatrix::from_rows(rows)) != static_cast<int>(rows.size()))
        rows.pop_back();
    }
    RatMatrix change = inverse(RatMatrix::from_rows(rows).transposed());
    TensorPoint adapted = apply_map(p, change);
    for (long idx = 0; idx < static_cast<long>(adapted.coords.size()); ++idx) {
      if (adapted.coords[idx] == 0) continue;
      for (int leg_value : tensor_multi_of(idx, 2, 5)) CHECK(leg_value < u);
    }
  }
}

TEST_CASE("minimality against coordinate subspaces") {
  // For points whose U_p is coordinate-aligned, no smaller coordinate
  // subspace supports the point.
  auto supported_in = [](const TensorPoint& p, const std::set<int>& s) {
    for (long idx = 0; idx < static_cast<long>(p.coords.size()); ++idx) {
      if (p.coords[idx] == 0) continue;
      for (int v : tensor_multi_of(idx, 2, p.space.n))
        if (!s.count(v)) return false;
    }
    return true;
  };
  std::vector<TensorPoint> pts;
  {
    TensorPoint p = TensorPoint::zero(tensor_space(2, 3));
    p.coords[tensor_index_of({0, 0}, 3)] = 1;  // e1 (x) e1
    pts.push_back(p);
    TensorPoint q = TensorPoint::zero(tensor_space(2, 3));
    q.coords[tensor_index_of({0, 1}, 3)] = 1;
    q.coords[tensor_index_of({1, 0}, 3)] = 2;  // U_q = <e1, e2>
    pts.push_back(q);
  }
  for (const TensorPoint& p : pts) {
    int u = static_cast<int>(minimal_subspace(p).size());
    int n = p.space.n;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::set<int> sub;
      for (int v = 0; v < n; ++v)
        if (mask & (1 << v)) sub.insert(v);
      if (static_cast<int>(sub.size()) < u) CHECK(!supported_in(p, sub));
    }
  }
}

TEST_CASE("semicontinuity along seeded pencils") {
  // dim U_{p0 + t q} >= dim U_{p0} for t != 0, constant across the samples
  SmallIntSampler s(17);
  for (const SpaceDescriptor& space : {tensor_space(2, 4), sym_space(2, 4)}) {
    for (int trial = 0; trial < 5; ++trial) {
      // p0 of low rank: image of a point in a 1-dimensional space
      TensorPoint tiny = random_point(space.with_ambient(1), s);
      RatMatrix incl = random_injective(space.n, 1, s);
      TensorPoint p0 = apply_map(tiny, incl);
      TensorPoint q = random_point(space, s);
      int base = static_cast<int>(minimal_subspace(p0).size());
      int first = -1;
      for (long t : {1L, 2L, 3L, 5L, 7L}) {
        TensorPoint pt = p0;
        for (size_t i = 0; i < pt.coords.size(); ++i)
          pt.coords[i] += Rat(t) * q.coords[i];
        int dim = static_cast<int>(minimal_subspace(pt).size());
        CHECK(dim >= base);
        if (first < 0)
          first = dim;
        else
          CHECK(dim == first);
      }
    }
  }
}

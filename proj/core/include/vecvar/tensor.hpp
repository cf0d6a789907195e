#pragma once

#include <vecvar/matrix.hpp>
#include <vecvar/polyfun.hpp>
#include <vecvar/rational.hpp>

#include <string>
#include <vector>

namespace vecvar {

// Evaluable atoms: tensor, symmetric and exterior powers, and constants.
// General Schur functors are not evaluable here.
enum class AtomKind { Tensor, Sym, Ext, Const };

struct Atom {
  AtomKind kind;
  int d;  // power for Tensor/Sym/Ext, fixed dimension for Const
};

// A concrete evaluable space P(K^n) as a direct sum of atoms, with the
// canonical monomial bases: lexicographic multi-indices, weakly increasing
// for Sym, strictly increasing for Ext.
struct SpaceDescriptor {
  std::vector<Atom> atoms;
  int n = 0;

  long dimension() const;
  long atom_dimension(int atom_index) const;
  long atom_offset(int atom_index) const;
  SpaceDescriptor with_ambient(int m) const;

  bool operator==(const SpaceDescriptor& o) const;

  // Fails with an unsupported-functor error when a summand is neither a
  // symmetric power, an exterior power, nor S^1.
  static SpaceDescriptor from_functor(const PolynomialFunctor& p, int n);
};

long atom_dimension(const Atom& a, int n);

// Multi-index <-> linear index for a single atom at ambient dimension n.
long tensor_index_of(const std::vector<int>& multi, int n);
std::vector<int> tensor_multi_of(long index, int d, int n);
long sym_index_of(const std::vector<int>& multi, int n);   // weakly increasing
long ext_index_of(const std::vector<int>& multi, int n);   // strictly increasing
std::vector<int> sym_multi_of(long index, int d, int n);
std::vector<int> ext_multi_of(long index, int d, int n);

struct TensorPoint {
  SpaceDescriptor space;
  RatVector coords;

  static TensorPoint zero(const SpaceDescriptor& s);
  bool is_zero() const;
  bool operator==(const TensorPoint& o) const {
    return space == o.space && coords == o.coords;
  }
};

// Coordinates of one atom embedded into the full tensor power T^d(K^n):
// identity for Tensor, symmetrisation with unit coefficients for Sym,
// alternation with signs for Ext.
RatVector atom_as_full_tensor(const TensorPoint& p, int atom_index);

// The functorial action P(phi): phi is m-by-n with n = p.space.n; the result
// lives in the same descriptor at ambient dimension m.
TensorPoint apply_map(const TensorPoint& p, const RatMatrix& phi);

// Leg-i flattening (i in 1..d) of a non-constant atom, as an n x n^(d-1)
// matrix; Sym/Ext atoms are embedded into T^d first.
RatMatrix flattening(const TensorPoint& p, int atom_index, int leg);

// RREF basis of U_p = sum over atoms and legs of the flattening column
// spaces: the unique minimal subspace U with p in P(U).
std::vector<RatVector> minimal_subspace(const TensorPoint& p);

// dim U_p <= d, i.e. membership in the d-th subspace variety.
bool subspace_variety_member(const TensorPoint& p, int d);

}  // namespace vecvar

#pragma once

#include <vecvar/variety.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace vecvar {

// A point of the weak resolution Omega(K^n) = (Hom^0(K^d,K^n) x Z)/GL_d in
// canonical coordinates: phi is the unique reduced-column-echelon basis of
// its column space, and z has been transported accordingly.
//
// Z depends on the family: for matrices_rank_le(r), d = 2r and z is a triple
// (p0, U, W) with p0 in U (x) W and dim U = dim W = r inside K^d; for
// sym_matrices_rank_le(r), d = r and z = p0 ranges over all of S^2(K^d).
// U_basis/W_basis rows are kept in RREF, the canonical basis of a subspace.
struct OmegaPoint {
  VarietySpec family;
  RatMatrix phi;  // n x d, full column rank, reduced column echelon form
  TensorPoint p0;
  std::optional<RatMatrix> U_basis;
  std::optional<RatMatrix> W_basis;

  int d() const { return phi.cols(); }
  int n() const { return phi.rows(); }

  bool operator==(const OmegaPoint& o) const;
};

bool omega_less(const OmegaPoint& a, const OmegaPoint& b);

// Brings (phi, z) to the canonical representative of its GL_d-orbit:
// phi -> phi g in reduced column echelon form, z -> g^{-1} z, where g acts
// on K^d and hence on p0 (functorially) and on U, W (directly). Validates
// the incidence condition p0 in U (x) W. Idempotent.
OmegaPoint canonicalize(const VarietySpec& family, const RatMatrix& phi,
                        const TensorPoint& p0,
                        const std::optional<RatMatrix>& U_basis = std::nullopt,
                        const std::optional<RatMatrix>& W_basis = std::nullopt);

// rho([phi, z]) = X(phi)(rho_Z(z)) with rho_Z the first projection; the
// image is membership-checked against the family's minor equations.
TensorPoint rho(const OmegaPoint& omega, int n);

// The explicit local inverse on the isomorphism locus: for smooth p with
// dim U_p = d, builds the unique phi_p with identity rows on the
// lexicographically first coordinate d-subset where U_p projects
// isomorphically, and pulls p back along the corresponding projection.
OmegaPoint local_inverse(const VarietySpec& family, const TensorPoint& p, int n);

// Composes an injective map K^n -> K^m with phi and re-canonicalizes; the
// rational map Omega(K^n) -> Omega(K^m) of the semifunctoriality diagram.
OmegaPoint push(const OmegaPoint& omega, const RatMatrix& psi);

struct FiberReport {
  TensorPoint target;
  std::vector<OmegaPoint> preimages_found;  // canonical, deduplicated, sorted
  bool distinct = false;
  long trials = 0;
  std::uint64_t seed = 0;
};

// Random search through completions of U_p to d-dimensional subspaces (and,
// for the matrices family, of the column/row spaces of p0 to r-dimensional
// ones); every returned preimage maps to p exactly.
FiberReport fiber_probe(const VarietySpec& family, const TensorPoint& p, int n,
                        long trials, std::uint64_t seed);

}  // namespace vecvar

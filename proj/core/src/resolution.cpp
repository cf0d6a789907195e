#include <vecvar/resolution.hpp>

#include <algorithm>

namespace vecvar {

namespace {

int resolution_width(const VarietySpec& family) {
  switch (family.family()) {
    case VarietySpec::Family::MatricesRankLe:
      return 2 * family.r();
    case VarietySpec::Family::SymMatricesRankLe:
      return family.r();
    default:
      throw DomainError("no resolution model for family '" + family.name() + "'");
  }
}

bool is_matrices(const VarietySpec& family) {
  return family.family() == VarietySpec::Family::MatricesRankLe;
}

RatMatrix point_matrix_of(const VarietySpec& family, const TensorPoint& p) {
  return family.equations(p.space.n).point_matrix(p.coords);
}

// Rows of `vectors` as a matrix; pivot columns of an RREF matrix.
std::vector<int> leading_columns(const RatMatrix& rref_rows) {
  std::vector<int> lead;
  for (int i = 0; i < rref_rows.rows(); ++i)
    for (int j = 0; j < rref_rows.cols(); ++j)
      if (rref_rows(i, j) != 0) {
        lead.push_back(j);
        break;
      }
  return lead;
}

RatMatrix selector_matrix(const std::vector<int>& rows, int n) {
  RatMatrix sel(static_cast<int>(rows.size()), n);
  for (size_t t = 0; t < rows.size(); ++t) sel(static_cast<int>(t), rows[t]) = 1;
  return sel;
}

void check_shapes(const VarietySpec& family, const RatMatrix& phi,
                  const TensorPoint& p0) {
  int d = resolution_width(family);
  if (phi.cols() != d)
    throw DomainError("phi must have " + std::to_string(d) + " columns");
  if (!(p0.space == family.ambient(d).with_ambient(d)))
    throw DomainError("z-point must live in the family's ambient space at K^d");
}

// Columns of m all lie in the row space of basis_rows.
bool columns_inside(const RatMatrix& basis_rows, const RatMatrix& m) {
  for (int j = 0; j < m.cols(); ++j)
    if (!row_space_contains(basis_rows, m.col(j))) return false;
  return true;
}

void validate_incidence(const VarietySpec& family, const TensorPoint& p0,
                        const std::optional<RatMatrix>& U_basis,
                        const std::optional<RatMatrix>& W_basis) {
  if (!is_matrices(family)) {
    if (U_basis || W_basis)
      throw DomainError("U/W bases only apply to the matrices family");
    return;
  }
  int r = family.r(), d = 2 * r;
  if (!U_basis || !W_basis) throw DomainError("matrices family requires U and W bases");
  if (U_basis->rows() != r || U_basis->cols() != d || W_basis->rows() != r ||
      W_basis->cols() != d)
    throw DomainError("U/W bases must be r x d");
  if (rank(*U_basis) != r || rank(*W_basis) != r)
    throw DomainError("U/W bases must have full row rank");
  RatMatrix m0 = point_matrix_of(family, p0);
  // p0 in U (x) W: columns inside U, rows inside W.
  if (!columns_inside(*U_basis, m0) || !columns_inside(*W_basis, m0.transposed()))
    throw DomainError("incidence violated: p0 not inside U (x) W");
}

// Appends seeded random vectors to the rows of `basis` until it spans a
// subspace of dimension `target`, keeping previous rows fixed.
RatMatrix extend_to_dimension(const RatMatrix& basis, int target,
                              SmallIntSampler& sampler) {
  std::vector<RatVector> rows;
  for (int i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  int attempts = 0;
  while (static_cast<int>(rows.size()) < target) {
    if (++attempts > 64) throw DomainError("failed to extend basis");
    RatVector v = sampler.next_vector(basis.cols());
    rows.push_back(v);
    if (rank(RatMatrix::from_rows(rows)) != static_cast<int>(rows.size()))
      rows.pop_back();
  }
  return RatMatrix::from_rows(rows);
}

}  // namespace

bool OmegaPoint::operator==(const OmegaPoint& o) const {
  if (!(phi == o.phi) || !(p0 == o.p0)) return false;
  if (U_basis.has_value() != o.U_basis.has_value()) return false;
  if (W_basis.has_value() != o.W_basis.has_value()) return false;
  if (U_basis && !(*U_basis == *o.U_basis)) return false;
  if (W_basis && !(*W_basis == *o.W_basis)) return false;
  return true;
}

bool omega_less(const OmegaPoint& a, const OmegaPoint& b) {
  auto cmp_mat = [](const RatMatrix& x, const RatMatrix& y) {
    if (x.rows() != y.rows()) return x.rows() < y.rows() ? -1 : 1;
    if (x.cols() != y.cols()) return x.cols() < y.cols() ? -1 : 1;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) {
        int c = cmp(x(i, j), y(i, j));
        if (c != 0) return c;
      }
    return 0;
  };
  int c = cmp_mat(a.phi, b.phi);
  if (c != 0) return c < 0;
  for (size_t i = 0; i < a.p0.coords.size(); ++i) {
    int cc = cmp(a.p0.coords[i], b.p0.coords[i]);
    if (cc != 0) return cc < 0;
  }
  if (a.U_basis && b.U_basis) {
    c = cmp_mat(*a.U_basis, *b.U_basis);
    if (c != 0) return c < 0;
  }
  if (a.W_basis && b.W_basis) {
    c = cmp_mat(*a.W_basis, *b.W_basis);
    if (c != 0) return c < 0;
  }
  return false;
}

OmegaPoint canonicalize(const VarietySpec& family, const RatMatrix& phi,
                        const TensorPoint& p0,
                        const std::optional<RatMatrix>& U_basis,
                        const std::optional<RatMatrix>& W_basis) {
  check_shapes(family, phi, p0);
  int d = phi.cols();
  if (rank(phi) != d) throw DomainError("not injective");
  RatMatrix echelon = column_echelon_canonical(phi);
  // echelon = phi g; ginv = g^{-1} solves echelon * ginv = phi.
  RatMatrix ginv = solve_unique(echelon, phi);
  TensorPoint new_p0 = apply_map(p0, ginv);
  std::optional<RatMatrix> new_U, new_W;
  if (U_basis) new_U = row_space_basis(*U_basis * ginv.transposed());
  if (W_basis) new_W = row_space_basis(*W_basis * ginv.transposed());
  validate_incidence(family, new_p0, new_U, new_W);
  return OmegaPoint{family, std::move(echelon), std::move(new_p0), std::move(new_U),
                    std::move(new_W)};
}

TensorPoint rho(const OmegaPoint& omega, int n) {
  if (omega.n() != n) throw DomainError("omega lives at a different ambient dimension");
  TensorPoint image = apply_map(omega.p0, omega.phi);
  if (!is_member(omega.family, image))
    throw DomainError("rho image violates the family's equations");
  return image;
}

OmegaPoint local_inverse(const VarietySpec& family, const TensorPoint& p, int n) {
  int d = resolution_width(family);
  if (p.space.n != n || !(p.space == family.ambient(n)))
    throw DomainError("point does not live in the family's ambient space");
  if (!is_member(family, p)) throw DomainError("membership failure");
  if (is_singular(family, p).is_singular)
    throw DomainError("outside resolution's isomorphism locus");
  std::vector<RatVector> basis = minimal_subspace(p);
  if (static_cast<int>(basis.size()) != d)
    throw DomainError("outside resolution's isomorphism locus");

  // The RREF rows transpose to the reduced column echelon basis of U_p; its
  // pivot rows are the lexicographically first coordinates on which U_p
  // projects isomorphically.
  RatMatrix basis_rows = RatMatrix::from_rows(basis);
  RatMatrix phi = basis_rows.transposed();
  std::vector<int> pivots = leading_columns(basis_rows);
  RatMatrix sigma = selector_matrix(pivots, n);
  TensorPoint p0 = apply_map(p, sigma);
  if (!(apply_map(p0, phi) == p))
    throw DomainError("local inverse round-trip failed");

  std::optional<RatMatrix> U, W;
  if (is_matrices(family)) {
    RatMatrix m0 = point_matrix_of(family, p0);
    U = row_space_basis(m0.transposed());  // column space of p0
    W = row_space_basis(m0);               // row space of p0
    if (U->rows() != family.r() || W->rows() != family.r())
      throw DomainError("outside resolution's isomorphism locus");
  }
  return canonicalize(family, phi, p0, U, W);
}

OmegaPoint push(const OmegaPoint& omega, const RatMatrix& psi) {
  if (psi.cols() != omega.n()) throw DomainError("push: shape mismatch");
  RatMatrix composed = psi * omega.phi;
  if (rank(composed) != omega.d())
    throw DomainError("push: composition is not injective");
  return canonicalize(omega.family, composed, omega.p0, omega.U_basis,
                      omega.W_basis);
}

FiberReport fiber_probe(const VarietySpec& family, const TensorPoint& p, int n,
                        long trials, std::uint64_t seed) {
  int d = resolution_width(family);
  if (p.space.n != n || !(p.space == family.ambient(n)))
    throw DomainError("point does not live in the family's ambient space");
  if (!is_member(family, p)) throw DomainError("membership failure");
  std::vector<RatVector> up = minimal_subspace(p);
  if (static_cast<int>(up.size()) > d)
    throw DomainError("point lies outside the d-th subspace variety");
  RatMatrix up_rows =
      up.empty() ? RatMatrix(0, n) : RatMatrix::from_rows(up);

  FiberReport rep;
  rep.target = p;
  rep.trials = trials;
  rep.seed = seed;
  for (long t = 0; t < trials; ++t) {
    SmallIntSampler sampler(derive_seed(seed, 1, t));
    RatMatrix spanning;
    try {
      spanning = extend_to_dimension(up_rows, d, sampler);
    } catch (const DomainError&) {
      continue;
    }
    RatMatrix phi = column_echelon_canonical(spanning.transposed());
    std::vector<int> pivots = leading_columns(rref(spanning));
    RatMatrix sigma = selector_matrix(pivots, n);
    TensorPoint p0 = apply_map(p, sigma);
    if (!(apply_map(p0, phi) == p)) continue;  // p must sit inside the span

    std::optional<RatMatrix> U, W;
    if (is_matrices(family)) {
      RatMatrix m0 = point_matrix_of(family, p0);
      U = extend_to_dimension(row_space_basis(m0.transposed()), family.r(), sampler);
      W = extend_to_dimension(row_space_basis(m0), family.r(), sampler);
      U = row_space_basis(*U);
      W = row_space_basis(*W);
    }
    OmegaPoint candidate = canonicalize(family, phi, p0, U, W);
    if (!(rho(candidate, n) == p))
      throw DomainError("fiber candidate does not map to the target");
    rep.preimages_found.push_back(std::move(candidate));
  }
  std::sort(rep.preimages_found.begin(), rep.preimages_found.end(), omega_less);
  rep.preimages_found.erase(
      std::unique(rep.preimages_found.begin(), rep.preimages_found.end()),
      rep.preimages_found.end());
  rep.distinct = rep.preimages_found.size() >= 2;
  return rep;
}

}  // namespace vecvar

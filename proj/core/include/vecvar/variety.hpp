#pragma once

#include <vecvar/matrix.hpp>
#include <vecvar/rng.hpp>
#include <vecvar/tensor.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vecvar {

// The determinantal equation systems behind the built-in varieties: all
// m-by-m minors of an n-by-n matrix whose entries are coordinates of
// TENSOR(2) (plain) or SYM(2) (symmetric; entry (a,b) reads c_{min,max}).
class MinorSystem {
 public:
  MinorSystem(int n, int minor_size, bool symmetric);

  int n() const { return n_; }
  int minor_size() const { return m_; }
  bool symmetric() const { return symmetric_; }
  long ambient_dimension() const;
  long generator_count() const;

  long coord_index(int a, int b) const;
  RatMatrix point_matrix(const RatVector& coords) const;

  // Generators are indexed by (row-subset, column-subset) pairs in
  // lexicographic order; for the symmetric system only pairs with R <= C
  // are kept, since det M[R,C] = det M[C,R].
  std::pair<std::vector<int>, std::vector<int>> generator(long g) const;
  Rat evaluate(long g, const RatVector& coords) const;
  RatVector gradient(long g, const RatVector& coords) const;

  bool is_member(const RatVector& coords) const;
  RatMatrix jacobian(const RatVector& coords) const;

  // Exact rank of the span of all generator gradients at the given point.
  // Generators whose gradient provably vanishes are skipped: every gradient
  // entry is an (m-1)-minor of the point matrix, so a generator needs at
  // least m-1 nonzero rows of the point matrix among its row indices (and
  // likewise for columns) to contribute.
  int jacobian_rank(const RatVector& coords) const;

 private:
  template <typename Fn>
  void for_each_support_subset(const std::vector<int>& nonzero, int min_hits,
                               Fn&& fn) const;
  Rat minor_det(const RatVector& coords, const std::vector<int>& rows,
                const std::vector<int>& cols) const;
  void accumulate_gradient(const RatVector& coords, const std::vector<int>& rows,
                           const std::vector<int>& cols,
                           std::map<long, Rat>& out) const;
  std::vector<int> nonzero_rows(const RatVector& coords) const;
  std::vector<int> nonzero_cols(const RatVector& coords) const;

  int n_, m_;
  bool symmetric_;
};

struct LinearTypeProfile {
  int d = 0;          // minimal parametrization width
  long c = 0;         // dimension of the base B of the dominant morphism
  long dim_at_d = 0;  // dim X(K^d)
};

// One of the paper's example families, with equation and/or parametrization
// backends and its dimension law.
class VarietySpec {
 public:
  enum class Family { MatricesRankLe, SymMatricesRankLe, SliceRankLe, BorderRankLe2 };

  static VarietySpec builtin(const std::string& name,
                             const std::map<std::string, int>& params);
  // "matrices_rank_le:r=2", "border_rank_le_2:d=3", "slice_rank_le:r=1,d=3"
  static VarietySpec parse(const std::string& text);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  std::string display_name() const;
  int r() const { return r_; }
  int tensor_order() const { return order_; }

  SpaceDescriptor ambient(int n) const;
  bool has_equations() const;
  bool has_parametrization() const { return true; }
  MinorSystem equations(int n) const;

  std::optional<long> dim_law(int n) const;
  LinearTypeProfile profile() const;

  int parameter_count(int n) const;
  TensorPoint parametrize(const RatVector& params, int n) const;
  RatMatrix parametrization_jacobian(const RatVector& params, int n) const;

 private:
  VarietySpec(Family f, std::string name, int r, int order);

  Family family_;
  std::string name_;
  int r_ = 0;      // rank bound (unused for border_rank_le_2)
  int order_ = 2;  // tensor order d for slice/border families
};

struct SingularityReport {
  TensorPoint point;
  long ambient_dim = 0;
  long variety_dim = 0;
  long jacobian_rank = 0;
  bool is_singular = false;
};

bool is_member(const VarietySpec& x, const TensorPoint& p);
RatMatrix jacobian_at(const VarietySpec& x, const TensorPoint& p);
SingularityReport is_singular(const VarietySpec& x, const TensorPoint& p);

TensorPoint parametrize_sample(const VarietySpec& x, int n, std::uint64_t seed);

// Rank of the exact parametrization Jacobian at a seeded random parameter
// point; a certified lower bound for dim X(K^n).
long generic_dimension_lower_bound(const VarietySpec& x, int n, std::uint64_t seed);

// A seeded n-by-n matrix of rank exactly s, built as a sum of s dyads;
// retries with incremented seeds when the rank degenerates.
TensorPoint sample_matrix_of_rank(int n, int s, std::uint64_t seed,
                                  int max_retries = 32);
TensorPoint sample_sym_matrix_of_rank(int n, int s, std::uint64_t seed,
                                      int max_retries = 32);

struct SingLocusSample {
  int rank = 0;
  std::uint64_t seed = 0;
  bool expected_singular = false;
  bool got_singular = false;
};

struct SingLocusReport {
  int r = 0, n = 0;
  int samples_per_rank = 0;
  std::uint64_t seed = 0;
  long checked = 0;
  bool pass = false;
  std::vector<SingLocusSample> counterexamples;
};

// Checks Sing(M_{<=r}(K^n)) = M_{<=r-1}(K^n) on seeded samples of every rank
// s in {0..r}: a sample must be singular iff s <= r-1. Requires n > r >= 1.
SingLocusReport verify_sing_locus_determinantal(int r, int n, int sample_count,
                                                std::uint64_t seed);

}  // namespace vecvar

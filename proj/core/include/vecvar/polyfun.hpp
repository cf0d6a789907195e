#pragma once

#include <vecvar/partitions.hpp>
#include <vecvar/rational.hpp>

#include <map>
#include <optional>
#include <string>

namespace vecvar {

// Univariate polynomial with rational coefficients; coefficients[i] is the
// coefficient of n^i. Trailing zeros are stripped.
class DimensionPolynomial {
 public:
  DimensionPolynomial() = default;
  explicit DimensionPolynomial(RatVector coefficients);

  const RatVector& coefficients() const { return coeffs_; }
  // Degree of the zero polynomial is reported as nullopt.
  std::optional<int> degree() const;
  Rat eval(const Rat& x) const;
  Int eval_at_int(long n) const;  // must evaluate to an integer

  DimensionPolynomial& operator+=(const DimensionPolynomial& o);
  DimensionPolynomial& operator*=(const Rat& c);
  friend DimensionPolynomial operator*(const DimensionPolynomial& a,
                                       const DimensionPolynomial& b);
  bool operator==(const DimensionPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void strip();
  RatVector coeffs_;
};

// dim S_lambda(K^x) as a polynomial in x (hook content product formula);
// agrees with schur_dimension at every nonnegative integer.
DimensionPolynomial schur_dimension_polynomial(const Partition& lambda);

inline constexpr int kDefaultFunctorCap = 12;

// A polynomial functor as a formal sum: constant part of fixed dimension
// plus a multiset of Schur functors indexed by nonempty partitions.
struct PolynomialFunctor {
  long constant_dim = 0;
  std::map<Partition, long> summands;  // partition -> multiplicity >= 1

  bool is_zero() const { return constant_dim == 0 && summands.empty(); }
  long total_size() const;  // sum of multiplicity * |lambda|
  void add_summand(const Partition& lambda, long multiplicity);

  bool operator==(const PolynomialFunctor& o) const {
    return constant_dim == o.constant_dim && summands == o.summands;
  }

  // "c + m1*[l1] + m2*[l2] + ...", e.g. "0 + 1*[2] + 1*[1,1]" for T^2.
  static PolynomialFunctor parse(const std::string& text);
  std::string to_string() const;
};

// max summand size (0 if only a constant part); nullopt encodes degree -inf
// of the zero functor.
std::optional<int> degree(const PolynomialFunctor& p);

PolynomialFunctor homogeneous_component(const PolynomialFunctor& p, int i);

bool is_pure(const PolynomialFunctor& p);

// dim P(K^n) as an exact polynomial in n.
DimensionPolynomial dimension_polynomial(const PolynomialFunctor& p,
                                         int cap = kDefaultFunctorCap);

// The functor V -> P(K^u + V), decomposed via the Littlewood-Richardson
// rule: S_lambda(K^u + V) = sum over (mu,nu) of S_nu(V)^(N * dim S_mu(K^u)).
PolynomialFunctor shift(const PolynomialFunctor& p, int u,
                        int cap = kDefaultFunctorCap);

// Multiplicity-wise containment; in characteristic zero this decides
// subobjects (and quotients) of semisimple polynomial functors.
bool is_subobject(const PolynomialFunctor& q, const PolynomialFunctor& p);

// The well-founded strict order: q < p iff q and p differ and, at the
// largest e where the homogeneous components differ, q's component is a
// quotient of p's.
bool precedes(const PolynomialFunctor& q, const PolynomialFunctor& p);

}  // namespace vecvar

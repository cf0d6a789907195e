#pragma once

#include <vecvar/rational.hpp>

#include <string>
#include <vector>

namespace vecvar {

// Weakly decreasing sequence of positive integers; () is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;    // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Total order used everywhere partitions are listed: by size, then
  // lexicographically with larger first parts first, so that e.g. (2)
  // precedes (1,1).
  bool operator<(const Partition& o) const;

  // "3,2,1" <-> (3,2,1); the empty string denotes ().
  static Partition parse(const std::string& text);
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// All partitions with size <= max_size and length <= max_length in the total
// order above.
std::vector<Partition> partitions_up_to(int max_size, int max_length);

// Partitions of exactly `size` with length <= max_length.
std::vector<Partition> partitions_of(int size, int max_length);

inline constexpr int kDefaultTableauCap = 12;

// Number of semistandard Young tableaux of shape lambda with entries in
// {1..n}; the independent oracle for schur_dimension. Exhaustive, so the
// shape size is capped.
long ssyt_count(const Partition& lambda, int n, int cap = kDefaultTableauCap);

// Littlewood-Richardson coefficient N_{mu nu lambda}: the number of
// semistandard skew tableaux of shape lambda/mu and content nu whose reverse
// reading word is a lattice word. Total function: returns 0 whenever the
// support conditions fail.
long lr_coefficient(const Partition& mu, const Partition& nu,
                    const Partition& lambda, int cap = kDefaultTableauCap);

// dim S_lambda(K^n) by the Weyl product formula over pairs i<j<=n with
// lambda padded by zeros; 0 iff length(lambda) > n.
Int schur_dimension_int(const Partition& lambda, int n);
long schur_dimension(const Partition& lambda, int n);

}  // namespace vecvar

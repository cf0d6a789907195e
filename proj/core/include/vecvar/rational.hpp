#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace vecvar {

// All arithmetic in this library is exact over the rationals. mpq_class
// keeps values in lowest terms with positive denominator as long as they
// are built through its operators; raw constructions go through make_rat.
using Rat = mpq_class;
using Int = mpz_class;

using RatVector = std::vector<Rat>;

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q"; canonical output of rat_to_string round-trips.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw DomainError("malformed rational literal: '" + s + "'");
  if (r.get_den() == 0) throw DomainError("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// r must be an integer value; used where exact formulas promise one.
inline long rat_to_long(const Rat& r) {
  if (r.get_den() != 1) throw DomainError("expected integer, got " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw DomainError("integer out of range");
  return r.get_num().get_si();
}

inline Int binomial_int(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline long binomial(long n, long k) {
  Int b = binomial_int(n, k);
  if (!b.fits_slong_p()) throw DomainError("binomial overflow");
  return b.get_si();
}

}  // namespace vecvar

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

// Exact scalar types used everywhere. No floating point anywhere in this
// library: every check we make is an integer or rational identity.
namespace vinberg {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define VINBERG_ERROR(Name)                                      \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

VINBERG_ERROR(ZeroVectorError);
VINBERG_ERROR(DimensionMismatchError);
VINBERG_ERROR(SingularMatrixError);
VINBERG_ERROR(NotARootError);
VINBERG_ERROR(NotLorentzianError);
VINBERG_ERROR(InvalidNormError);
VINBERG_ERROR(InconsistentSeedsError);
VINBERG_ERROR(ObtuseAngleError);
VINBERG_ERROR(InvalidDihedralAngleError);
VINBERG_ERROR(DimensionTooSmallError);
VINBERG_ERROR(NormMismatchError);
VINBERG_ERROR(NotAnIsometryError);
VINBERG_ERROR(BudgetExceededError);
VINBERG_ERROR(InputError);

#undef VINBERG_ERROR

// next_root ran past the caller's weight ceiling without an acceptance.
class ExhaustedError : public Error {
 public:
  explicit ExhaustedError(const Rat& bound)
      : Error("enumeration exhausted at weight ceiling " + to_string(bound)),
        bound_(bound) {}
  const Rat& bound() const { return bound_; }

 private:
  static std::string to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }
  Rat bound_;
};

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// floor(sqrt(a)), a >= 0
inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& a, Int* root = nullptr) {
  if (a < 0) return false;
  Int r = isqrt(a);
  if (r * r != a) return false;
  if (root) *root = r;
  return true;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// gcd of a vector's entries, nonnegative; 0 for the zero vector
inline Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, x);
  return g;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace vinberg

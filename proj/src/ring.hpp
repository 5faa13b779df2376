#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permadet {

using Int = mpz_class;
using Rat = mpq_class;

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact scalar: a Laurent polynomial in the formal variable q with
// arbitrary-precision integer coefficients.  Plain integers are the
// exponent-0 case, so one representation covers both scalar kinds.
// Terms are kept sorted by exponent with no zero coefficients; equal
// values therefore have identical representations.
class RingElem {
 public:
  RingElem() = default;  // zero
  RingElem(long n) { if (n != 0) terms_.emplace_back(0, Int(n)); }
  RingElem(int n) : RingElem(long(n)) {}
  explicit RingElem(Int n) { if (n != 0) terms_.emplace_back(0, std::move(n)); }

  static RingElem monomial(Int coeff, int exp);
  static RingElem variable() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_integer() const;  // exponent-0 only (includes zero)
  bool is_unit() const;     // +-q^k
  bool is_monomial() const { return terms_.size() == 1; }

  Int as_integer() const;  // throws RingError when q appears

  int min_exp() const;  // require nonzero
  int max_exp() const;
  const Int& coeff(int exp) const;  // 0 if absent
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<int, Int>>& terms() const { return terms_; }

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  bool operator==(const RingElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // Exact division; throws RingError when the quotient is not in the ring.
  RingElem exact_div(const RingElem& divisor) const;
  std::optional<RingElem> try_div(const RingElem& divisor) const;
  bool divisible_by(const RingElem& d) const { return try_div(d).has_value(); }

  RingElem pow(unsigned k) const;
  RingElem unit_inverse() const;        // for +-q^k only
  RingElem shifted(int dexp) const;     // multiply by q^dexp
  RingElem reversed() const;            // substitute q -> q^-1

  // Sign-normalized representative of {x, -x}: lowest-exponent
  // coefficient made positive.  Used wherever counts are compared as
  // absolute values.
  RingElem canonical_abs() const;
  bool lowest_coeff_negative() const;

  // Substitute an integer for q.  Requires min_exp >= 0 unless |x| = 1.
  Int eval(const Int& x) const;

  std::string str() const;
  static RingElem parse(const std::string& text);

 private:
  void normalize();
  std::vector<std::pair<int, Int>> terms_;
};

inline RingElem operator*(long a, const RingElem& b) { return RingElem(a) * b; }

// Exact interpolation: the unique integer polynomial of degree < n through
// the n points (x[i], y[i]).  Throws RingError if the data is not integral.
RingElem interpolate_integer_poly(const std::vector<Int>& xs,
                                  const std::vector<Int>& ys);

}  // namespace permadet

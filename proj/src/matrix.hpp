#pragma once

#include <string>
#include <vector>

#include "ring.hpp"

namespace permadet {

struct MatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invariant factors d1 | d2 | ... | dn of an integer matrix (nonnegative,
// zeros for the free part).  The cokernel is the direct sum of Z/d_i.
struct InvariantFactors {
  std::vector<Int> d;

  // factors > 1 and the zeros (free summands)
  std::vector<Int> nontrivial() const;
  bool is_cyclic() const { return nontrivial().size() <= 1; }
  Int product_of_nonzero() const;
  std::string str() const;  // nontrivial factors, space-separated
  bool operator==(const InvariantFactors& o) const = default;
};

// Dense matrix of exact ring elements.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RingElem& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const RingElem& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_antisymmetric() const;
  bool is_integer() const;

  ExactMatrix transposed() const;
  ExactMatrix evaluated(const Int& x) const;  // substitute q = x entrywise

  // Fraction-free (Bareiss) determinant; exact over the integers and the
  // Laurent-polynomial ring.  Every division is asserted exact.
  RingElem det() const;

  // Fraction-free Pfaffian of an antisymmetric matrix.  Odd order gives 0.
  // Sign follows row order 0..n-1; Pf^2 = det always.
  RingElem pfaffian() const;

  // Pfaffian of an integer-valued Laurent matrix computed by evaluating at
  // max_deg+1 integer points and interpolating.  Requires entries with
  // nonnegative exponents.  Must agree with pfaffian(); used to bound
  // intermediate expression swell on large polynomial matrices.
  RingElem pfaffian_by_interpolation(int degree_bound) const;

  // Pivot at (r, c): requires the entry to be 1 or -1.  Moves row r and
  // column c to the border, removes them, and subtracts the outer product.
  // The determinant and (for integer matrices) the cokernel are unchanged.
  ExactMatrix pivot(int r, int c) const;

  // Smith normal form of an integer matrix.
  InvariantFactors smith_normal_form() const;

  std::string str() const;  // for diagnostics

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RingElem> a_;
};

}  // namespace permadet

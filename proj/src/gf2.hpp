#pragma once

#include <cstdint>
#include <vector>

namespace permadet {

// Affine system A x = b over GF(2), rows packed into 64-bit words.
class Gf2System {
 public:
  explicit Gf2System(int cols) : cols_(cols), words_((cols + 63) / 64) {}

  int cols() const { return cols_; }
  int rows() const { return (int)rows_.size(); }

  // start an all-zero equation with right-hand side rhs, returns its index
  int add_row(bool rhs = false);
  void flip(int row, int col);
  void flip_rhs(int row);
  bool coeff(int row, int col) const;

  struct Solution {
    bool consistent = false;
    int rank = 0;
    int dimension = 0;  // cols - rank when consistent
    std::vector<uint8_t> x;
  };

  // Gaussian elimination; returns one solution (free variables set to 0).
  Solution solve() const;

 private:
  int cols_;
  int words_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<uint8_t> rhs_;
};

}  // namespace permadet

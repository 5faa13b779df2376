#include "gf2.hpp"

namespace permadet {

int Gf2System::add_row(bool rhs) {
  rows_.emplace_back(words_, 0);
  rhs_.push_back(rhs ? 1 : 0);
  return (int)rows_.size() - 1;
}

void Gf2System::flip(int row, int col) {
  rows_[row][col / 64] ^= (uint64_t(1) << (col % 64));
}

void Gf2System::flip_rhs(int row) { rhs_[row] ^= 1; }

bool Gf2System::coeff(int row, int col) const {
  return (rows_[row][col / 64] >> (col % 64)) & 1;
}

Gf2System::Solution Gf2System::solve() const {
  std::vector<std::vector<uint64_t>> m = rows_;
  std::vector<uint8_t> b = rhs_;
  int nr = (int)m.size();
  Solution s;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols_ && row < nr; ++col) {
    int piv = -1;
    for (int r = row; r < nr; ++r)
      if ((m[r][col / 64] >> (col % 64)) & 1) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    std::swap(b[piv], b[row]);
    for (int r = 0; r < nr; ++r) {
      if (r == row) continue;
      if ((m[r][col / 64] >> (col % 64)) & 1) {
        for (int w = 0; w < words_; ++w) m[r][w] ^= m[row][w];
        b[r] ^= b[row];
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  s.rank = row;
  for (int r = row; r < nr; ++r)
    if (b[r]) { s.consistent = false; s.dimension = 0; return s; }
  s.consistent = true;
  s.dimension = cols_ - s.rank;
  s.x.assign(cols_, 0);
  for (int r = 0; r < row; ++r) s.x[pivot_col[r]] = b[r];
  return s;
}

}  // namespace permadet

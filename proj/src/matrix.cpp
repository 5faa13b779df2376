#include "matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace permadet {

std::vector<Int> InvariantFactors::nontrivial() const {
  std::vector<Int> out;
  for (const Int& x : d)
    if (x != 1) out.push_back(x);
  return out;
}

Int InvariantFactors::product_of_nonzero() const {
  Int p = 1;
  for (const Int& x : d)
    if (x != 0) p *= x;
  return p;
}

std::string InvariantFactors::str() const {
  std::ostringstream os;
  bool first = true;
  for (const Int& x : nontrivial()) {
    if (!first) os << ' ';
    os << x.get_str();
    first = false;
  }
  return os.str();
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RingElem(1);
  return m;
}

bool ExactMatrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    if (!at(i, i).is_zero()) return false;
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

bool ExactMatrix::is_integer() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const RingElem& x) { return x.is_integer(); });
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::evaluated(const Int& x) const {
  ExactMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = RingElem(at(i, j).eval(x));
  return m;
}

RingElem ExactMatrix::det() const {
  if (!is_square()) throw MatrixError("det of non-square matrix");
  int n = rows_;
  if (n == 0) return RingElem(1);
  ExactMatrix w(*this);
  RingElem prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!w.at(r, k).is_zero()) { piv = r; break; }
    if (piv < 0) return RingElem(0);
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(w.at(piv, j), w.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j))
                         .exact_div(prev);
    prev = w.at(k, k);
  }
  RingElem d = w.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

// Fraction-free Pfaffian elimination.  The working entries are the
// Pfaffians of the submatrices on rows {0..2t-1, i, j}; the Pfaffian
// analogue of the Desnanot-Jacobi identity makes the division by the
// previous pivot exact.
RingElem ExactMatrix::pfaffian() const {
  if (!is_square()) throw MatrixError("pfaffian of non-square matrix");
  if (!is_antisymmetric()) throw MatrixError("pfaffian of non-antisymmetric matrix");
  int n = rows_;
  if (n % 2 == 1) return RingElem(0);
  if (n == 0) return RingElem(1);
  ExactMatrix g(*this);
  RingElem prev(1);
  int sign = 1;
  for (int t = 0; 2 * t + 2 < n; ++t) {
    int a = 2 * t, b = 2 * t + 1;
    if (g.at(a, b).is_zero()) {
      int piv = -1;
      for (int j = b + 1; j < n; ++j)
        if (!g.at(a, j).is_zero()) { piv = j; break; }
      if (piv < 0) return RingElem(0);  // zero row: Pfaffian vanishes
      for (int j = 0; j < n; ++j) std::swap(g.at(piv, j), g.at(b, j));
      for (int i = 0; i < n; ++i) std::swap(g.at(i, piv), g.at(i, b));
      sign = -sign;
    }
    const RingElem p = g.at(a, b);
    for (int i = b + 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        g.at(i, j) = (p * g.at(i, j) - g.at(a, i) * g.at(b, j) +
                      g.at(b, i) * g.at(a, j))
                         .exact_div(prev);
        g.at(j, i) = -g.at(i, j);
      }
    prev = p;
  }
  RingElem pf = g.at(n - 2, n - 1);
  return sign < 0 ? -pf : pf;
}

RingElem ExactMatrix::pfaffian_by_interpolation(int degree_bound) const {
  if (!is_square()) throw MatrixError("pfaffian of non-square matrix");
  if (rows_ % 2 == 1) return RingElem(0);
  std::vector<Int> xs, ys;
  for (int k = 0; k <= degree_bound; ++k) {
    Int x(k + 1);
    xs.push_back(x);
    ys.push_back(evaluated(x).pfaffian().as_integer());
  }
  return interpolate_integer_poly(xs, ys);
}

ExactMatrix ExactMatrix::pivot(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw MatrixError("pivot index out of range");
  ExactMatrix w(*this);
  RingElem p = w.at(r, c);
  if (p == RingElem(-1)) {
    for (int j = 0; j < cols_; ++j) w.at(r, j) = -w.at(r, j);
    // negating one row negates det; compensate on another row, or if
    // 1x1 the sign is absorbed below
    p = w.at(r, c);
    if (rows_ > 1) {
      int other = r == 0 ? 1 : 0;
      for (int j = 0; j < cols_; ++j) w.at(other, j) = -w.at(other, j);
    }
  }
  if (!p.is_one()) throw MatrixError("pivot entry is not a unit");
  ExactMatrix out(rows_ - 1, cols_ - 1);
  int parity = (rows_ - 1 - r) + (cols_ - 1 - c);
  for (int i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out.at(oi, oj) = w.at(i, j) - w.at(i, c) * w.at(r, j);
      ++oj;
    }
    ++oi;
  }
  if (parity % 2 == 1 && out.rows() > 0) {
    // moving row r / column c to the border cost an odd permutation
    for (int j = 0; j < out.cols(); ++j) out.at(0, j) = -out.at(0, j);
  }
  return out;
}

InvariantFactors ExactMatrix::smith_normal_form() const {
  if (!is_integer()) throw MatrixError("smith normal form needs integer entries");
  int r = rows_, c = cols_;
  std::vector<std::vector<Int>> m(r, std::vector<Int>(c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m[i][j] = at(i, j).as_integer();

  int n = std::min(r, c);
  InvariantFactors out;
  out.d.assign(n, 0);
  int t = 0;
  while (t < n) {
    // smallest nonzero |entry| in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (m[i][j] != 0 &&
            (pi < 0 || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0)) {
          pi = i, pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = t; i < r; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = true;
    for (int i = t + 1; i < r && clean; ++i) {
      if (m[i][t] == 0) continue;
      Int q = m[i][t] / m[t][t];
      for (int j = t; j < c; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;  // smaller remainder became pivot candidate
    }
    if (!clean) continue;
    for (int j = t + 1; j < c && clean; ++j) {
      if (m[t][j] == 0) continue;
      Int q = m[t][j] / m[t][t];
      for (int i = t; i < r; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // pivot must divide the whole trailing block for the chain d1 | d2 | ...
    bool divides_all = true;
    for (int i = t + 1; i < r && divides_all; ++i)
      for (int j = t + 1; j < c && divides_all; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int jj = t; jj < c; ++jj) m[t][jj] += m[i][jj];
          divides_all = false;
        }
    if (!divides_all) continue;
    out.d[t] = abs(m[t][t]);
    ++t;
  }
  return out;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << '\n';
  }
  return os.str();
}

}  // namespace permadet

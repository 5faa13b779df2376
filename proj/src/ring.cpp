#include "ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace permadet {

RingElem RingElem::monomial(Int coeff, int exp) {
  RingElem r;
  if (coeff != 0) r.terms_.emplace_back(exp, std::move(coeff));
  return r;
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool RingElem::is_integer() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool RingElem::is_unit() const {
  return terms_.size() == 1 &&
         (terms_[0].second == 1 || terms_[0].second == -1);
}

Int RingElem::as_integer() const {
  if (terms_.empty()) return 0;
  if (!is_integer()) throw RingError("not an integer: " + str());
  return terms_[0].second;
}

int RingElem::min_exp() const {
  if (terms_.empty()) throw RingError("min_exp of zero");
  return terms_.front().first;
}

int RingElem::max_exp() const {
  if (terms_.empty()) throw RingError("max_exp of zero");
  return terms_.back().first;
}

const Int& RingElem::coeff(int exp) const {
  static const Int zero(0);
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const std::pair<int, Int>& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return zero;
}

void RingElem::normalize() {
  std::erase_if(terms_, [](const std::pair<int, Int>& t) { return t.second == 0; });
}

RingElem RingElem::operator-() const {
  RingElem r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  std::vector<std::pair<int, Int>> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Int c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) { return *this += -o; }

RingElem operator*(const RingElem& a, const RingElem& b) {
  RingElem r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  // dense accumulation over the exponent span
  int lo = a.terms_.front().first + b.terms_.front().first;
  int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<Int> acc(hi - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
  for (int e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) r.terms_.emplace_back(e, std::move(acc[e - lo]));
  return r;
}

std::optional<RingElem> RingElem::try_div(const RingElem& divisor) const {
  if (divisor.is_zero()) throw RingError("division by zero");
  if (is_zero()) return RingElem();
  // shift both to ordinary polynomials; quotient exponent offset is the
  // difference of trailing exponents
  int off = min_exp() - divisor.min_exp();
  int dn = max_exp() - min_exp();
  int dd = divisor.max_exp() - divisor.min_exp();
  if (dn < dd) return std::nullopt;
  std::vector<Int> num(dn + 1), den(dd + 1);
  for (const auto& [e, c] : terms_) num[e - min_exp()] = c;
  for (const auto& [e, c] : divisor.terms_) den[e - divisor.min_exp()] = c;
  std::vector<Int> quot(dn - dd + 1);
  for (int k = dn - dd; k >= 0; --k) {
    Int lead = num[k + dd];
    if (lead == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                den[dd].get_mpz_t());
    if (r != 0) return std::nullopt;
    quot[k] = q;
    for (int i = 0; i <= dd; ++i) num[k + i] -= q * den[i];
  }
  for (const Int& c : num)
    if (c != 0) return std::nullopt;
  RingElem out;
  for (int k = 0; k <= dn - dd; ++k)
    if (quot[k] != 0) out.terms_.emplace_back(k + off, std::move(quot[k]));
  return out;
}

RingElem RingElem::exact_div(const RingElem& divisor) const {
  auto q = try_div(divisor);
  if (!q) throw RingError("non-exact division: (" + str() + ") / (" + divisor.str() + ")");
  return *q;
}

RingElem RingElem::pow(unsigned k) const {
  RingElem r(1), base(*this);
  while (k) {
    if (k & 1) r *= base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

RingElem RingElem::unit_inverse() const {
  if (!is_unit()) throw RingError("not a unit: " + str());
  return monomial(terms_[0].second, -terms_[0].first);
}

RingElem RingElem::shifted(int dexp) const {
  RingElem r(*this);
  for (auto& [e, c] : r.terms_) e += dexp;
  return r;
}

RingElem RingElem::reversed() const {
  RingElem r(*this);
  for (auto& [e, c] : r.terms_) e = -e;
  std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

bool RingElem::lowest_coeff_negative() const {
  return !terms_.empty() && terms_.front().second < 0;
}

RingElem RingElem::canonical_abs() const {
  return lowest_coeff_negative() ? -*this : *this;
}

Int RingElem::eval(const Int& x) const {
  if (terms_.empty()) return 0;
  if (min_exp() < 0 && x != 1 && x != -1)
    throw RingError("cannot evaluate Laurent polynomial at " + x.get_str());
  if (x == 1 || x == -1) {
    Int s = 0;
    for (const auto& [e, c] : terms_) {
      bool neg = (x == -1) && (((e % 2) + 2) % 2 == 1);
      s += neg ? -c : c;
    }
    return s;
  }
  // Horner over the dense coefficient span
  int lo = min_exp(), hi = max_exp();
  Int s = 0;
  for (int e = hi; e >= lo; --e) {
    s *= x;
    s += coeff(e);
  }
  return s;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << 'q';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() { while (!done() && std::isspace((unsigned char)s[i])) ++i; }
};

Int parse_uint(Cursor& c) {
  size_t start = c.i;
  while (!c.done() && std::isdigit((unsigned char)c.peek())) ++c.i;
  if (c.i == start) throw RingError("expected digits in '" + c.s + "'");
  return Int(c.s.substr(start, c.i - start));
}

long parse_int(Cursor& c) {
  bool neg = false;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
    neg = c.peek() == '-';
    ++c.i;
  }
  Int v = parse_uint(c);
  if (!v.fits_slong_p()) throw RingError("exponent too large");
  long r = v.get_si();
  return neg ? -r : r;
}

}  // namespace

RingElem RingElem::parse(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw RingError("empty polynomial literal");
  RingElem out;
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
      c.skip_ws();
    } else if (!first) {
      break;
    }
    Int coeff;
    bool have_coeff = false;
    if (!c.done() && std::isdigit((unsigned char)c.peek())) {
      coeff = parse_uint(c);
      have_coeff = true;
    }
    int exp = 0;
    c.skip_ws();
    if (!c.done() && c.peek() == 'q') {
      ++c.i;
      exp = 1;
      c.skip_ws();
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        c.skip_ws();
        exp = (int)parse_int(c);
      }
      if (!have_coeff) coeff = 1;
    } else if (!have_coeff) {
      throw RingError("expected term at position " + std::to_string(c.i) +
                      " in '" + text + "'");
    }
    out += monomial(sign * coeff, exp);
    first = false;
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() != '+' && c.peek() != '-')
      throw RingError("unexpected character '" + std::string(1, c.peek()) +
                      "' in '" + text + "'");
  }
  return out;
}

RingElem interpolate_integer_poly(const std::vector<Int>& xs,
                                  const std::vector<Int>& ys) {
  if (xs.size() != ys.size()) throw RingError("interpolation size mismatch");
  size_t n = xs.size();
  // Newton divided differences over the rationals
  std::vector<Rat> coef(n);
  for (size_t i = 0; i < n; ++i) coef[i] = Rat(ys[i]);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      Rat denom(xs[i] - xs[i - j]);
      coef[i] = (coef[i] - coef[i - 1]) / denom;
      if (i == j) break;
    }
  // expand Newton form; track rational coefficients exactly
  std::vector<Rat> poly = {coef[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // poly = poly * (x - xs[i]) + coef[i]
    std::vector<Rat> next(poly.size() + 1);
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * Rat(xs[i]);
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  RingElem out;
  for (size_t k = 0; k < poly.size(); ++k) {
    poly[k].canonicalize();
    if (poly[k] == 0) continue;
    if (poly[k].get_den() != 1)
      throw RingError("interpolation produced non-integer coefficient");
    out += RingElem::monomial(poly[k].get_num(), (int)k);
  }
  return out;
}

}  // namespace permadet

#include "qcox/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qcox {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const Int& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

LaurentPoly LaurentPoly::monomial(long e, Rational c) {
  LaurentPoly p;
  if (c != 0) p.coeff_[e] = std::move(c);
  return p;
}

bool LaurentPoly::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

Rational LaurentPoly::coeff(long e) const {
  auto it = coeff_.find(e);
  return it == coeff_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return coeff_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return coeff_.rbegin()->first;
}

Rational LaurentPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading_coeff of zero polynomial");
  return coeff_.rbegin()->second;
}

void LaurentPoly::set(long e, Rational c) {
  if (c == 0)
    coeff_.erase(e);
  else
    coeff_[e] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeff_) {
    auto it = coeff_.find(e);
    if (it == coeff_.end()) {
      coeff_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeff_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeff_) {
    auto it = coeff_.find(e);
    if (it == coeff_.end()) {
      coeff_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeff_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeff_)
    for (const auto& [e2, c2] : o.coeff_) {
      Rational p = c1 * c2;
      auto it = r.coeff_.find(e1 + e2);
      if (it == r.coeff_.end()) {
        if (p != 0) r.coeff_.emplace(e1 + e2, std::move(p));
      } else {
        it->second += p;
        if (it->second == 0) r.coeff_.erase(it);
      }
    }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, cc] : coeff_) r.coeff_[e] = cc * c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly r = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::scale_exponents(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_[e * k] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r;
  for (const auto& [ee, c] : coeff_) r.coeff_[ee + e] = c;
  return r;
}

namespace {

// Dense ordinary-polynomial view, constant term at index 0.
std::vector<Rational> to_dense(const LaurentPoly& p, long& shift) {
  shift = p.min_exp();
  std::vector<Rational> v(static_cast<std::size_t>(p.max_exp() - shift) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e - shift)] = c;
  return v;
}

LaurentPoly from_dense(const std::vector<Rational>& v, long shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.set(shift + static_cast<long>(i), v[i]);
  return p;
}

// Euclidean division of dense polynomials; returns remainder, fills quotient.
// den must be trimmed (leading coefficient nonzero).
std::vector<Rational> dense_divmod(std::vector<Rational> num, const std::vector<Rational>& den,
                                   std::vector<Rational>& quot) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.size() < den.size()) {
    quot.assign(1, Rational(0));
    return num;
  }
  quot.assign(num.size() - den.size() + 1, Rational(0));
  while (num.size() >= den.size()) {
    Rational f = num.back() / den.back();
    std::size_t off = num.size() - den.size();
    quot[off] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
  return num;
}

} // namespace

std::optional<LaurentPoly> LaurentPoly::divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return zero();
  long sn = 0, sd = 0;
  auto dn = to_dense(num, sn);
  auto dd = to_dense(den, sd);
  std::vector<Rational> quot;
  auto rem = dense_divmod(dn, dd, quot);
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return from_dense(quot, sn - sd);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return zero();
  if (a.is_zero()) return b.shifted(-b.min_exp()) * (Rational(1) / b.leading_coeff());
  if (b.is_zero()) return a.shifted(-a.min_exp()) * (Rational(1) / a.leading_coeff());
  long s = 0;
  auto x = to_dense(a, s);
  auto y = to_dense(b, s);
  while (true) {
    while (!y.empty() && y.back() == 0) y.pop_back();
    if (y.empty()) break;
    std::vector<Rational> quot;
    auto rem = dense_divmod(x, y, quot);
    x = std::move(y);
    y = std::move(rem);
  }
  LaurentPoly g = from_dense(x, 0);
  g = g.shifted(-g.min_exp());
  return g * (Rational(1) / g.leading_coeff());
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  bool even = true;
  for (const auto& [e, c] : coeff_)
    if (e % 2 != 0) { even = false; break; }
  const char* var = even ? "q" : "v";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeff_) {
    Rational cc = c;
    if (first) {
      if (cc < 0) { os << "-"; cc = -cc; }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    long ex = even ? e / 2 : e;
    if (ex == 0) {
      os << cc;
    } else {
      if (cc != 1) os << cc << "*";
      os << var;
      if (ex != 1) os << "^" << ex;
    }
    first = false;
  }
  return os.str();
}

} // namespace qcox

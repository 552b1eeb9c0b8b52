#include "qcox/ratfunc.hpp"

#include <stdexcept>

namespace qcox {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *LaurentPoly::divide(num_, g);
    den_ = *LaurentPoly::divide(den_, g);
  }
  // strip the unit part of the denominator
  long shift = den_.min_exp();
  Rational lead = den_.leading_coeff();
  den_ = den_.shifted(-shift) * (Rational(1) / lead);
  num_ = num_.shifted(-shift) * (Rational(1) / lead);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace qcox

#pragma once

#include "qcox/laurent.hpp"

namespace qcox {

/// Fraction field of the Laurent ring, kept in canonical form: the gcd of
/// numerator and denominator is removed, the denominator is an ordinary
/// polynomial with nonzero constant term (minimal support) and unit
/// leading coefficient.  Equality is then plain pairwise equality.
class RatFunc {
public:
  RatFunc() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
  RatFunc(const Rational& c) : num_(LaurentPoly::monomial(0, c)), den_(LaurentPoly::one()) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc zero() { return {}; }
  static RatFunc one() { return RatFunc(LaurentPoly::one()); }
  /// c * q^e
  static RatFunc q_power(long e, Rational c = Rational(1)) {
    return RatFunc(LaurentPoly::q_power(e, std::move(c)));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;

private:
  void normalize();

  LaurentPoly num_, den_;
};

} // namespace qcox

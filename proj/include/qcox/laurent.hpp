#pragma once

#include "qcox/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace qcox {

/// Sparse univariate Laurent polynomial in the formal base variable v,
/// with exact rational coefficients.  The deformation parameter is
/// q = v^2, so half-integer powers of q are representable as odd powers
/// of v.  Zero coefficients are never stored; the representation is
/// canonical, so equality is map equality.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(0); }
  /// c * v^e
  static LaurentPoly monomial(long e, Rational c = Rational(1));
  /// c * q^e = c * v^(2e)
  static LaurentPoly q_power(long e, Rational c = Rational(1)) { return monomial(2 * e, std::move(c)); }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;
  /// Nonzero single-term polynomials are the units of the Laurent ring.
  bool is_monomial() const { return coeff_.size() == 1; }

  Rational coeff(long e) const;
  long min_exp() const; // requires nonzero
  long max_exp() const; // requires nonzero
  Rational leading_coeff() const; // coefficient at max_exp; requires nonzero
  std::size_t term_count() const { return coeff_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator*(const Rational& c) const;
  LaurentPoly pow(unsigned long k) const;

  bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// v^e -> v^(k*e).  Used for base-change substitutions t -> s^k.
  LaurentPoly scale_exponents(long k) const;
  /// The bar involution v -> v^-1.
  LaurentPoly bar() const { return scale_exponents(-1); }
  /// Multiply by the unit v^e.
  LaurentPoly shifted(long e) const;

  /// Exact division; nullopt when the remainder is nonzero.
  static std::optional<LaurentPoly> divide(const LaurentPoly& num, const LaurentPoly& den);
  /// Monic gcd of the ordinary-polynomial parts (unit factors dropped).
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  const std::map<long, Rational>& terms() const { return coeff_; }
  void set(long e, Rational c); // drops zero

  /// Report rendering: "q^-2 + 2 + q^2" when every exponent is even,
  /// otherwise v-units ("v^-1 + v^3").
  std::string str() const;

private:
  std::map<long, Rational> coeff_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

} // namespace qcox

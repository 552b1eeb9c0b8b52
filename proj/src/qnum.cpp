#include "qcox/qnum.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace qcox {

LaurentPoly q_int(long n, long scale) {
  if (scale <= 0) throw std::invalid_argument("q_int: scale must be positive");
  if (n == 0) return LaurentPoly::zero();
  bool neg = n < 0;
  long m = neg ? -n : n;
  LaurentPoly p;
  for (long k = 0; k < m; ++k) p += LaurentPoly::monomial(2 * scale * (m - 1 - 2 * k));
  return neg ? -p : p;
}

LaurentPoly q_factorial(long n, long scale) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentPoly p = LaurentPoly::one();
  for (long k = 2; k <= n; ++k) p *= q_int(k, scale);
  return p;
}

LaurentPoly q_binomial(long m, long k, long scale) {
  if (k < 0 || k > m) throw std::invalid_argument("q_binomial: k out of range");
  auto quotient = LaurentPoly::divide(q_factorial(m, scale), q_factorial(k, scale) * q_factorial(m - k, scale));
  if (!quotient) throw std::logic_error("q_binomial: factorial ratio not a Laurent polynomial");
  return *quotient;
}

Verdict q_binomial_theorem_check(int m) {
  if (m < 0) return Verdict::fail("m must be nonnegative");
  // Polynomials in z with Laurent coefficients in t; index = z-degree.
  std::vector<LaurentPoly> lhs(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    LaurentPoly c = q_binomial(m, k, 1);
    if (k % 2 == 1) c = -c;
    lhs[static_cast<std::size_t>(k)] = c;
  }
  std::vector<LaurentPoly> rhs{LaurentPoly::one()};
  for (int p = 0; p < m; ++p) {
    std::vector<LaurentPoly> next(rhs.size() + 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      next[i] += rhs[i];
      next[i + 1] -= rhs[i] * LaurentPoly::monomial(2 * (m - 1 - 2 * p));
    }
    rhs = std::move(next);
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    LaurentPoly diff = lhs[i] - rhs[i];
    if (!diff.is_zero())
      return Verdict::fail("residual at z^" + std::to_string(i) + ": " + diff.str());
  }
  return Verdict::ok();
}

std::set<Rational> rational_solution_set(int m, int max_denominator, int bound) {
  if (m < 1) throw std::invalid_argument("rational_solution_set: m must be >= 1");
  std::set<Rational> solutions;
  for (int den = 1; den <= max_denominator; ++den) {
    for (long num = -static_cast<long>(bound) * den; num <= static_cast<long>(bound) * den; ++num) {
      if (std::gcd(num < 0 ? -num : num, static_cast<long>(den)) != 1 && !(num == 0 && den == 1)) continue;
      if (num == 0 && den != 1) continue;
      // Substitute t = s^den, so t^(kc) = s^(k*num).
      LaurentPoly sum;
      for (int k = 0; k <= m; ++k) {
        LaurentPoly term = q_binomial(m, k, 1).scale_exponents(den).shifted(2 * k * num);
        if (k % 2 == 1) term = -term;
        sum += term;
      }
      if (sum.is_zero()) solutions.insert(Rational(num, den));
    }
  }
  return solutions;
}

LaurentPoly serre_character_scalar(long m, long cexp_v, long scale) {
  LaurentPoly sum;
  for (long r = 0; r <= m; ++r) {
    LaurentPoly term = q_binomial(m, r, scale).shifted(r * cexp_v);
    if (r % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

} // namespace qcox

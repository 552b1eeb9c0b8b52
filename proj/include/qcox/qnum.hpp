#pragma once

#include "qcox/laurent.hpp"
#include "qcox/verdict.hpp"

#include <set>

namespace qcox {

/// Balanced q-integer [n] in the variable q^scale: (t^n - t^-n)/(t - t^-1)
/// with t = q^scale.  Always a Laurent polynomial; [-n] = -[n], [0] = 0.
LaurentPoly q_int(long n, long scale);

/// [n]! in the variable q^scale.
LaurentPoly q_factorial(long n, long scale);

/// Balanced q-binomial [m k] in the variable q^scale; symmetric in
/// k <-> m-k and invariant under the bar involution.  Requires 0 <= k <= m.
LaurentPoly q_binomial(long m, long k, long scale);

/// Certifies sum_k (-z)^k [m k]_t = prod_{p=0}^{m-1} (1 - t^(m-1-2p) z)
/// as an exact identity in the bivariate ring Q[t^±1][z].
Verdict q_binomial_theorem_check(int m);

/// Scans reduced rationals c = p/D with D <= max_denominator and |c| <= bound,
/// substituting t -> s^D so every power is a Laurent polynomial in s, and
/// returns the set of c for which sum_k (-1)^k [m k]_t t^(kc) vanishes
/// exactly.  A finite certificate over the stated window, not a proof over
/// all rationals.
std::set<Rational> rational_solution_set(int m, int max_denominator, int bound);

/// sum_{r=0}^{m} (-1)^r v^(r*cexp_v) [m r]_{q^scale} as an exact Laurent
/// polynomial.  cexp_v counts powers of v (= half-powers of q), so an
/// exponent q^c is passed as cexp_v = 2c.
LaurentPoly serre_character_scalar(long m, long cexp_v, long scale);

} // namespace qcox

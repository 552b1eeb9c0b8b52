#pragma once

#include "qcox/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcox {

/// Permutation of {1..l}, stored 0-based: perm[k] is the node reflected at
/// step k+1, so the Coxeter element is s_{perm[0]} ... s_{perm[l-1]}.
using Perm = std::vector<int>;

std::string perm_str(const Perm& p);          // one-line notation "2,1,3"
Perm perm_parse(const std::string& s, int l); // inverse of perm_str; validates
std::vector<Perm> all_perms(int l);
bool is_perm(const Perm& p, int l);

/// Matrix of the simple reflection s_i on the root lattice; columns are
/// images of simple roots: s_i(alpha_j) = alpha_j - a_ji alpha_i.
IMat reflection_matrix(const CartanDatum& datum, int i);

enum class CoxMethod { product, gauss };

/// Matrix of the Coxeter element s_{perm[0]}...s_{perm[l-1]}.  The product
/// route multiplies reflection matrices; the gauss route assembles the
/// triangular factors U, V (V_{pi(k),pi(i)} = a_{pi(k),pi(i)} for k >= i,
/// U for k < i) and returns (I+U)^-1 (I-V).  Both agree exactly.
IMat coxeter_matrix(const CartanDatum& datum, const Perm& perm, CoxMethod method);

/// Sign matrix: -1 when perm^-1(i) < perm^-1(j), 0 on the diagonal,
/// +1 otherwise.
IMat epsilon_matrix(const Perm& perm, int l);

/// Pairing matrix of (1+s)/(1-s) against the invariant form: entry (i,j)
/// is ((1+s)/(1-s) alpha_i, alpha_j), exact and antisymmetric.
QMat cayley_pairing(const CartanDatum& datum, const Perm& perm);

/// Solves d_i n_ji - d_j n_ij = c_ij over the integers via
/// n_ji = (eps_ij a_ij + s_ij/d_i)/2 for a symmetric integal matrix s
/// (default s = b, which guarantees integrality).  The output is verified
/// by substitution against cayley_pairing before being returned; a
/// non-integral entry raises with its position.
IMat solve_n(const CartanDatum& datum, const Perm& perm);
IMat solve_n_with(const CartanDatum& datum, const Perm& perm, const IMat& s);

/// Everything the downstream relation checks consume, built once.
struct CoxeterRealization {
  CartanDatum datum;
  Perm perm;
  IMat m;   // Coxeter element, both routes certified equal
  IMat eps; // sign matrix
  QMat c;   // Cayley pairing
  IMat n;   // integer solution with s = b
};

CoxeterRealization build_realization(const CartanDatum& datum, const Perm& perm);

/// Integer entries of the Cayley pairing (the pairing is integral for
/// every finite-type datum); throws if a non-integer entry appears.
IMat cayley_pairing_int(const CartanDatum& datum, const Perm& perm);

} // namespace qcox

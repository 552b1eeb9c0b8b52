#pragma once

#include "qcox/matrix.hpp"
#include "qcox/rational.hpp"

#include <string>
#include <vector>

namespace qcox {

using IMat = Matrix<long>;
using QMat = Matrix<Rational>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c); // throws std::invalid_argument for unknown letters

/// Indecomposable finite-type Cartan datum.  Node numbering follows the
/// Bourbaki convention for every family (see docs/conventions.md); in
/// particular the short root of G2 is node 1, B_l has its short root at
/// node l and C_l at nodes 1..l-1.  C2 is accepted as an alias and
/// canonicalized to B2.
struct CartanDatum {
  Family family;
  int rank;
  IMat a;              // Cartan matrix a_ij
  std::vector<long> d; // coprime positive symmetrizers d_i
  IMat b;              // b_ij = d_i * a_ij, symmetric

  std::string label() const; // "A2", "G2", ...
};

/// Builds the datum for a supported (family, rank) pair; rejects invalid
/// pairs with a descriptive diagnostic.
CartanDatum make_cartan(Family family, int rank);

/// Solves d_i a_ij = d_j a_ji for coprime positive integers; throws when
/// the input is not a symmetrizable generalized Cartan matrix.
std::vector<long> symmetrize(const IMat& a);

/// Collects violated invariants; empty result means the datum is valid.
std::vector<std::string> validate(const CartanDatum& datum);

/// Order of a Coxeter element for the family.
int coxeter_number(Family family, int rank);

/// All supported indecomposable data of rank <= max_rank, in a fixed order.
std::vector<CartanDatum> all_finite_type(int max_rank);

} // namespace qcox

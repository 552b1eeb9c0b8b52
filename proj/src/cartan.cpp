#include "qcox/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace qcox {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
  }
}

std::string CartanDatum::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

namespace {

IMat chain_matrix(int l) {
  IMat a(l, l);
  for (int i = 0; i < l; ++i) {
    a.at(i, i) = 2;
    if (i + 1 < l) {
      a.at(i, i + 1) = -1;
      a.at(i + 1, i) = -1;
    }
  }
  return a;
}

void link(IMat& a, int i, int j) {
  a.at(i, j) = -1;
  a.at(j, i) = -1;
}

[[noreturn]] void reject(Family f, int rank, const std::string& why) {
  throw std::invalid_argument("make_cartan: unsupported pair " +
                              std::string(1, static_cast<char>(f)) + std::to_string(rank) + ": " + why);
}

} // namespace

CartanDatum make_cartan(Family family, int rank) {
  if (family == Family::C && rank == 2) return make_cartan(Family::B, 2); // canonical alias

  IMat a;
  switch (family) {
    case Family::A:
      if (rank < 1) reject(family, rank, "A requires rank >= 1");
      a = chain_matrix(rank);
      break;
    case Family::B:
      // short root at node l: a_{l,l-1} = -2
      if (rank < 2) reject(family, rank, "B requires rank >= 2");
      a = chain_matrix(rank);
      a.at(rank - 1, rank - 2) = -2;
      break;
    case Family::C:
      // long root at node l: a_{l-1,l} = -2
      if (rank < 2) reject(family, rank, "C requires rank >= 2");
      a = chain_matrix(rank);
      a.at(rank - 2, rank - 1) = -2;
      break;
    case Family::D:
      if (rank < 3) reject(family, rank, "D requires rank >= 3");
      a = chain_matrix(rank - 1);
      {
        IMat full(rank, rank);
        for (int i = 0; i < rank - 1; ++i)
          for (int j = 0; j < rank - 1; ++j) full.at(i, j) = a.at(i, j);
        full.at(rank - 1, rank - 1) = 2;
        // the chain covers nodes 1..l-1 with the fork at l-2
        full.at(rank - 2, rank - 2) = 2;
        link(full, rank - 3, rank - 1);
        a = full;
      }
      break;
    case Family::E:
      if (rank < 6 || rank > 8) reject(family, rank, "E requires rank in {6,7,8}");
      {
        // chain 1-3-4-5-...-l with node 2 attached to node 4
        a = IMat(rank, rank);
        for (int i = 0; i < rank; ++i) a.at(i, i) = 2;
        link(a, 0, 2);
        for (int i = 2; i + 1 < rank; ++i) link(a, i, i + 1);
        link(a, 1, 3);
      }
      break;
    case Family::F:
      if (rank != 4) reject(family, rank, "F requires rank 4");
      a = chain_matrix(4);
      a.at(2, 1) = -2; // nodes 3,4 short
      break;
    case Family::G:
      if (rank != 2) reject(family, rank, "G requires rank 2");
      a = IMat(2, 2);
      a.at(0, 0) = 2;
      a.at(1, 1) = 2;
      a.at(0, 1) = -3; // node 1 short
      a.at(1, 0) = -1;
      break;
  }

  CartanDatum datum;
  datum.family = family == Family::C && rank == 2 ? Family::B : family;
  datum.rank = rank;
  datum.a = a;
  datum.d = symmetrize(a);
  datum.b = IMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) datum.b.at(i, j) = datum.d[static_cast<std::size_t>(i)] * a.at(i, j);

  auto violations = validate(datum);
  if (!violations.empty())
    throw std::logic_error("make_cartan: constructed datum fails validation: " + violations.front());
  return datum;
}

std::vector<long> symmetrize(const IMat& a) {
  std::size_t l = a.rows();
  if (l == 0 || a.cols() != l) throw std::invalid_argument("symmetrize: square nonempty matrix expected");
  for (std::size_t i = 0; i < l; ++i) {
    if (a.at(i, i) != 2) throw std::invalid_argument("symmetrize: diagonal entries must be 2");
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      if (a.at(i, j) > 0) throw std::invalid_argument("symmetrize: off-diagonal entries must be <= 0");
      if ((a.at(i, j) == 0) != (a.at(j, i) == 0))
        throw std::invalid_argument("symmetrize: zero pattern must be symmetric");
    }
  }

  // Propagate d_j = d_i * a_ij / a_ji along edges of the Dynkin graph.
  std::vector<Rational> d(l, Rational(0));
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < l; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < l; ++j) {
        if (i == j || a.at(i, j) == 0) continue;
        Rational want = d[i] * Rational(a.at(i, j)) / Rational(a.at(j, i));
        if (d[j] == 0) {
          d[j] = want;
          stack.push_back(j);
        } else if (d[j] != want) {
          throw std::invalid_argument("symmetrize: matrix is not symmetrizable");
        }
      }
    }
  }

  // Scale to coprime positive integers.
  Int lcm_den = 1;
  for (const auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Int> ints(l);
  Int g = 0;
  for (std::size_t i = 0; i < l; ++i) {
    ints[i] = numerator(d[i]) * (lcm_den / denominator(d[i]));
    g = boost::multiprecision::gcd(g, ints[i]);
  }
  std::vector<long> result(l);
  for (std::size_t i = 0; i < l; ++i) result[i] = static_cast<long>(ints[i] / g);

  // Cross-check: diag(d) * a must come out symmetric.
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (result[i] * a.at(i, j) != result[j] * a.at(j, i))
        throw std::invalid_argument("symmetrize: matrix is not symmetrizable");
  return result;
}

std::vector<std::string> validate(const CartanDatum& datum) {
  std::vector<std::string> bad;
  std::size_t l = static_cast<std::size_t>(datum.rank);
  if (datum.a.rows() != l || datum.a.cols() != l || datum.b.rows() != l || datum.b.cols() != l ||
      datum.d.size() != l || datum.rank < 1) {
    bad.push_back("shape mismatch between rank and stored matrices");
    return bad;
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (datum.a.at(i, i) != 2) bad.push_back("a_ii = 2 violated at i=" + std::to_string(i + 1));
    for (std::size_t j = 0; j < l; ++j) {
      if (i != j && datum.a.at(i, j) > 0)
        bad.push_back("a_ij <= 0 violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if ((datum.a.at(i, j) == 0) != (datum.a.at(j, i) == 0))
        bad.push_back("a_ij = 0 <=> a_ji = 0 violated at (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ")");
      if (datum.b.at(i, j) != datum.b.at(j, i))
        bad.push_back("b symmetric violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (datum.b.at(i, j) != datum.d[i] * datum.a.at(i, j))
        bad.push_back("b = diag(d)*a violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  long g = 0;
  for (long x : datum.d) {
    if (x <= 0) bad.push_back("d entries must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) bad.push_back("gcd(d) = 1 violated");
  QMat aq = datum.a.map<Rational>([](long x) { return Rational(x); });
  if (aq.det() == 0) bad.push_back("det(a) != 0 violated (not finite type)");
  return bad;
}

int coxeter_number(Family family, int rank) {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B:
    case Family::C: return 2 * rank;
    case Family::D: return 2 * rank - 2;
    case Family::E:
      if (rank == 6) return 12;
      if (rank == 7) return 18;
      return 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  throw std::logic_error("coxeter_number: unreachable");
}

std::vector<CartanDatum> all_finite_type(int max_rank) {
  std::vector<CartanDatum> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back(make_cartan(Family::A, l));
  for (int l = 2; l <= max_rank; ++l) out.push_back(make_cartan(Family::B, l));
  for (int l = 3; l <= max_rank; ++l) out.push_back(make_cartan(Family::C, l)); // C2 aliases B2
  for (int l = 3; l <= max_rank; ++l) out.push_back(make_cartan(Family::D, l));
  for (int l = 6; l <= max_rank && l <= 8; ++l) out.push_back(make_cartan(Family::E, l));
  if (max_rank >= 4) out.push_back(make_cartan(Family::F, 4));
  if (max_rank >= 2) out.push_back(make_cartan(Family::G, 2));
  return out;
}

} // namespace qcox

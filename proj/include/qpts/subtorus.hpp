#pragma once

#include <cstdint>
#include <vector>

#include "qpts/int_lattice.hpp"
#include "qpts/qmatrix.hpp"
#include "qpts/scalar.hpp"
#include "qpts/triples.hpp"

namespace qpts {

/// Solution set of chi(q) = 1 for a list of characters chi of the torus
/// (C^*)^{C(n+1,2)}, split as (free torus) x (finite component group).
///
/// With U A V = D the Smith form of the character matrix A, every solution is
///   q_c = prod_s g_s^{free[c][s]} * zeta^{sum_k a_k (m / d_k) torsion[c][k]}
/// for free parameters g_s, integers a_k mod d_k, and zeta of order m.
struct Subtorus {
  int n = 0;
  IntMatrix free_directions;            // C(n+1,2) x dimension
  IntMatrix torsion_directions;         // C(n+1,2) x torsion.size()
  std::vector<std::int64_t> torsion;    // invariant factors > 1
  std::int64_t modulus = 1;             // lcm of torsion (1 if connected)

  std::size_t dimension() const;
  /// Number of cosets of the identity component.
  std::uint64_t component_count() const;

  /// Point of the coset labelled by `choice` (one residue per torsion factor).
  /// Each free parameter becomes a fresh generator of `supply`; the supply's
  /// torsion modulus must be a multiple of `modulus`.
  QMatrix point(const std::vector<std::int64_t>& choice, GeneratorSupply& supply) const;

  /// Every coset label, in lexicographic order.
  std::vector<std::vector<std::int64_t>> coset_labels() const;
};

/// Rows of `characters` are exponent vectors over the pairs of {0..n}.
Subtorus solve_characters(int n, const IntMatrix& characters);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace qpts

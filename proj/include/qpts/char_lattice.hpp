#pragma once

#include "qpts/int_lattice.hpp"
#include "qpts/triples.hpp"

namespace qpts {

/// Integer vector over the pairs (i<j) of {0..n}, read as a character of the
/// parameter torus with coordinates q_ij.
struct CharVector {
  int n = 0;
  IntVector coords;

  bool operator==(const CharVector&) const = default;
  CharVector operator+(const CharVector& o) const;
  CharVector operator-(const CharVector& o) const;
};

/// Subgroup of Z^{C(n+1,2)} held by its Hermite basis.
class SubLattice {
 public:
  SubLattice(int n, IntMatrix hnf_basis);

  int n() const { return n_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  bool operator==(const SubLattice&) const = default;

 private:
  int n_;
  IntMatrix basis_;
};

/// e_ij + e_jk - e_ik, the exponent vector of q_ij q_jk q_ik^{-1}.
CharVector triple_char(const Triple& t, int n);

SubLattice span(const TripleSet& j);

/// Exact integer membership (not membership in the saturation).
bool member(const CharVector& v, const SubLattice& m);

/// Every triple whose character lies in span(J): the largest set with the
/// same vanishing locus as J.
TripleSet closure(const TripleSet& j);

/// Least superset closed under: three of the four triples on any 4 indices
/// force the fourth.
TripleSet lemma2_saturate(const TripleSet& j);

/// C(n+1,2) - rank(span J) - n: the dimension of the locus of J after
/// removing the n directions of the rescaling torus.
int node_label(const TripleSet& j);

}  // namespace qpts

#pragma once

#include <cstdint>
#include <vector>

#include "qpts/qmatrix.hpp"
#include "qpts/triples.hpp"

namespace qpts {

/// Coordinate subspace P(S) spanned by the points delta_s, s in S.
class Flat {
 public:
  Flat() = default;
  Flat(int n, std::uint32_t members);
  Flat(int n, std::initializer_list<int> indices);

  int n() const { return n_; }
  std::uint32_t members() const { return members_; }
  std::vector<int> indices() const;
  int size() const;
  int dimension() const { return size() - 1; }
  bool contains(int v) const { return (members_ >> v) & 1U; }
  bool is_subset_of(const Flat& other) const { return (members_ & ~other.members_) == 0; }

  /// Every triple with all indices in this flat.
  TripleSet triples() const;

  bool operator==(const Flat&) const = default;
  /// Orders by descending size, then by sorted index list.
  bool operator<(const Flat& other) const;

 private:
  int n_ = 0;
  std::uint32_t members_ = 0;
};

/// Irreducible components of a point variety with counts by dimension.
struct Configuration {
  int n = 0;
  std::vector<Flat> components;  // sorted, pairwise incomparable
  std::vector<int> type;         // (c_n, c_{n-1}, ..., c_1)

  bool is_whole_space() const { return components.size() == 1 && components[0].size() == n + 1; }
  bool operator==(const Configuration&) const = default;
};

/// Triples whose principal 3x3 minor has rank one.
TripleSet good_triples(const QMatrix& q);

/// True iff the principal minor Q(S) has rank one.
bool is_rank_one(const QMatrix& q, const Flat& s);

/// Maximal index sets all of whose triples are good.
Configuration components(const TripleSet& good);

/// Triples (i,j,k) whose monomials u_i u_j u_k generate the defining ideal.
std::vector<Triple> ideal_generators(const TripleSet& good);

/// Checks that the zero set of the ideal monomials equals the union of the
/// component flats: exhaustively over coordinate supports, then on `samples`
/// random integer points.
bool monomial_variety_check(const TripleSet& good, int samples = 0);

}  // namespace qpts

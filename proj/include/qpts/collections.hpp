#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpts/triples.hpp"

namespace qpts {

/// Set of coordinate planes P(i,j,k) that are *not* in a point variety.
using Collection = TripleSet;

/// Adequacy: for every index i and member P(j,k,l), some P(i,u,v) with
/// {u,v} in {j,k,l} is a member. A member containing i witnesses itself.
bool is_adequate(const Collection& c);

/// Some coordinate line P(i,j) lies in at least n-2 members.
bool is_dense(const Collection& c);

/// Pair (i,j) with the most members through it (ties: first in lex order).
std::pair<int, int> densest_pair(const Collection& c);

struct CanonicalForm {
  Collection form;
  std::size_t orbit_size = 0;   // |Sym_{n+1} . c|
  Permutation to_form = Permutation::identity(0);  // to_form.apply(c) == form
};

/// Lexicographically least image under Sym_{n+1}.
Collection canonical_form(const Collection& c);
CanonicalForm canonicalize(const Collection& c);

/// Permutation p with p.apply(a) == b, if the two lie in one orbit.
std::optional<Permutation> find_isomorphism(const Collection& a, const Collection& b);

struct OrbitEntry {
  Collection representative;  // canonical
  std::size_t orbit_size = 0;
  bool dense = false;
};

struct OrbitCatalog {
  int n = 0;
  std::vector<OrbitEntry> orbits;  // sorted by representative
  std::size_t total = 0;
};

/// All adequate collections for n <= 5, grouped into Sym_{n+1}-orbits.
/// The subset scan is split over `threads` workers.
OrbitCatalog enumerate_adequate(int n, unsigned threads = 1);

/// Canonical nonempty adequate collections that are not dense.
std::vector<Collection> non_dense_adequate(int n, unsigned threads = 1);

/// The two non-dense adequate collections for n = 5.
Collection collection_a();
Collection collection_b();

}  // namespace qpts

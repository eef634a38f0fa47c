#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpts/qmatrix.hpp"
#include "qpts/subtorus.hpp"
#include "qpts/triples.hpp"

namespace qpts {

/// One Sym_{n+1}-class of closed triple sets, i.e. of sub-tori V(J).
struct DegNode {
  TripleSet closed_set;      // canonical representative
  int label = 0;
  std::vector<int> type;
  std::size_t orbit_size = 0;
  std::string name;          // "<label>" or "<label>_<letter>"
};

/// Nodes sorted by (label, closed set); arrow (u, v) means V(v) is strictly
/// inside V(u) up to symmetry, with no node in between.
struct DegGraph {
  int n = 0;
  std::vector<DegNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

enum class NodeStrategy {
  kSubsetScan,    // every subset of triples, keep closure fixpoints
  kOrbitSearch,   // grow canonical closed sets one triple at a time
};

/// Closed triple sets up to symmetry with label, type and orbit size.
/// kSubsetScan is limited to n <= 4.
std::vector<DegNode> enumerate_nodes(int n, NodeStrategy strategy = NodeStrategy::kOrbitSearch);

/// Arrows between orbit classes by strict inclusion, transitively reduced.
DegGraph build_graph(int n);
DegGraph build_graph(int n, std::vector<DegNode> nodes);

/// Maximally degenerate nodes: those of label 0 (n-dimensional loci).
std::vector<DegNode> sinks(int n);
std::vector<DegNode> sinks(const std::vector<DegNode>& nodes);

/// Nodes without outgoing arrows.
std::vector<std::size_t> terminal_nodes(const DegGraph& g);

/// Solutions of {b_t = 1 : t in G} with q_p = 1 for every pinned pair p.
struct ForcedSolutions {
  int n = 0;
  Subtorus locus;
  /// Explicit points when the locus is finite (one per component).
  std::vector<QMatrix> solutions;

  std::size_t dimension() const { return locus.dimension(); }
  bool finite() const { return dimension() == 0; }
};

/// Throws std::invalid_argument when the pinned pairs are not a valid gauge:
/// out of range, repeated, or not independent on the rescaling torus.
ForcedSolutions forced_solutions(const TripleSet& good,
                                 const std::vector<std::pair<int, int>>& normalization);

/// Checks two graphs for an isomorphism preserving (label, type) and arrows.
bool graphs_isomorphic(const std::vector<std::pair<int, std::vector<int>>>& colors_a,
                       const std::vector<std::pair<std::size_t, std::size_t>>& arrows_a,
                       const std::vector<std::pair<int, std::vector<int>>>& colors_b,
                       const std::vector<std::pair<std::size_t, std::size_t>>& arrows_b);

}  // namespace qpts

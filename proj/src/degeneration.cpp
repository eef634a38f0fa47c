#include "qpts/degeneration.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "qpts/char_lattice.hpp"
#include "qpts/collections.hpp"
#include "qpts/point_variety.hpp"

namespace qpts {

namespace {

using Mask = TripleSet::Mask;

void check_node_dimension(int n, NodeStrategy strategy) {
  if (n < 1 || n > 5) throw std::invalid_argument("degeneration nodes support 1 <= n <= 5");
  if (strategy == NodeStrategy::kSubsetScan && n > 4)
    throw std::invalid_argument("subset scan is limited to n <= 4");
}

std::set<Mask, decltype(&mask_lex_less)> canonical_closed_by_scan(int n) {
  std::set<Mask, decltype(&mask_lex_less)> reps(&mask_lex_less);
  const auto& group = SymmetricGroupAction::get(n);
  const Mask limit = Mask{1} << triple_count(n);
  std::vector<bool> seen(static_cast<std::size_t>(limit), false);
  for (Mask j = 0; j < limit; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    TripleSet set(n, j);
    if (closure(set) != set) continue;
    Mask best = j;
    for (std::size_t g = 0; g < group.order(); ++g) {
      Mask image = group.apply(g, j);
      seen[static_cast<std::size_t>(image)] = true;
      if (mask_lex_less(image, best)) best = image;
    }
    reps.insert(best);
  }
  return reps;
}

std::set<Mask, decltype(&mask_lex_less)> canonical_closed_by_search(int n) {
  std::set<Mask, decltype(&mask_lex_less)> reps(&mask_lex_less);
  std::deque<Mask> queue;
  Mask start = closure(TripleSet(n)).mask();
  start = canonical_form(TripleSet(n, start)).mask();
  reps.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    TripleSet current(n, queue.front());
    queue.pop_front();
    for (const auto& t : all_triple_list(n)) {
      if (current.contains(t)) continue;
      TripleSet grown = current;
      grown.insert(t);
      Mask rep = canonical_form(closure(grown)).mask();
      if (reps.insert(rep).second) queue.push_back(rep);
    }
  }
  return reps;
}

std::string letter_suffix(std::size_t index) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + index % 26));
    index /= 26;
  } while (index-- > 0);
  return s;
}

}  // namespace

std::vector<DegNode> enumerate_nodes(int n, NodeStrategy strategy) {
  check_node_dimension(n, strategy);
  auto reps = strategy == NodeStrategy::kSubsetScan ? canonical_closed_by_scan(n)
                                                    : canonical_closed_by_search(n);
  std::vector<DegNode> nodes;
  for (Mask m : reps) {
    TripleSet set(n, m);
    DegNode node;
    node.closed_set = set;
    node.label = node_label(set);
    node.type = components(set).type;
    node.orbit_size = canonicalize(set).orbit_size;
    nodes.push_back(std::move(node));
  }
  std::stable_sort(nodes.begin(), nodes.end(), [](const DegNode& a, const DegNode& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.closed_set < b.closed_set;
  });
  for (std::size_t i = 0; i < nodes.size();) {
    std::size_t j = i;
    while (j < nodes.size() && nodes[j].label == nodes[i].label) ++j;
    for (std::size_t k = i; k < j; ++k)
      nodes[k].name = std::to_string(nodes[k].label) +
                      (j - i > 1 ? "_" + letter_suffix(k - i) : std::string());
    i = j;
  }
  return nodes;
}

DegGraph build_graph(int n) { return build_graph(n, enumerate_nodes(n)); }

DegGraph build_graph(int n, std::vector<DegNode> nodes) {
  const auto& group = SymmetricGroupAction::get(n);
  const std::size_t count = nodes.size();
  std::vector<std::vector<Mask>> images(count);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t g = 0; g < group.order(); ++g)
      images[v].push_back(group.apply(g, nodes[v].closed_set.mask()));
    std::sort(images[v].begin(), images[v].end());
    images[v].erase(std::unique(images[v].begin(), images[v].end()), images[v].end());
  }

  // below[u][v]: V(v) strictly inside V(u), i.e. u's closed set strictly
  // inside some image of v's.
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t u = 0; u < count; ++u) {
    Mask mu = nodes[u].closed_set.mask();
    for (std::size_t v = 0; v < count; ++v) {
      if (nodes[v].closed_set.size() <= nodes[u].closed_set.size()) continue;
      below[u][v] = std::any_of(images[v].begin(), images[v].end(),
                                [mu](Mask mv) { return (mu & ~mv) == 0; });
    }
  }

  DegGraph graph;
  graph.n = n;
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = 0; v < count; ++v) {
      if (!below[u][v]) continue;
      bool direct = true;
      for (std::size_t w = 0; w < count && direct; ++w)
        if (below[u][w] && below[w][v]) direct = false;
      if (direct) graph.arrows.emplace_back(u, v);
    }
  graph.nodes = std::move(nodes);
  return graph;
}

std::vector<DegNode> sinks(const std::vector<DegNode>& nodes) {
  std::vector<DegNode> out;
  std::copy_if(nodes.begin(), nodes.end(), std::back_inserter(out),
               [](const DegNode& node) { return node.label == 0; });
  return out;
}

std::vector<DegNode> sinks(int n) { return sinks(enumerate_nodes(n)); }

std::vector<std::size_t> terminal_nodes(const DegGraph& g) {
  std::vector<bool> has_out(g.nodes.size(), false);
  for (const auto& [from, to] : g.arrows) has_out[from] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    if (!has_out[v]) out.push_back(v);
  return out;
}

ForcedSolutions forced_solutions(const TripleSet& good,
                                 const std::vector<std::pair<int, int>>& normalization) {
  const int n = good.n();
  const auto pairs = static_cast<std::size_t>(pair_count(n));
  IntMatrix rows;
  for (const auto& t : good) rows.push_back(triple_char(t, n).coords);

  // Each pin q_ij = 1 restricts to f_j / f_i on the rescaling torus; the pins
  // must be independent there so that every rescaling orbit meets the slice.
  IntMatrix on_kernel;
  std::set<int> used;
  for (auto [i, j] : normalization) {
    if (i < 0 || j < 0 || i > n || j > n || i == j)
      throw std::invalid_argument("inconsistent normalization: bad pair");
    int p = pair_index(i, j, n);
    if (!used.insert(p).second)
      throw std::invalid_argument("inconsistent normalization: repeated pair");
    IntVector pin(pairs, 0);
    pin[static_cast<std::size_t>(p)] = 1;
    rows.push_back(std::move(pin));
    IntVector restricted(static_cast<std::size_t>(n + 1), 0);
    restricted[static_cast<std::size_t>(std::max(i, j))] += 1;
    restricted[static_cast<std::size_t>(std::min(i, j))] -= 1;
    on_kernel.push_back(std::move(restricted));
  }
  if (hermite_normal_form(on_kernel, static_cast<std::size_t>(n + 1)).size() != on_kernel.size())
    throw std::invalid_argument("inconsistent normalization: pins dependent on the rescaling torus");

  ForcedSolutions out;
  out.n = n;
  out.locus = solve_characters(n, rows);
  if (out.finite()) {
    GeneratorSupply supply(make_table({}, lcm64(2, out.locus.modulus)));
    for (const auto& label : out.locus.coset_labels())
      out.solutions.push_back(out.locus.point(label, supply));
  }
  return out;
}

bool graphs_isomorphic(const std::vector<std::pair<int, std::vector<int>>>& colors_a,
                       const std::vector<std::pair<std::size_t, std::size_t>>& arrows_a,
                       const std::vector<std::pair<int, std::vector<int>>>& colors_b,
                       const std::vector<std::pair<std::size_t, std::size_t>>& arrows_b) {
  const std::size_t count = colors_a.size();
  if (colors_b.size() != count || arrows_a.size() != arrows_b.size()) return false;
  std::set<std::pair<std::size_t, std::size_t>> edges_b(arrows_b.begin(), arrows_b.end());
  std::vector<std::size_t> map(count, count);
  std::vector<bool> taken(count, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t a) {
    if (a == count) {
      return std::all_of(arrows_a.begin(), arrows_a.end(), [&](const auto& e) {
        return edges_b.count({map[e.first], map[e.second]}) > 0;
      });
    }
    for (std::size_t b = 0; b < count; ++b) {
      if (taken[b] || colors_a[a] != colors_b[b]) continue;
      map[a] = b;
      taken[b] = true;
      if (extend(a + 1)) return true;
      taken[b] = false;
    }
    map[a] = count;
    return false;
  };
  return extend(0);
}

}  // namespace qpts

#include "qpts/collections.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qpts {

namespace {

using Mask = TripleSet::Mask;

// For triple t and each index i outside t: the triples {i,u,v} with {u,v} in t.
struct AdequacyTable {
  std::vector<std::vector<Mask>> witnesses;

  explicit AdequacyTable(int n) {
    auto list = all_triple_list(n);
    witnesses.resize(list.size());
    for (std::size_t t = 0; t < list.size(); ++t) {
      const Triple& tr = list[t];
      for (int i = 0; i <= n; ++i) {
        if (tr.contains(i)) continue;
        Mask m = 0;
        m |= Mask{1} << triple_index(Triple::sorted(i, tr.i, tr.j), n);
        m |= Mask{1} << triple_index(Triple::sorted(i, tr.i, tr.k), n);
        m |= Mask{1} << triple_index(Triple::sorted(i, tr.j, tr.k), n);
        witnesses[t].push_back(m);
      }
    }
  }

  bool adequate(Mask c) const {
    for (Mask rest = c; rest; rest &= rest - 1)
      for (Mask w : witnesses[static_cast<std::size_t>(std::countr_zero(rest))])
        if ((c & w) == 0) return false;
    return true;
  }

  static const AdequacyTable& get(int n) {
    check_dimension(n);
    static std::array<std::once_flag, kMaxDimension + 1> flags;
    static std::array<std::unique_ptr<AdequacyTable>, kMaxDimension + 1> cache;
    auto slot = static_cast<std::size_t>(n);
    std::call_once(flags[slot], [&] { cache[slot] = std::make_unique<AdequacyTable>(n); });
    return *cache[slot];
  }
};

std::vector<int> line_counts(const Collection& c) {
  int n = c.n();
  std::vector<int> counts(static_cast<std::size_t>(pair_count(n)), 0);
  for (const auto& t : c) {
    ++counts[static_cast<std::size_t>(pair_index(t.i, t.j, n))];
    ++counts[static_cast<std::size_t>(pair_index(t.i, t.k, n))];
    ++counts[static_cast<std::size_t>(pair_index(t.j, t.k, n))];
  }
  return counts;
}

void check_enumerable(int n) {
  if (n < 2 || n > 5)
    throw std::invalid_argument("adequate-collection enumeration supports 2 <= n <= 5");
}

}  // namespace

bool is_adequate(const Collection& c) { return AdequacyTable::get(c.n()).adequate(c.mask()); }

bool is_dense(const Collection& c) {
  if (c.n() < 2) return false;
  std::vector<int> counts = line_counts(c);
  return *std::max_element(counts.begin(), counts.end()) >= c.n() - 2;
}

std::pair<int, int> densest_pair(const Collection& c) {
  if (c.n() < 1) throw std::invalid_argument("no pairs for n < 1");
  std::vector<int> counts = line_counts(c);
  auto best = std::max_element(counts.begin(), counts.end());
  return pair_at(static_cast<int>(best - counts.begin()), c.n());
}

CanonicalForm canonicalize(const Collection& c) {
  const auto& group = SymmetricGroupAction::get(c.n());
  Mask best = c.mask();
  std::size_t best_g = 0;
  std::vector<Mask> images;
  images.reserve(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    Mask image = group.apply(g, c.mask());
    images.push_back(image);
    if (mask_lex_less(image, best)) {
      best = image;
      best_g = g;
    }
  }
  std::sort(images.begin(), images.end());
  auto distinct = static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
  return {TripleSet(c.n(), best), distinct, group.permutation(best_g)};
}

Collection canonical_form(const Collection& c) { return canonicalize(c).form; }

std::optional<Permutation> find_isomorphism(const Collection& a, const Collection& b) {
  if (a.n() != b.n() || a.size() != b.size()) return std::nullopt;
  const auto& group = SymmetricGroupAction::get(a.n());
  for (std::size_t g = 0; g < group.order(); ++g)
    if (group.apply(g, a.mask()) == b.mask()) return group.permutation(g);
  return std::nullopt;
}

OrbitCatalog enumerate_adequate(int n, unsigned threads) {
  check_enumerable(n);
  const auto& table = AdequacyTable::get(n);
  const auto& group = SymmetricGroupAction::get(n);
  const Mask limit = Mask{1} << triple_count(n);
  threads = std::max(1U, threads);

  std::vector<std::vector<Mask>> found(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&, w] {
        for (Mask c = w; c < limit; c += threads)
          if (table.adequate(c)) found[w].push_back(c);
      });
  }
  std::vector<Mask> adequate;
  for (auto& part : found) adequate.insert(adequate.end(), part.begin(), part.end());
  std::sort(adequate.begin(), adequate.end());

  OrbitCatalog catalog;
  catalog.n = n;
  catalog.total = adequate.size();
  std::vector<bool> seen(static_cast<std::size_t>(limit), false);
  for (Mask c : adequate) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    Mask best = c;
    std::size_t orbit = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
      Mask image = group.apply(g, c);
      if (!seen[static_cast<std::size_t>(image)]) {
        seen[static_cast<std::size_t>(image)] = true;
        ++orbit;
      }
      if (mask_lex_less(image, best)) best = image;
    }
    TripleSet rep(n, best);
    catalog.orbits.push_back({rep, orbit, is_dense(rep)});
  }
  std::sort(catalog.orbits.begin(), catalog.orbits.end(),
            [](const OrbitEntry& a, const OrbitEntry& b) { return a.representative < b.representative; });
  return catalog;
}

std::vector<Collection> non_dense_adequate(int n, unsigned threads) {
  std::vector<Collection> out;
  for (const auto& entry : enumerate_adequate(n, threads).orbits)
    if (!entry.dense && !entry.representative.empty()) out.push_back(entry.representative);
  return out;
}

Collection collection_a() {
  return Collection(5, {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                        {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

Collection collection_b() {
  return Collection(5, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 4, 5}, {0, 2, 3},
                        {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5}});
}

}  // namespace qpts

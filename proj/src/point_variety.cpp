#include "qpts/point_variety.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace qpts {

namespace {

// Mask of triples with all three indices inside a vertex subset.
TripleSet::Mask triples_within(std::uint32_t vertices, int n) {
  TripleSet::Mask mask = 0;
  auto list = all_triple_list(n);
  for (std::size_t t = 0; t < list.size(); ++t) {
    const Triple& tr = list[t];
    if ((vertices >> tr.i & 1U) && (vertices >> tr.j & 1U) && (vertices >> tr.k & 1U))
      mask |= TripleSet::Mask{1} << t;
  }
  return mask;
}

std::vector<std::uint32_t> flat_subsets(const TripleSet& good) {
  int n = good.n();
  std::uint32_t full = (1U << (n + 1)) - 1;
  std::vector<std::uint32_t> flats;
  for (std::uint32_t s = 1; s <= full; ++s)
    if ((triples_within(s, n) & ~good.mask()) == 0) flats.push_back(s);
  return flats;
}

}  // namespace

Flat::Flat(int n, std::uint32_t members) : n_(n), members_(members) {
  check_dimension(n);
  if (members == 0 || (members >> (n + 1)) != 0)
    throw std::invalid_argument("flat needs a nonempty subset of {0..n}");
}

Flat::Flat(int n, std::initializer_list<int> indices) : n_(n) {
  check_dimension(n);
  for (int v : indices) {
    if (v < 0 || v > n) throw std::out_of_range("flat index outside {0..n}");
    members_ |= 1U << v;
  }
  if (members_ == 0) throw std::invalid_argument("flat needs at least one index");
}

std::vector<int> Flat::indices() const {
  std::vector<int> out;
  for (int v = 0; v <= n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

int Flat::size() const { return std::popcount(members_); }

TripleSet Flat::triples() const { return TripleSet(n_, triples_within(members_, n_)); }

bool Flat::operator<(const Flat& other) const {
  if (size() != other.size()) return size() > other.size();
  return indices() < other.indices();
}

TripleSet good_triples(const QMatrix& q) {
  TripleSet good(q.n());
  for (const auto& t : all_triple_list(q.n()))
    if (b_scalar(q, t).is_one()) good.insert(t);
  return good;
}

bool is_rank_one(const QMatrix& q, const Flat& s) {
  if (s.n() != q.n()) throw std::invalid_argument("flat and matrix differ in n");
  for (const auto& t : s.triples())
    if (!b_scalar(q, t).is_one()) return false;
  return true;
}

Configuration components(const TripleSet& good) {
  int n = good.n();
  if (n < 1) throw std::invalid_argument("configurations need n >= 1");
  std::vector<std::uint32_t> flats = flat_subsets(good);
  Configuration config;
  config.n = n;
  config.type.assign(static_cast<std::size_t>(n), 0);
  for (std::uint32_t s : flats) {
    bool maximal = std::none_of(flats.begin(), flats.end(), [s](std::uint32_t o) {
      return o != s && (s & ~o) == 0;
    });
    if (!maximal) continue;
    Flat flat(n, s);
    if (flat.dimension() < 1) throw std::logic_error("isolated point among components");
    config.components.push_back(flat);
    ++config.type[static_cast<std::size_t>(n - flat.dimension())];
  }
  std::sort(config.components.begin(), config.components.end());
  return config;
}

std::vector<Triple> ideal_generators(const TripleSet& good) {
  return good.complement().to_vector();
}

bool monomial_variety_check(const TripleSet& good, int samples) {
  int n = good.n();
  if (n > 6) throw std::invalid_argument("monomial_variety_check supports n <= 6");
  Configuration config = components(good);
  std::vector<Triple> ideal = ideal_generators(good);

  auto in_union = [&](std::uint32_t support) {
    return std::any_of(config.components.begin(), config.components.end(),
                       [support](const Flat& f) { return (support & ~f.members()) == 0; });
  };

  std::uint32_t full = (1U << (n + 1)) - 1;
  for (std::uint32_t support = 1; support <= full; ++support) {
    bool vanishes = std::none_of(ideal.begin(), ideal.end(), [support](const Triple& t) {
      return (support >> t.i & 1U) && (support >> t.j & 1U) && (support >> t.k & 1U);
    });
    if (vanishes != in_union(support)) return false;
  }

  std::mt19937_64 rng(0x5eedU + static_cast<unsigned>(n));
  std::uniform_int_distribution<std::uint32_t> pick_support(1, full);
  std::uniform_int_distribution<int> pick_value(-9, 9);
  for (int s = 0; s < samples; ++s) {
    std::vector<long long> point(static_cast<std::size_t>(n + 1), 0);
    std::uint32_t requested = pick_support(rng);
    for (int v = 0; v <= n; ++v)
      if (requested >> v & 1U) {
        int value = 0;
        while (value == 0) value = pick_value(rng);
        point[static_cast<std::size_t>(v)] = value;
      }
    bool vanishes = std::all_of(ideal.begin(), ideal.end(), [&](const Triple& t) {
      return point[static_cast<std::size_t>(t.i)] * point[static_cast<std::size_t>(t.j)] *
                 point[static_cast<std::size_t>(t.k)] == 0;
    });
    bool on_flat = std::any_of(config.components.begin(), config.components.end(),
                               [&](const Flat& f) {
                                 for (int v = 0; v <= n; ++v)
                                   if (!f.contains(v) && point[static_cast<std::size_t>(v)] != 0)
                                     return false;
                                 return true;
                               });
    if (vanishes != on_flat) return false;
  }
  return true;
}

}  // namespace qpts

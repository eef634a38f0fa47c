#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qpts/triples.hpp"

using namespace qpts;

TEST_SUITE("triples") {

TEST_CASE("pair and triple indices are lexicographic bijections") {
  for (int n = 1; n <= kMaxDimension; ++n) {
    int p = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(pair_index(i, j, n) == p);
        CHECK(pair_at(p, n) == std::pair{i, j});
        ++p;
      }
    CHECK(p == pair_count(n));
    if (n < 2) continue;
    int t = 0;
    for (const auto& tr : all_triple_list(n)) {
      CHECK(triple_index(tr, n) == t);
      CHECK(triple_at(t, n) == tr);
      ++t;
    }
    CHECK(t == triple_count(n));
    CHECK(std::is_sorted(all_triple_list(n).begin(), all_triple_list(n).end()));
  }
}

TEST_CASE("triples validate their indices") {
  CHECK_THROWS(Triple(1, 1, 2));
  CHECK_THROWS(Triple(2, 1, 3));
  CHECK(Triple::sorted(3, 0, 2) == Triple(0, 2, 3));
  CHECK_THROWS(TripleSet(3, {Triple(0, 1, 4)}));
}

TEST_CASE("set operations") {
  TripleSet a(3, {{0, 1, 2}, {0, 1, 3}});
  TripleSet b(3, {{0, 1, 3}, {1, 2, 3}});
  CHECK((a | b).size() == 3);
  CHECK((a & b) == TripleSet(3, {{0, 1, 3}}));
  CHECK((a - b) == TripleSet(3, {{0, 1, 2}}));
  CHECK(a.complement().size() == 2);
  CHECK((a | a.complement()) == TripleSet::all(3));
  CHECK(TripleSet::all(3).size() == 4);
  CHECK(a.to_string() == "{(0,1,2),(0,1,3)}");
  CHECK_THROWS(a | TripleSet(4));
}

TEST_CASE("mask order agrees with lexicographic order of member lists") {
  std::mt19937_64 rng(3);
  for (int n : {3, 4, 5}) {
    std::uniform_int_distribution<TripleSet::Mask> pick(0, (TripleSet::Mask{1} << triple_count(n)) - 1);
    for (int round = 0; round < 2000; ++round) {
      TripleSet a(n, pick(rng)), b(n, pick(rng));
      if (round % 7 == 0) b = TripleSet(n, a.mask() & pick(rng));
      auto va = a.to_vector(), vb = b.to_vector();
      bool lex = std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
      CHECK(mask_lex_less(a.mask(), b.mask()) == lex);
      CHECK((a < b) == lex);
    }
  }
}

TEST_CASE("permutations act on triples") {
  Permutation p({2, 0, 3, 1});
  CHECK(p.apply(Triple(0, 1, 2)) == Triple(0, 2, 3));
  CHECK(p.inverse().apply(p.apply(Triple(0, 1, 3))) == Triple(0, 1, 3));
  CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("cached group action matches direct application") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    const auto& group = SymmetricGroupAction::get(n);
    std::size_t factorial = 1;
    for (int k = 2; k <= n + 1; ++k) factorial *= static_cast<std::size_t>(k);
    CHECK(group.order() == factorial);
    std::uniform_int_distribution<TripleSet::Mask> pick(0, (TripleSet::Mask{1} << triple_count(n)) - 1);
    for (int round = 0; round < 50; ++round) {
      TripleSet s(n, pick(rng));
      std::size_t g = rng() % group.order();
      CHECK(group.apply(g, s.mask()) == group.permutation(g).apply(s).mask());
    }
  }
}

}

#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qpts/collections.hpp"

using namespace qpts;

TEST_SUITE("collections") {

TEST_CASE("adequacy agrees with the literal definition on every collection, n <= 4") {
  for (int n : {2, 3, 4}) {
    const TripleSet::Mask limit = TripleSet::Mask{1} << triple_count(n);
    std::size_t count = 0;
    for (TripleSet::Mask m = 0; m < limit; ++m) {
      TripleSet c(n, m);
      bool expected = oracle::adequate(c);
      REQUIRE(is_adequate(c) == expected);
      CHECK(is_dense(c) == oracle::dense(c));
      if (expected) {
        ++count;
        if (!c.empty()) CHECK(is_dense(c));  // small n: adequate implies dense
      }
    }
    if (n == 3) CHECK(count == 12);
    if (n == 4) CHECK(count == 314);
  }
}

TEST_CASE("adequacy on random n = 5 collections") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<TripleSet::Mask> pick(0, (TripleSet::Mask{1} << 20) - 1);
  for (int round = 0; round < 20000; ++round) {
    TripleSet c(5, pick(rng));
    CHECK(is_adequate(c) == oracle::adequate(c));
    CHECK(is_dense(c) == oracle::dense(c));
  }
}

TEST_CASE("small cases") {
  CHECK_FALSE(is_adequate(TripleSet(3, {{0, 1, 2}})));
  CHECK_FALSE(is_adequate(TripleSet(3, {{0, 1, 3}})));
  CHECK(is_adequate(TripleSet(3, {{0, 1, 3}, {0, 2, 3}})));
  CHECK(is_adequate(TripleSet(3)));
  CHECK(densest_pair(TripleSet(3, {{0, 1, 3}, {0, 2, 3}})) == std::pair{0, 3});
}

TEST_CASE("canonical forms are orbit minima") {
  std::mt19937_64 rng(13);
  for (int n : {3, 4, 5}) {
    std::uniform_int_distribution<TripleSet::Mask> pick(0, (TripleSet::Mask{1} << triple_count(n)) - 1);
    for (int round = 0; round < 40; ++round) {
      TripleSet c(n, pick(rng));
      auto orbit = oracle::orbit(c);
      CanonicalForm cf = canonicalize(c);
      TripleSet least(n, *std::min_element(orbit.begin(), orbit.end(), mask_lex_less));
      CHECK(cf.form == least);
      CHECK(cf.orbit_size == orbit.size());
      CHECK(cf.to_form.apply(c) == cf.form);
      TripleSet other(n, *std::next(orbit.begin(), static_cast<long>(rng() % orbit.size())));
      auto p = find_isomorphism(c, other);
      REQUIRE(p);
      CHECK(p->apply(c) == other);
      CHECK(canonical_form(other) == cf.form);
    }
  }
  CHECK_FALSE(find_isomorphism(TripleSet(3, {{0, 1, 2}}), TripleSet(3)));
}

TEST_CASE("adequate catalogs") {
  const std::size_t expected_total[] = {0, 0, 2, 12, 314, 50334};
  const std::size_t expected_orbits[] = {0, 0, 2, 4, 16, 175};
  for (int n = 2; n <= 5; ++n) {
    OrbitCatalog catalog = enumerate_adequate(n, 4);
    CHECK(catalog.total == expected_total[n]);
    CHECK(catalog.orbits.size() == expected_orbits[n]);
    std::size_t factorial = 1;
    for (int k = 2; k <= n + 1; ++k) factorial *= static_cast<std::size_t>(k);
    std::size_t sum = 0;
    for (const auto& entry : catalog.orbits) {
      CHECK(factorial % entry.orbit_size == 0);
      CHECK(canonical_form(entry.representative) == entry.representative);
      CHECK(is_adequate(entry.representative));
      CHECK(entry.dense == is_dense(entry.representative));
      sum += entry.orbit_size;
    }
    CHECK(sum == catalog.total);
  }
  CHECK(enumerate_adequate(4, 1).orbits.size() == enumerate_adequate(4, 3).orbits.size());
}

TEST_CASE("non-dense adequate classes") {
  for (int n = 2; n <= 4; ++n) CHECK(non_dense_adequate(n).empty());
  auto found = non_dense_adequate(5, 4);
  std::vector<Collection> expected{canonical_form(collection_a()), canonical_form(collection_b())};
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  CHECK(found == expected);
  CHECK(collection_a().size() == 8);
  CHECK(collection_b().size() == 10);
  CHECK(is_adequate(collection_a()));
  CHECK_FALSE(is_dense(collection_b()));
}

TEST_CASE("predicates are invariant under relabeling") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<TripleSet::Mask> pick(0, (TripleSet::Mask{1} << 20) - 1);
  const auto& group = SymmetricGroupAction::get(5);
  for (int round = 0; round < 3000; ++round) {
    TripleSet c(5, pick(rng));
    TripleSet image(5, group.apply(rng() % group.order(), c.mask()));
    CHECK(is_adequate(c) == is_adequate(image));
    CHECK(is_dense(c) == is_dense(image));
  }
}

}

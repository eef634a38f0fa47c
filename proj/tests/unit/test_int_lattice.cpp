#include <doctest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "qpts/int_lattice.hpp"

using namespace qpts;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> e(-range, range);
  IntMatrix m(rows, IntVector(cols));
  for (auto& row : m)
    for (auto& x : row) x = e(rng);
  return m;
}

oracle::RationalMatrix to_rational(const IntMatrix& m) {
  oracle::RationalMatrix out;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (auto x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

Rational determinant(oracle::RationalMatrix m) {
  Rational det = 1;
  const std::size_t size = m.size();
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t p = c;
    while (p < size && m[p][c] == 0) ++p;
    if (p == size) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < size; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < size; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Random product of elementary row operations.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t size) {
  IntMatrix u(size, IntVector(size, 0));
  for (std::size_t i = 0; i < size; ++i) u[i][i] = 1;
  std::uniform_int_distribution<int> f(-2, 2);
  for (int step = 0; step < 6; ++step) {
    std::size_t a = rng() % size, b = rng() % size;
    if (a != b) add_row_multiple(u, a, b, f(rng));
  }
  return u;
}

}  // namespace

TEST_SUITE("int_lattice") {

TEST_CASE("checked arithmetic") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked::add(big, 1), IntegerOverflow);
  CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), IntegerOverflow);
  CHECK_THROWS_AS(checked::sub(-big - 1, 1), IntegerOverflow);
  CHECK(checked::floor_div(-7, 2) == -4);
  CHECK(checked::floor_div(7, 2) == 3);
  CHECK(checked::floor_div(-8, 2) == -4);
}

TEST_CASE("Hermite form shape and uniqueness") {
  std::mt19937 rng(1);
  for (int round = 0; round < 300; ++round) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, rows, cols, 4);
    IntMatrix h = hermite_normal_form(a, cols);
    CHECK(h.size() == oracle::rational_rank(to_rational(a)));
    std::size_t last_pivot = 0;
    for (std::size_t r = 0; r < h.size(); ++r) {
      std::size_t p = 0;
      while (h[r][p] == 0) ++p;
      if (r > 0) CHECK(p > last_pivot);
      CHECK(h[r][p] > 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(h[above][p] >= 0);
        CHECK(h[above][p] < h[r][p]);
      }
      last_pivot = p;
    }
    for (const auto& row : a) CHECK(in_row_lattice(h, row));
    // Same lattice, different generators: identical normal form.
    IntMatrix mixed = multiply(random_unimodular(rng, rows), a);
    CHECK(hermite_normal_form(mixed, cols) == h);
  }
}

TEST_CASE("membership is exact, not up to saturation") {
  IntMatrix h = hermite_normal_form({{2, 0}, {0, 3}}, 2);
  CHECK(in_row_lattice(h, std::vector<std::int64_t>{4, 3}));
  CHECK_FALSE(in_row_lattice(h, std::vector<std::int64_t>{1, 0}));
  CHECK_FALSE(in_row_lattice(h, std::vector<std::int64_t>{0, 1}));
  CHECK(hermite_normal_form({{0, 0}}, 2).empty());
}

TEST_CASE("Smith form: U A V = D with unimodular transforms") {
  std::mt19937 rng(2);
  for (int round = 0; round < 300; ++round) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, rows, cols, 5);
    SmithForm s = smith_normal_form(a, cols);
    IntMatrix d = multiply(multiply(s.u, a), s.v);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        std::int64_t want = (r == c && r < s.diagonal.size()) ? s.diagonal[r] : 0;
        CHECK(d[r][c] == want);
      }
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
      CHECK(s.diagonal[k] > 0);
      if (k + 1 < s.diagonal.size()) CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
    }
    CHECK(s.diagonal.size() == oracle::rational_rank(to_rational(a)));
    CHECK(abs(determinant(to_rational(s.u))) == 1);
    CHECK(abs(determinant(to_rational(s.v))) == 1);
  }
}

TEST_CASE("Smith form of a known matrix") {
  SmithForm s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  CHECK(s.diagonal == std::vector<std::int64_t>{2, 6, 12});
}

TEST_CASE("overflow surfaces as an exception") {
  constexpr std::int64_t huge = std::int64_t{1} << 62;
  CHECK_THROWS_AS(smith_normal_form({{huge, huge - 1}, {huge - 1, -huge}}, 2), IntegerOverflow);
}

}

#include "qpts/int_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace qpts {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("int64 overflow in add");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow("int64 overflow in sub");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("int64 overflow in mul");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace checked

namespace {

std::int64_t abs64(std::int64_t x) {
  if (x == INT64_MIN) throw IntegerOverflow("abs of INT64_MIN");
  return x < 0 ? -x : x;
}

IntMatrix identity(std::size_t size) {
  IntMatrix m(size, IntVector(size, 0));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

void add_column_multiple(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t factor) {
  if (factor == 0) return;
  for (auto& row : m) row[target] = checked::add(row[target], checked::mul(factor, row[source]));
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (auto& x : m[r]) x = checked::sub(0, x);
}

}  // namespace

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < m[target].size(); ++c)
    m[target][c] = checked::add(m[target][c], checked::mul(factor, m[source][c]));
}

IntMatrix hermite_normal_form(const IntMatrix& gens, std::size_t columns) {
  IntMatrix h;
  for (const auto& row : gens) {
    if (row.size() != columns) throw std::invalid_argument("generator of wrong length");
    if (std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; })) h.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns && rank < h.size(); ++c) {
    bool pivot = false;
    while (true) {
      std::size_t best = h.size();
      for (std::size_t i = rank; i < h.size(); ++i)
        if (h[i][c] != 0 && (best == h.size() || abs64(h[i][c]) < abs64(h[best][c]))) best = i;
      if (best == h.size()) break;
      pivot = true;
      std::swap(h[rank], h[best]);
      bool clean = true;
      for (std::size_t i = rank + 1; i < h.size(); ++i) {
        if (h[i][c] == 0) continue;
        add_row_multiple(h, i, rank, -(h[i][c] / h[rank][c]));
        if (h[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!pivot) continue;
    if (h[rank][c] < 0) negate_row(h, rank);
    for (std::size_t i = 0; i < rank; ++i)
      add_row_multiple(h, i, rank, -checked::floor_div(h[i][c], h[rank][c]));
    ++rank;
  }
  h.resize(rank);
  return h;
}

bool in_row_lattice(const IntMatrix& hnf, std::span<const std::int64_t> v) {
  IntVector rest(v.begin(), v.end());
  for (const auto& row : hnf) {
    if (row.size() != rest.size()) throw std::invalid_argument("dimension mismatch");
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (rest[p] % row[p] != 0) return false;
    std::int64_t q = rest[p] / row[p];
    for (std::size_t c = p; c < rest.size(); ++c)
      rest[c] = checked::sub(rest[c], checked::mul(q, row[c]));
  }
  return std::all_of(rest.begin(), rest.end(), [](std::int64_t x) { return x == 0; });
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t columns) {
  IntMatrix a = input;
  for (const auto& row : a)
    if (row.size() != columns) throw std::invalid_argument("row of wrong length");
  const std::size_t rows = a.size();
  SmithForm out;
  out.rows = rows;
  out.columns = columns;
  out.u = identity(rows);
  out.v = identity(columns);

  auto row_op = [&](std::size_t target, std::size_t source, std::int64_t factor) {
    add_row_multiple(a, target, source, factor);
    add_row_multiple(out.u, target, source, factor);
  };
  auto col_op = [&](std::size_t target, std::size_t source, std::int64_t factor) {
    add_column_multiple(a, target, source, factor);
    add_column_multiple(out.v, target, source, factor);
  };

  for (std::size_t k = 0; k < std::min(rows, columns); ++k) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (k, k).
      std::size_t bi = rows, bj = columns;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < columns; ++j)
          if (a[i][j] != 0 && (bi == rows || abs64(a[i][j]) < abs64(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      std::swap(a[k], a[bi]);
      std::swap(out.u[k], out.u[bi]);
      swap_columns(a, k, bj);
      swap_columns(out.v, k, bj);

      bool dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        row_op(i, k, -(a[i][k] / a[k][k]));
        dirty |= a[i][k] != 0;
      }
      for (std::size_t j = k + 1; j < columns; ++j) {
        if (a[k][j] == 0) continue;
        col_op(j, k, -(a[k][j] / a[k][k]));
        dirty |= a[k][j] != 0;
      }
      if (dirty) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < columns; ++j)
          if (a[i][j] % a[k][k] != 0) {
            row_op(k, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;
      if (a[k][k] < 0) {
        negate_row(a, k);
        negate_row(out.u, k);
      }
      out.diagonal.push_back(a[k][k]);
      break;
    }
    if (out.diagonal.size() == k) break;
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("shape mismatch in multiply");
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] = checked::add(out[i][j], checked::mul(a[i][l], b[l][j]));
    }
  }
  return out;
}

}  // namespace qpts

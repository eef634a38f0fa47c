#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qpts {

/// Raised when an intermediate integer leaves the int64 range.
class IntegerOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major, rectangular

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
/// Floor division, denominator > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
}  // namespace checked

/// row[target] += factor * row[source]
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t factor);

/// Row-style Hermite normal form of the lattice spanned by the rows of `gens`:
/// echelon rows, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result is a basis.
IntMatrix hermite_normal_form(const IntMatrix& gens, std::size_t columns);

/// True iff v is an integer combination of the rows of an HNF basis.
bool in_row_lattice(const IntMatrix& hnf, std::span<const std::int64_t> v);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix u, v;
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors, length = rank
  std::size_t rows = 0, columns = 0;
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t columns);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace qpts

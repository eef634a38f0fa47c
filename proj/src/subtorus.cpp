#include "qpts/subtorus.hpp"

#include <numeric>
#include <stdexcept>

namespace qpts {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return checked::mul(a / std::gcd(a, b), b);
}

std::size_t Subtorus::dimension() const {
  return free_directions.empty() ? 0 : free_directions.front().size();
}

std::uint64_t Subtorus::component_count() const {
  std::uint64_t count = 1;
  for (auto d : torsion) count *= static_cast<std::uint64_t>(d);
  return count;
}

std::vector<std::vector<std::int64_t>> Subtorus::coset_labels() const {
  std::vector<std::vector<std::int64_t>> labels{{}};
  for (auto d : torsion) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : labels)
      for (std::int64_t a = 0; a < d; ++a) {
        next.push_back(prefix);
        next.back().push_back(a);
      }
    labels = std::move(next);
  }
  return labels;
}

QMatrix Subtorus::point(const std::vector<std::int64_t>& choice, GeneratorSupply& supply) const {
  if (choice.size() != torsion.size()) throw std::invalid_argument("one residue per torsion factor");
  const std::int64_t m = supply.table()->torsion_modulus();
  if (m % modulus != 0)
    throw std::invalid_argument("generator table cannot express the component group");
  std::vector<std::size_t> params;
  for (std::size_t s = 0; s < dimension(); ++s) params.push_back(supply.fresh());
  TablePtr table = supply.table();
  std::size_t pairs = static_cast<std::size_t>(pair_count(n));
  std::vector<GroupScalar> upper;
  upper.reserve(pairs);
  for (std::size_t c = 0; c < pairs; ++c) {
    GroupScalar::Exponents e;
    for (std::size_t s = 0; s < params.size(); ++s) e[params[s]] = free_directions[c][s];
    std::int64_t t = 0;
    for (std::size_t k = 0; k < torsion.size(); ++k)
      t = checked::add(t, checked::mul(checked::mul(choice[k], m / torsion[k]),
                                       torsion_directions[c][k] % torsion[k]));
    upper.emplace_back(table, std::move(e), t % m);
  }
  return QMatrix(n, table, std::move(upper));
}

Subtorus solve_characters(int n, const IntMatrix& characters) {
  const auto pairs = static_cast<std::size_t>(pair_count(n));
  SmithForm snf = smith_normal_form(characters, pairs);
  Subtorus out;
  out.n = n;
  out.free_directions.assign(pairs, {});
  out.torsion_directions.assign(pairs, {});
  for (std::size_t k = 0; k < pairs; ++k) {
    bool free = k >= snf.diagonal.size();
    if (!free && snf.diagonal[k] == 1) continue;
    for (std::size_t c = 0; c < pairs; ++c)
      (free ? out.free_directions : out.torsion_directions)[c].push_back(snf.v[c][k]);
    if (!free) {
      out.torsion.push_back(snf.diagonal[k]);
      out.modulus = lcm64(out.modulus, snf.diagonal[k]);
    }
  }
  return out;
}

}  // namespace qpts

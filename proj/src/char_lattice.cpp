#include "qpts/char_lattice.hpp"

#include <array>
#include <stdexcept>

namespace qpts {

namespace {

IntMatrix generator_rows(const TripleSet& j) {
  IntMatrix rows;
  rows.reserve(j.size());
  for (const auto& t : j) rows.push_back(triple_char(t, j.n()).coords);
  return rows;
}

}  // namespace

CharVector CharVector::operator+(const CharVector& o) const {
  if (o.n != n) throw std::invalid_argument("characters over different n");
  CharVector r = *this;
  for (std::size_t c = 0; c < coords.size(); ++c) r.coords[c] = checked::add(r.coords[c], o.coords[c]);
  return r;
}

CharVector CharVector::operator-(const CharVector& o) const {
  if (o.n != n) throw std::invalid_argument("characters over different n");
  CharVector r = *this;
  for (std::size_t c = 0; c < coords.size(); ++c) r.coords[c] = checked::sub(r.coords[c], o.coords[c]);
  return r;
}

SubLattice::SubLattice(int n, IntMatrix hnf_basis) : n_(n), basis_(std::move(hnf_basis)) {}

CharVector triple_char(const Triple& t, int n) {
  if (t.k > n) throw std::out_of_range("triple outside {0..n}");
  CharVector v{n, IntVector(static_cast<std::size_t>(pair_count(n)), 0)};
  v.coords[static_cast<std::size_t>(pair_index(t.i, t.j, n))] += 1;
  v.coords[static_cast<std::size_t>(pair_index(t.j, t.k, n))] += 1;
  v.coords[static_cast<std::size_t>(pair_index(t.i, t.k, n))] -= 1;
  return v;
}

SubLattice span(const TripleSet& j) {
  return SubLattice(j.n(), hermite_normal_form(generator_rows(j),
                                               static_cast<std::size_t>(pair_count(j.n()))));
}

bool member(const CharVector& v, const SubLattice& m) {
  if (v.n != m.n()) throw std::invalid_argument("character and lattice differ in n");
  return in_row_lattice(m.basis(), v.coords);
}

TripleSet closure(const TripleSet& j) {
  SubLattice m = span(j);
  TripleSet out = j;
  for (const auto& t : all_triple_list(j.n()))
    if (!out.contains(t) && member(triple_char(t, j.n()), m)) out.insert(t);
  return out;
}

TripleSet lemma2_saturate(const TripleSet& j) {
  int n = j.n();
  TripleSet out = j;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d) {
            std::array<Triple, 4> face{Triple(a, b, c), Triple(a, b, d), Triple(a, c, d),
                                       Triple(b, c, d)};
            int present = 0;
            for (const auto& t : face) present += out.contains(t) ? 1 : 0;
            if (present != 3) continue;
            for (const auto& t : face) out.insert(t);
            changed = true;
          }
  }
  return out;
}

int node_label(const TripleSet& j) {
  return pair_count(j.n()) - static_cast<int>(span(j).rank()) - j.n();
}

}  // namespace qpts

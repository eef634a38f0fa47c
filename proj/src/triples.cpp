#include "qpts/triples.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qpts {

namespace {

struct IndexTables {
  std::vector<std::vector<Triple>> triples;       // per n, lex order
  std::vector<std::vector<int>> triple_lookup;    // per n, (i*(n+1)+j)*(n+1)+k
  std::vector<std::vector<std::pair<int, int>>> pairs;
  std::vector<std::vector<int>> pair_lookup;

  IndexTables() {
    for (int n = 0; n <= kMaxDimension; ++n) {
      int w = n + 1;
      std::vector<Triple> ts;
      std::vector<int> tl(static_cast<std::size_t>(w * w * w), -1);
      std::vector<std::pair<int, int>> ps;
      std::vector<int> pl(static_cast<std::size_t>(w * w), -1);
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          pl[static_cast<std::size_t>(i * w + j)] = static_cast<int>(ps.size());
          ps.emplace_back(i, j);
          for (int k = j + 1; k <= n; ++k) {
            tl[static_cast<std::size_t>((i * w + j) * w + k)] = static_cast<int>(ts.size());
            ts.emplace_back(i, j, k);
          }
        }
      triples.push_back(std::move(ts));
      triple_lookup.push_back(std::move(tl));
      pairs.push_back(std::move(ps));
      pair_lookup.push_back(std::move(pl));
    }
  }
};

const IndexTables& tables() {
  static const IndexTables instance;
  return instance;
}

}  // namespace

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension)
    throw std::out_of_range("dimension n=" + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxDimension) + "]");
}

Triple::Triple(int a, int b, int c) : i(a), j(b), k(c) {
  if (!(0 <= i && i < j && j < k))
    throw std::invalid_argument("triple indices must satisfy 0 <= i < j < k");
}

Triple Triple::sorted(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return Triple(v[0], v[1], v[2]);
}

std::string Triple::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

int pair_index(int i, int j, int n) {
  check_dimension(n);
  if (i > j) std::swap(i, j);
  if (i < 0 || j > n || i == j) throw std::out_of_range("pair index out of range");
  return tables().pair_lookup[static_cast<std::size_t>(n)]
                             [static_cast<std::size_t>(i * (n + 1) + j)];
}

std::pair<int, int> pair_at(int index, int n) {
  check_dimension(n);
  return tables().pairs[static_cast<std::size_t>(n)].at(static_cast<std::size_t>(index));
}

int triple_index(const Triple& t, int n) {
  check_dimension(n);
  if (t.k > n) throw std::out_of_range("triple " + t.to_string() + " outside {0.." +
                                       std::to_string(n) + "}");
  int w = n + 1;
  return tables().triple_lookup[static_cast<std::size_t>(n)]
                               [static_cast<std::size_t>((t.i * w + t.j) * w + t.k)];
}

const Triple& triple_at(int index, int n) {
  check_dimension(n);
  return tables().triples[static_cast<std::size_t>(n)].at(static_cast<std::size_t>(index));
}

std::span<const Triple> all_triple_list(int n) {
  check_dimension(n);
  return tables().triples[static_cast<std::size_t>(n)];
}

TripleSet::TripleSet(int n, Mask mask) : n_(n), mask_(mask) {
  check_dimension(n);
  int count = triple_count(n);
  if (count < 64 && (mask >> count) != 0)
    throw std::out_of_range("triple mask has bits beyond C(n+1,3)");
}

TripleSet::TripleSet(int n, std::initializer_list<Triple> triples)
    : TripleSet(n, std::span<const Triple>(triples.begin(), triples.size())) {}

TripleSet::TripleSet(int n, std::span<const Triple> triples) : TripleSet(n) {
  for (const auto& t : triples) insert(t);
}

TripleSet TripleSet::all(int n) {
  check_dimension(n);
  int count = triple_count(n);
  return TripleSet(n, count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1);
}

std::size_t TripleSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool TripleSet::contains(const Triple& t) const {
  if (t.k > n_) return false;
  return (mask_ >> triple_index(t, n_)) & 1U;
}

void TripleSet::insert(const Triple& t) { mask_ |= Mask{1} << triple_index(t, n_); }
void TripleSet::erase(const Triple& t) { mask_ &= ~(Mask{1} << triple_index(t, n_)); }

std::vector<Triple> TripleSet::to_vector() const { return {begin(), end()}; }

TripleSet TripleSet::complement() const { return TripleSet(n_, all(n_).mask_ & ~mask_); }

void TripleSet::check_same_n(const TripleSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("triple sets over different n");
}

bool TripleSet::is_subset_of(const TripleSet& other) const {
  check_same_n(other);
  return (mask_ & ~other.mask_) == 0;
}

TripleSet TripleSet::operator|(const TripleSet& other) const {
  check_same_n(other);
  return TripleSet(n_, mask_ | other.mask_);
}
TripleSet TripleSet::operator&(const TripleSet& other) const {
  check_same_n(other);
  return TripleSet(n_, mask_ & other.mask_);
}
TripleSet TripleSet::operator-(const TripleSet& other) const {
  check_same_n(other);
  return TripleSet(n_, mask_ & ~other.mask_);
}

std::strong_ordering TripleSet::operator<=>(const TripleSet& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (mask_ == other.mask_) return std::strong_ordering::equal;
  return mask_lex_less(mask_, other.mask_) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
}

std::string TripleSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& t : *this) {
    if (!first) out += ",";
    first = false;
    out += t.to_string();
  }
  return out + "}";
}

TripleSet::const_iterator::reference TripleSet::const_iterator::operator*() const {
  return triple_at(std::countr_zero(rest_), n_);
}

bool mask_lex_less(TripleSet::Mask a, TripleSet::Mask b) {
  TripleSet::Mask d = a ^ b;
  if (d == 0) return false;
  int low = std::countr_zero(d);
  // The first differing position holds triple `low` in exactly one list; the
  // other list either continues with a larger triple or has ended.
  if ((a >> low) & 1U) return (b >> low) != 0;
  return (a >> low) == 0;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<int> check = image_;
  std::sort(check.begin(), check.end());
  for (std::size_t v = 0; v < check.size(); ++v)
    if (check[v] != static_cast<int>(v)) throw std::invalid_argument("not a permutation");
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n + 1));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v)
    inv[static_cast<std::size_t>(image_[v])] = static_cast<int>(v);
  return Permutation(std::move(inv));
}

Triple Permutation::apply(const Triple& t) const {
  return Triple::sorted((*this)(t.i), (*this)(t.j), (*this)(t.k));
}

TripleSet Permutation::apply(const TripleSet& s) const {
  if (s.n() != n()) throw std::invalid_argument("permutation size differs from n+1");
  TripleSet out(s.n());
  for (const auto& t : s) out.insert(apply(t));
  return out;
}

SymmetricGroupAction::SymmetricGroupAction(int n) : n_(n), triples_(triple_count(n)) {
  std::vector<int> image(static_cast<std::size_t>(n + 1));
  std::iota(image.begin(), image.end(), 0);
  do {
    Permutation p(image);
    for (int t = 0; t < triples_; ++t)
      table_.push_back(static_cast<std::uint8_t>(triple_index(p.apply(triple_at(t, n)), n)));
    perms_.push_back(std::move(p));
  } while (std::next_permutation(image.begin(), image.end()));
}

const SymmetricGroupAction& SymmetricGroupAction::get(int n) {
  check_dimension(n);
  static std::array<std::once_flag, kMaxDimension + 1> flags;
  static std::array<std::unique_ptr<SymmetricGroupAction>, kMaxDimension + 1> cache;
  auto slot = static_cast<std::size_t>(n);
  std::call_once(flags[slot], [&] { cache[slot].reset(new SymmetricGroupAction(n)); });
  return *cache[slot];
}

TripleSet::Mask SymmetricGroupAction::apply(std::size_t g, TripleSet::Mask mask) const {
  const std::uint8_t* row = table_.data() + g * static_cast<std::size_t>(triples_);
  TripleSet::Mask out = 0;
  while (mask) {
    out |= TripleSet::Mask{1} << row[std::countr_zero(mask)];
    mask &= mask - 1;
  }
  return out;
}

}  // namespace qpts

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace qpts {

/// Largest ambient dimension n supported by the bitset triple sets
/// (C(8,3) = 56 triples fit in a 64-bit word).
inline constexpr int kMaxDimension = 7;

inline constexpr std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline int pair_count(int n) { return static_cast<int>(binomial(n + 1, 2)); }
inline int triple_count(int n) { return static_cast<int>(binomial(n + 1, 3)); }

void check_dimension(int n);

/// Ordered index triple i < j < k.
struct Triple {
  int i = 0, j = 0, k = 0;

  Triple() = default;
  Triple(int a, int b, int c);

  /// Sorts three distinct indices.
  static Triple sorted(int a, int b, int c);

  bool contains(int v) const { return v == i || v == j || v == k; }
  std::array<int, 3> indices() const { return {i, j, k}; }
  std::string to_string() const;

  auto operator<=>(const Triple&) const = default;
};

/// Lexicographic position of a pair i < j among the pairs of {0..n}.
int pair_index(int i, int j, int n);
std::pair<int, int> pair_at(int index, int n);

/// Lexicographic position of a triple among the triples of {0..n}.
int triple_index(const Triple& t, int n);
const Triple& triple_at(int index, int n);
/// All triples of {0..n} in lexicographic order.
std::span<const Triple> all_triple_list(int n);

/// Set of triples of {0..n}, stored as a bitmask over lexicographic indices.
class TripleSet {
 public:
  using Mask = std::uint64_t;

  TripleSet() = default;
  explicit TripleSet(int n, Mask mask = 0);
  TripleSet(int n, std::initializer_list<Triple> triples);
  TripleSet(int n, std::span<const Triple> triples);

  static TripleSet all(int n);
  static TripleSet none(int n) { return TripleSet(n); }

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }

  bool contains(const Triple& t) const;
  void insert(const Triple& t);
  void erase(const Triple& t);

  std::vector<Triple> to_vector() const;

  TripleSet complement() const;
  bool is_subset_of(const TripleSet& other) const;
  TripleSet operator|(const TripleSet& other) const;
  TripleSet operator&(const TripleSet& other) const;
  TripleSet operator-(const TripleSet& other) const;

  bool operator==(const TripleSet& other) const = default;
  /// Lexicographic comparison of the sorted member lists.
  std::strong_ordering operator<=>(const TripleSet& other) const;

  std::string to_string() const;

  class const_iterator {
   public:
    using value_type = Triple;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;
    using reference = const Triple&;
    using pointer = const Triple*;

    const_iterator() = default;
    const_iterator(int n, Mask rest) : n_(n), rest_(rest) {}
    reference operator*() const;
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return rest_ == o.rest_; }

   private:
    int n_ = 0;
    Mask rest_ = 0;
  };

  const_iterator begin() const { return {n_, mask_}; }
  const_iterator end() const { return {n_, 0}; }

 private:
  void check_same_n(const TripleSet& other) const;

  int n_ = 0;
  Mask mask_ = 0;
};

/// Lexicographic order on sorted lists, evaluated directly on two masks.
bool mask_lex_less(TripleSet::Mask a, TripleSet::Mask b);

/// Permutation of {0..n}; `image[v]` is where v goes.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(image_.size()) - 1; }
  int operator()(int v) const { return image_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  Triple apply(const Triple& t) const;
  TripleSet apply(const TripleSet& s) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// Every permutation of {0..n} with its action on triple indices, cached per n.
class SymmetricGroupAction {
 public:
  static const SymmetricGroupAction& get(int n);

  int n() const { return n_; }
  std::size_t order() const { return perms_.size(); }
  const Permutation& permutation(std::size_t g) const { return perms_[g]; }
  TripleSet::Mask apply(std::size_t g, TripleSet::Mask mask) const;

 private:
  explicit SymmetricGroupAction(int n);

  int n_;
  int triples_;
  std::vector<Permutation> perms_;
  std::vector<std::uint8_t> table_;  // perms x triples -> triple index
};

}  // namespace qpts

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpts {

/// Thrown when two scalars over incompatible generator tables are combined.
class TableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named free generators plus the order m of one distinguished root of unity.
///
/// Tables only ever grow by appending names, so a scalar written over a table
/// is also valid over every extension of it. Two tables are compatible when
/// they share the torsion modulus and one name list is a prefix of the other.
class GeneratorTable {
 public:
  explicit GeneratorTable(std::vector<std::string> names = {},
                          std::int64_t torsion_modulus = 2);

  const std::vector<std::string>& names() const { return names_; }
  std::int64_t torsion_modulus() const { return modulus_; }
  std::size_t size() const { return names_.size(); }

  /// Index of a generator, or -1.
  std::ptrdiff_t find(const std::string& name) const;

  bool extends(const GeneratorTable& other) const;
  bool compatible(const GeneratorTable& other) const {
    return extends(other) || other.extends(*this);
  }

  bool operator==(const GeneratorTable& other) const = default;

 private:
  std::vector<std::string> names_;
  std::int64_t modulus_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

TablePtr make_table(std::vector<std::string> names = {},
                    std::int64_t torsion_modulus = 2);

/// Appends fresh sequentially named generators ("g1", "g2", ...) to a table.
///
/// Every call returns the index of the new generator; `table()` is the current
/// extension and stays compatible with every table handed out earlier.
class GeneratorSupply {
 public:
  explicit GeneratorSupply(TablePtr base, std::string prefix = "g");

  std::size_t fresh();
  const TablePtr& table() const { return table_; }

 private:
  TablePtr table_;
  std::string prefix_;
  std::size_t counter_ = 0;
};

/// Element of the group Z^names x Z/m, written multiplicatively.
///
/// The exponent map never stores zeros, so structural equality is group
/// equality. The torsion part denotes w^t for the distinguished w of order m.
class GroupScalar {
 public:
  using Exponents = std::map<std::size_t, std::int64_t>;

  explicit GroupScalar(TablePtr table);
  GroupScalar(TablePtr table, Exponents exponents, std::int64_t torsion = 0);

  static GroupScalar one(TablePtr table) { return GroupScalar(std::move(table)); }
  static GroupScalar generator(TablePtr table, std::size_t index,
                               std::int64_t power = 1);
  static GroupScalar root_of_unity(TablePtr table, std::int64_t power = 1);

  const TablePtr& table() const { return table_; }
  const Exponents& exponents() const { return exponents_; }
  std::int64_t torsion() const { return torsion_; }
  std::int64_t exponent(std::size_t index) const;

  bool is_one() const { return exponents_.empty() && torsion_ == 0; }
  bool is_torsion() const { return exponents_.empty(); }

  GroupScalar inverse() const;
  GroupScalar pow(std::int64_t k) const;

  /// Same element viewed over an extension of the current table.
  GroupScalar rebased(const TablePtr& wider) const;

  friend GroupScalar operator*(const GroupScalar& a, const GroupScalar& b);
  friend GroupScalar operator/(const GroupScalar& a, const GroupScalar& b);
  GroupScalar& operator*=(const GroupScalar& b) { return *this = *this * b; }

  /// Compares by generator name, so scalars over unrelated tables never
  /// alias through matching indices.
  friend bool operator==(const GroupScalar& a, const GroupScalar& b);

  /// Compact text: "a*b^-1*w", or "1" for the identity.
  std::string to_string() const;

 private:
  TablePtr table_;
  Exponents exponents_;
  std::int64_t torsion_ = 0;
};

GroupScalar scalar_mul(const GroupScalar& a, const GroupScalar& b);

/// Parses the compact form "a*b^-1*w^3". "1" is the identity and "-1" is
/// w^{m/2} for even m. The name "w" is reserved for the torsion generator.
GroupScalar parse_scalar(const std::string& text, const TablePtr& table);

inline constexpr const char* kTorsionName = "w";

}  // namespace qpts

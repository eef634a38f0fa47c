#include "qpts/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qpts {

namespace {

std::int64_t reduce_mod(std::int64_t t, std::int64_t m) {
  std::int64_t r = t % m;
  return r < 0 ? r + m : r;
}

const TablePtr& wider_of(const TablePtr& a, const TablePtr& b) {
  if (a == b || a->extends(*b)) return a;
  if (b->extends(*a)) return b;
  throw TableMismatch("scalars over incompatible generator tables");
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::int64_t parse_int(const std::string& s, const std::string& context) {
  std::int64_t value = 0;
  std::string t = trim(s);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("bad exponent '" + s + "' in '" + context + "'");
  return value;
}

}  // namespace

GeneratorTable::GeneratorTable(std::vector<std::string> names,
                               std::int64_t torsion_modulus)
    : names_(std::move(names)), modulus_(torsion_modulus) {
  if (modulus_ < 1) throw std::invalid_argument("torsion modulus must be >= 1");
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate generator name");
  for (const auto& name : names_) {
    if (name.empty()) throw std::invalid_argument("empty generator name");
    if (name == kTorsionName)
      throw std::invalid_argument("generator name 'w' is reserved for torsion");
  }
}

std::ptrdiff_t GeneratorTable::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : it - names_.begin();
}

bool GeneratorTable::extends(const GeneratorTable& other) const {
  return modulus_ == other.modulus_ && names_.size() >= other.names_.size() &&
         std::equal(other.names_.begin(), other.names_.end(), names_.begin());
}

TablePtr make_table(std::vector<std::string> names, std::int64_t torsion_modulus) {
  return std::make_shared<const GeneratorTable>(std::move(names), torsion_modulus);
}

GeneratorSupply::GeneratorSupply(TablePtr base, std::string prefix)
    : table_(std::move(base)), prefix_(std::move(prefix)) {}

std::size_t GeneratorSupply::fresh() {
  std::vector<std::string> names = table_->names();
  std::string name;
  do {
    name = prefix_ + std::to_string(++counter_);
  } while (table_->find(name) >= 0);
  names.push_back(name);
  table_ = make_table(std::move(names), table_->torsion_modulus());
  return table_->size() - 1;
}

GroupScalar::GroupScalar(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("null generator table");
}

GroupScalar::GroupScalar(TablePtr table, Exponents exponents, std::int64_t torsion)
    : table_(std::move(table)), exponents_(std::move(exponents)) {
  if (!table_) throw std::invalid_argument("null generator table");
  std::erase_if(exponents_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [index, power] : exponents_)
    if (index >= table_->size())
      throw std::out_of_range("generator index outside its table");
  torsion_ = reduce_mod(torsion, table_->torsion_modulus());
}

GroupScalar GroupScalar::generator(TablePtr table, std::size_t index,
                                   std::int64_t power) {
  return GroupScalar(std::move(table), {{index, power}}, 0);
}

GroupScalar GroupScalar::root_of_unity(TablePtr table, std::int64_t power) {
  return GroupScalar(std::move(table), {}, power);
}

std::int64_t GroupScalar::exponent(std::size_t index) const {
  auto it = exponents_.find(index);
  return it == exponents_.end() ? 0 : it->second;
}

GroupScalar GroupScalar::inverse() const { return pow(-1); }

GroupScalar GroupScalar::pow(std::int64_t k) const {
  Exponents e;
  for (const auto& [index, power] : exponents_) e[index] = power * k;
  return GroupScalar(table_, std::move(e), torsion_ * k);
}

GroupScalar GroupScalar::rebased(const TablePtr& wider) const {
  if (!wider->extends(*table_))
    throw TableMismatch("target table does not extend the scalar's table");
  GroupScalar copy = *this;
  copy.table_ = wider;
  return copy;
}

GroupScalar operator*(const GroupScalar& a, const GroupScalar& b) {
  const TablePtr& table = wider_of(a.table_, b.table_);
  GroupScalar::Exponents e = a.exponents_;
  for (const auto& [index, power] : b.exponents_) e[index] += power;
  return GroupScalar(table, std::move(e), a.torsion_ + b.torsion_);
}

GroupScalar operator/(const GroupScalar& a, const GroupScalar& b) {
  return a * b.inverse();
}

bool operator==(const GroupScalar& a, const GroupScalar& b) {
  if (a.table_->torsion_modulus() != b.table_->torsion_modulus()) return false;
  if (a.torsion_ != b.torsion_) return false;
  if (a.table_ == b.table_ || a.table_->compatible(*b.table_))
    return a.exponents_ == b.exponents_;
  if (a.exponents_.size() != b.exponents_.size()) return false;
  std::map<std::string, std::int64_t> named;
  for (const auto& [index, power] : a.exponents_)
    named[a.table_->names()[index]] = power;
  for (const auto& [index, power] : b.exponents_) {
    auto it = named.find(b.table_->names()[index]);
    if (it == named.end() || it->second != power) return false;
  }
  return true;
}

std::string GroupScalar::to_string() const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  auto factor = [&](const std::string& name, std::int64_t power) {
    if (!first) out << '*';
    first = false;
    out << name;
    if (power != 1) out << '^' << power;
  };
  for (const auto& [index, power] : exponents_) factor(table_->names()[index], power);
  if (torsion_ != 0) factor(kTorsionName, torsion_);
  return out.str();
}

GroupScalar scalar_mul(const GroupScalar& a, const GroupScalar& b) { return a * b; }

GroupScalar parse_scalar(const std::string& text, const TablePtr& table) {
  std::string body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty scalar");
  if (body == "1") return GroupScalar::one(table);
  if (body == "-1") {
    std::int64_t m = table->torsion_modulus();
    if (m % 2 != 0)
      throw std::invalid_argument("-1 needs an even torsion modulus");
    return GroupScalar::root_of_unity(table, m / 2);
  }
  GroupScalar result = GroupScalar::one(table);
  std::stringstream stream(body);
  std::string factor;
  while (std::getline(stream, factor, '*')) {
    factor = trim(factor);
    if (factor.empty()) throw std::invalid_argument("empty factor in '" + text + "'");
    std::int64_t power = 1;
    auto caret = factor.find('^');
    std::string name = trim(factor.substr(0, caret));
    if (caret != std::string::npos) power = parse_int(factor.substr(caret + 1), text);
    if (name == "1") continue;
    if (name == kTorsionName) {
      result *= GroupScalar::root_of_unity(table, power);
      continue;
    }
    std::ptrdiff_t index = table->find(name);
    if (index < 0) throw std::invalid_argument("unknown generator '" + name + "'");
    result *= GroupScalar::generator(table, static_cast<std::size_t>(index), power);
  }
  return result;
}

}  // namespace qpts

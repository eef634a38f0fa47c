#include "qpts/qmatrix.hpp"

#include <stdexcept>

namespace qpts {

namespace {

void check_index(int v, int n) {
  if (v < 0 || v > n)
    throw std::out_of_range("matrix index " + std::to_string(v) + " outside {0.." +
                            std::to_string(n) + "}");
}

Rational rational_pow(const Rational& base, std::int64_t e) {
  Rational result = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1U) result *= b;
    b *= b;
    k >>= 1U;
  }
  return result;
}

}  // namespace

QMatrix::QMatrix(int n, TablePtr table, std::vector<GroupScalar> upper)
    : n_(n), table_(std::move(table)), upper_(std::move(upper)) {
  check_dimension(n);
  if (!table_) throw std::invalid_argument("null generator table");
  if (upper_.size() != static_cast<std::size_t>(pair_count(n)))
    throw std::invalid_argument("upper triangle needs C(n+1,2) entries");
  for (const auto& s : upper_) {
    if (s.table()->extends(*table_))
      table_ = s.table();
    else if (!table_->extends(*s.table()))
      throw TableMismatch("matrix entry over an incompatible generator table");
  }
  for (auto& s : upper_) s = s.rebased(table_);
}

QMatrix QMatrix::ones(int n, TablePtr table) {
  std::vector<GroupScalar> upper(static_cast<std::size_t>(pair_count(n)), GroupScalar::one(table));
  return QMatrix(n, std::move(table), std::move(upper));
}

GroupScalar QMatrix::entry(int i, int j) const {
  check_index(i, n_);
  check_index(j, n_);
  if (i == j) return GroupScalar::one(table_);
  if (i < j) return upper_[static_cast<std::size_t>(pair_index(i, j, n_))];
  return upper_[static_cast<std::size_t>(pair_index(j, i, n_))].inverse();
}

QMatrix QMatrix::with_entry(int i, int j, const GroupScalar& value) const {
  check_index(i, n_);
  check_index(j, n_);
  if (i == j) throw std::invalid_argument("diagonal entries are fixed to 1");
  std::vector<GroupScalar> upper = upper_;
  upper[static_cast<std::size_t>(pair_index(i, j, n_))] = i < j ? value : value.inverse();
  return QMatrix(n_, table_, std::move(upper));
}

QMatrix QMatrix::relabeled(const Permutation& p) const {
  if (p.n() != n_) throw std::invalid_argument("permutation size differs from n+1");
  std::vector<GroupScalar> upper(upper_.size(), GroupScalar::one(table_));
  Permutation inv = p.inverse();
  for (int a = 0; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      upper[static_cast<std::size_t>(pair_index(a, b, n_))] = entry(inv(a), inv(b));
  return QMatrix(n_, table_, std::move(upper));
}

QMatrix QMatrix::divided_by(const QMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrices of different size");
  std::vector<GroupScalar> upper;
  upper.reserve(upper_.size());
  for (std::size_t p = 0; p < upper_.size(); ++p) upper.push_back(upper_[p] / other.upper_[p]);
  return QMatrix(n_, table_, std::move(upper));
}

bool QMatrix::operator==(const QMatrix& other) const {
  return n_ == other.n_ && upper_ == other.upper_;
}

GroupScalar q_entry(const QMatrix& q, int i, int j) { return q.entry(i, j); }

GroupScalar b_scalar(const QMatrix& q, const Triple& t) {
  if (t.k > q.n()) throw std::out_of_range("triple outside matrix range");
  return q.entry(t.i, t.j) * q.entry(t.j, t.k) / q.entry(t.i, t.k);
}

RationalMatrix instantiate(const QMatrix& q, const std::map<std::string, Rational>& assignment) {
  const auto& table = *q.table();
  if (table.torsion_modulus() > 2)
    throw std::invalid_argument("torsion modulus > 2 has no rational image");
  std::vector<Rational> values;
  for (const auto& name : table.names()) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw std::invalid_argument("no value assigned to generator '" + name + "'");
    if (it->second == 0)
      throw std::invalid_argument("generator '" + name + "' assigned zero");
    values.push_back(it->second);
  }
  auto evaluate = [&](const GroupScalar& s) {
    Rational v = s.torsion() ? Rational(-1) : Rational(1);
    for (const auto& [index, power] : s.exponents()) v *= rational_pow(values[index], power);
    return v;
  };
  int size = q.n() + 1;
  RationalMatrix out(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = evaluate(q.entry(i, j));
  return out;
}

}  // namespace qpts

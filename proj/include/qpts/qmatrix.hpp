#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpts/scalar.hpp"
#include "qpts/triples.hpp"

namespace qpts {

using Rational = boost::multiprecision::cpp_rational;

/// Defining matrix of a quantum polynomial algebra on n+1 variables.
///
/// Only the strict upper triangle is stored; q_ii = 1 and q_ji = q_ij^{-1}
/// are supplied by `entry`. All stored scalars are rebased onto `table()`.
class QMatrix {
 public:
  /// Upper entries in lexicographic pair order (see `pair_index`).
  QMatrix(int n, TablePtr table, std::vector<GroupScalar> upper);

  /// Every entry equal to 1.
  static QMatrix ones(int n, TablePtr table);

  int n() const { return n_; }
  const TablePtr& table() const { return table_; }
  const std::vector<GroupScalar>& upper() const { return upper_; }

  GroupScalar entry(int i, int j) const;
  QMatrix with_entry(int i, int j, const GroupScalar& value) const;

  /// Relabels variables: the result satisfies R(p(i), p(j)) = Q(i, j).
  QMatrix relabeled(const Permutation& p) const;

  /// Entrywise quotient, used to compare matrices up to a common factor.
  QMatrix divided_by(const QMatrix& other) const;

  bool operator==(const QMatrix& other) const;

 private:
  int n_;
  TablePtr table_;
  std::vector<GroupScalar> upper_;
};

GroupScalar q_entry(const QMatrix& q, int i, int j);

/// q_ij q_jk q_ik^{-1}; equals 1 exactly when Q(i,j,k) has rank one.
GroupScalar b_scalar(const QMatrix& q, const Triple& t);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Substitutes nonzero rationals for the generators; torsion w maps to -1.
/// Requires torsion modulus 1 or 2 and a value for every generator.
RationalMatrix instantiate(const QMatrix& q, const std::map<std::string, Rational>& assignment);

}  // namespace qpts

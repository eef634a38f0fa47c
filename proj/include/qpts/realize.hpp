#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qpts/collections.hpp"
#include "qpts/qmatrix.hpp"

namespace qpts {

/// How a realization was obtained.
enum class RealizationMethod {
  kRankOne,     // empty collection: a rank-one matrix
  kInductive,   // the dense-pair induction on n
  kStoredA,     // relabeled stored matrix for the first non-dense class
  kStoredB,     // relabeled stored matrix for the second non-dense class
  kLattice,     // generic point of the closed good set (cross-check route)
  kNone,        // nothing produced a matching matrix
};

const char* to_string(RealizationMethod method);

struct RealizationResult {
  QMatrix matrix = QMatrix::ones(0, make_table());
  Collection achieved;   // complement of good_triples(matrix)
  Collection target;
  bool success = false;  // achieved == target
  RealizationMethod method = RealizationMethod::kNone;
  std::string diagnostic;
};

/// The collection is not adequate, so no algebra has it as C_A.
class NotAdequate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A verification step found good triples different from the requested ones.
class RealizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds a matrix Q whose non-rank-one principal 3x3 minors are exactly
/// the members of `c`. Dense collections go through the induction on n:
/// move a line P(0,n) lying in >= n-2 members to the ends, realize the part
/// on variables 0..n-1, attach variable n by solving the rank-one conditions
/// of the triples (i,j,n) with fresh generators, then fix q_0n. Non-dense
/// classes for n = 5 use the two stored matrices. Every result is re-checked
/// through good_triples; failures come back with success = false.
/// Throws NotAdequate for inadequate input and std::invalid_argument for n > 5.
RealizationResult realize(const Collection& c);

/// Cross-check route: if the complement of `c` is closed, the generic point
/// of its sub-torus (with a torsion coset when needed).
RealizationResult realize_via_lattice(const Collection& c);

struct ClassRealization {
  Collection representative;
  std::size_t orbit_size = 0;
  bool dense = false;
  RealizationResult result;
};

struct RealizationSummary {
  int n = 0;
  std::vector<ClassRealization> classes;
  std::size_t successes = 0;
};

/// Runs `realize` on every orbit representative of adequate collections.
RealizationSummary realize_all(int n, unsigned threads = 1);

/// Point of V(J) whose good set is exactly the closed set J: generic on the
/// identity component, moved to a torsion coset when the identity component
/// has extra good triples. Throws RealizationFailure if no coset works.
QMatrix generic_point_of_node(const TripleSet& closed_set);

/// Realizes collection_a(): entries x in rows 0,1 against columns 4,5.
QMatrix matrix_for_collection_a();
/// Realizes collection_b(): a +-1 matrix.
QMatrix matrix_for_collection_b();

}  // namespace qpts

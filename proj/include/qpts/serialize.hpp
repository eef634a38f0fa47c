#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qpts/collections.hpp"
#include "qpts/degeneration.hpp"
#include "qpts/point_variety.hpp"
#include "qpts/qmatrix.hpp"
#include "qpts/realize.hpp"

namespace qpts {

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// Matrix document:
///   {"n": 3, "torsion_modulus": 2, "generators": ["a", ...],
///    "upper": {"0,1": {"torsion": 0, "exponents": {"a": 1}}, "0,3": "a*c", ...}}
/// Entries may be objects or compact strings; absent entries are 1.
QMatrix matrix_from_json(const Json& doc);
Json matrix_to_json(const QMatrix& q);

/// Collection document: {"n": 3, "triples": [[0,1,3], [0,2,3]]}.
Collection collection_from_json(const Json& doc);
Json collection_to_json(const Collection& c);

Json triples_to_json(const TripleSet& s);
Json configuration_to_json(const Configuration& config);

/// One catalog line: {"triples": [...], "orbit_size": k, "dense": b}.
Json orbit_to_json(const OrbitEntry& entry);
Json node_to_json(const DegNode& node);
Json graph_to_json(const DegGraph& graph);
Json realization_to_json(const RealizationResult& r);
Json forced_to_json(const ForcedSolutions& f);

/// Graphviz digraph; nodes captioned "<name> (type)" in (label, set) order.
std::string graph_to_dot(const DegGraph& graph);

std::string type_string(const std::vector<int>& type);

Json read_json_file(const std::string& path);

}  // namespace qpts

#include "qpts/serialize.hpp"

#include <fstream>
#include <sstream>

namespace qpts {

namespace {

template <typename T>
T require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

std::pair<int, int> parse_pair_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError("upper key '" + key + "' is not 'i,j'");
  try {
    std::size_t used_i = 0, used_j = 0;
    std::string left = key.substr(0, comma), right = key.substr(comma + 1);
    int i = std::stoi(left, &used_i);
    int j = std::stoi(right, &used_j);
    if (used_i != left.size() || used_j != right.size()) throw std::invalid_argument(key);
    return {i, j};
  } catch (const std::logic_error&) {
    throw ParseError("upper key '" + key + "' is not 'i,j'");
  }
}

GroupScalar scalar_from_json(const Json& value, const TablePtr& table) {
  try {
    if (value.is_string()) return parse_scalar(value.get<std::string>(), table);
    if (value.is_number_integer()) {
      auto v = value.get<std::int64_t>();
      if (v == 1) return GroupScalar::one(table);
      if (v == -1) return parse_scalar("-1", table);
      throw ParseError("numeric entries must be 1 or -1");
    }
    if (!value.is_object()) throw ParseError("matrix entry must be an object or string");
    GroupScalar::Exponents e;
    if (value.contains("exponents")) {
      for (const auto& [name, power] : value.at("exponents").items()) {
        std::ptrdiff_t index = table->find(name);
        if (index < 0) throw ParseError("unknown generator '" + name + "'");
        e[static_cast<std::size_t>(index)] += power.get<std::int64_t>();
      }
    }
    std::int64_t torsion = value.contains("torsion") ? value.at("torsion").get<std::int64_t>() : 0;
    return GroupScalar(table, std::move(e), torsion);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad matrix entry: ") + e.what());
  }
}

Json int_rows(const std::vector<Triple>& triples) {
  Json out = Json::array();
  for (const auto& t : triples) out.push_back({t.i, t.j, t.k});
  return out;
}

}  // namespace

QMatrix matrix_from_json(const Json& doc) {
  int n = require<int>(doc, "n");
  if (n < 1 || n > kMaxDimension) throw ParseError("n must lie in [1, " + std::to_string(kMaxDimension) + "]");
  std::int64_t modulus = doc.contains("torsion_modulus") ? require<std::int64_t>(doc, "torsion_modulus") : 2;
  std::vector<std::string> names =
      doc.contains("generators") ? require<std::vector<std::string>>(doc, "generators") : std::vector<std::string>{};
  TablePtr table;
  try {
    table = make_table(std::move(names), modulus);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::vector<GroupScalar> upper(static_cast<std::size_t>(pair_count(n)), GroupScalar::one(table));
  std::vector<bool> given(upper.size(), false);
  if (doc.contains("upper")) {
    const Json& entries = doc.at("upper");
    if (!entries.is_object()) throw ParseError("'upper' must be an object");
    for (const auto& [key, value] : entries.items()) {
      auto [i, j] = parse_pair_key(key);
      if (i < 0 || j < 0 || i > n || j > n || i == j) throw ParseError("upper key '" + key + "' out of range");
      auto slot = static_cast<std::size_t>(pair_index(i, j, n));
      if (given[slot]) throw ParseError("entry " + key + " given twice");
      given[slot] = true;
      GroupScalar s = scalar_from_json(value, table);
      upper[slot] = i < j ? s : s.inverse();
    }
  }
  return QMatrix(n, table, std::move(upper));
}

Json matrix_to_json(const QMatrix& q) {
  Json doc;
  doc["n"] = q.n();
  doc["torsion_modulus"] = q.table()->torsion_modulus();
  doc["generators"] = q.table()->names();
  Json upper = Json::object();
  for (int i = 0; i <= q.n(); ++i)
    for (int j = i + 1; j <= q.n(); ++j) {
      GroupScalar s = q.entry(i, j);
      Json exps = Json::object();
      for (const auto& [index, power] : s.exponents()) exps[q.table()->names()[index]] = power;
      upper[std::to_string(i) + "," + std::to_string(j)] = {{"torsion", s.torsion()}, {"exponents", exps}};
    }
  doc["upper"] = std::move(upper);
  return doc;
}

Collection collection_from_json(const Json& doc) {
  int n = require<int>(doc, "n");
  if (n < 2 || n > kMaxDimension) throw ParseError("n must lie in [2, " + std::to_string(kMaxDimension) + "]");
  auto rows = require<std::vector<std::vector<int>>>(doc, "triples");
  Collection c(n);
  for (const auto& row : rows) {
    if (row.size() != 3) throw ParseError("each triple needs three indices");
    for (int v : row)
      if (v < 0 || v > n) throw ParseError("triple index outside {0..n}");
    if (row[0] == row[1] || row[0] == row[2] || row[1] == row[2]) throw ParseError("triple indices must be distinct");
    c.insert(Triple::sorted(row[0], row[1], row[2]));
  }
  return c;
}

Json triples_to_json(const TripleSet& s) { return int_rows(s.to_vector()); }

Json collection_to_json(const Collection& c) { return {{"n", c.n()}, {"triples", triples_to_json(c)}}; }

Json configuration_to_json(const Configuration& config) {
  Json comps = Json::array();
  for (const auto& f : config.components) comps.push_back(f.indices());
  return {{"components", comps}, {"type", config.type}};
}

Json orbit_to_json(const OrbitEntry& entry) {
  return {{"triples", triples_to_json(entry.representative)},
          {"orbit_size", entry.orbit_size},
          {"dense", entry.dense}};
}

Json node_to_json(const DegNode& node) {
  return {{"name", node.name},
          {"label", node.label},
          {"type", node.type},
          {"orbit_size", node.orbit_size},
          {"closed_set", triples_to_json(node.closed_set)}};
}

Json graph_to_json(const DegGraph& graph) {
  Json nodes = Json::array();
  for (const auto& node : graph.nodes) nodes.push_back(node_to_json(node));
  Json arrows = Json::array();
  for (const auto& [from, to] : graph.arrows) arrows.push_back({from, to});
  return {{"n", graph.n}, {"nodes", nodes}, {"arrows", arrows}};
}

Json realization_to_json(const RealizationResult& r) {
  return {{"success", r.success},
          {"method", to_string(r.method)},
          {"target", triples_to_json(r.target)},
          {"achieved", triples_to_json(r.achieved)},
          {"diagnostic", r.diagnostic},
          {"matrix", matrix_to_json(r.matrix)}};
}

Json forced_to_json(const ForcedSolutions& f) {
  Json sols = Json::array();
  for (const auto& q : f.solutions) sols.push_back(matrix_to_json(q));
  return {{"n", f.n},
          {"dimension", f.dimension()},
          {"components", f.locus.component_count()},
          {"torsion_factors", f.locus.torsion},
          {"solutions", sols}};
}

std::string type_string(const std::vector<int>& type) {
  std::string out = "(";
  for (std::size_t d = 0; d < type.size(); ++d) out += (d ? "," : "") + std::to_string(type[d]);
  return out + ")";
}

std::string graph_to_dot(const DegGraph& graph) {
  std::ostringstream out;
  out << "digraph degeneration_n" << graph.n << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    const auto& node = graph.nodes[v];
    out << "  n" << v << " [label=\"" << node.name << " " << type_string(node.type) << "\"];\n";
  }
  for (const auto& [from, to] : graph.arrows) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace qpts

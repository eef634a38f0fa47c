#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qpts/char_lattice.hpp"
#include "qpts/collections.hpp"
#include "qpts/degeneration.hpp"
#include "qpts/point_variety.hpp"
#include "qpts/realize.hpp"
#include "qpts/serialize.hpp"

namespace {

using namespace qpts;

constexpr const char* kVersion = "1.0.0";

enum Exit : int {
  kOk = 0,
  kParse = 2,
  kInvariant = 3,
  kNotAdequate = 4,
  kRealizationFailed = 5,
};

// Usage problems detected after CLI11 parsing share the parse-error exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> argv;
  unsigned threads = 1;
  bool long_mode = false;
  std::string out;

  std::string pts_file;
  bool pts_json = false;

  int n = 0;
  bool adequate = false;
  bool nodes = false;

  std::string dot_file;
  std::string json_file;

  std::string realize_file;
  std::vector<int> class_spec;

  std::string forced_file;
  std::vector<std::string> pins;
  bool json_stdout = false;
};

std::string flat_string(const Flat& f) {
  std::string s = "P(";
  auto idx = f.indices();
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

// Sidecar describing how an output file was produced.
void write_manifest(const Options& opt, const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
  if (outputs.empty()) return;
  Json doc;
  doc["command"] = opt.argv;
  doc["inputs"] = inputs;
  doc["outputs"] = outputs;
  doc["determinism"] =
      "no random seed: enumeration order is fixed and fresh generators are numbered sequentially";
  doc["threads"] = opt.threads;
  doc["versions"] = {{"qpts", kVersion}, {"compiler", __VERSION__}, {"cplusplus", __cplusplus}};
  write_file(outputs.front() + ".manifest.json", doc.dump(2) + "\n");
}

void require_long(int n, const Options& opt, const char* what) {
  if (n == 5 && !opt.long_mode)
    throw UsageError(std::string(what) + " for n=5 exceeds the default budget; pass --long");
}

int cmd_pts(const Options& opt) {
  QMatrix q = matrix_from_json(read_json_file(opt.pts_file));
  TripleSet good = good_triples(q);
  Configuration config = components(good);
  std::vector<Triple> gens = ideal_generators(good);

  if (!is_adequate(good.complement()))
    throw InvariantViolation("complement of the good triples is not adequate");
  for (std::size_t a = 0; a < config.components.size(); ++a)
    for (std::size_t b = 0; b < config.components.size(); ++b)
      if (a != b && config.components[a].is_subset_of(config.components[b]))
        throw InvariantViolation("components are not pairwise incomparable");
  if (q.n() <= 6 && !monomial_variety_check(good))
    throw InvariantViolation("monomial ideal does not cut out the union of components");

  if (opt.pts_json) {
    Json doc{{"n", q.n()},
             {"good_triples", triples_to_json(good)},
             {"collection", triples_to_json(good.complement())}};
    doc.update(configuration_to_json(config));
    Json ideal = Json::array();
    for (const auto& t : gens) ideal.push_back({t.i, t.j, t.k});
    doc["ideal_generators"] = ideal;
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::cout << "good triples: " << good.to_string() << "\n";
  if (config.is_whole_space()) {
    std::cout << "point variety = P^" << q.n() << "\n";
  } else {
    std::cout << "components:";
    for (const auto& f : config.components) std::cout << " " << flat_string(f);
    std::cout << "\n";
  }
  std::cout << "type: " << type_string(config.type) << "\n";
  std::cout << "ideal generators:";
  if (gens.empty()) std::cout << " none";
  for (const auto& t : gens) std::cout << " u" << t.i << "u" << t.j << "u" << t.k;
  std::cout << "\n";
  return kOk;
}

int cmd_enumerate(const Options& opt) {
  if (opt.n < 1 || opt.n > 5) throw UsageError("enumerate supports 1 <= n <= 5");
  std::ostringstream lines;
  if (opt.adequate) {
    if (opt.n < 2) throw UsageError("adequate collections need n >= 2");
    OrbitCatalog catalog = enumerate_adequate(opt.n, opt.threads);
    for (const auto& entry : catalog.orbits) lines << orbit_to_json(entry).dump() << "\n";
    std::cout << "total=" << catalog.total << " orbits=" << catalog.orbits.size() << "\n";
  } else {
    require_long(opt.n, opt, "node enumeration");
    auto nodes = enumerate_nodes(opt.n);
    for (const auto& node : nodes) lines << node_to_json(node).dump() << "\n";
    std::cout << "nodes=" << nodes.size() << "\n";
  }
  if (!opt.out.empty()) {
    write_file(opt.out, lines.str());
    write_manifest(opt, {}, {opt.out});
  }
  return kOk;
}

int cmd_graph(const Options& opt) {
  if (opt.n < 1 || opt.n > 5) throw UsageError("graph supports 1 <= n <= 5");
  require_long(opt.n, opt, "the degeneration graph");
  DegGraph graph = build_graph(opt.n);
  std::string dot = graph_to_dot(graph);
  std::vector<std::string> outputs;
  if (!opt.dot_file.empty()) {
    write_file(opt.dot_file, dot);
    outputs.push_back(opt.dot_file);
  }
  if (!opt.json_file.empty()) {
    write_file(opt.json_file, graph_to_json(graph).dump(2) + "\n");
    outputs.push_back(opt.json_file);
  }
  if (outputs.empty()) std::cout << dot;
  std::cout << "nodes=" << graph.nodes.size() << " arrows=" << graph.arrows.size() << "\n";
  write_manifest(opt, {}, outputs);
  return kOk;
}

int cmd_realize(const Options& opt) {
  Collection target;
  std::vector<std::string> inputs;
  if (!opt.class_spec.empty()) {
    if (!opt.realize_file.empty()) throw UsageError("give either a collection file or --class, not both");
    int n = opt.class_spec[0];
    if (n < 2 || n > 5) throw UsageError("--class needs 2 <= n <= 5");
    OrbitCatalog catalog = enumerate_adequate(n, opt.threads);
    if (opt.class_spec[1] < 0 || static_cast<std::size_t>(opt.class_spec[1]) >= catalog.orbits.size())
      throw UsageError("--class index out of range (0.." + std::to_string(catalog.orbits.size() - 1) + ")");
    target = catalog.orbits[static_cast<std::size_t>(opt.class_spec[1])].representative;
  } else if (!opt.realize_file.empty()) {
    target = collection_from_json(read_json_file(opt.realize_file));
    inputs.push_back(opt.realize_file);
  } else {
    throw UsageError("realize needs a collection file or --class n index");
  }

  RealizationResult r = realize(target);
  Json doc = realization_to_json(r);
  std::cout << doc.dump(2) << "\n";
  if (!opt.out.empty()) {
    write_file(opt.out, matrix_to_json(r.matrix).dump(2) + "\n");
    write_manifest(opt, inputs, {opt.out});
  }
  if (!r.success) {
    std::cerr << "realization failed: " << r.diagnostic << "\n";
    return kRealizationFailed;
  }
  std::cerr << "verified: achieved == target (" << to_string(r.method) << ")\n";
  return kOk;
}

int cmd_sinks(const Options& opt) {
  if (opt.n < 1 || opt.n > 5) throw UsageError("sinks supports 1 <= n <= 5");
  require_long(opt.n, opt, "sink search");
  auto found = sinks(opt.n);
  if (opt.json_stdout) {
    Json arr = Json::array();
    for (const auto& node : found) arr.push_back(node_to_json(node));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& node : found)
      std::cout << node.name << " " << type_string(node.type) << " " << node.closed_set.to_string() << "\n";
  }
  std::cout << "sinks=" << found.size() << "\n";
  return kOk;
}

std::pair<int, int> parse_pin(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("pin '" + text + "' is not 'i,j'");
  try {
    std::size_t a = 0, b = 0;
    int i = std::stoi(text.substr(0, comma), &a);
    int j = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument(text);
    return {i, j};
  } catch (const std::logic_error&) {
    throw ParseError("pin '" + text + "' is not 'i,j'");
  }
}

int cmd_forced(const Options& opt) {
  TripleSet good = collection_from_json(read_json_file(opt.forced_file));
  std::vector<std::pair<int, int>> pins;
  for (const auto& p : opt.pins) pins.push_back(parse_pin(p));
  ForcedSolutions f = forced_solutions(good, pins);
  if (opt.json_stdout) {
    std::cout << forced_to_json(f).dump(2) << "\n";
  } else {
    std::cout << "dimension=" << f.dimension() << " components=" << f.locus.component_count() << "\n";
    for (std::size_t s = 0; s < f.solutions.size(); ++s) {
      std::cout << "solution " << s + 1 << ":";
      const QMatrix& q = f.solutions[s];
      for (int i = 0; i <= q.n(); ++i)
        for (int j = i + 1; j <= q.n(); ++j) {
          std::string v = q.entry(i, j).to_string();
          if (v != "1") std::cout << " q" << i << j << "=" << v;
        }
      std::cout << "\n";
    }
  }
  if (!opt.out.empty()) {
    write_file(opt.out, forced_to_json(f).dump(2) + "\n");
    write_manifest(opt, {opt.forced_file}, {opt.out});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.argv.assign(argv, argv + argc);
  opt.threads = std::max(1U, std::thread::hardware_concurrency());

  CLI::App app{"Point varieties of quantum polynomial algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1U, 256U));

  auto* pts = app.add_subcommand("pts", "point variety of a matrix file");
  pts->add_option("matrix", opt.pts_file, "matrix JSON")->required();
  pts->add_flag("--json", opt.pts_json, "JSON report");

  auto* enumerate = app.add_subcommand("enumerate", "catalog adequate collections or degeneration nodes");
  enumerate->add_option("n", opt.n)->required();
  auto* ade = enumerate->add_flag("--adequate", opt.adequate, "adequate collections up to symmetry");
  auto* nod = enumerate->add_flag("--nodes", opt.nodes, "closed triple sets up to symmetry");
  ade->excludes(nod);
  enumerate->add_option("--out", opt.out, "JSONL output");
  enumerate->add_flag("--long", opt.long_mode, "allow n=5 node enumeration");
  enumerate->add_option("--threads", opt.threads)->check(CLI::Range(1U, 256U));

  auto* graph = app.add_subcommand("graph", "degeneration graph");
  graph->add_option("n", opt.n)->required();
  graph->add_option("--dot", opt.dot_file, "DOT output file");
  graph->add_option("--json", opt.json_file, "JSON output file");
  graph->add_flag("--long", opt.long_mode, "allow n=5");

  auto* realize_cmd = app.add_subcommand("realize", "matrix realizing a collection");
  realize_cmd->add_option("collection", opt.realize_file, "collection JSON");
  realize_cmd->add_option("--class", opt.class_spec, "n index into the adequate catalog")->expected(2);
  realize_cmd->add_option("--out", opt.out, "matrix JSON output");
  realize_cmd->add_option("--threads", opt.threads)->check(CLI::Range(1U, 256U));

  auto* sinks_cmd = app.add_subcommand("sinks", "label-0 degeneration nodes");
  sinks_cmd->add_option("n", opt.n)->required();
  sinks_cmd->add_flag("--long", opt.long_mode, "allow n=5");
  sinks_cmd->add_flag("--json", opt.json_stdout, "JSON output");

  auto* forced = app.add_subcommand("forced", "solutions forced by good triples and pinned entries");
  forced->add_option("good", opt.forced_file, "good triples in collection format")->required();
  forced->add_option("--pin", opt.pins, "pinned pair i,j with q_ij = 1");
  forced->add_flag("--json", opt.json_stdout, "JSON output");
  forced->add_option("--out", opt.out, "JSON output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*pts) return cmd_pts(opt);
    if (*enumerate) {
      if (!opt.adequate && !opt.nodes) throw UsageError("enumerate needs --adequate or --nodes");
      return cmd_enumerate(opt);
    }
    if (*graph) return cmd_graph(opt);
    if (*realize_cmd) return cmd_realize(opt);
    if (*sinks_cmd) return cmd_sinks(opt);
    if (*forced) return cmd_forced(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kParse;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const NotAdequate& e) {
    std::cerr << "not adequate: " << e.what() << "\n";
    return kNotAdequate;
  } catch (const RealizationFailure& e) {
    std::cerr << "realization failed: " << e.what() << "\n";
    return kRealizationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}

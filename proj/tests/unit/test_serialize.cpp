#include <doctest.h>

#include "qpts/serialize.hpp"

using namespace qpts;

TEST_SUITE("serialize") {

TEST_CASE("matrix documents") {
  Json doc = Json::parse(R"({"n": 3, "generators": ["a", "c"],
      "upper": {"0,1": "a", "3,1": {"exponents": {"c": 1}}, "0,2": -1}})");
  QMatrix q = matrix_from_json(doc);
  CHECK(q.entry(0, 1).to_string() == "a");
  CHECK(q.entry(1, 3).to_string() == "c^-1");
  CHECK(q.entry(0, 2).to_string() == "w");
  CHECK(q.entry(2, 3).is_one());
  CHECK(matrix_from_json(matrix_to_json(q)) == q);
  CHECK(matrix_to_json(matrix_from_json(matrix_to_json(q))).dump() == matrix_to_json(q).dump());
}

TEST_CASE("malformed matrix documents") {
  const char* bad[] = {
      R"({})",
      R"({"n": 0})",
      R"({"n": 9})",
      R"({"n": 2, "upper": {"0,3": "1"}})",
      R"({"n": 2, "upper": {"0,0": "1"}})",
      R"({"n": 2, "upper": {"01": "1"}})",
      R"({"n": 2, "upper": {"0,1": "a"}})",
      R"({"n": 2, "upper": {"0,1": "1", "1,0": "1"}})",
      R"({"n": 2, "upper": {"0,1": 5}})",
      R"({"n": 2, "upper": {"0,1": [1]}})",
      R"({"n": 2, "generators": ["w"]})",
      R"({"n": 2, "upper": []})",
      R"({"n": "two"})",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(text)), ParseError);
  }
}

TEST_CASE("collection documents") {
  Collection c = collection_from_json(Json::parse(R"({"n": 3, "triples": [[3, 0, 1], [0, 2, 3]]})"));
  CHECK(c == Collection(3, {{0, 1, 3}, {0, 2, 3}}));
  CHECK(collection_to_json(c).dump() == R"({"n":3,"triples":[[0,1,3],[0,2,3]]})");
  for (const char* text : {R"({"n": 3})", R"({"n": 3, "triples": [[0, 1]]})",
                           R"({"n": 3, "triples": [[0, 1, 4]]})", R"({"n": 3, "triples": [[0, 1, 1]]})",
                           R"({"n": 1, "triples": []})"}) {
    INFO(text);
    CHECK_THROWS_AS(collection_from_json(Json::parse(text)), ParseError);
  }
}

TEST_CASE("graph output") {
  DegGraph g = build_graph(3);
  std::string dot = graph_to_dot(g);
  CHECK(dot.rfind("digraph degeneration_n3 {", 0) == 0);
  CHECK(dot.find("n3 [label=\"3 (0,0,6)\"];") != std::string::npos);
  CHECK(dot.find("n3 -> n2;") != std::string::npos);
  CHECK(graph_to_dot(build_graph(3)) == dot);
  Json j = graph_to_json(g);
  CHECK(j["nodes"].size() == 4);
  CHECK(j["arrows"].size() == 3);
  CHECK(type_string({0, 2, 1}) == "(0,2,1)");
}

TEST_CASE("unreadable files") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

}

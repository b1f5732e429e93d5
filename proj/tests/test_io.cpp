#include <doctest.h>

#include "hypercsf/chromatic.hpp"
#include "hypercsf/io.hpp"
#include "test_util.hpp"

using namespace hypercsf;

namespace {

std::string data(const std::string& name) {
  return io::read_file(std::string(TEST_DATA_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("hypergraph files parse with labels in file order") {
  const auto in = io::parse_hypergraph(data("eq1.json"));
  CHECK(in.h.vertex_count() == 4);
  CHECK(in.h.edge_count() == 2);
  CHECK(in.h.labels() == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(in.h.edge(0) == std::vector<int>{0, 1, 2});
  CHECK_FALSE(in.edge_order.has_value());
  CHECK_FALSE(in.cycles.has_value());
}

TEST_CASE("string labels and explicit cycles/order") {
  const std::string text = R"({
    "vertices": ["a", "b", "c", "d", "e"],
    "edges": [["a", "b", "c"], ["c", "d", "e"]],
    "edge_order": [1, 0],
    "cycles": [["a", "c", "b"], ["c", "d", "e"]]
  })";
  const auto in = io::parse_hypergraph(text);
  REQUIRE(in.edge_order.has_value());
  REQUIRE(in.cycles.has_value());
  const auto t = io::to_hypertree(in);
  CHECK(t.edge_order() == std::vector<int>{1, 0});
  // edge 0 = {a,b,c} sits at position 1 with cycle a -> c -> b -> a
  CHECK(t.cycle_next(1, 0) == 2);
  CHECK(t.cycle_next(1, 2) == 1);
  CHECK(t.cycle_next(1, 1) == 0);
}

TEST_CASE("parse rejections") {
  CHECK_THROWS_AS(io::parse_hypergraph(data("size1_edge.json")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::parse_hypergraph("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_hypergraph("{\"vertices\": [1]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      io::parse_hypergraph(
          R"({"vertices": [1, 2], "edges": [[1, 7]]})"),
      std::invalid_argument);
}

TEST_CASE("expansion serialization") {
  QSymF f(4);
  f.set(0b001, 2);
  f.set(0b111, -2);
  const std::string j = io::expansion_json(f);
  CHECK(j.find("\"degree\": 4") != std::string::npos);
  CHECK(j.find("\"basis\": \"F\"") != std::string::npos);
  CHECK(j.find("[1]") != std::string::npos);
  CHECK(j.find("-2") != std::string::npos);

  SymExpansion s{3, SymBasis::schur, {}};
  s.coeff[{2, 1}] = 7;
  CHECK(io::expansion_json(s).find("\"basis\": \"s\"") != std::string::npos);
}

TEST_CASE("assignment files round trip and tampering is rejected") {
  const auto a = cyclic_descent_assignment(3);
  const std::string j = io::assignment_json(a);
  const auto back = io::parse_assignment(j);
  CHECK(back == a);

  // flip one subset: the file no longer partitions the colorings
  std::string tampered = j;
  const auto pos = tampered.find("\"S\": [");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 7, "\"S\": [1, ");
  CHECK_THROWS_AS(io::parse_assignment(tampered), std::invalid_argument);

  // missing row
  CHECK_THROWS_AS(io::parse_assignment(R"({"n": 2, "table": [
    {"perm": [1, 2], "S": [1]}
  ]})"),
                  std::invalid_argument);
}

TEST_CASE("an imported prime table drives the generalized expansion") {
  const auto imported =
      io::parse_assignment(io::assignment_json(cyclic_descent_assignment(3)));
  const auto t = testutil::ht(5, {{1, 2, 3}, {3, 4, 5}});
  std::map<int, PartitionAssignment> tables{{3, imported}};
  CHECK(generalized_f_expansion(t, tables) == theorem_f_expansion(t));
}

TEST_CASE("digest is stable") {
  CHECK(io::fnv1a_digest("") == "fnv1a:cbf29ce484222325");
  CHECK(io::fnv1a_digest("abc") == io::fnv1a_digest("abc"));
  CHECK(io::fnv1a_digest("abc") != io::fnv1a_digest("abd"));
}

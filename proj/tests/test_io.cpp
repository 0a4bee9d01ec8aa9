#include "doctest.h"

#include <random>

#include "idcode/errors.hpp"
#include "idcode/io.hpp"
#include "oracle.hpp"

using namespace idcode;

TEST_CASE("digraph text parsing") {
  CHECK(parse_digraph("n 3\n0 1\n0 2\n1 2\n") == oracle::chain_tc(3));
  CHECK(parse_digraph("# comment\n\nn 2\n") == Digraph(2));
  CHECK(parse_digraph("n 0\n") == Digraph(0));
  // whitespace is flexible, order is not
  CHECK(parse_digraph("n 3\n2 0\n0   1\n1 2") == oracle::c3());
}

TEST_CASE("digraph text serialization is sorted") {
  CHECK(serialize_digraph(oracle::c3()) == "n 3\n0 1\n1 2\n2 0\n");
  CHECK(serialize_digraph(Digraph(1)) == "n 1\n");
}

TEST_CASE("digraph parse errors carry line numbers") {
  try {
    (void)parse_digraph("n 2\n0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_digraph(""), ParseError);
  CHECK_THROWS_AS((void)parse_digraph("digraph 3\n"), ParseError);
  CHECK_THROWS_AS((void)parse_digraph("n 2\n0 1\n0 1\n"), ParseError);  // duplicate
  CHECK_THROWS_AS((void)parse_digraph("n 2\n0 2\n"), ParseError);       // range
  CHECK_THROWS_AS((void)parse_digraph("n 2\n0\n"), ParseError);         // arity
  CHECK_THROWS_AS((void)parse_digraph("n 2\n0 x\n"), ParseError);       // token
  CHECK_THROWS_AS((void)parse_digraph("n 65\n"), ParseError);
}

TEST_CASE("digraph parse inverts serialize") {
  std::mt19937_64 rng(54321);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(rng, rng() % 9);
    CHECK(parse_digraph(serialize_digraph(d)) == d);
  }
}

TEST_CASE("set system json round trip") {
  const std::string text = R"({"ground_size":4,"sets":[[0],[0,2],[1,2],[0,2,3]]})";
  const SetSystem sys = parse_set_system(text);
  CHECK(sys.ground_size == 4);
  REQUIRE(sys.sets.size() == 4);
  CHECK(sys.sets[3] == VertexSet::of(4, {0, 2, 3}));
  CHECK(serialize_set_system(sys) == text);
  // key order in the input is irrelevant
  CHECK(serialize_set_system(parse_set_system(
            R"({"sets":[[1,0]],"ground_size":2})")) == R"({"ground_size":2,"sets":[[0,1]]})");
}

TEST_CASE("set system json rejects malformed input") {
  CHECK_THROWS_AS((void)parse_set_system("not json"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"([1,2])"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"({"ground_size":2})"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"({"sets":[]})"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"({"ground_size":2,"sets":[[2]]})"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"({"ground_size":2,"sets":[[0,0]]})"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"({"ground_size":2,"sets":[],"extra":1})"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"({"ground_size":-1,"sets":[]})"), ParseError);
  CHECK_THROWS_AS((void)parse_set_system(R"({"ground_size":2,"sets":[0]})"), ParseError);
}

TEST_CASE("bipartite json round trip") {
  const std::string text =
      R"({"s_size":2,"t_size":3,"edges":[[0,0],[0,2],[1,1]],"matching":[[0,0],[1,1]]})";
  const BipartiteGraph g = parse_bipartite(text);
  CHECK(g.s_size() == 2);
  CHECK(g.t_size() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.matching() == std::vector<int>{0, 1});
  CHECK(serialize_bipartite(g) == text);

  const std::string no_matching = R"({"s_size":1,"t_size":1,"edges":[[0,0]]})";
  CHECK_FALSE(parse_bipartite(no_matching).has_matching());
  CHECK(serialize_bipartite(parse_bipartite(no_matching)) == no_matching);
}

TEST_CASE("bipartite json rejects malformed input") {
  CHECK_THROWS_AS((void)parse_bipartite(R"({"s_size":1,"t_size":1})"), ParseError);
  CHECK_THROWS_AS((void)parse_bipartite(R"({"s_size":1,"t_size":1,"edges":[[0,1]]})"),
                  ParseError);
  CHECK_THROWS_AS((void)parse_bipartite(R"({"s_size":1,"t_size":1,"edges":[[0,0],[0,0]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      (void)parse_bipartite(R"({"s_size":1,"t_size":1,"edges":[],"matching":[[0,0]]})"),
      ParseError);  // matching pair must be an edge
  CHECK_THROWS_AS(
      (void)parse_bipartite(
          R"({"s_size":2,"t_size":2,"edges":[[0,0],[1,0]],"matching":[[0,0],[1,0]]})"),
      ParseError);  // matching reuses a T-vertex
}

TEST_CASE("forest serialization lists child parent pairs") {
  CHECK(serialize_forest(RootedForest(std::vector<int>{-1, 0, 1})) == "1 0\n2 1\n");
  CHECK(serialize_forest(RootedForest(std::vector<int>{-1, -1})) == "");
}

#include <doctest.h>

#include <random>

#include "dezaforge/error.hpp"
#include "dezaforge/graph_io.hpp"
#include "dezaforge/pipeline.hpp"

using namespace dezaforge;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w)
      if (coin(rng)) g.add_edge(u, w);
  return g;
}

}  // namespace

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(path_graph(2)) == "A_");
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(from_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("graph6 uses the long size prefix above 62 vertices") {
  const std::string s = to_graph6(named_graph("gamma"));
  CHECK(s[0] == '~');
  CHECK(s.size() == 4 + (243 * 242 / 2 + 5) / 6);
  CHECK(from_graph6(s) == named_graph("gamma"));
}

TEST_CASE("graph6 round trips on random graphs of many sizes") {
  std::mt19937 rng(2024);
  for (std::size_t n : {2u, 5u, 7u, 12u, 62u, 63u, 64u, 100u, 130u}) {
    const Graph g = random_graph(rng, n, 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(from_edge_list(to_edge_list(g)) == g);
  }
  for (const auto& name : graph_names()) {
    const Graph g = named_graph(name);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);     // body missing
  CHECK_THROWS_AS(from_graph6("Bww"), ParseError);   // body too long
  CHECK_THROWS_AS(from_graph6("B!"), ParseError);    // byte below 63
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);    // padding bits set
  CHECK_THROWS_AS(from_graph6("~~??????"), ParseError);  // 8-byte size form
  try {
    from_graph6("D?!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("edge list format") {
  CHECK(to_edge_list(path_graph(3)) == "# vertices 3\n0 1\n1 2\n");
  CHECK(from_edge_list("# vertices 4\n\n0 1\n# comment\n2 3\n").edge_count() == 2);
  CHECK(from_edge_list("0 4\n").order() == 5);
  CHECK(from_edge_list("# vertices 6\n").order() == 6);
  CHECK_THROWS_AS(from_edge_list("0 x\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("1 1\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("# vertices 2\n0 5\n"), ParseError);
}

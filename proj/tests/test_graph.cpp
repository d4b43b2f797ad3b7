#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"

#include "degsplit/errors.hpp"
#include "degsplit/generators.hpp"
#include "degsplit/graph.hpp"
#include "oracles.hpp"

using namespace degsplit;

namespace {

Graph parse(const std::string& text, std::size_t* duplicates = nullptr) {
  std::istringstream in(text);
  auto r = parse_edge_list(in);
  if (duplicates) *duplicates = r.duplicate_edges;
  return r.graph;
}

Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

void check_symmetric(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    degree_sum += g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      CHECK(u != v);
      CHECK(g.has_edge(u, v));
    }
  }
  CHECK(degree_sum == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("parse_edge_list: path, duplicates, header, comments") {
  auto path = parse("0 1\n1 2");
  CHECK(path.num_vertices() == 3);
  CHECK(path.num_edges() == 2);
  check_symmetric(path);

  std::size_t dups = 0;
  auto g = parse("0 1\n0 1\n1 2", &dups);
  CHECK(g.num_edges() == 2);
  CHECK(dups == 1);

  parse("0 1\n1 0\n", &dups);
  CHECK(dups == 1);

  auto h = parse("# comment\n\nn 6\n0 1\n  # another\n2 3\n");
  CHECK(h.num_vertices() == 6);
  CHECK(h.num_edges() == 2);
  CHECK(h.degree(5) == 0);
}

TEST_CASE("parse_edge_list: errors carry line numbers") {
  try {
    parse("0 1\n0 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::SelfLoop);
    CHECK(e.line() == 2);
  }
  try {
    parse("0 1\n# c\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Malformed);
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("n 2\n0 5\n"), ParseError);
}

TEST_CASE("edge list write/parse round trip keeps isolated vertices") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    auto g = oracle::random_graph(20, 0.2, rng);
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(parse(out.str()) == g);
  }
}

TEST_CASE("min_degree") {
  CHECK(min_degree(clique(4)) == 3);
  CHECK(min_degree(parse("0 1\n1 2")) == 1);
  CHECK(min_degree(Graph(0)) == 0);
  CHECK(min_degree(Graph(3)) == 0);
}

TEST_CASE("e_between") {
  auto k3 = clique(3);
  CHECK(e_between(k3, {0}, {1, 2}) == 2);
  CHECK(e_between(k3, {0, 1}, {1, 2}) == 3);
  auto c5 = cycle(5);
  CHECK(e_between(c5, VertexSet::range(5), VertexSet::range(5)) == 5);

  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    auto g = oracle::random_graph(15, 0.3, rng);
    std::vector<Vertex> xs, ys;
    for (Vertex v = 0; v < 15; ++v) {
      if (rng() & 1) xs.push_back(v);
      if (rng() & 1) ys.push_back(v);
    }
    VertexSet x(xs), y(ys);
    CHECK(e_between(g, x, y) == e_between(g, y, x));
    CHECK(e_between(g, VertexSet::range(15), VertexSet::range(15)) == g.num_edges());
  }
}

TEST_CASE("induced_subgraph") {
  auto sub = induced_subgraph(clique(4), {0, 1, 2});
  CHECK(sub.graph == clique(3));

  auto empty = induced_subgraph(clique(4), {});
  CHECK(empty.graph.num_vertices() == 0);

  auto c5 = induced_subgraph(cycle(5), {0, 1, 3});
  CHECK(c5.graph.num_vertices() == 3);
  CHECK(c5.graph.num_edges() == 1);
  CHECK(c5.graph.has_edge(0, 1));
  CHECK(c5.to_original == std::vector<Vertex>{0, 1, 3});
  CHECK(c5.to_local[3] == 2);
  CHECK(c5.to_local[2] == -1);

  CHECK_THROWS_AS(induced_subgraph(clique(3), {5}), InvalidArgument);
}

TEST_CASE("peel_to_min_degree examples") {
  CHECK(peel_to_min_degree(cycle(5), VertexSet::range(5), 1) == VertexSet::range(5));

  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}};
  auto k4_pendant = Graph::from_edges(5, e);
  CHECK(peel_to_min_degree(k4_pendant, VertexSet::range(5), 2) == VertexSet{0, 1, 2, 3});

  // Random trees: parent of v is uniform in [0, v).
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::pair<Vertex, Vertex>> tree;
    for (Vertex v = 1; v < 30; ++v) tree.emplace_back(static_cast<Vertex>(rng() % v), v);
    CHECK(peel_to_min_degree(Graph::from_edges(30, tree), VertexSet::range(30), 2).empty());
  }
}

TEST_CASE("peeling: soundness, guarantee and order independence") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 5 + rng() % 30;
    auto g = oracle::random_graph(n, 0.1 + 0.6 * (rng() % 100) / 100.0, rng);
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3) ids.push_back(v);
    }
    VertexSet b(ids);
    const std::size_t k = 1 + rng() % 4;
    auto core = peel_to_min_degree(g, b, k);

    auto in_core = core.mask(n);
    for (Vertex v : core) CHECK(neighbors_in(g, v, in_core) >= k);
    CHECK(std::includes(b.begin(), b.end(), core.begin(), core.end()));

    if (!b.empty() && edges_inside(g, b) >= k * b.size()) CHECK_FALSE(core.empty());

    std::vector<Vertex> reversed(b.ids().rbegin(), b.ids().rend());
    CHECK(peel_to_min_degree_ordered(g, b, k, reversed) == core);
    std::vector<Vertex> shuffled = b.ids();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(peel_to_min_degree_ordered(g, b, k, shuffled) == core);
  }
}

TEST_CASE("VertexSet operations") {
  VertexSet a{3, 1, 2, 2};
  CHECK(a.ids() == std::vector<Vertex>{1, 2, 3});
  CHECK(set_union(a, {5}) == VertexSet{1, 2, 3, 5});
  CHECK(set_intersection(a, {2, 9}) == VertexSet{2});
  CHECK(set_difference(a, {2}) == VertexSet{1, 3});
  CHECK_THROWS_AS(a.mask(3), InvalidArgument);
  CHECK(VertexSet::from_mask(a.mask(4)) == a);
}

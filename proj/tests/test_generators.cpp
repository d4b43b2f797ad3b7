#include <cmath>

#include "doctest.h"

#include "degsplit/errors.hpp"
#include "degsplit/generators.hpp"

using namespace degsplit;

TEST_CASE("kuhn_osthus sizes and degrees") {
  auto h32 = kuhn_osthus(3, 2);
  CHECK(h32.num_vertices() == 6);
  CHECK(h32.num_edges() == 6);
  CHECK(min_degree(h32) == 2);
  // Lexicographic subsets: {0,1}, {0,2}, {1,2}.
  CHECK(h32.has_edge(0, 3));
  CHECK(h32.has_edge(1, 3));
  CHECK(h32.has_edge(2, 5));
  CHECK_FALSE(h32.has_edge(2, 3));

  auto h51 = kuhn_osthus(5, 1);
  CHECK(h51.num_edges() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(h51.has_edge(v, 5 + v));

  auto h52 = kuhn_osthus(5, 2);
  CHECK(h52.num_vertices() == 15);
  for (Vertex v = 0; v < 5; ++v) CHECK(h52.degree(v) == 4);
  for (Vertex v = 5; v < 15; ++v) CHECK(h52.degree(v) == 2);
  CHECK(min_degree(h52) == 2);

  for (auto [n, ell] : {std::pair{6, 3}, {7, 2}, {8, 4}}) {
    auto g = kuhn_osthus(n, ell);
    CHECK(min_degree(g) == static_cast<std::size_t>(ell));
  }

  CHECK_THROWS_AS(kuhn_osthus(40, 20), GeneratorLimit);
  CHECK_THROWS_AS(kuhn_osthus(3, 0), InvalidArgument);
}

TEST_CASE("gnp") {
  CHECK(gnp(10, 1.0, 4) == clique(10));
  CHECK(gnp(10, 0.0, 4).num_edges() == 0);
  CHECK(gnp(50, 0.3, 17) == gnp(50, 0.3, 17));
  CHECK_FALSE(gnp(50, 0.3, 17) == gnp(50, 0.3, 18));

  const double mean = 0.4 * 400 * 399 / 2;
  const double sd = std::sqrt(mean * 0.6);
  double total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const double m = static_cast<double>(gnp(400, 0.4, seed).num_edges());
    CHECK(std::fabs(m - mean) <= 3 * sd);
    total += m;
  }
  // The mean of 100 samples has standard deviation sd / 10.
  CHECK(std::fabs(total / 100 - mean) <= 3 * sd / 10);
}

TEST_CASE("gnp_min_degree") {
  auto g = gnp_min_degree(200, 0.45, 50, 20, 3);
  CHECK(min_degree(g) >= 50);
  CHECK_THROWS_AS(gnp_min_degree(30, 0.1, 25, 5, 0), GeneratorLimit);
}

TEST_CASE("clique") {
  CHECK(clique(1).num_edges() == 0);
  CHECK(clique(4).num_edges() == 6);
  CHECK(min_degree(clique(101)) == 100);
}

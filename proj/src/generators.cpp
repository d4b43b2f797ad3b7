#include "degsplit/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "degsplit/errors.hpp"
#include "degsplit/random.hpp"

namespace degsplit {

namespace {

constexpr std::size_t kMaxGeneratedVertices = 1'000'000;

// C(n, r), saturating at limit + 1.
std::size_t binomial_capped(std::size_t n, std::size_t r, std::size_t limit) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 value = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    value = value * (n - r + i) / i;
    if (value > limit) return limit + 1;
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph kuhn_osthus(std::size_t n, std::size_t ell) {
  if (ell < 1 || ell > n) throw InvalidArgument("kuhn-osthus requires 1 <= ell <= n");
  const auto subsets = binomial_capped(n, ell, kMaxGeneratedVertices);
  if (n + subsets > kMaxGeneratedVertices) {
    throw GeneratorLimit("kuhn-osthus(" + std::to_string(n) + ", " + std::to_string(ell) +
                         ") exceeds " + std::to_string(kMaxGeneratedVertices) + " vertices");
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(subsets * ell);
  std::vector<Vertex> combo(ell);
  for (std::size_t i = 0; i < ell; ++i) combo[i] = static_cast<Vertex>(i);
  auto id = static_cast<Vertex>(n);
  while (true) {
    for (Vertex member : combo) edges.emplace_back(member, id);
    ++id;
    // Next combination in lexicographic order.
    std::size_t i = ell;
    while (i > 0 && combo[i - 1] == n - ell + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < ell; ++j) combo[j] = combo[j - 1] + 1;
  }
  return Graph::from_edges(n + subsets, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability outside [0, 1]");
  std::mt19937_64 rng(derive_seed(seed, 0));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gnp_min_degree(std::size_t n, double p, std::size_t min_deg, std::size_t retries,
                     std::uint64_t seed) {
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    auto g = gnp(n, p, attempt == 0 ? seed : derive_seed(seed, attempt));
    if (min_degree(g) >= min_deg) return g;
  }
  throw GeneratorLimit("no G(" + std::to_string(n) + ", " + std::to_string(p) + ") sample with minimum degree " +
                       std::to_string(min_deg) + " in " + std::to_string(retries) + " attempts");
}

Graph clique(std::size_t n) {
  if (n < 1) throw InvalidArgument("clique requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace degsplit

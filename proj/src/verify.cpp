#include "degsplit/verify.hpp"

#include <string>
#include <vector>

#include "degsplit/errors.hpp"

namespace degsplit {

namespace {

// Returns the first vertex of `side` with fewer than k neighbors in `target`,
// or -1 when there is none.
std::int64_t first_short_vertex(const Graph& g, const VertexSet& side, std::span<const char> target,
                                std::size_t k) {
  for (Vertex v : side) {
    if (neighbors_in(g, v, target) < k) return v;
  }
  return -1;
}

bool disjoint_cover(const Graph& g, const VertexSet& a, const VertexSet& b, std::string& detail) {
  const auto n = g.num_vertices();
  std::vector<int> hits(n, 0);
  for (const auto* side : {&a, &b}) {
    for (Vertex v : *side) {
      if (v >= n) {
        detail = "vertex " + std::to_string(v) + " out of range";
        return false;
      }
      ++hits[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] != 1) {
      detail = "vertex " + std::to_string(v) + (hits[v] == 0 ? " is uncovered" : " is on both sides");
      return false;
    }
  }
  return true;
}

void add_min_degree_item(Report& r, const Graph& g, const char* name, const VertexSet& side, std::size_t k) {
  if (side.empty()) {
    r.add(name, k == 0, "side is empty");
    return;
  }
  auto bad = first_short_vertex(g, side, side.mask(g.num_vertices()), k);
  r.add(name, bad < 0, bad < 0 ? "" : "vertex " + std::to_string(bad) + " has fewer than k neighbors inside");
}

}  // namespace

bool is_k_dominating(const Graph& g, const VertexSet& a, std::size_t k) {
  auto in_a = a.mask(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (neighbors_in(g, v, in_a) < k) return false;
  }
  return true;
}

Report verify_partition_ST(const Graph& g, const VertexSet& s, const VertexSet& t, std::size_t k) {
  Report r;
  std::string detail;
  const bool cover = disjoint_cover(g, s, t, detail);
  r.add("disjoint cover", cover, detail);
  if (!cover) return r;
  add_min_degree_item(r, g, "min degree of G[S] >= k", s, k);
  add_min_degree_item(r, g, "min degree of G[T] >= k", t, k);
  auto bad = first_short_vertex(g, s, t.mask(g.num_vertices()), k);
  r.add("every vertex of S has k neighbors in T", bad < 0,
        bad < 0 ? "" : "vertex " + std::to_string(bad) + " has fewer than k neighbors in T");
  return r;
}

Report verify_partition_AB(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t k) {
  Report r;
  std::string detail;
  const bool cover = disjoint_cover(g, a, b, detail);
  r.add("disjoint cover", cover, detail);
  if (!cover) return r;
  r.add("A is k-dominating", is_k_dominating(g, a, k));
  r.add("B non-empty", !b.empty());
  const auto e = edges_inside(g, b);
  r.add("average degree of G[B] >= 2k", !b.empty() && e >= k * b.size(),
        "e(G[B])=" + std::to_string(e) + " |B|=" + std::to_string(b.size()));
  return r;
}

bool every_bipartition_has_starved_vertex(const Graph& g) {
  const auto n = g.num_vertices();
  if (n > 22) throw OracleLimit("bipartition enumeration supports n <= 22, got " + std::to_string(n));
  if (n == 0) return true;
  std::vector<std::uint32_t> nb(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) nb[v] |= 1u << u;
  }
  const std::uint32_t all = (1u << n) - 1;
  // (V1, V2) and (V2, V1) are the same split: fix vertex n-1 in V2.
  const std::uint32_t splits = 1u << (n - 1);
  for (std::uint32_t v1 = 0; v1 < splits; ++v1) {
    const std::uint32_t v2 = all & ~v1;
    bool starved = false;
    for (Vertex v = 0; v < n && !starved; ++v) {
      starved = (nb[v] & v1) == 0 || (nb[v] & v2) == 0;
    }
    if (!starved) return false;
  }
  return true;
}

bool ore_equality_check(const Graph& g, std::size_t d, const CapMap& caps, const VertexSet& x) {
  if (caps.size() != g.num_vertices()) throw InvalidArgument("cap map size does not match vertex count");
  return d * x.size() == ore_capacity(g, caps, x);
}

}  // namespace degsplit

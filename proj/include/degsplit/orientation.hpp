#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "degsplit/graph.hpp"
#include "degsplit/report.hpp"

namespace degsplit {

/// A selection of out-neighbors for every vertex. An arc u->v always stands
/// for an edge uv of the underlying graph; u->v and v->u may coexist.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<std::vector<Vertex>> outs);

  std::size_t num_vertices() const noexcept { return outs_.size(); }
  std::span<const Vertex> out_neighbors(Vertex v) const { return outs_[v]; }
  std::size_t out_degree(Vertex v) const { return outs_[v].size(); }
  bool has_arc(Vertex u, Vertex v) const;

  /// In-degree of every vertex.
  std::vector<std::size_t> in_degrees() const;
  /// Sorted in-neighbors of every vertex.
  std::vector<std::vector<Vertex>> in_neighbors() const;

  /// All arcs (u, v), sorted.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  /// Drops u->v if present.
  void remove_arc(Vertex u, Vertex v);

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<std::vector<Vertex>> outs_;
};

/// Per-vertex in-degree caps.
using CapMap = std::vector<std::uint32_t>;

inline CapMap uniform_caps(std::size_t n, std::uint32_t cap) { return CapMap(n, cap); }

/// Output of the cap-raising evolution: the minimal cap t, the tight set X,
/// the saturated set Y, the orientation D, the caps at the moment feasibility
/// first held, and the vertex whose raise made it feasible.
struct Claim1Structure {
  std::size_t t = 0;
  VertexSet X;
  VertexSet Y;
  Orientation D;
  CapMap caps_at_stop;
  Vertex y_last = 0;
};

/// Order in which caps are raised during the evolution.
enum class RaiseOrder { Ascending, SeededShuffle };

/// An orientation with out-degree exactly d everywhere and in-degree at most
/// caps[v], or nullopt when none exists. Solved as a max flow on the bipartite
/// double cover. Throws InvalidArgument if caps.size() != n.
std::optional<Orientation> feasible_orientation(const Graph& g, std::size_t d, const CapMap& caps);

struct OreCheck {
  bool holds = true;
  std::optional<VertexSet> violating_set;
};

/// Σ_{x∈X} d versus Σ_y min{caps(y), |N(y) ∩ X|} for every X ⊆ V by
/// enumeration. Throws OracleLimit for n > 20.
OreCheck ore_holds_bruteforce(const Graph& g, std::size_t d, const CapMap& caps);

/// Right-hand side of Ore's condition for one set X.
std::size_t ore_capacity(const Graph& g, const CapMap& caps, const VertexSet& x);

/// Least uniform cap admitting an out-degree-d orientation. Requires
/// δ(G) ≥ d ≥ 1; throws DegreeTooLow otherwise.
std::size_t min_t(const Graph& g, std::size_t d);

/// Ascending ids or a seeded shuffle of them.
std::vector<Vertex> raise_order(std::size_t n, RaiseOrder kind, std::uint64_t seed);

/// Runs the cap-raising evolution at the minimal t: caps start at t-1 and are
/// raised to t one vertex at a time in `order` until an out-degree-d
/// orientation first exists. X is read off the residual network of the
/// maximum flow just before the final raise. Every structure invariant is
/// checked before returning; a failure throws StructureInvariantViolated.
Claim1Structure evolve_claim1(const Graph& g, std::size_t d, std::span<const Vertex> order);

/// Itemized check of every Claim1Structure invariant.
Report verify_claim1(const Graph& g, std::size_t d, const Claim1Structure& s);

}  // namespace degsplit

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace degsplit {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  /// Builds the set {v : mask[v] != 0}.
  static VertexSet from_mask(std::span<const char> mask);
  /// {0, 1, ..., n-1}
  static VertexSet range(std::size_t n);

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  /// Membership mask of length n. Throws InvalidArgument on ids >= n.
  std::vector<char> mask(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph over ids 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph from an edge list. Duplicate edges are collapsed; the
  /// number collapsed is written to `duplicates` when non-null. Throws
  /// InvalidArgument on self-loops or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::size_t* duplicates = nullptr);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

struct PartitionST {
  VertexSet S;
  VertexSet T;
};

struct PartitionAB {
  VertexSet A;
  VertexSet B;
};

struct EdgeListParse {
  Graph graph;
  std::size_t duplicate_edges = 0;
};

/// Reads the edge-list text format: "u v" per line, '#' comments, blank lines
/// ignored, and an optional leading "n <count>" header.
EdgeListParse parse_edge_list(std::istream& in);
/// Writes the same format, always with the "n <count>" header.
void write_edge_list(std::ostream& out, const Graph& g);

/// δ(G); 0 for the empty graph.
std::size_t min_degree(const Graph& g);

/// Number of edges with one endpoint in X and the other in Y (X, Y may overlap).
std::size_t e_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// |N(v) ∩ S| for a membership mask S.
std::size_t neighbors_in(const Graph& g, Vertex v, std::span<const char> mask);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  ///< new id -> original id
  std::vector<std::int64_t> to_local;  ///< original id -> new id, or -1
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Number of edges of G[S].
std::size_t edges_inside(const Graph& g, const VertexSet& s);

/// The k-core of G[B]: the largest S ⊆ B in which every vertex keeps at least
/// k neighbors. Possibly empty.
VertexSet peel_to_min_degree(const Graph& g, const VertexSet& b, std::size_t k);

/// Same result, removing vertices in the order given by `priority` (lowest
/// first among the currently removable ones). Used to check order independence.
VertexSet peel_to_min_degree_ordered(const Graph& g, const VertexSet& b, std::size_t k,
                                     std::span<const Vertex> priority);

}  // namespace degsplit

#pragma once

#include <cstddef>

#include "degsplit/graph.hpp"
#include "degsplit/orientation.hpp"
#include "degsplit/report.hpp"

namespace degsplit {

/// Every vertex of G, members of A included, has at least k neighbors in A.
bool is_k_dominating(const Graph& g, const VertexSet& a, std::size_t k);

/// Disjoint cover, δ(G[S]) >= k, δ(G[T]) >= k, and k neighbors in T for every
/// vertex of S. An empty side fails its minimum-degree item for k >= 1.
Report verify_partition_ST(const Graph& g, const VertexSet& s, const VertexSet& t, std::size_t k);

/// Disjoint cover, A k-dominating, B non-empty with e(G[B]) >= k|B|.
Report verify_partition_AB(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t k);

/// True iff every bipartition (V1, V2) has a vertex with no neighbor in V1 or
/// none in V2. Exhaustive; throws OracleLimit for n > 22.
bool every_bipartition_has_starved_vertex(const Graph& g);

/// Σ_{x∈X} d == Σ_y min{caps(y), |N(y) ∩ X|}.
bool ore_equality_check(const Graph& g, std::size_t d, const CapMap& caps, const VertexSet& x);

}  // namespace degsplit

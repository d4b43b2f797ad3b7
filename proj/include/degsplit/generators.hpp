#pragma once

#include <cstddef>
#include <cstdint>

#include "degsplit/graph.hpp"

namespace degsplit {

/// Bipartite membership graph between X = {0..n-1} and the ell-subsets of X.
/// Subset vertices follow X, numbered in lexicographic order of the subsets.
/// Throws GeneratorLimit when n + C(n, ell) exceeds 10^6.
Graph kuhn_osthus(std::size_t n, std::size_t ell);

/// Erdős–Rényi G(n, p); deterministic per seed.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Resamples G(n, p) with derived seeds until δ >= min_degree. Throws
/// GeneratorLimit after `retries` failed attempts.
Graph gnp_min_degree(std::size_t n, double p, std::size_t min_degree, std::size_t retries,
                     std::uint64_t seed);

/// K_n.
Graph clique(std::size_t n);

}  // namespace degsplit

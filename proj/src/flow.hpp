#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace degsplit::detail {

/// Integer-capacity flow network with paired residual arcs (arc e and e^1).
/// Max flow is Dinic's blocking-flow algorithm; `augment_once` adds a single
/// augmenting path for incremental use after a capacity raise.
class FlowNetwork {
 public:
  using ArcId = std::size_t;

  explicit FlowNetwork(std::size_t nodes) : first_(nodes) {}

  std::size_t num_nodes() const noexcept { return first_.size(); }

  ArcId add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

  /// Increases the capacity of a forward arc by `delta`, keeping its flow.
  void raise_capacity(ArcId arc, std::int64_t delta) { residual_[arc] += delta; }

  std::int64_t flow_on(ArcId arc) const { return residual_[arc ^ 1]; }

  /// Pushes a maximum flow from `source` to `sink` on top of the current one;
  /// returns the amount added.
  std::int64_t max_flow(std::size_t source, std::size_t sink);

  /// Finds one shortest augmenting path and saturates it; returns the amount pushed.
  std::int64_t augment_once(std::size_t source, std::size_t sink);

  /// Nodes reachable from `source` in the residual network.
  std::vector<char> residual_reachable(std::size_t source) const;

  std::size_t head(ArcId arc) const { return head_[arc]; }
  std::int64_t residual(ArcId arc) const { return residual_[arc]; }
  const std::vector<ArcId>& arcs_from(std::size_t node) const { return first_[node]; }

 private:
  bool build_levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t node, std::size_t sink, std::int64_t limit);

  std::vector<std::vector<ArcId>> first_;
  std::vector<std::size_t> head_;
  std::vector<std::int64_t> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace degsplit::detail

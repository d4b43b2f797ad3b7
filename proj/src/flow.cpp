#include "flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace degsplit::detail {

FlowNetwork::ArcId FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
  const ArcId id = head_.size();
  head_.push_back(to);
  residual_.push_back(capacity);
  head_.push_back(from);
  residual_.push_back(0);
  first_[from].push_back(id);
  first_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t sink) {
  level_.assign(num_nodes(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop();
    for (ArcId a : first_[u]) {
      auto v = head_[a];
      if (residual_[a] > 0 && level_[v] < 0) {
        level_[v] = level_[u] + 1;
        queue.push(v);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t FlowNetwork::push(std::size_t node, std::size_t sink, std::int64_t limit) {
  if (node == sink) return limit;
  auto& i = cursor_[node];
  const auto& arcs = first_[node];
  for (; i < arcs.size(); ++i) {
    ArcId a = arcs[i];
    auto v = head_[a];
    if (residual_[a] <= 0 || level_[v] != level_[node] + 1) continue;
    auto pushed = push(v, sink, std::min(limit, residual_[a]));
    if (pushed > 0) {
      residual_[a] -= pushed;
      residual_[a ^ 1] += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(num_nodes(), 0);
    while (auto pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::int64_t FlowNetwork::augment_once(std::size_t source, std::size_t sink) {
  // BFS with parent arcs.
  constexpr auto none = std::numeric_limits<ArcId>::max();
  std::vector<ArcId> parent(num_nodes(), none);
  std::vector<char> seen(num_nodes(), 0);
  std::queue<std::size_t> queue;
  seen[source] = 1;
  queue.push(source);
  while (!queue.empty() && !seen[sink]) {
    auto u = queue.front();
    queue.pop();
    for (ArcId a : first_[u]) {
      auto v = head_[a];
      if (residual_[a] > 0 && !seen[v]) {
        seen[v] = 1;
        parent[v] = a;
        queue.push(v);
      }
    }
  }
  if (!seen[sink]) return 0;
  std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
  for (auto v = sink; v != source; v = head_[parent[v] ^ 1]) {
    bottleneck = std::min(bottleneck, residual_[parent[v]]);
  }
  for (auto v = sink; v != source; v = head_[parent[v] ^ 1]) {
    residual_[parent[v]] -= bottleneck;
    residual_[parent[v] ^ 1] += bottleneck;
  }
  return bottleneck;
}

std::vector<char> FlowNetwork::residual_reachable(std::size_t source) const {
  std::vector<char> seen(num_nodes(), 0);
  std::vector<std::size_t> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (ArcId a : first_[u]) {
      auto v = head_[a];
      if (residual_[a] > 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace degsplit::detail

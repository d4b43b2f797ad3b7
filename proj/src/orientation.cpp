#include "degsplit/orientation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "degsplit/errors.hpp"
#include "degsplit/random.hpp"
#include "flow.hpp"

namespace degsplit {

Orientation::Orientation(std::vector<std::vector<Vertex>> outs) : outs_(std::move(outs)) {
  for (auto& o : outs_) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }
}

bool Orientation::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(outs_[u].begin(), outs_[u].end(), v);
}

std::vector<std::size_t> Orientation::in_degrees() const {
  std::vector<std::size_t> in(outs_.size(), 0);
  for (const auto& o : outs_) {
    for (Vertex v : o) ++in[v];
  }
  return in;
}

std::vector<std::vector<Vertex>> Orientation::in_neighbors() const {
  std::vector<std::vector<Vertex>> in(outs_.size());
  for (Vertex u = 0; u < outs_.size(); ++u) {
    for (Vertex v : outs_[u]) in[v].push_back(u);
  }
  return in;
}

std::vector<std::pair<Vertex, Vertex>> Orientation::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < outs_.size(); ++u) {
    for (Vertex v : outs_[u]) out.emplace_back(u, v);
  }
  return out;
}

void Orientation::remove_arc(Vertex u, Vertex v) {
  auto& o = outs_[u];
  auto it = std::lower_bound(o.begin(), o.end(), v);
  if (it != o.end() && *it == v) o.erase(it);
}

namespace {

// Bipartite double cover: source -> left copy (capacity d), left u -> right v
// for every edge uv (capacity 1), right copy -> sink (capacity caps[v]).
class OrientationNetwork {
 public:
  OrientationNetwork(const Graph& g, std::size_t d, const CapMap& caps)
      : g_(g), n_(g.num_vertices()), net_(2 * n_ + 2), edge_arcs_(n_) {
    if (caps.size() != n_) {
      throw InvalidArgument("cap map defined on " + std::to_string(caps.size()) + " of " +
                            std::to_string(n_) + " vertices");
    }
    for (Vertex u = 0; u < n_; ++u) net_.add_arc(source(), u, static_cast<std::int64_t>(d));
    for (Vertex u = 0; u < n_; ++u) {
      edge_arcs_[u].reserve(g.degree(u));
      for (Vertex v : g.neighbors(u)) edge_arcs_[u].push_back(net_.add_arc(u, n_ + v, 1));
    }
    sink_arcs_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      sink_arcs_.push_back(net_.add_arc(n_ + v, sink(), static_cast<std::int64_t>(caps[v])));
    }
  }

  std::size_t source() const { return 2 * n_; }
  std::size_t sink() const { return 2 * n_ + 1; }

  std::int64_t max_flow() { return flow_ += net_.max_flow(source(), sink()); }

  /// Raises caps[v] by one and tries a single augmentation; returns the total flow.
  std::int64_t raise_cap(Vertex v) {
    net_.raise_capacity(sink_arcs_[v], 1);
    return flow_ += net_.augment_once(source(), sink());
  }

  std::int64_t flow() const { return flow_; }

  /// Left copies reachable from the source in the residual network.
  VertexSet reachable_left() const {
    auto seen = net_.residual_reachable(source());
    seen.resize(n_);
    return VertexSet::from_mask(seen);
  }

  Orientation orientation() const {
    std::vector<std::vector<Vertex>> outs(n_);
    for (Vertex u = 0; u < n_; ++u) {
      auto nb = g_.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (net_.flow_on(edge_arcs_[u][i]) > 0) outs[u].push_back(nb[i]);
      }
    }
    return Orientation(std::move(outs));
  }

 private:
  const Graph& g_;
  std::size_t n_;
  detail::FlowNetwork net_;
  std::vector<std::vector<detail::FlowNetwork::ArcId>> edge_arcs_;
  std::vector<detail::FlowNetwork::ArcId> sink_arcs_;
  std::int64_t flow_ = 0;
};

std::int64_t demand(const Graph& g, std::size_t d) {
  return static_cast<std::int64_t>(d * g.num_vertices());
}

bool feasible_at(const Graph& g, std::size_t d, std::size_t t) {
  OrientationNetwork net(g, d, uniform_caps(g.num_vertices(), static_cast<std::uint32_t>(t)));
  return net.max_flow() == demand(g, d);
}

void require_degree(const Graph& g, std::size_t d) {
  if (d == 0) throw InvalidArgument("out-degree must be at least 1");
  const auto delta = min_degree(g);
  if (g.num_vertices() == 0 || delta < d) {
    throw DegreeTooLow("minimum degree " + std::to_string(delta) + " is below out-degree " +
                       std::to_string(d));
  }
}

}  // namespace

std::optional<Orientation> feasible_orientation(const Graph& g, std::size_t d, const CapMap& caps) {
  OrientationNetwork net(g, d, caps);
  if (net.max_flow() != demand(g, d)) return std::nullopt;
  return net.orientation();
}

std::size_t ore_capacity(const Graph& g, const CapMap& caps, const VertexSet& x) {
  auto in_x = x.mask(g.num_vertices());
  std::size_t total = 0;
  for (Vertex y = 0; y < g.num_vertices(); ++y) {
    total += std::min<std::size_t>(caps[y], neighbors_in(g, y, in_x));
  }
  return total;
}

OreCheck ore_holds_bruteforce(const Graph& g, std::size_t d, const CapMap& caps) {
  const auto n = g.num_vertices();
  if (n > 20) throw OracleLimit("Ore enumeration supports n <= 20, got " + std::to_string(n));
  if (caps.size() != n) throw InvalidArgument("cap map size does not match vertex count");

  std::vector<std::uint32_t> nbmask(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) nbmask[v] |= 1u << u;
  }
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t x = 1; x < subsets; ++x) {
    const std::size_t lhs = d * static_cast<std::size_t>(std::popcount(x));
    std::size_t rhs = 0;
    for (Vertex y = 0; y < n && rhs < lhs; ++y) {
      rhs += std::min<std::size_t>(caps[y], static_cast<std::size_t>(std::popcount(nbmask[y] & x)));
    }
    if (lhs > rhs) {
      std::vector<Vertex> ids;
      for (Vertex v = 0; v < n; ++v) {
        if (x >> v & 1u) ids.push_back(v);
      }
      return {false, VertexSet(std::move(ids))};
    }
  }
  return {true, std::nullopt};
}

std::size_t min_t(const Graph& g, std::size_t d) {
  require_degree(g, d);
  // Every vertex sends d arcs, so some in-degree is at least d; caps of n-1
  // never bind.
  std::size_t lo = d;
  std::size_t hi = g.num_vertices() - 1;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (feasible_at(g, d, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (!feasible_at(g, d, lo) || (lo > 0 && feasible_at(g, d, lo - 1))) {
    throw StructureInvariantViolated("binary search for minimal in-degree cap is inconsistent");
  }
  return lo;
}

std::vector<Vertex> raise_order(std::size_t n, RaiseOrder kind, std::uint64_t seed) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (kind == RaiseOrder::SeededShuffle && n > 1) {
    std::mt19937_64 rng(derive_seed(seed, 0x5eedULL));
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(order[i], order[uniform_below(rng, i + 1)]);
    }
  }
  return order;
}

Claim1Structure evolve_claim1(const Graph& g, std::size_t d, std::span<const Vertex> order) {
  const auto n = g.num_vertices();
  {
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
      if (v >= n || seen[v]) throw InvalidArgument("raise order is not a permutation of the vertices");
      seen[v] = 1;
    }
    if (order.size() != n) throw InvalidArgument("raise order is not a permutation of the vertices");
  }

  Claim1Structure s;
  s.t = min_t(g, d);
  s.caps_at_stop = uniform_caps(n, static_cast<std::uint32_t>(s.t - 1));

  OrientationNetwork net(g, d, s.caps_at_stop);
  const auto target = demand(g, d);
  if (net.max_flow() >= target) {
    throw StructureInvariantViolated("orientation feasible below the minimal cap");
  }

  // Residual reachability only changes when the flow does: a failed raise
  // touches an arc into the sink, which is unreachable at maximum flow.
  std::optional<VertexSet> tight;
  auto record_if_deficiency_one = [&] {
    if (net.flow() == target - 1) tight = net.reachable_left();
  };
  record_if_deficiency_one();

  bool done = false;
  for (Vertex y : order) {
    const auto before = net.flow();
    const auto after = net.raise_cap(y);
    s.caps_at_stop[y] = static_cast<std::uint32_t>(s.t);
    if (after == target) {
      s.y_last = y;
      done = true;
      break;
    }
    if (after != before) record_if_deficiency_one();
  }
  if (!done || !tight) {
    throw StructureInvariantViolated("evolution ended without reaching a feasible orientation");
  }

  s.X = std::move(*tight);
  s.D = net.orientation();

  auto in_x = s.X.mask(n);
  auto in_nb = s.D.in_neighbors();
  std::vector<Vertex> y_ids;
  for (Vertex y = 0; y < n; ++y) {
    std::size_t from_x = 0;
    for (Vertex u : in_nb[y]) from_x += in_x[u] ? 1 : 0;
    if (from_x == s.caps_at_stop[y]) y_ids.push_back(y);
  }
  s.Y = VertexSet(std::move(y_ids));

  auto report = verify_claim1(g, d, s);
  if (!report.pass()) {
    throw StructureInvariantViolated("evolution output fails its invariants:\n" + report.to_string());
  }
  return s;
}

Report verify_claim1(const Graph& g, std::size_t d, const Claim1Structure& s) {
  Report r;
  const auto n = g.num_vertices();
  const auto t = s.t;

  const bool shapes_ok = s.D.num_vertices() == n && s.caps_at_stop.size() == n &&
                         std::all_of(s.X.begin(), s.X.end(), [&](Vertex v) { return v < n; }) &&
                         std::all_of(s.Y.begin(), s.Y.end(), [&](Vertex v) { return v < n; });
  r.add("shapes", shapes_ok, shapes_ok ? "" : "orientation, caps or sets do not match the graph");
  if (!shapes_ok) return r;

  {
    std::string bad;
    for (auto [u, v] : s.D.arcs()) {
      if (!g.has_edge(u, v)) {
        bad = std::to_string(u) + "->" + std::to_string(v);
        break;
      }
    }
    r.add("arcs are edges", bad.empty(), bad.empty() ? "" : "arc " + bad + " is not an edge");
  }

  const auto in_deg = s.D.in_degrees();
  const auto in_nb = s.D.in_neighbors();
  const auto in_x = s.X.mask(n);
  const auto in_y = s.Y.mask(n);

  {
    std::string bad;
    for (Vertex v = 0; v < n && bad.empty(); ++v) {
      if (s.D.out_degree(v) != d) {
        bad = "out-degree of " + std::to_string(v) + " is " + std::to_string(s.D.out_degree(v));
      } else if (in_deg[v] > t) {
        bad = "in-degree of " + std::to_string(v) + " is " + std::to_string(in_deg[v]);
      }
    }
    r.add("(A) out-degree d, in-degree <= t", bad.empty(), bad);
  }

  {
    std::string bad;
    for (Vertex x : s.X) {
      for (Vertex u : g.neighbors(x)) {
        if (!s.D.has_arc(x, u) && !in_y[u]) {
          bad = "neighbor " + std::to_string(u) + " of " + std::to_string(x) + " is neither out-neighbor nor in Y";
          break;
        }
      }
      if (!bad.empty()) break;
    }
    r.add("(B) non-out-neighbors of X lie in Y", bad.empty(), bad);
  }

  {
    std::string bad;
    for (Vertex y : s.Y) {
      for (Vertex u : in_nb[y]) {
        if (!in_x[u]) {
          bad = "in-neighbor " + std::to_string(u) + " of " + std::to_string(y) + " is outside X";
          break;
        }
      }
      if (!bad.empty()) break;
      if (in_deg[y] + 1 < t || in_deg[y] > t) {
        bad = "in-degree of " + std::to_string(y) + " is " + std::to_string(in_deg[y]);
        break;
      }
    }
    r.add("(C) Y has in-neighbors in X and in-degree t-1 or t", bad.empty(), bad);
  }

  r.add("X non-empty", !s.X.empty());
  r.add("Y non-empty", !s.Y.empty());
  r.add("t >= d", t >= d, "t=" + std::to_string(t) + " d=" + std::to_string(d));

  {
    std::string bad;
    for (Vertex v = 0; v < n && bad.empty(); ++v) {
      const std::size_t cap = s.caps_at_stop[v];
      if (cap + 1 != t && cap != t) {
        bad = "cap of " + std::to_string(v) + " is " + std::to_string(cap);
      } else if (in_deg[v] > cap) {
        bad = "in-degree of " + std::to_string(v) + " exceeds its cap";
      }
    }
    r.add("caps in {t-1, t} and respected", bad.empty(), bad);
  }

  {
    const auto lhs = d * s.X.size();
    const auto rhs = ore_capacity(g, s.caps_at_stop, s.X);
    r.add("tightness at X", lhs == rhs, std::to_string(lhs) + " vs " + std::to_string(rhs));
  }

  {
    std::vector<Vertex> expected;
    for (Vertex y = 0; y < n; ++y) {
      std::size_t from_x = 0;
      for (Vertex u : in_nb[y]) from_x += in_x[u] ? 1 : 0;
      if (from_x == s.caps_at_stop[y]) expected.push_back(y);
    }
    r.add("Y is the saturated set", VertexSet(std::move(expected)) == s.Y);
  }

  r.add("y_last in Y", s.y_last < n && in_y[s.y_last], "y_last=" + std::to_string(s.y_last));
  return r;
}

}  // namespace degsplit

#include "degsplit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "degsplit/errors.hpp"

namespace degsplit {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_mask(std::span<const char> mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) s.ids_.push_back(static_cast<Vertex>(v));
  }
  return s;
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  s.ids_.resize(n);
  for (std::size_t v = 0; v < n; ++v) s.ids_[v] = static_cast<Vertex>(v);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::vector<char> VertexSet::mask(std::size_t n) const {
  std::vector<char> m(n, 0);
  for (Vertex v : ids_) {
    if (v >= n) throw InvalidArgument("vertex id " + std::to_string(v) + " out of range");
    m[v] = 1;
  }
  return m;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::size_t* duplicates) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t total = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  g.m_ = total / 2;
  if (duplicates) *duplicates = edges.size() - g.m_;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Splits on spaces/tabs.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value > UINT32_MAX - 1) {
    throw ParseError(ParseError::Kind::Malformed, line,
                     "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

EdgeListParse parse_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::uint64_t> declared_n;
  std::uint64_t max_id_plus_one = 0;
  bool seen_content = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto toks = tokens(line);
    if (!seen_content && toks.size() == 2 && toks[0] == "n") {
      declared_n = parse_id(toks[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (toks.size() != 2) {
      throw ParseError(ParseError::Kind::Malformed, line_no, "expected two vertex ids");
    }
    auto u = parse_id(toks[0], line_no);
    auto v = parse_id(toks[1], line_no);
    if (u == v) {
      throw ParseError(ParseError::Kind::SelfLoop, line_no, "self-loop at vertex " + std::to_string(u));
    }
    if (declared_n && std::max(u, v) >= *declared_n) {
      throw ParseError(ParseError::Kind::Malformed, line_no,
                       "vertex id exceeds declared count " + std::to_string(*declared_n));
    }
    max_id_plus_one = std::max(max_id_plus_one, std::max(u, v) + 1);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  EdgeListParse result;
  const std::size_t n = declared_n ? *declared_n : max_id_plus_one;
  result.graph = Graph::from_edges(n, edges, &result.duplicate_edges);
  return result;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::size_t min_degree(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t e_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  const auto n = g.num_vertices();
  auto in_x = x.mask(n);
  auto in_y = y.mask(n);
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    if ((in_x[u] && in_y[v]) || (in_x[v] && in_y[u])) ++count;
  }
  return count;
}

std::size_t neighbors_in(const Graph& g, Vertex v, std::span<const char> mask) {
  std::size_t count = 0;
  for (Vertex u : g.neighbors(v)) count += mask[u] ? 1 : 0;
  return count;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  const auto n = g.num_vertices();
  InducedSubgraph out;
  out.to_local.assign(n, -1);
  for (Vertex v : s) {
    if (v >= n) throw InvalidArgument("vertex id " + std::to_string(v) + " out of range");
    out.to_local[v] = static_cast<std::int64_t>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && out.to_local[v] >= 0) {
        edges.emplace_back(static_cast<Vertex>(out.to_local[u]), static_cast<Vertex>(out.to_local[v]));
      }
    }
  }
  out.graph = Graph::from_edges(s.size(), edges);
  return out;
}

std::size_t edges_inside(const Graph& g, const VertexSet& s) {
  auto in_s = s.mask(g.num_vertices());
  std::size_t twice = 0;
  for (Vertex v : s) twice += neighbors_in(g, v, in_s);
  return twice / 2;
}

VertexSet peel_to_min_degree(const Graph& g, const VertexSet& b, std::size_t k) {
  const auto n = g.num_vertices();
  auto alive = b.mask(n);
  std::vector<std::size_t> deg(n, 0);
  std::deque<Vertex> work;
  for (Vertex v : b) deg[v] = neighbors_in(g, v, alive);
  for (Vertex v : b) {
    if (deg[v] < k) {
      alive[v] = 0;
      work.push_back(v);
    }
  }
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      if (--deg[u] < k) {
        alive[u] = 0;
        work.push_back(u);
      }
    }
  }
  return VertexSet::from_mask(alive);
}

VertexSet peel_to_min_degree_ordered(const Graph& g, const VertexSet& b, std::size_t k,
                                     std::span<const Vertex> priority) {
  auto alive = b.mask(g.num_vertices());
  bool removed = true;
  while (removed) {
    removed = false;
    for (Vertex v : priority) {
      if (v < alive.size() && alive[v] && neighbors_in(g, v, alive) < k) {
        alive[v] = 0;
        removed = true;
        break;
      }
    }
  }
  return VertexSet::from_mask(alive);
}

}  // namespace degsplit

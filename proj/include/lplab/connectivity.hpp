#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "lplab/errors.hpp"
#include "lplab/graph.hpp"
#include "lplab/path.hpp"

namespace lplab {

namespace detail {

// Unit-capacity digraph with residual arcs, solved by BFS augmentation.
// Arc lists keep insertion order, so BFS prefers lower-numbered targets
// when the builder inserts them ascending.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : head_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  // Augments until `limit` units flow or no augmenting path remains.
  int run(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> bfs;
      bfs.push(source);
      via[source] = -2;
      while (!bfs.empty() && via[sink] == -1) {
        int x = bfs.front();
        bfs.pop();
        for (int a : head_[x]) {
          int y = arcs_[a].to;
          if (arcs_[a].cap > 0 && via[y] == -1) {
            via[y] = a;
            bfs.push(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int y = sink; y != source;) {
        int a = via[y];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        y = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

  // Forward arcs out of `x` currently carrying one unit.
  std::vector<int> saturated_targets(int x) const {
    std::vector<int> out;
    for (int a : head_[x]) {
      if ((a & 1) == 0 && arcs_[a].cap == 0) out.push_back(arcs_[a].to);
    }
    return out;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
};

inline int in_node(Vertex v) { return 2 * v; }
inline int out_node(Vertex v) { return 2 * v + 1; }

// Vertex-split network. Vertices flagged in `no_pass` get no in->out arc,
// so no flow path can use them as interior vertices.
inline UnitFlow split_network(const Graph& g, const std::vector<char>& no_pass, int extra_nodes) {
  UnitFlow net(2 * g.n() + extra_nodes);
  for (Vertex x = 0; x < g.n(); ++x) {
    if (!no_pass[x]) net.add_arc(in_node(x), out_node(x));
    for (Vertex y : g.neighbors(x)) net.add_arc(out_node(x), in_node(y));
  }
  return net;
}

// Walks one unit of flow from out(start) until `is_end(vertex)` holds,
// consuming the used arcs from `remaining`.
template <typename IsEnd>
Path trace_flow_path(Vertex start, IsEnd is_end, std::vector<std::vector<int>>& remaining) {
  std::vector<Vertex> seq{start};
  Vertex cur = start;
  for (;;) {
    auto& outs = remaining[cur];
    int in = outs.front();
    outs.erase(outs.begin());
    Vertex next = in / 2;
    seq.push_back(next);
    if (is_end(next)) break;
    cur = next;
  }
  return Path(std::move(seq));
}

inline std::vector<std::vector<int>> saturated_out_arcs(const UnitFlow& net, int n) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) out[x] = net.saturated_targets(out_node(x));
  return out;
}

inline int local_connectivity(const Graph& g, Vertex u, Vertex v, int limit) {
  std::vector<char> no_pass(static_cast<std::size_t>(g.n()), 0);
  no_pass[u] = no_pass[v] = 1;
  auto net = split_network(g, no_pass, 0);
  return net.run(out_node(u), in_node(v), limit);
}

}  // namespace detail

// Largest k such that G is k-connected. Complete graphs give n-1; otherwise
// the minimum over non-adjacent pairs of the maximum number of internally
// disjoint paths.
inline int vertex_connectivity(const Graph& g) {
  if (g.n() < 2) throw PreconditionError("vertex connectivity needs at least 2 vertices");
  if (g.is_complete()) return g.n() - 1;
  int best = g.n() - 2;
  for (Vertex u = 0; u < g.n() && best > 0; ++u) {
    for (Vertex v = u + 1; v < g.n() && best > 0; ++v) {
      if (g.has_edge(u, v)) continue;
      best = std::min(best, detail::local_connectivity(g, u, v, best));
    }
  }
  return best;
}

// k pairwise internally disjoint u-v paths, or none when fewer exist.
inline std::optional<std::vector<Path>> disjoint_paths(const Graph& g, Vertex u, Vertex v, int k) {
  if (u == v) throw PreconditionError("disjoint_paths needs distinct endpoints");
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw PreconditionError("endpoint out of range");
  if (k < 0) throw PreconditionError("k must be non-negative");
  std::vector<char> no_pass(static_cast<std::size_t>(g.n()), 0);
  no_pass[u] = no_pass[v] = 1;
  auto net = detail::split_network(g, no_pass, 0);
  if (net.run(detail::out_node(u), detail::in_node(v), k) < k) return std::nullopt;
  auto remaining = detail::saturated_out_arcs(net, g.n());
  std::vector<Path> paths;
  for (int i = 0; i < k; ++i) {
    paths.push_back(detail::trace_flow_path(u, [v](Vertex x) { return x == v; }, remaining));
  }
  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.vertices < b.vertices;
  });
  return paths;
}

// k paths from `center` into `targets`, pairwise meeting only at `center`,
// with no interior vertex in the target set.
struct FanResult {
  Vertex center = -1;
  std::vector<Vertex> targets;
  std::vector<Path> paths;
};

inline std::optional<FanResult> fan(const Graph& g, Vertex center, std::vector<Vertex> targets, int k) {
  if (center < 0 || center >= g.n()) throw PreconditionError("fan center out of range");
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::vector<char> no_pass(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s : targets) {
    if (s < 0 || s >= g.n()) throw PreconditionError("fan target out of range");
    if (s == center) throw PreconditionError("fan center lies in the target set");
    no_pass[s] = 1;
  }
  if (static_cast<int>(targets.size()) < k) {
    throw PreconditionError("fan needs |S| >= k (|S|=" + std::to_string(targets.size()) +
                            ", k=" + std::to_string(k) + ")");
  }
  no_pass[center] = 1;
  const int sink = 2 * g.n();
  auto net = detail::split_network(g, no_pass, 1);
  for (Vertex s : targets) net.add_arc(detail::in_node(s), sink);
  if (net.run(detail::out_node(center), sink, k) < k) return std::nullopt;

  std::vector<char> is_target(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s : targets) is_target[s] = 1;
  auto remaining = detail::saturated_out_arcs(net, g.n());
  FanResult result{center, targets, {}};
  for (int i = 0; i < k; ++i) {
    result.paths.push_back(detail::trace_flow_path(
        center, [&](Vertex x) { return is_target[x] != 0; }, remaining));
  }
  std::sort(result.paths.begin(), result.paths.end(),
            [](const Path& a, const Path& b) { return a.back() < b.back(); });
  return result;
}

// Empty when `r` satisfies every fan invariant for (g, center, targets).
inline std::string fan_defect(const Graph& g, const FanResult& r) {
  std::vector<char> is_target(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s : r.targets) is_target[s] = 1;
  std::vector<int> uses(static_cast<std::size_t>(g.n()), 0);
  for (const Path& p : r.paths) {
    if (auto d = path_defect(g, p); !d.empty()) return "fan path " + to_string(p) + ": " + d;
    if (p.front() != r.center) return "fan path " + to_string(p) + " does not start at the center";
    if (!is_target[p.back()]) return "fan path " + to_string(p) + " does not end in S";
    for (int i = 1; i + 1 < p.size(); ++i) {
      if (is_target[p.vertices[i]]) return "fan path " + to_string(p) + " has an interior vertex in S";
    }
    for (int i = 1; i < p.size(); ++i) {
      if (++uses[p.vertices[i]] > 1) {
        return "fan paths share vertex " + std::to_string(p.vertices[i]) + " besides the center";
      }
    }
  }
  return {};
}

}  // namespace lplab

#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "lplab/errors.hpp"
#include "lplab/graph.hpp"

namespace lplab {

// Ordered sequence of distinct vertices; length counts edges.
//
// A path and its reversal describe the same object. The canonical
// orientation is the lexicographically smaller of the two sequences,
// i.e. the one whose first vertex is smaller than its last.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  Path(std::initializer_list<Vertex> vs) : vertices(vs) {}
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  int size() const { return static_cast<int>(vertices.size()); }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  bool contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }

  int index_of(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
  }

  Path reversed() const { return Path(std::vector<Vertex>(vertices.rbegin(), vertices.rend())); }

  bool is_canonical() const { return vertices.size() < 2 || vertices.front() < vertices.back(); }

  Path canonical() const { return is_canonical() ? *this : reversed(); }

  VertexMask mask() const {
    VertexMask m = 0;
    for (Vertex v : vertices) m |= bit(v);
    return m;
  }

  // Equality up to reversal.
  bool same_as(const Path& other) const { return canonical().vertices == other.canonical().vertices; }

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

inline std::string to_string(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.vertices[i]);
  }
  return s + "]";
}

// Empty string when `p` is a valid simple path in `g`, otherwise the reason.
inline std::string path_defect(const Graph& g, const Path& p) {
  if (p.empty()) return "empty path";
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeats";
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) {
      return "no edge {" + std::to_string(p.vertices[i - 1]) + "," + std::to_string(v) + "}";
    }
  }
  return {};
}

inline bool is_valid_path(const Graph& g, const Path& p) { return path_defect(g, p).empty(); }

inline void require_valid_path(const Graph& g, const Path& p, const char* what) {
  if (auto d = path_defect(g, p); !d.empty()) {
    throw PreconditionError(std::string(what) + " is not a path: " + d);
  }
}

// dist_P(x, y): number of edges of P between x and y.
inline int path_distance(const Path& p, Vertex x, Vertex y) {
  int i = p.index_of(x);
  int j = p.index_of(y);
  if (i < 0 || j < 0) {
    throw PreconditionError("vertex " + std::to_string(i < 0 ? x : y) + " is not on the path");
  }
  return i < j ? j - i : i - j;
}

// P[x,y], oriented from x to y.
inline Path subpath(const Path& p, Vertex x, Vertex y) {
  int i = p.index_of(x);
  int j = p.index_of(y);
  if (i < 0 || j < 0) {
    throw PreconditionError("vertex " + std::to_string(i < 0 ? x : y) + " is not on the path");
  }
  std::vector<Vertex> out;
  if (i <= j) {
    out.assign(p.vertices.begin() + i, p.vertices.begin() + j + 1);
  } else {
    for (int t = i; t >= j; --t) out.push_back(p.vertices[t]);
  }
  return Path(std::move(out));
}

// V(P) ∩ V(Q), sorted ascending.
inline std::vector<Vertex> intersection(const Path& p, const Path& q) {
  std::vector<Vertex> a = p.vertices;
  std::vector<Vertex> b = q.vertices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Pósa rotation at the front endpoint: with q0 = q.front() adjacent to an
// on-path vertex r = q[i] (i >= 2), returns q[i-1..0] + q[i..]. The new
// front endpoint q[i-1] is r's neighbor on Q closer to q0.
inline Path posa_rotate(const Graph& g, const Path& q, Vertex r) {
  if (q.empty()) throw PreconditionError("rotation on an empty path");
  int i = q.index_of(r);
  if (i < 0) throw PreconditionError("rotation vertex " + std::to_string(r) + " is not on the path");
  if (i == 0) throw PreconditionError("rotation vertex is the endpoint itself");
  if (i == 1) {
    throw PreconditionError("rotation vertex " + std::to_string(r) +
                            " is the successor of the endpoint (degenerate rotation)");
  }
  if (!g.has_edge(q.front(), r)) {
    throw PreconditionError("rotation vertex " + std::to_string(r) +
                            " is not a neighbor of endpoint " + std::to_string(q.front()));
  }
  std::vector<Vertex> out(q.vertices.rend() - i, q.vertices.rend());
  out.insert(out.end(), q.vertices.begin() + i, q.vertices.end());
  return Path(std::move(out));
}

// Two longest paths P, Q meeting at u, with v on P only and w on Q only,
// joined by an outside v-w path R.
struct ExchangeConfig {
  Path p;
  Path q;
  Vertex u = -1;
  Vertex v = -1;
  Vertex w = -1;
  Path r;
};

namespace detail {

inline bool interior_avoids(const Path& seg, VertexMask forbidden) {
  for (int i = 1; i + 1 < seg.size(); ++i) {
    if (forbidden & bit(seg.vertices[i])) return false;
  }
  return true;
}

}  // namespace detail

// Empty when the configuration satisfies every exchange precondition,
// otherwise names the first failed condition.
inline std::string exchange_defect(const Graph& g, const ExchangeConfig& c) {
  g.require_exact("exchange");
  for (auto [path, name] : {std::pair{&c.p, "P"}, std::pair{&c.q, "Q"}, std::pair{&c.r, "R"}}) {
    if (auto d = path_defect(g, *path); !d.empty()) return std::string(name) + " invalid: " + d;
  }
  const VertexMask pm = c.p.mask();
  const VertexMask qm = c.q.mask();
  if (!c.p.contains(c.u) || !c.q.contains(c.u)) return "u must lie on both P and Q";
  if (!c.p.contains(c.v) || c.q.contains(c.v)) return "v must lie on P and not on Q";
  if (!c.q.contains(c.w) || c.p.contains(c.w)) return "w must lie on Q and not on P";
  if (!detail::interior_avoids(subpath(c.p, c.u, c.v), qm)) {
    return "P[u,v] is not internally disjoint from Q";
  }
  if (!detail::interior_avoids(subpath(c.q, c.u, c.w), pm)) {
    return "Q[u,w] is not internally disjoint from P";
  }
  if (c.r.front() != c.v || c.r.back() != c.w) return "R must run from v to w";
  if (!detail::interior_avoids(c.r, pm | qm)) return "R is not internally disjoint from P and Q";
  return {};
}

// Returns (P - P[u,v] + R + Q[u,w], Q - Q[u,w] + R + P[u,v]).
// Lengths sum to |P| + |Q| + 2|R|.
inline std::pair<Path, Path> exchange(const Graph& g, const ExchangeConfig& c) {
  if (auto d = exchange_defect(g, c); !d.empty()) throw PreconditionError("exchange: " + d);

  // Orient `host` so `from` precedes `to`, then replace host[from..to]
  // by the detour from -> other[from..via] -> R -> to.
  auto splice = [](const Path& host, Vertex from, Vertex to, const Path& other, Vertex via,
                   const Path& bridge_via_to) {
    Path h = host.index_of(from) < host.index_of(to) ? host : host.reversed();
    int a = h.index_of(from);
    int b = h.index_of(to);
    std::vector<Vertex> out(h.vertices.begin(), h.vertices.begin() + a);
    Path detour = subpath(other, from, via);
    out.insert(out.end(), detour.vertices.begin(), detour.vertices.end());
    out.insert(out.end(), bridge_via_to.vertices.begin() + 1, bridge_via_to.vertices.end() - 1);
    out.insert(out.end(), h.vertices.begin() + b, h.vertices.end());
    return Path(std::move(out));
  };

  Path r_wv = c.r.reversed();
  Path p2 = splice(c.p, c.u, c.v, c.q, c.w, r_wv);
  Path q2 = splice(c.q, c.u, c.w, c.p, c.v, c.r);
  for (const Path* out : {&p2, &q2}) {
    if (auto d = path_defect(g, *out); !d.empty()) {
      throw PreconditionError("exchange produced a non-path (" + d + "); configuration is non-conforming");
    }
  }
  return {std::move(p2), std::move(q2)};
}

namespace detail {

// Vertices v on `host` reachable from u with host[u,v] internally avoiding
// `other` and v itself off `other`, scanning both directions from u.
inline std::vector<Vertex> free_branch_ends(const Path& host, Vertex u, VertexMask other) {
  std::vector<Vertex> out;
  int i = host.index_of(u);
  for (int dir : {-1, 1}) {
    for (int j = i + dir; j >= 0 && j < host.size(); j += dir) {
      Vertex x = host.vertices[j];
      if (other & bit(x)) break;
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lexicographically smallest shortest path from `src` to `dst` whose
// interior stays inside `allowed`.
inline std::optional<Path> shortest_bridge(const Graph& g, Vertex src, Vertex dst, VertexMask allowed) {
  if (g.has_edge(src, dst)) return Path{src, dst};
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::queue<Vertex> bfs;
  dist[dst] = 0;
  bfs.push(dst);
  while (!bfs.empty()) {
    Vertex x = bfs.front();
    bfs.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      if (y == src) {
        dist[y] = dist[x] + 1;
        continue;
      }
      if (!(allowed & bit(y))) continue;
      dist[y] = dist[x] + 1;
      bfs.push(y);
    }
  }
  if (dist[src] < 0) return std::nullopt;
  std::vector<Vertex> out{src};
  Vertex cur = src;
  while (cur != dst) {
    for (Vertex y : g.neighbors(cur)) {
      if (dist[y] == dist[cur] - 1 && (y == dst || (allowed & bit(y)))) {
        cur = y;
        break;
      }
    }
    out.push_back(cur);
  }
  return Path(std::move(out));
}

}  // namespace detail

// Exhaustive search for an exchange configuration. Among all (u, v, w)
// the one with the shortest bridge R wins, ties broken by (u, v, w) and
// then by R lexicographically. Returns none when P and Q are disjoint.
inline std::optional<ExchangeConfig> find_exchange_config(const Graph& g, const Path& p, const Path& q) {
  g.require_exact("find_exchange_config");
  const VertexMask pm = p.mask();
  const VertexMask qm = q.mask();
  const VertexMask shared = pm & qm;
  if (!shared || pm == qm) return std::nullopt;
  const VertexMask outside = g.all_mask() & ~(pm | qm);

  std::optional<ExchangeConfig> best;
  for (VertexMask s = shared; s; s &= s - 1) {
    Vertex u = std::countr_zero(s);
    auto vs = detail::free_branch_ends(p, u, qm);
    auto ws = detail::free_branch_ends(q, u, pm);
    for (Vertex v : vs) {
      for (Vertex w : ws) {
        auto r = detail::shortest_bridge(g, v, w, outside);
        if (!r) continue;
        if (!best || r->length() < best->r.length()) {
          best = ExchangeConfig{p, q, u, v, w, std::move(*r)};
        }
      }
    }
  }
  return best;
}

}  // namespace lplab

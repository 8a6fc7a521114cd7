#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lplab/errors.hpp"

namespace lplab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
// One bit per vertex; exact engines are limited to 64 vertices by this.
using VertexMask = std::uint64_t;

inline constexpr int kMaxExactVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline int popcount(VertexMask m) { return std::popcount(m); }

inline VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (bit(n) - 1);
}

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are stored canonically: u < v inside each pair, lexicographic
// across pairs. Neighbor lists are sorted. When n <= 64 each vertex also
// carries a neighbor bitmask used by the exact search engines.
class Graph {
 public:
  Graph() = default;

  // Throws ValidationError on loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ValidationError(describe_edge("out-of-range endpoint in", i, u, v));
      }
      if (u == v) throw ValidationError(describe_edge("loop", i, u, v));
      if (u > v) std::swap(edges[i].first, edges[i].second);
    }
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (edges[order[i]] == edges[order[i - 1]]) {
        auto [u, v] = edges[order[i]];
        throw ValidationError(describe_edge("duplicate", order[i], u, v));
      }
    }
    edges_.reserve(edges.size());
    for (auto i : order) edges_.push_back(edges[i]);

    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    if (n <= kMaxExactVertices) {
      masks_.assign(static_cast<std::size_t>(n), 0);
      for (auto [u, v] : edges_) {
        masks_[u] |= bit(v);
        masks_[v] |= bit(u);
      }
    }
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    if (!masks_.empty()) return (masks_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  bool fits_mask() const { return n_ <= kMaxExactVertices; }

  // Neighbor bitmask; only valid when fits_mask().
  VertexMask neighbor_mask(Vertex v) const { return masks_[v]; }

  VertexMask all_mask() const { return low_mask(n_); }

  void require_exact(const char* op) const {
    if (!fits_mask()) {
      std::ostringstream os;
      os << op << ": graph has " << n_ << " vertices, exact engines support at most "
         << kMaxExactVertices;
      throw TooLargeError(os.str());
    }
  }

  bool is_complete() const {
    return static_cast<long long>(m()) * 2 == static_cast<long long>(n_) * (n_ - 1);
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  static std::string describe_edge(const char* what, std::size_t index, Vertex u, Vertex v) {
    std::ostringstream os;
    os << what << " edge #" << index << " [" << u << "," << v << "]";
    return os.str();
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexMask> masks_;
};

// Vertices reachable from `seeds` without leaving `alive` (n <= 64).
inline VertexMask reach_within(const Graph& g, VertexMask seeds, VertexMask alive) {
  VertexMask seen = seeds & alive;
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= g.neighbor_mask(std::countr_zero(f));
    }
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n();
}

// Stable identifier: an explicit name, or a content hash of (n, sorted edges).
struct GraphId {
  std::string id;

  static GraphId named(std::string name) { return GraphId{std::move(name)}; }

  static GraphId of(const Graph& g) {
    // 64-bit FNV-1a over the canonical text form.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
      }
    };
    feed("n=" + std::to_string(g.n()) + ";");
    for (auto [u, v] : g.edges()) feed(std::to_string(u) + "-" + std::to_string(v) + ";");
    std::ostringstream os;
    os << "g" << std::hex << std::setw(16) << std::setfill('0') << h;
    return GraphId{os.str()};
  }

  bool operator==(const GraphId&) const = default;
};

}  // namespace lplab

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "lplab/deadline.hpp"
#include "lplab/errors.hpp"
#include "lplab/graph.hpp"
#include "lplab/path.hpp"

namespace lplab {

inline constexpr int kMaxDpVertices = 20;

struct CensusOptions {
  // Longest paths kept in `paths`; the count stays exact past the cap.
  std::size_t cap = 100000;
  // Distinct vertex sets kept for intersection queries.
  std::size_t set_cap = std::size_t{1} << 22;
  int jobs = 1;
  const Deadline* deadline = nullptr;
};

// All longest paths of a graph, deduplicated up to reversal.
//
// `paths` holds the `cap` lexicographically smallest canonical paths;
// `truncated` is set when more exist. `vertex_sets` lists the distinct
// vertex sets of all longest paths, which is all that intersection
// queries need, and stays complete far beyond the path cap.
struct LongestPathCensus {
  std::string graph_id;
  int L = 0;
  std::uint64_t count = 0;
  std::vector<Path> paths;
  bool truncated = false;
  std::vector<VertexMask> vertex_sets;
  bool sets_complete = true;
  std::string engine;
};

namespace detail {

// Upper bounds on how many more vertices a path can collect from its
// current endpoint. Besides plain reachability it uses separator sets T:
// every stretch of the extension outside T lies inside one component of
// (reachable - T), and consecutive stretches are split by T-vertices, so
// t = |T ∩ reachable| T-vertices admit at most t+1 stretches, and only t
// when the first step enters T.
class ExtensionBound {
 public:
  explicit ExtensionBound(const Graph& g) : g_(g) {
    std::vector<int> degrees;
    for (Vertex v = 0; v < g.n(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (std::size_t i = 0; i < degrees.size() && separators_.size() < 3; ++i) {
      VertexMask t = 0;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) >= degrees[i]) t |= bit(v);
      }
      if (t != g.all_mask() && 2 * popcount(t) <= g.n()) separators_.push_back(t);
    }
  }

  int operator()(Vertex end, VertexMask visited) const {
    const VertexMask alive = g_.all_mask() & ~visited;
    const VertexMask first = g_.neighbor_mask(end) & alive;
    if (!first) return 0;
    const VertexMask reach = reach_within(g_, first, alive);
    int best = popcount(reach);
    for (VertexMask sep : separators_) {
      best = std::min(best, with_separator(sep, first, reach));
    }
    return best;
  }

 private:
  int with_separator(VertexMask sep, VertexMask first, VertexMask reach) const {
    const int t = popcount(sep & reach);
    VertexMask rest = reach & ~sep;
    int sizes[kMaxExactVertices];
    int count = 0;
    int adjacent_best = 0;
    int adjacent_index = -1;
    while (rest) {
      VertexMask comp = reach_within(g_, rest & (~rest + 1), rest);
      rest &= ~comp;
      sizes[count] = popcount(comp);
      if ((comp & first) && sizes[count] > adjacent_best) {
        adjacent_best = sizes[count];
        adjacent_index = count;
      }
      ++count;
    }
    // Stretches starting inside T: at most t of them.
    int enter_t = sum_top(sizes, count, t, -1);
    // First stretch in a component adjacent to the endpoint, then t more.
    int enter_comp = adjacent_index < 0 ? 0 : adjacent_best + sum_top(sizes, count, t, adjacent_index);
    return t + std::max(enter_t, enter_comp);
  }

  static int sum_top(const int* sizes, int count, int take, int skip) {
    int buf[kMaxExactVertices];
    int m = 0;
    for (int i = 0; i < count; ++i) {
      if (i != skip) buf[m++] = sizes[i];
    }
    take = std::min(take, m);
    std::partial_sort(buf, buf + take, buf + m, std::greater<>());
    int s = 0;
    for (int i = 0; i < take; ++i) s += buf[i];
    return s;
  }

  const Graph& g_;
  std::vector<VertexMask> separators_;
};

// Per-root emission buffer. Paths from one root come out in
// lexicographic order because neighbors are tried ascending.
struct RootHarvest {
  std::uint64_t count = 0;
  std::vector<std::uint8_t> flat;  // stored paths, `target` bytes each
  bool overflow = false;
  std::unordered_set<VertexMask> sets;
  bool sets_overflow = false;
};

class DfsSearch {
 public:
  DfsSearch(const Graph& g, const CensusOptions& opt) : g_(g), opt_(opt), bound_(g) {}

  // Maximum number of vertices on a path.
  int find_max_vertices() {
    int best = g_.n() > 0 ? 1 : 0;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g_.n(); ++root) {
      stack.assign(1, root);
      grow_max(stack, bit(root), best);
      if (best == g_.n()) break;
    }
    return best;
  }

  void harvest(Vertex root, int target, RootHarvest& out) {
    std::vector<Vertex> stack{root};
    enumerate(stack, bit(root), target, out);
  }

 private:
  void tick() {
    if (opt_.deadline && (++ticks_ & 0xfff) == 0) opt_.deadline->check("longest-path search");
  }

  void grow_max(std::vector<Vertex>& stack, VertexMask visited, int& best) {
    tick();
    const int have = static_cast<int>(stack.size());
    if (have > best) best = have;
    if (best == g_.n()) return;
    const Vertex end = stack.back();
    VertexMask next = g_.neighbor_mask(end) & ~visited;
    if (!next) return;
    if (have + popcount(g_.all_mask() & ~visited) <= best) return;
    if (have + bound_(end, visited) <= best) return;
    for (; next; next &= next - 1) {
      Vertex w = std::countr_zero(next);
      stack.push_back(w);
      grow_max(stack, visited | bit(w), best);
      stack.pop_back();
      if (best == g_.n()) return;
    }
  }

  void enumerate(std::vector<Vertex>& stack, VertexMask visited, int target, RootHarvest& out) {
    tick();
    const int have = static_cast<int>(stack.size());
    if (have == target) {
      if (have == 1 || stack.front() < stack.back()) emit(stack, visited, target, out);
      return;
    }
    const Vertex end = stack.back();
    VertexMask next = g_.neighbor_mask(end) & ~visited;
    if (!next) return;
    if (have + popcount(g_.all_mask() & ~visited) < target) return;
    if (have + bound_(end, visited) < target) return;
    for (; next; next &= next - 1) {
      Vertex w = std::countr_zero(next);
      stack.push_back(w);
      enumerate(stack, visited | bit(w), target, out);
      stack.pop_back();
    }
  }

  void emit(const std::vector<Vertex>& stack, VertexMask visited, int target, RootHarvest& out) {
    ++out.count;
    if (out.flat.size() < opt_.cap * static_cast<std::size_t>(target)) {
      for (Vertex v : stack) out.flat.push_back(static_cast<std::uint8_t>(v));
    } else {
      out.overflow = true;
    }
    if (!out.sets_overflow) {
      out.sets.insert(visited);
      if (out.sets.size() > opt_.set_cap) out.sets_overflow = true;
    }
  }

  const Graph& g_;
  const CensusOptions& opt_;
  ExtensionBound bound_;
  std::uint64_t ticks_ = 0;
};

inline void finalize_sets(LongestPathCensus& c, std::unordered_set<VertexMask>& sets, bool overflow,
                          std::size_t set_cap) {
  c.vertex_sets.assign(sets.begin(), sets.end());
  std::sort(c.vertex_sets.begin(), c.vertex_sets.end());
  c.sets_complete = !overflow && c.vertex_sets.size() <= set_cap;
  if (!c.sets_complete) c.vertex_sets.clear();
}

}  // namespace detail

// Exact longest paths by depth-first search over simple paths, pruned by
// reachability and separator-stretch bounds. A first pass finds L, a
// second pass enumerates every path with L edges. Roots are independent
// subtrees and may be searched by `opt.jobs` threads; the merged census
// is identical for any schedule.
inline LongestPathCensus longest_path_dfs(const Graph& g, const CensusOptions& opt = {}) {
  g.require_exact("longest_path_dfs");
  if (opt.cap == 0) throw PreconditionError("census cap must be positive");
  LongestPathCensus census;
  census.graph_id = GraphId::of(g).id;
  census.engine = "dfs";
  if (g.n() == 0) return census;

  const int target = detail::DfsSearch(g, opt).find_max_vertices();
  census.L = target - 1;

  std::vector<detail::RootHarvest> harvest(static_cast<std::size_t>(g.n()));
  const int jobs = std::max(1, std::min(opt.jobs, g.n()));
  if (jobs == 1) {
    detail::DfsSearch search(g, opt);
    for (Vertex root = 0; root < g.n(); ++root) search.harvest(root, target, harvest[root]);
  } else {
    std::atomic<int> next_root{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        try {
          detail::DfsSearch search(g, opt);
          for (int root; (root = next_root.fetch_add(1)) < g.n();) {
            search.harvest(root, target, harvest[root]);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next_root.store(g.n());
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::unordered_set<VertexMask> sets;
  bool sets_overflow = false;
  for (auto& h : harvest) {
    census.count += h.count;
    census.truncated = census.truncated || h.overflow;
    for (std::size_t off = 0; off < h.flat.size(); off += static_cast<std::size_t>(target)) {
      if (census.paths.size() == opt.cap) {
        census.truncated = true;
        break;
      }
      census.paths.emplace_back(std::vector<Vertex>(h.flat.begin() + static_cast<std::ptrdiff_t>(off),
                                                    h.flat.begin() + static_cast<std::ptrdiff_t>(off) + target));
    }
    h.flat = {};
    sets_overflow = sets_overflow || h.sets_overflow;
    if (!sets_overflow) sets.insert(h.sets.begin(), h.sets.end());
    h.sets = {};
    if (sets.size() > opt.set_cap) sets_overflow = true;
  }
  detail::finalize_sets(census, sets, sets_overflow, opt.set_cap);
  return census;
}

// Independent oracle: Held-Karp style reachability over (vertex set,
// endpoint) states, then backtracking through the state table to list
// every longest path. Limited to 20 vertices.
inline LongestPathCensus longest_path_dp(const Graph& g, const CensusOptions& opt = {}) {
  if (g.n() > kMaxDpVertices) {
    throw TooLargeError("longest_path_dp supports at most " + std::to_string(kMaxDpVertices) +
                        " vertices, graph has " + std::to_string(g.n()));
  }
  if (opt.cap == 0) throw PreconditionError("census cap must be positive");
  LongestPathCensus census;
  census.graph_id = GraphId::of(g).id;
  census.engine = "dp";
  const int n = g.n();
  if (n == 0) return census;

  // ends[S] has bit v set when some path with vertex set S ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) ends[bit(v)] = static_cast<std::uint32_t>(bit(v));
  int best = 1;
  for (std::uint32_t s = 1; s < ends.size(); ++s) {
    if (!ends[s]) continue;
    best = std::max(best, std::popcount(s));
    for (std::uint32_t e = ends[s]; e; e &= e - 1) {
      Vertex v = std::countr_zero(e);
      for (VertexMask w = g.neighbor_mask(v) & ~VertexMask{s}; w; w &= w - 1) {
        Vertex x = std::countr_zero(w);
        ends[s | (1U << x)] |= 1U << x;
      }
    }
  }
  census.L = best - 1;

  std::vector<Path> kept;
  std::unordered_set<VertexMask> sets;
  std::vector<Vertex> rev;  // path built backwards from its last vertex
  std::uint64_t ticks = 0;
  auto keep_smallest = [&] {
    std::sort(kept.begin(), kept.end());
    if (kept.size() > opt.cap) {
      kept.resize(opt.cap);
      census.truncated = true;
    }
  };
  auto backtrack = [&](auto&& self, std::uint32_t s, Vertex v) -> void {
    if (opt.deadline && (++ticks & 0xfff) == 0) opt.deadline->check("longest_path_dp");
    rev.push_back(v);
    const std::uint32_t before = s & ~(1U << v);
    if (!before) {
      // rev holds the path from its last vertex back to its first.
      if (rev.size() == 1 || rev.back() < rev.front()) {
        ++census.count;
        kept.emplace_back(std::vector<Vertex>(rev.rbegin(), rev.rend()));
        if (kept.size() >= 2 * opt.cap) keep_smallest();
      }
    } else {
      for (std::uint32_t e = ends[before] & static_cast<std::uint32_t>(g.neighbor_mask(v)); e; e &= e - 1) {
        self(self, before, std::countr_zero(e));
      }
    }
    rev.pop_back();
  };
  for (std::uint32_t s = 1; s < ends.size(); ++s) {
    if (std::popcount(s) != best || !ends[s]) continue;
    sets.insert(s);
    for (std::uint32_t e = ends[s]; e; e &= e - 1) backtrack(backtrack, s, std::countr_zero(e));
  }
  keep_smallest();
  census.paths = std::move(kept);
  detail::finalize_sets(census, sets, false, opt.set_cap);
  return census;
}

enum class Engine { automatic, dfs, dp };

inline LongestPathCensus longest_paths(const Graph& g, Engine engine, const CensusOptions& opt = {}) {
  switch (engine) {
    case Engine::dp:
      return longest_path_dp(g, opt);
    case Engine::dfs:
    case Engine::automatic:
      break;
  }
  return longest_path_dfs(g, opt);
}

struct MinIntersection {
  int value = 0;
  // Set when the census was incomplete and `value` only bounds the true minimum from above.
  bool upper_bound = false;
  VertexMask first = 0;
  VertexMask second = 0;
};

// Minimum |V(P) ∩ V(Q)| over unordered pairs of longest paths; a lone
// path is paired with itself. Only vertex sets matter, so the minimum is
// taken over pairs of distinct vertex sets.
inline MinIntersection min_pairwise_intersection(const LongestPathCensus& c, bool allow_upper_bound = false) {
  if (c.count == 0) throw PreconditionError("min_pairwise_intersection on an empty census");
  std::vector<VertexMask> sets = c.vertex_sets;
  bool partial = !c.sets_complete;
  if (partial) {
    if (!allow_upper_bound) {
      throw PreconditionError("census vertex sets are truncated; minimum would only be an upper bound");
    }
    for (const Path& p : c.paths) sets.push_back(p.mask());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  }
  MinIntersection out;
  out.upper_bound = partial;
  out.value = c.L + 1;
  out.first = out.second = sets.empty() ? 0 : sets.front();
  for (std::size_t i = 0; i < sets.size() && out.value > 0; ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      int shared = popcount(sets[i] & sets[j]);
      if (shared < out.value) {
        out = {shared, partial, sets[i], sets[j]};
        if (shared == 0) break;
      }
    }
  }
  return out;
}

// Searches for a Hamiltonian cycle directly: paths from vertex 0 that
// must return to a neighbor of 0, pruned when the unvisited part falls
// apart or loses contact with the closing neighbors.
inline bool hamiltonian_cycle_search(const Graph& g, const Deadline* deadline = nullptr) {
  g.require_exact("hamiltonian_cycle_search");
  const int n = g.n();
  if (n < 3) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return false;
  }
  const VertexMask closers = g.neighbor_mask(0);
  std::uint64_t ticks = 0;
  auto grow = [&](auto&& self, Vertex end, VertexMask visited, int have) -> bool {
    if (deadline && (++ticks & 0xfff) == 0) deadline->check("hamiltonian_cycle_search");
    if (have == n) return (closers & bit(end)) != 0;
    const VertexMask alive = g.all_mask() & ~visited;
    if (!(alive & closers)) return false;
    const VertexMask next = g.neighbor_mask(end) & alive;
    if (!next) return false;
    if (reach_within(g, next, alive) != alive) return false;
    for (VertexMask w = next; w; w &= w - 1) {
      Vertex x = std::countr_zero(w);
      if (self(self, x, visited | bit(x), have + 1)) return true;
    }
    return false;
  };
  return grow(grow, 0, bit(0), 1);
}

// A Hamiltonian cycle exists iff some Hamiltonian path has adjacent ends,
// so an exhaustive census answers directly; otherwise fall back to search.
inline bool has_hamiltonian_cycle(const Graph& g, const LongestPathCensus& c, const Deadline* deadline = nullptr) {
  if (g.n() < 3 || c.L < g.n() - 1) return false;
  for (const Path& p : c.paths) {
    if (g.has_edge(p.front(), p.back())) return true;
  }
  if (!c.truncated) return false;
  return hamiltonian_cycle_search(g, deadline);
}

}  // namespace lplab

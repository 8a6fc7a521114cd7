#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lplab/connectivity.hpp"
#include "lplab/errors.hpp"
#include "lplab/graph.hpp"
#include "lplab/path.hpp"

namespace lplab {

// A member of the tight family: separator S = {s_1..s_k} joined to every
// other vertex, plus 2(k+1) disjoint chains of `ell` vertices (the a- and
// b-chains). Two longest paths threading the a-chains and the b-chains
// through S meet exactly in S.
//
// Numbering: s_i = i-1, then a-chains row-major, then b-chains.
struct FamilySpec {
  int k = 0;
  int ell = 0;
  Graph graph;
  std::vector<std::string> labels;
  Path witness_p;
  Path witness_q;
};

namespace detail {

inline void require_positive(int value, const char* name) {
  if (value < 1) throw PreconditionError(std::string(name) + " must be at least 1");
}

}  // namespace detail

inline FamilySpec tight_family(int k, int ell) {
  detail::require_positive(k, "k");
  detail::require_positive(ell, "ell");
  const int chains = k + 1;
  const int n = k + 2 * ell * chains;
  if (n > 4096) throw PreconditionError("tight family too large");
  auto s = [](int i) { return i - 1; };
  auto a = [&](int i, int j) { return k + (i - 1) * ell + (j - 1); };
  auto b = [&](int i, int j) { return k + chains * ell + (i - 1) * ell + (j - 1); };

  FamilySpec spec;
  spec.k = k;
  spec.ell = ell;
  spec.labels.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= k; ++i) spec.labels[s(i)] = "s_" + std::to_string(i);
  std::vector<Edge> edges;
  for (int i = 1; i <= chains; ++i) {
    for (int j = 1; j <= ell; ++j) {
      spec.labels[a(i, j)] = "a_" + std::to_string(i) + "_" + std::to_string(j);
      spec.labels[b(i, j)] = "b_" + std::to_string(i) + "_" + std::to_string(j);
      if (j < ell) {
        edges.emplace_back(a(i, j), a(i, j + 1));
        edges.emplace_back(b(i, j), b(i, j + 1));
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (Vertex v = k; v < n; ++v) edges.emplace_back(s(i), v);
  }
  spec.graph = Graph(n, std::move(edges));

  auto thread_chains = [&](auto chain_vertex) {
    std::vector<Vertex> seq;
    for (int i = 1; i <= chains; ++i) {
      for (int j = 1; j <= ell; ++j) seq.push_back(chain_vertex(i, j));
      if (i <= k) seq.push_back(s(i));
    }
    return Path(std::move(seq));
  };
  spec.witness_p = thread_chains(a);
  spec.witness_q = thread_chains(b);
  return spec;
}

// K_{a,b}; left side is 0..a-1.
inline Graph complete_bipartite(int a, int b) {
  detail::require_positive(a, "a");
  detail::require_positive(b, "b");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph(a + b, std::move(edges));
}

struct GenerationResult {
  std::optional<Graph> graph;
  int tries = 0;
  int rejected = 0;

  double acceptance_rate() const { return tries == 0 ? 0.0 : double(tries - rejected) / tries; }
};

namespace detail {

// Uniform integer in [0, bound) by rejection; portable across standard libraries.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace detail

// Rejection sampler over graphs with exactly m edges chosen uniformly from
// all vertex pairs; accepts the first sample with connectivity >= k_min.
inline GenerationResult random_k_connected(int n, int m, int k_min, std::uint64_t seed, int max_tries) {
  if (n < 2) throw PreconditionError("random graphs need n >= 2");
  if (k_min < 1) throw PreconditionError("k_min must be at least 1");
  if (max_tries < 1) throw PreconditionError("max_tries must be at least 1");
  const long long pairs = 1LL * n * (n - 1) / 2;
  if (m < 0 || m > pairs) {
    throw PreconditionError("m=" + std::to_string(m) + " outside [0, " + std::to_string(pairs) + "]");
  }
  if (2LL * m < 1LL * k_min * n) {
    throw PreconditionError("m=" + std::to_string(m) + " is below the degree bound ceil(k_min*n/2)");
  }
  if (k_min > n - 1) throw PreconditionError("k_min exceeds n-1");

  std::vector<Edge> all;
  all.reserve(static_cast<std::size_t>(pairs));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::mt19937_64 rng(seed);
  GenerationResult result;
  for (result.tries = 1; result.tries <= max_tries; ++result.tries) {
    for (int i = 0; i < m; ++i) {
      auto j = i + static_cast<std::ptrdiff_t>(detail::draw_below(rng, static_cast<std::uint64_t>(pairs - i)));
      std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    Graph g(n, std::vector<Edge>(all.begin(), all.begin() + m));
    if (vertex_connectivity(g) >= k_min) {
      result.graph = std::move(g);
      return result;
    }
    ++result.rejected;
  }
  result.tries = max_tries;
  return result;
}

}  // namespace lplab

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lplab/connectivity.hpp"
#include "lplab/errors.hpp"
#include "lplab/graph.hpp"
#include "lplab/longest_path.hpp"
#include "lplab/path.hpp"

namespace lplab {

// A k-fan from an off-path vertex q into V(P), with the fan paths ordered
// by where they land on P: attachments[i] = v_{i+1} and
// dist_P(p_1, v_1) < dist_P(p_1, v_2) < ...; fan_paths[i] runs q -> v_{i+1}.
struct FanAgainstPath {
  Path p;
  Vertex q = -1;
  std::vector<Vertex> attachments;
  std::vector<Path> fan_paths;

  int total_fan_length() const {
    int s = 0;
    for (const Path& r : fan_paths) s += r.length();
    return s;
  }
};

struct ClaimVerdict {
  bool pass = true;
  std::string detail;
  // On failure: a path in G longer than the supposedly longest one.
  std::optional<Path> certificate;
};

inline FanAgainstPath build_fan_against_path(const Graph& g, const Path& p, Vertex q, int k) {
  require_valid_path(g, p, "P");
  if (p.contains(q)) throw PreconditionError("fan origin " + std::to_string(q) + " lies on P");
  if (p.size() < k) throw PreconditionError("P has fewer than k vertices");
  auto fan_result = fan(g, q, p.vertices, k);
  if (!fan_result) {
    throw PreconditionError("no " + std::to_string(k) + "-fan from " + std::to_string(q) +
                            " to V(P): connectivity below k");
  }
  FanAgainstPath out{p, q, {}, std::move(fan_result->paths)};
  std::sort(out.fan_paths.begin(), out.fan_paths.end(), [&](const Path& a, const Path& b) {
    return p.index_of(a.back()) < p.index_of(b.back());
  });
  for (const Path& r : out.fan_paths) out.attachments.push_back(r.back());
  return out;
}

namespace detail {

inline void require_longest(const Path& p, int longest_length, const char* name) {
  if (p.length() != longest_length) {
    throw PreconditionError(std::string(name) + " has length " + std::to_string(p.length()) +
                            " but longest paths have length " + std::to_string(longest_length) +
                            "; the claims only hold for longest paths");
  }
}

inline Path concat(std::initializer_list<Path> parts) {
  std::vector<Vertex> out;
  for (const Path& part : parts) {
    auto first = part.vertices.begin();
    if (!out.empty() && !part.empty() && out.back() == part.front()) ++first;
    out.insert(out.end(), first, part.vertices.end());
  }
  return Path(std::move(out));
}

inline ClaimVerdict fail_with(const Graph& g, std::string detail, Path certificate) {
  if (!is_valid_path(g, certificate)) detail += " (certificate " + to_string(certificate) + " is not a path)";
  return {false, std::move(detail), std::move(certificate)};
}

}  // namespace detail

// dist_P(p_1, v_1) >= |R_1| and dist_P(v_k, p_2) >= |R_k|; a failure
// certificate is R_1 + P[v_1, p_2] (or P[p_1, v_k] + R_k reversed).
inline ClaimVerdict check_endpoint_claims(const Graph& g, const FanAgainstPath& f, int longest_length) {
  detail::require_longest(f.p, longest_length, "P");
  if (f.fan_paths.empty()) return {};
  const Path& p = f.p;
  const Path& first = f.fan_paths.front();
  const Path& last = f.fan_paths.back();
  if (path_distance(p, p.front(), first.back()) < first.length()) {
    return detail::fail_with(g, "dist_P(p1,v1) < |R_1|",
                             detail::concat({first, subpath(p, first.back(), p.back())}));
  }
  if (path_distance(p, last.back(), p.back()) < last.length()) {
    return detail::fail_with(g, "dist_P(vk,p2) < |R_k|",
                             detail::concat({subpath(p, p.front(), last.back()), last.reversed()}));
  }
  return {};
}

// dist_P(v_i, v_{i+1}) >= |R_i| + |R_{i+1}| for each consecutive pair;
// a failure certificate is P[p_1,v_i] + R_i^-1 + R_{i+1} + P[v_{i+1},p_2].
inline ClaimVerdict check_gap_claims(const Graph& g, const FanAgainstPath& f, int longest_length) {
  detail::require_longest(f.p, longest_length, "P");
  const Path& p = f.p;
  for (std::size_t i = 0; i + 1 < f.fan_paths.size(); ++i) {
    const Path& ri = f.fan_paths[i];
    const Path& rj = f.fan_paths[i + 1];
    if (path_distance(p, ri.back(), rj.back()) < ri.length() + rj.length()) {
      return detail::fail_with(
          g, "dist_P(v" + std::to_string(i + 1) + ",v" + std::to_string(i + 2) + ") < |R_i|+|R_i+1|",
          detail::concat({subpath(p, p.front(), ri.back()), ri.reversed(), rj, subpath(p, rj.back(), p.back())}));
    }
  }
  return {};
}

// With X = V(P) ∩ V(Q) and q an extreme of Q: a fan path landing on P
// outside X has length >= 2. A length-1 violation R = qb certifies that
// b + Q is longer than Q. Fan paths landing in X are exempt.
inline ClaimVerdict check_detached_fan_claim(const Graph& g, const FanAgainstPath& f, const Path& q_path,
                                            int longest_length) {
  detail::require_longest(q_path, longest_length, "Q");
  if (q_path.front() != f.q && q_path.back() != f.q) {
    throw PreconditionError("fan origin " + std::to_string(f.q) + " is not an extreme of Q");
  }
  const VertexMask shared = f.p.mask() & q_path.mask();
  for (const Path& r : f.fan_paths) {
    if (shared & bit(r.back())) continue;
    if (r.length() < 2) {
      Path oriented = q_path.front() == f.q ? q_path : q_path.reversed();
      return detail::fail_with(g, "fan path " + to_string(r) + " leaves X with length 1",
                               detail::concat({Path{r.back()}, oriented}));
    }
  }
  return {};
}

// Tallies of every claim over a set of configurations.
struct ClaimSummary {
  std::uint64_t configurations = 0;
  std::uint64_t off_path = 0;             // q not on P without any rotation
  std::uint64_t endpoint_failures = 0;
  std::uint64_t gap_failures = 0;
  std::uint64_t detached_failures = 0;
  std::uint64_t chain_failures = 0;      // L >= 2 * sum |R_i|
  std::uint64_t conclusion_failures = 0;  // |X| >= 2k - L/2
  std::uint64_t rotations = 0;
  std::uint64_t rotation_failures = 0;    // neither a usable rotation nor |X| >= k
  bool limited = false;
  std::vector<std::string> failures;      // first few, with certificates

  bool pass() const {
    return endpoint_failures + gap_failures + detached_failures + chain_failures + conclusion_failures +
               rotation_failures ==
           0;
  }
};

struct ClaimSweepOptions {
  std::uint64_t max_configurations = 200000;
  std::size_t max_reported_failures = 8;
};

namespace detail {

class ClaimSweeper {
 public:
  ClaimSweeper(const Graph& g, const LongestPathCensus& c, int k, const ClaimSweepOptions& opt)
      : g_(g), c_(c), k_(k), opt_(opt) {}

  ClaimSummary run() {
    for (std::size_t i = 0; i < c_.paths.size() && !out_.limited; ++i) {
      for (std::size_t j = 0; j < c_.paths.size() && !out_.limited; ++j) {
        if (i == j) continue;
        for (bool front : {true, false}) {
          Path q = front ? c_.paths[j] : c_.paths[j].reversed();
          visit(c_.paths[i], q);
        }
      }
    }
    return std::move(out_);
  }

 private:
  // q_path.front() is the extreme under study.
  void visit(const Path& p, const Path& q_path) {
    if (out_.configurations >= opt_.max_configurations) {
      out_.limited = true;
      return;
    }
    const VertexMask x = p.mask() & q_path.mask();
    const Vertex q = q_path.front();
    if (x & bit(q)) {
      rotate_then_check(p, q_path, x);
    } else {
      ++out_.off_path;
      check(p, q_path);
    }
  }

  void rotate_then_check(const Path& p, const Path& q_path, VertexMask x) {
    // X': successors along Q (from q) of the shared vertices.
    VertexMask successors = 0;
    for (int i = 0; i + 1 < q_path.size(); ++i) {
      if (x & bit(q_path.vertices[i])) successors |= bit(q_path.vertices[i + 1]);
    }
    const Vertex q = q_path.front();
    const VertexMask free = g_.neighbor_mask(q) & ~successors;
    ++out_.rotations;
    if (!free) {
      if (popcount(x) < k_) note_rotation_failure(p, q_path, "all neighbors of q in X' yet |X| < k");
      return;
    }
    const Vertex r = std::countr_zero(free);
    Path rotated = posa_rotate(g_, q_path, r);
    if (rotated.length() != q_path.length() || rotated.mask() != q_path.mask() || (x & bit(rotated.front()))) {
      note_rotation_failure(p, q_path, "rotation at r=" + std::to_string(r) + " did not leave X");
      return;
    }
    check(p, rotated);
  }

  void check(const Path& p, const Path& q_path) {
    ++out_.configurations;
    const int L = c_.L;
    if (p.size() < k_) return;
    FanAgainstPath f = build_fan_against_path(g_, p, q_path.front(), k_);
    tally(check_endpoint_claims(g_, f, L), out_.endpoint_failures, "endpoint", p, q_path);
    tally(check_gap_claims(g_, f, L), out_.gap_failures, "gap", p, q_path);
    tally(check_detached_fan_claim(g_, f, q_path, L), out_.detached_failures, "detached", p, q_path);
    if (L < 2 * f.total_fan_length()) {
      tally({false, "L < 2*sum|R_i|", std::nullopt}, out_.chain_failures, "chain", p, q_path);
    }
    const int shared = popcount(p.mask() & q_path.mask());
    if (2 * shared < 4 * k_ - L) {
      tally({false, "|X| < 2k - L/2", std::nullopt}, out_.conclusion_failures, "conclusion", p, q_path);
    }
  }

  void tally(const ClaimVerdict& v, std::uint64_t& counter, const char* name, const Path& p, const Path& q) {
    if (v.pass) return;
    ++counter;
    if (out_.failures.size() < opt_.max_reported_failures) {
      std::string line = std::string(name) + ": " + v.detail + " for P=" + to_string(p) + " Q=" + to_string(q);
      if (v.certificate) line += " certificate=" + to_string(*v.certificate);
      out_.failures.push_back(std::move(line));
    }
  }

  void note_rotation_failure(const Path& p, const Path& q, const std::string& why) {
    tally({false, why, std::nullopt}, out_.rotation_failures, "rotation", p, q);
  }

  const Graph& g_;
  const LongestPathCensus& c_;
  int k_;
  const ClaimSweepOptions& opt_;
  ClaimSummary out_;
};

}  // namespace detail

// Runs every claim over all ordered pairs (P, Q) of census paths and both
// extremes q of Q. When q lies in X a single rotation is attempted first;
// if every neighbor of q sits in X' the fallback |X| >= k is checked.
inline ClaimSummary sweep_claims(const Graph& g, const LongestPathCensus& c, int k,
                                 const ClaimSweepOptions& opt = {}) {
  g.require_exact("sweep_claims");
  if (c.truncated) throw PreconditionError("claim sweep needs an exhaustive census");
  if (k < 1) throw PreconditionError("claim sweep needs a connected graph (k >= 1)");
  return detail::ClaimSweeper(g, c, k, opt).run();
}

}  // namespace lplab

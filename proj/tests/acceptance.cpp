// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lplab/bounds.hpp"
#include "lplab/connectivity.hpp"
#include "lplab/families.hpp"
#include "lplab/longest_path.hpp"
#include "lplab/path.hpp"
#include "lplab/proof_claims.hpp"
#include "lplab/rational.hpp"
#include "lplab/sweep.hpp"
#include "oracles.hpp"

namespace {

using namespace lplab;

struct Entry {
  std::string name;
  Graph graph;
  int k = 0;
  bool family = false;
  int ell = 0;
};

struct Outcome {
  bool pass = true;
  std::uint64_t checked = 0;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(std::move(why));
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, const std::string& detail, double seconds) {
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " (" << detail << ", "
            << std::fixed;
  std::cout.precision(1);
  std::cout << seconds << " s)\n";
  for (const auto& p : o.problems) std::cout << "       " << p << "\n";
  std::cout.flush();
  if (!o.pass) ++failures;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return detail::splitmix64(a ^ detail::splitmix64(b)); }

// Seeded random connected graphs, 4 <= n <= 10, edge counts spread from trees to 3/4 density.
std::vector<Entry> connected_corpus(int count) {
  std::vector<Entry> out;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const int n = 4 + i % 7;
    const int pairs = n * (n - 1) / 2;
    const int lo = n - 1;
    const int hi = std::max(lo, (3 * pairs) / 4);
    const std::uint64_t seed = mix(1001, static_cast<std::uint64_t>(i));
    const int m = lo + static_cast<int>(seed % static_cast<std::uint64_t>(hi - lo + 1));
    auto r = random_k_connected(n, m, 1, seed, 20000);
    if (!r.graph) continue;
    int k = vertex_connectivity(*r.graph);
    out.push_back({"connected#" + std::to_string(i), std::move(*r.graph), k, false});
  }
  return out;
}

// Seeded random 4-connected graphs, 6 <= n <= 11.
std::vector<Entry> four_connected_corpus(int count) {
  std::vector<Entry> out;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const int n = 6 + i % 6;
    const int pairs = n * (n - 1) / 2;
    const int lo = std::min(pairs, 2 * n + 2);
    const int hi = std::max(lo, (3 * pairs) / 5);
    const std::uint64_t seed = mix(4004, static_cast<std::uint64_t>(i));
    const int m = lo + static_cast<int>(seed % static_cast<std::uint64_t>(hi - lo + 1));
    auto r = random_k_connected(n, m, 4, seed, 50000);
    if (!r.graph) continue;
    int k = vertex_connectivity(*r.graph);
    out.push_back({"4-connected#" + std::to_string(i), std::move(*r.graph), k, false});
  }
  return out;
}

std::vector<Entry> family_corpus() {
  std::vector<Entry> out;
  for (int k = 1; k <= 4; ++k) {
    for (int ell = 1; ell <= 3; ++ell) {
      out.push_back({"tight_k" + std::to_string(k) + "_l" + std::to_string(ell), tight_family(k, ell).graph, k, true, ell});
    }
  }
  for (int k = 1; k <= 4; ++k) {
    out.push_back({"K_" + std::to_string(k) + "," + std::to_string(2 * k + 2), complete_bipartite(k, 2 * k + 2), k,
                   true});
  }
  return out;
}

LongestPathCensus census_of(const Graph& g, std::uint64_t cap = 100000) {
  CensusOptions opt;
  opt.cap = cap;
  return longest_paths(g, Engine::automatic, opt);
}

}  // namespace

int main() {
  Timer total;
  std::cout << "building corpora..." << std::endl;
  const std::vector<Entry> connected = connected_corpus(600);
  const std::vector<Entry> four = four_connected_corpus(220);
  const std::vector<Entry> families = family_corpus();
  std::vector<const Entry*> corpus;
  for (const auto& e : connected) corpus.push_back(&e);
  for (const auto& e : four) corpus.push_back(&e);
  for (const auto& e : families) corpus.push_back(&e);

  // Census and minimum intersection for every corpus graph, computed once.
  std::map<const Entry*, LongestPathCensus> censuses;
  std::map<const Entry*, int> minima;
  {
    Timer t;
    for (const Entry* e : corpus) {
      LongestPathCensus c = census_of(e->graph);
      minima[e] = min_pairwise_intersection(c).value;
      censuses.emplace(e, std::move(c));
    }
    std::cout << "censused " << corpus.size() << " graphs in " << t.seconds() << " s" << std::endl;
  }

  // 1. Tight families.
  {
    Timer t;
    Outcome o;
    for (const auto& e : families) {
      if (e.ell == 0) continue;
      FamilySpec f = tight_family(e.k, e.ell);
      const auto& c = censuses.at(&e);
      const int kappa = vertex_connectivity(e.graph);
      const int vertices = c.L + 1;
      const int want_vertices = f.k + f.ell * (f.k + 1);
      ++o.checked;
      if (kappa != f.k || vertices != want_vertices || minima.at(&e) != f.k || !c.sets_complete) {
        std::ostringstream s;
        s << e.name << ": kappa=" << kappa << " vertices=" << vertices << " (want " << want_vertices
          << ") min=" << minima.at(&e);
        o.fail(s.str());
      }
    }
    const auto& big = censuses.at(&families[11]);
    report(1, "tight families (k,ell) in 1..4 x 1..3 have connectivity k, k+ell(k+1) path vertices, min intersection k",
           o,
           std::to_string(o.checked) + " families; k=4 ell=3 has " + std::to_string(big.count) + " longest paths",
           t.seconds());
  }

  // 2. K_{k,2k+2}.
  {
    Timer t;
    Outcome o;
    for (int k = 1; k <= 4; ++k) {
      const Entry& e = families[12 + static_cast<std::size_t>(k - 1)];
      ++o.checked;
      if (minima.at(&e) != k) o.fail(e.name + ": min=" + std::to_string(minima.at(&e)));
    }
    report(2, "K_{k,2k+2} has min intersection exactly k for k=1..4", o, "4 graphs", t.seconds());
  }

  // 3. Combined bound over connected graphs plus families.
  {
    Timer t;
    Outcome o;
    int equalities = 0;
    std::uint64_t eligible = 0;
    for (const Entry* e : corpus) {
      if (!e->family && e->name.rfind("connected#", 0) != 0) continue;
      ++eligible;
      const int need = effective_bound(bound_main(e->graph.n(), e->k), e->k >= 1);
      ++o.checked;
      if (minima.at(e) < need) o.fail(e->name + ": min=" + std::to_string(minima.at(e)) + " < " + std::to_string(need));
      if (minima.at(e) == need) ++equalities;
    }
    report(3, "min intersection >= max(1, ceil((8k-n+2)/5)) on random connected graphs (n<=10) and families", o,
           std::to_string(eligible) + " graphs, " + std::to_string(equalities) + " at equality", t.seconds());
  }

  // 4. Four-connected graphs.
  {
    Timer t;
    Outcome o;
    std::map<int, int> by_n;
    for (const auto& e : four) {
      ++o.checked;
      ++by_n[e.graph.n()];
      if (e.k < 4) o.fail(e.name + ": generator returned connectivity " + std::to_string(e.k));
      if (minima.at(&e) < 4) o.fail(e.name + ": min=" + std::to_string(minima.at(&e)));
    }
    std::string spread;
    for (auto [n, c] : by_n) spread += (spread.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(c);
    report(4, "min intersection >= 4 on random 4-connected graphs with 6<=n<=11", o,
           std::to_string(o.checked) + " graphs, n:count " + spread, t.seconds());
  }

  // 5. DFS and DP engines agree.
  {
    Timer t;
    Outcome o;
    std::uint64_t paths = 0;
    for (const Entry* e : corpus) {
      if (e->graph.n() > 12) continue;
      CensusOptions opt;
      opt.cap = 5'000'000;
      auto dfs = longest_path_dfs(e->graph, opt);
      auto dp = longest_path_dp(e->graph, opt);
      ++o.checked;
      paths += dfs.count;
      if (dfs.truncated || dp.truncated) {
        o.fail(e->name + ": census exceeded the comparison cap");
      } else if (dfs.L != dp.L || dfs.count != dp.count || dfs.paths != dp.paths) {
        o.fail(e->name + ": L " + std::to_string(dfs.L) + "/" + std::to_string(dp.L) + " count " +
               std::to_string(dfs.count) + "/" + std::to_string(dp.count));
      }
    }
    report(5, "DFS and DP engines agree on L, count and canonical path set for n<=12", o,
           std::to_string(o.checked) + " graphs, " + std::to_string(paths) + " paths compared", t.seconds());
  }

  // 6. Flow connectivity against brute-force cuts.
  {
    Timer t;
    Outcome o;
    for (const Entry* e : corpus) {
      if (e->graph.n() > 9) continue;
      ++o.checked;
      int brute = oracle::min_vertex_cut(e->graph);
      if (brute != e->k) o.fail(e->name + ": flow " + std::to_string(e->k) + " brute " + std::to_string(brute));
    }
    report(6, "flow connectivity equals brute-force minimum cut for n<=9", o, std::to_string(o.checked) + " graphs",
           t.seconds());
  }

  // 7. Without a Hamiltonian cycle, L >= 2k.
  {
    Timer t;
    Outcome o;
    std::uint64_t eligible = 0;
    for (const Entry* e : corpus) {
      if (e->k < 1 || e->graph.n() < 3) continue;
      const auto& c = censuses.at(e);
      if (has_hamiltonian_cycle(e->graph, c)) continue;
      ++eligible;
      ++o.checked;
      if (c.L < 2 * e->k) o.fail(e->name + ": L=" + std::to_string(c.L) + " k=" + std::to_string(e->k));
    }
    report(7, "k-connected graphs without a Hamiltonian cycle have L >= 2k", o,
           std::to_string(eligible) + " non-Hamiltonian graphs", t.seconds());
  }

  // 8. No exchange configuration between intersecting longest paths; exchange identity.
  {
    Timer t;
    Outcome o;
    std::uint64_t graphs = 0;
    std::uint64_t searched = 0;
    std::uint64_t vacuous = 0;
    for (const Entry* e : corpus) {
      if (e->graph.n() > 9) continue;
      ++graphs;
      CensusOptions opt;
      opt.cap = 5'000'000;
      auto c = longest_path_dfs(e->graph, opt);
      if (c.truncated) {
        o.fail(e->name + ": census too large to pair");
        continue;
      }
      // Paths with equal vertex sets leave nothing on P outside Q, so no
      // configuration can exist; count those pairs, search all others.
      std::map<VertexMask, std::vector<const Path*>> groups;
      for (const Path& p : c.paths) groups[p.mask()].push_back(&p);
      for (auto a = groups.begin(); a != groups.end(); ++a) {
        const std::uint64_t s = a->second.size();
        vacuous += s * (s - 1) / 2;
        for (auto b = std::next(a); b != groups.end(); ++b) {
          if ((a->first & b->first) == 0) continue;
          for (const Path* p : a->second) {
            for (const Path* q : b->second) {
              ++searched;
              if (auto found = find_exchange_config(e->graph, *p, *q)) {
                o.fail(e->name + ": configuration between " + to_string(*p) + " and " + to_string(*q));
              }
            }
          }
        }
      }
    }
    std::mt19937 rng(2024);
    int synthetic = 0;
    for (int i = 0; i < 100; ++i) {
      auto [g, cfg, bridge] = oracle::synthetic_exchange(rng);
      if (!exchange_defect(g, cfg).empty()) {
        o.fail("synthetic #" + std::to_string(i) + " invalid: " + exchange_defect(g, cfg));
        continue;
      }
      auto [p2, q2] = exchange(g, cfg);
      ++synthetic;
      if (p2.length() + q2.length() != cfg.p.length() + cfg.q.length() + 2 * cfg.r.length() ||
          !is_valid_path(g, p2) || !is_valid_path(g, q2)) {
        o.fail("synthetic #" + std::to_string(i) + ": length identity broken");
      }
    }
    report(8, "no exchange configuration between intersecting longest paths (n<=9); exchange length identity", o,
           std::to_string(graphs) + " graphs, " + std::to_string(searched) + " pairs searched, " +
               std::to_string(vacuous) + " same-vertex-set pairs, " + std::to_string(synthetic) +
               " synthetic identities",
           t.seconds());
  }

  // 9. Fan/path claims over every configuration.
  {
    Timer t;
    Outcome o;
    std::uint64_t graphs = 0;
    ClaimSummary sum;
    ClaimSweepOptions opt;
    opt.max_configurations = 1'000'000;
    for (const Entry* e : corpus) {
      if (e->k < 2) continue;
      const auto& c = censuses.at(e);
      if (c.truncated || c.count > 200) continue;
      ClaimSummary s = sweep_claims(e->graph, c, e->k, opt);
      ++graphs;
      sum.configurations += s.configurations;
      sum.rotations += s.rotations;
      sum.off_path += s.off_path;
      if (s.limited) o.fail(e->name + ": configuration limit reached");
      if (!s.pass()) {
        o.fail(e->name + ": " + (s.failures.empty() ? std::string("failure") : s.failures.front()));
      }
    }
    if (graphs < 100) o.fail("only " + std::to_string(graphs) + " eligible graphs");
    if (sum.off_path == 0) o.fail("no configuration had its extreme q off P");
    report(9, "endpoint, gap and detached fan claims and |X| >= 2k - L/2 over all configurations (k>=2)", o,
           std::to_string(graphs) + " graphs, " + std::to_string(sum.configurations) + " configurations, " +
               std::to_string(sum.off_path) + " with q off P, " + std::to_string(sum.rotations) + " rotations",
           t.seconds());
  }

  // 10. Minimax identity in exact arithmetic.
  {
    Timer t;
    Outcome o;
    for (int n = 1; n <= 200; ++n) {
      for (int k = 1; k <= n; ++k) {
        const Rational main = bound_main(n, k);
        for (int L = 2 * k; L <= n - 1; ++L) {
          ++o.checked;
          if (max(bound_prop3(n, L), bound_lemma4(k, L)) < main) {
            o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " L=" + std::to_string(L));
          }
        }
      }
    }
    report(10, "max(2L+2-n, 2k-L/2) >= (8k-n+2)/5 for 1<=k<=n<=200, 2k<=L<=n-1", o,
           std::to_string(o.checked) + " triples", t.seconds());
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << total.seconds() << " s\n";
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lplab/connectivity.hpp"
#include "lplab/deadline.hpp"
#include "lplab/errors.hpp"
#include "lplab/graph.hpp"
#include "lplab/longest_path.hpp"
#include "lplab/proof_claims.hpp"
#include "lplab/rational.hpp"

namespace lplab {

// |V(P) ∩ V(Q)| >= 2L + 2 - n: both paths have L+1 vertices inside n.
inline Rational bound_prop3(int n, int L) { return Rational(2 * L + 2 - n); }

// |V(P) ∩ V(Q)| >= 2k - L/2, from fans into a longest path.
inline Rational bound_lemma4(int k, int L) { return Rational(4 * k - L, 2); }

// |V(P) ∩ V(Q)| >= (8k - n + 2)/5, the best of the two bounds above over L.
inline Rational bound_main(int n, int k) { return Rational(8 * k - n + 2, 5); }

// At or above (n-2)/3 the two simple bounds already give k shared vertices.
inline Rational corollary_threshold(int n) { return Rational(n - 2, 3); }

// Threshold of the dense-graph conjecture, k >= n/4.
inline Rational dense_conjecture_threshold(int n) { return Rational(n, 4); }

// Integer bound actually compared: intersection sizes are integers, and
// two longest paths in a connected graph always meet.
inline int effective_bound(Rational bound, bool connected) {
  if (!connected) return 0;
  return static_cast<int>(std::max<std::int64_t>(1, bound.ceil()));
}

enum class Verdict { not_applicable, pass, equality, fail };

inline char verdict_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 'P';
    case Verdict::equality:
      return 'E';
    case Verdict::fail:
      return 'F';
    case Verdict::not_applicable:
      break;
  }
  return '-';
}

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::equality:
      return "pass-at-equality";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      break;
  }
  return "n/a";
}

inline Verdict compare(long long measured, long long required) {
  if (measured < required) return Verdict::fail;
  return measured == required ? Verdict::equality : Verdict::pass;
}

// Proven statements fail only through bugs; conjectures can fail for real.
enum class ClaimKind { theorem, conjecture };

struct VerdictEntry {
  std::string name;
  ClaimKind kind = ClaimKind::theorem;
  Verdict verdict = Verdict::not_applicable;
  long long required = 0;
  long long measured = 0;
};

struct StageTimes {
  double connectivity_ms = 0;
  double census_ms = 0;
  double intersection_ms = 0;
  double hamiltonian_ms = 0;
  double claims_ms = 0;
  double total_ms = 0;
};

struct BoundReport {
  std::string graph_id;
  int n = 0;
  int m = 0;
  int k = 0;
  int L = 0;
  std::uint64_t census_count = 0;
  bool census_truncated = false;
  std::string engine;
  int min_intersection = 0;
  bool min_is_upper_bound = false;
  bool connected = true;
  Rational bound_prop3{0};
  Rational bound_lemma4{0};
  Rational bound_main{0};
  int bound_hippchen = 0;
  Rational corollary_threshold{0};
  Rational dense_threshold{0};
  bool hamiltonian_cycle = false;
  bool hamiltonian_path = false;
  std::vector<VerdictEntry> verdicts;
  std::optional<ClaimSummary> proof_claims;
  StageTimes elapsed;

  const VerdictEntry* find(const std::string& name) const {
    for (const auto& v : verdicts) {
      if (v.name == name) return &v;
    }
    return nullptr;
  }

  bool theorem_failure() const {
    bool bad = proof_claims && !proof_claims->pass();
    for (const auto& v : verdicts) bad = bad || (v.kind == ClaimKind::theorem && v.verdict == Verdict::fail);
    return bad;
  }

  bool conjecture_failure() const {
    for (const auto& v : verdicts) {
      if (v.kind == ClaimKind::conjecture && v.verdict == Verdict::fail) return true;
    }
    return false;
  }

  // 0 all pass, 2 a proven bound failed (implementation bug), 3 a conjecture candidate.
  int exit_code() const {
    if (theorem_failure()) return 2;
    return conjecture_failure() ? 3 : 0;
  }

  std::vector<std::string> equalities() const {
    std::vector<std::string> out;
    for (const auto& v : verdicts) {
      if (v.verdict == Verdict::equality) out.push_back(v.name);
    }
    return out;
  }

  std::string verdict_flags() const {
    std::string s;
    for (const auto& v : verdicts) {
      if (!s.empty()) s += ';';
      s += v.name + "=" + verdict_code(v.verdict);
    }
    if (min_is_upper_bound) s += ";min=ub";
    if (proof_claims) s += std::string(";claims=") + (proof_claims->pass() ? 'P' : 'F');
    return s;
  }
};

struct EvaluateOptions {
  Engine engine = Engine::automatic;
  CensusOptions census;
  bool allow_truncated = false;
  bool proof_claims = false;
  ClaimSweepOptions claims;
  std::optional<std::string> name;
};

namespace detail {

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

// Fills every verdict of a report from already measured quantities.
inline void apply_verdicts(BoundReport& r) {
  const bool connected = r.connected;
  const int k = r.k;
  const int mi = r.min_intersection;
  auto add = [&](const char* name, ClaimKind kind, bool applies, long long measured, long long required) {
    VerdictEntry e{name, kind, Verdict::not_applicable, required, measured};
    if (applies) e.verdict = compare(measured, required);
    r.verdicts.push_back(std::move(e));
  };
  r.verdicts.clear();
  // A Hamiltonian cycle needs at least 3 vertices; K_2 is excluded.
  add("prop2", ClaimKind::theorem, k >= 1 && r.n >= 3 && !r.hamiltonian_cycle, r.L, 2LL * k);
  add("prop3", ClaimKind::theorem, true, mi, effective_bound(r.bound_prop3, connected));
  add("lemma4", ClaimKind::theorem, k >= 1, mi, effective_bound(r.bound_lemma4, connected));
  add("main", ClaimKind::theorem, k >= 1, mi, effective_bound(r.bound_main, connected));
  add("corollary", ClaimKind::theorem, k >= 1 && Rational(k) >= r.corollary_threshold, mi, k);
  add("theorem7", ClaimKind::theorem, k >= 4, mi, 4);
  add("hippchen", ClaimKind::conjecture, k >= 1, mi, k);
  add("conj9", ClaimKind::conjecture, k >= 1 && Rational(k) >= r.dense_threshold, mi, k);
  add("conj10", ClaimKind::conjecture, k >= 5, mi, 5);
}

// Measures n, m, k, L, the census and its minimum pairwise intersection,
// then checks every bound. Throws on engine limits, on an incomplete
// census unless `allow_truncated`, and on timeouts.
inline BoundReport evaluate(const Graph& g, const EvaluateOptions& opt = {}) {
  if (g.n() < 1) throw PreconditionError("evaluate needs at least one vertex");
  detail::Stopwatch total;
  detail::Stopwatch lap;
  BoundReport r;
  r.graph_id = opt.name ? *opt.name : GraphId::of(g).id;
  r.n = g.n();
  r.m = g.m();
  r.k = g.n() >= 2 ? vertex_connectivity(g) : 0;
  r.connected = g.n() == 1 || r.k >= 1;
  r.elapsed.connectivity_ms = lap.lap_ms();

  LongestPathCensus census = longest_paths(g, opt.engine, opt.census);
  census.graph_id = r.graph_id;
  r.L = census.L;
  r.census_count = census.count;
  r.census_truncated = census.truncated;
  r.engine = census.engine;
  r.elapsed.census_ms = lap.lap_ms();

  MinIntersection mi = min_pairwise_intersection(census, opt.allow_truncated);
  r.min_intersection = mi.value;
  r.min_is_upper_bound = mi.upper_bound;
  r.elapsed.intersection_ms = lap.lap_ms();

  r.hamiltonian_path = r.L == g.n() - 1;
  r.hamiltonian_cycle = has_hamiltonian_cycle(g, census, opt.census.deadline);
  r.elapsed.hamiltonian_ms = lap.lap_ms();

  r.bound_prop3 = bound_prop3(r.n, r.L);
  r.bound_lemma4 = bound_lemma4(r.k, r.L);
  r.bound_main = bound_main(r.n, r.k);
  r.bound_hippchen = r.k;
  r.corollary_threshold = corollary_threshold(r.n);
  r.dense_threshold = dense_conjecture_threshold(r.n);
  apply_verdicts(r);

  if (opt.proof_claims && r.k >= 1 && !census.truncated) {
    r.proof_claims = sweep_claims(g, census, r.k, opt.claims);
    r.elapsed.claims_ms = lap.lap_ms();
  }
  r.elapsed.total_ms = total.lap_ms();
  return r;
}

inline const char* kCsvHeader =
    "graph_id,n,m,k,L,census_count,min_intersection,prop3,lemma4,main,hippchen,ham_cycle,ham_path,"
    "verdict_flags,elapsed_ms";

inline std::string to_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.L << ',' << r.census_count << ','
     << r.min_intersection << ',' << r.bound_prop3 << ',' << r.bound_lemma4 << ',' << r.bound_main << ','
     << r.bound_hippchen << ',' << (r.hamiltonian_cycle ? 1 : 0) << ',' << (r.hamiltonian_path ? 1 : 0) << ','
     << r.verdict_flags() << ',' << std::fixed;
  os.precision(3);
  os << r.elapsed.total_ms;
  return os.str();
}

inline nlohmann::json claims_to_json(const ClaimSummary& c) {
  return {{"pass", c.pass()},
          {"configurations", c.configurations},
          {"off_path", c.off_path},
          {"endpoint_failures", c.endpoint_failures},
          {"gap_failures", c.gap_failures},
          {"detached_failures", c.detached_failures},
          {"chain_failures", c.chain_failures},
          {"conclusion_failures", c.conclusion_failures},
          {"rotations", c.rotations},
          {"rotation_failures", c.rotation_failures},
          {"limited", c.limited},
          {"failures", c.failures}};
}

inline nlohmann::json to_json(const BoundReport& r) {
  auto bound = [&](Rational b) {
    return nlohmann::json{{"exact", b.str()}, {"effective", effective_bound(b, r.connected)}};
  };
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& v : r.verdicts) {
    verdicts[v.name] = {{"verdict", verdict_name(v.verdict)},
                        {"kind", v.kind == ClaimKind::theorem ? "theorem" : "conjecture"},
                        {"required", v.required},
                        {"measured", v.measured}};
  }
  nlohmann::json j = {
      {"graph_id", r.graph_id},
      {"n", r.n},
      {"m", r.m},
      {"k", r.k},
      {"L", r.L},
      {"census_count", r.census_count},
      {"census_truncated", r.census_truncated},
      {"engine", r.engine},
      {"min_intersection", r.min_intersection},
      {"min_intersection_is_upper_bound", r.min_is_upper_bound},
      {"connected", r.connected},
      {"bounds",
       {{"prop3", bound(r.bound_prop3)},
        {"lemma4", bound(r.bound_lemma4)},
        {"main", bound(r.bound_main)},
        {"hippchen", r.bound_hippchen},
        {"corollary_threshold", r.corollary_threshold.str()},
        {"corollary_threshold_n_over_3", Rational(r.n, 3).str()},
        {"dense_threshold", r.dense_threshold.str()}}},
      {"hamiltonian_cycle", r.hamiltonian_cycle},
      {"hamiltonian_path", r.hamiltonian_path},
      {"verdicts", verdicts},
      {"equalities", r.equalities()},
      {"exit_code", r.exit_code()},
      {"elapsed_ms",
       {{"connectivity", r.elapsed.connectivity_ms},
        {"census", r.elapsed.census_ms},
        {"intersection", r.elapsed.intersection_ms},
        {"hamiltonian", r.elapsed.hamiltonian_ms},
        {"claims", r.elapsed.claims_ms},
        {"total", r.elapsed.total_ms}}}};
  if (r.proof_claims) j["proof_claims"] = claims_to_json(*r.proof_claims);
  if (r.theorem_failure()) {
    j["alarm"] = "a proven bound failed: this indicates an implementation bug, not a counterexample";
  }
  return j;
}

inline nlohmann::json census_to_json(const LongestPathCensus& c) {
  nlohmann::json paths = nlohmann::json::array();
  for (const Path& p : c.paths) paths.push_back(p.vertices);
  return {{"graph_id", c.graph_id}, {"L", c.L},          {"count", c.count},
          {"truncated", c.truncated}, {"engine", c.engine}, {"paths", std::move(paths)}};
}

}  // namespace lplab

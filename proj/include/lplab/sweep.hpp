#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lplab/bounds.hpp"
#include "lplab/deadline.hpp"
#include "lplab/errors.hpp"
#include "lplab/families.hpp"
#include "lplab/graph.hpp"
#include "lplab/io.hpp"

namespace lplab {

struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
};

// "5..9", "5-9" or a single "7".
inline IntRange parse_range(const std::string& text) {
  auto fail = [&] { throw PreconditionError("bad range '" + text + "', expected LO..HI"); };
  try {
    std::size_t pos = text.find("..");
    std::size_t skip = 2;
    if (pos == std::string::npos) {
      pos = text.find('-', 1);
      skip = 1;
    }
    if (pos == std::string::npos) {
      std::size_t used = 0;
      int v = std::stoi(text, &used);
      if (used != text.size()) fail();
      return {v, v};
    }
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    std::string lo = text.substr(0, pos);
    std::string hi = text.substr(pos + skip);
    IntRange r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) fail();
    return r;
  } catch (const std::logic_error&) {
    fail();
  }
  return {};
}

struct SweepConfig {
  enum class Kind { random, tight };
  Kind kind = Kind::random;

  // Random corpora: every n in `n`, every m in `m` (or the m implied by
  // `density` of all pairs), `per_cell` seeded graphs each.
  IntRange n{5, 9};
  std::optional<IntRange> m;
  double density = 0.5;
  int k_min = 1;
  int max_tries = 2000;

  // Tight families: every (k, ell) pair.
  IntRange k{1, 4};
  IntRange ell{1, 3};

  std::uint64_t seed = 1;
  int per_cell = 1;
  Engine engine = Engine::automatic;
  std::filesystem::path out_dir = "sweep-out";
  int jobs = 1;
  double time_budget_s = 60.0;
  bool resume = false;
  bool allow_truncated = false;
  bool proof_claims = false;

  void validate() const {
    if (kind == Kind::random) {
      if (n.empty()) throw PreconditionError("empty n range");
      if (n.lo < 2) throw PreconditionError("n range must start at 2 or more");
      if (n.hi > kMaxExactVertices) throw PreconditionError("n range exceeds the exact engine limit");
      if (m && m->empty()) throw PreconditionError("empty m range");
      if (!m && (density <= 0.0 || density > 1.0)) throw PreconditionError("density must be in (0, 1]");
      if (k_min < 1) throw PreconditionError("k_min must be at least 1");
      if (max_tries < 1) throw PreconditionError("max_tries must be at least 1");
    } else {
      if (k.empty() || ell.empty()) throw PreconditionError("empty k or ell range");
      if (k.lo < 1 || ell.lo < 1) throw PreconditionError("k and ell must be at least 1");
    }
    if (per_cell < 1) throw PreconditionError("graphs per cell must be at least 1");
    if (jobs < 1) throw PreconditionError("jobs must be at least 1");
    if (!(time_budget_s > 0.0)) throw PreconditionError("time budget must be positive");
  }
};

struct VerdictTally {
  std::uint64_t pass = 0;
  std::uint64_t equality = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;

  void add(Verdict v) {
    switch (v) {
      case Verdict::pass:
        ++pass;
        break;
      case Verdict::equality:
        ++equality;
        break;
      case Verdict::fail:
        ++fail;
        break;
      case Verdict::not_applicable:
        ++not_applicable;
        break;
    }
  }
};

struct SweepSummary {
  std::uint64_t attempted = 0;
  std::uint64_t completed = 0;
  std::uint64_t timed_out = 0;
  std::uint64_t skipped = 0;             // already present when resuming
  std::uint64_t generation_failures = 0;  // rejection sampler exhausted
  std::uint64_t errors = 0;
  std::map<std::string, VerdictTally> tallies;
  std::vector<std::string> equality_witnesses;  // "graph_id:verdict"
  std::vector<std::string> candidates;
  std::vector<std::string> theorem_failures;
  std::vector<std::string> messages;
  double elapsed_ms = 0;

  int exit_code() const {
    if (!theorem_failures.empty()) return 2;
    return candidates.empty() ? 0 : 3;
  }
};

inline nlohmann::json to_json(const SweepSummary& s) {
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [name, t] : s.tallies) {
    tallies[name] = {{"pass", t.pass}, {"equality", t.equality}, {"fail", t.fail}, {"n/a", t.not_applicable}};
  }
  return {{"attempted", s.attempted},
          {"completed", s.completed},
          {"timed_out", s.timed_out},
          {"skipped", s.skipped},
          {"generation_failures", s.generation_failures},
          {"errors", s.errors},
          {"tallies", tallies},
          {"equality_witnesses", s.equality_witnesses},
          {"candidates", s.candidates},
          {"theorem_failures", s.theorem_failures},
          {"messages", s.messages},
          {"elapsed_ms", s.elapsed_ms}};
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct SweepTask {
  std::string label;
  // Random cells.
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  // Tight families.
  int k = 0;
  int ell = 0;
};

enum class TaskStatus { completed, skipped, timed_out, generation_failed, error };

struct TaskOutcome {
  TaskStatus status = TaskStatus::error;
  std::string graph_id;
  std::optional<BoundReport> report;
  std::string message;
};

inline std::vector<SweepTask> plan(const SweepConfig& cfg) {
  std::vector<SweepTask> tasks;
  if (cfg.kind == SweepConfig::Kind::tight) {
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
      for (int ell = cfg.ell.lo; ell <= cfg.ell.hi; ++ell) {
        tasks.push_back({"tight k=" + std::to_string(k) + " ell=" + std::to_string(ell), 0, 0, 0, k, ell});
      }
    }
    return tasks;
  }
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
    const int pairs = n * (n - 1) / 2;
    const int floor_m = (cfg.k_min * n + 1) / 2;
    IntRange ms;
    if (cfg.m) {
      ms = *cfg.m;
    } else {
      int m = static_cast<int>(std::lround(cfg.density * pairs));
      ms = {m, m};
    }
    for (int m = std::max(ms.lo, floor_m); m <= std::min(ms.hi, pairs); ++m) {
      for (int i = 0; i < cfg.per_cell; ++i) {
        std::uint64_t s = detail::splitmix64(cfg.seed ^ detail::splitmix64(
                                                 (std::uint64_t(n) << 40) ^ (std::uint64_t(m) << 20) ^ std::uint64_t(i)));
        tasks.push_back({"random n=" + std::to_string(n) + " m=" + std::to_string(m) + " #" + std::to_string(i), n, m,
                         s, 0, 0});
      }
    }
  }
  return tasks;
}

inline std::set<std::string> completed_ids(const std::filesystem::path& csv) {
  std::set<std::string> ids;
  std::ifstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    auto comma = line.find(',');
    if (comma != std::string::npos) ids.insert(line.substr(0, comma));
  }
  return ids;
}

// Writes rows strictly in task order so reruns produce identical files.
class OrderedCsvSink {
 public:
  OrderedCsvSink(const std::filesystem::path& path, bool append) {
    const bool fresh = !append || !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    out_.open(path, fresh ? std::ios::trunc : std::ios::app);
    if (!out_) throw Error("cannot open " + path.string() + " for writing");
    if (fresh) out_ << kCsvHeader << '\n' << std::flush;
  }

  void put(std::size_t index, std::optional<std::string> row) {
    std::lock_guard lock(mutex_);
    pending_[index] = std::move(row);
    while (!pending_.empty() && pending_.begin()->first == next_) {
      if (pending_.begin()->second) out_ << *pending_.begin()->second << '\n' << std::flush;
      pending_.erase(pending_.begin());
      ++next_;
    }
  }

 private:
  std::mutex mutex_;
  std::ofstream out_;
  std::size_t next_ = 0;
  std::map<std::size_t, std::optional<std::string>> pending_;
};

inline void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
}

}  // namespace detail

// Graph JSON plus the tight-family extras.
inline nlohmann::json family_to_json(const FamilySpec& f) {
  nlohmann::json j = graph_to_json(f.graph);
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t v = 0; v < f.labels.size(); ++v) labels[std::to_string(v)] = f.labels[v];
  j["labels"] = std::move(labels);
  j["witnesses"] = {f.witness_p.vertices, f.witness_q.vertices};
  j["k"] = f.k;
  j["ell"] = f.ell;
  return j;
}

// Runs `evaluate` over the configured corpus, appending one flushed CSV
// row per completed graph to <out>/reports.csv and writing
// <out>/summary.json at the end. Conjecture candidates are copied with
// their full census to <out>/candidates/, theorem failures to <out>/failures/.
inline SweepSummary run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  namespace fs = std::filesystem;
  detail::Stopwatch clock;
  fs::create_directories(cfg.out_dir);
  const fs::path csv = cfg.out_dir / "reports.csv";
  const std::set<std::string> done = cfg.resume ? detail::completed_ids(csv) : std::set<std::string>{};
  detail::OrderedCsvSink sink(csv, cfg.resume);

  const auto tasks = detail::plan(cfg);
  std::vector<detail::TaskOutcome> outcomes(tasks.size());
  std::mutex quarantine_mutex;

  auto quarantine = [&](const char* dir, const Graph& g, const BoundReport& report, const EvaluateOptions& opt) {
    std::lock_guard lock(quarantine_mutex);
    fs::create_directories(cfg.out_dir / dir);
    CensusOptions full = opt.census;
    full.deadline = nullptr;
    nlohmann::json doc = {{"graph", graph_to_json(g)}, {"report", to_json(report)}};
    try {
      doc["census"] = census_to_json(longest_paths(g, opt.engine, full));
    } catch (const Error& e) {
      doc["census_error"] = e.what();
    }
    detail::write_json_file(cfg.out_dir / dir / (report.graph_id + ".json"), doc);
  };

  auto run_task = [&](std::size_t index) {
    const auto& task = tasks[index];
    auto& out = outcomes[index];
    std::optional<Graph> graph;
    std::optional<std::string> name;
    try {
      if (cfg.kind == SweepConfig::Kind::tight) {
        graph = tight_family(task.k, task.ell).graph;
        name = "tight_k" + std::to_string(task.k) + "_l" + std::to_string(task.ell);
      } else {
        auto gen = random_k_connected(task.n, task.m, cfg.k_min, task.seed, cfg.max_tries);
        if (!gen.graph) {
          out.status = detail::TaskStatus::generation_failed;
          out.message = task.label + ": no " + std::to_string(cfg.k_min) + "-connected sample in " +
                        std::to_string(gen.tries) + " tries";
          sink.put(index, std::nullopt);
          return;
        }
        graph = std::move(gen.graph);
      }
      out.graph_id = name ? *name : GraphId::of(*graph).id;
      if (done.count(out.graph_id)) {
        out.status = detail::TaskStatus::skipped;
        sink.put(index, std::nullopt);
        return;
      }
      Deadline deadline(std::chrono::duration<double>(cfg.time_budget_s));
      EvaluateOptions opt;
      opt.engine = cfg.engine;
      opt.census.deadline = &deadline;
      opt.allow_truncated = cfg.allow_truncated;
      opt.proof_claims = cfg.proof_claims;
      opt.name = out.graph_id;
      BoundReport report = evaluate(*graph, opt);
      if (report.theorem_failure()) quarantine("failures", *graph, report, opt);
      if (report.conjecture_failure()) quarantine("candidates", *graph, report, opt);
      sink.put(index, to_csv_row(report));
      out.report = std::move(report);
      out.status = detail::TaskStatus::completed;
    } catch (const TimeoutError& e) {
      out.status = detail::TaskStatus::timed_out;
      out.message = task.label + " (" + out.graph_id + "): " + e.what();
      sink.put(index, std::nullopt);
    } catch (const std::exception& e) {
      out.status = detail::TaskStatus::error;
      out.message = task.label + ": " + e.what();
      sink.put(index, std::nullopt);
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) run_task(i);
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SweepSummary summary;
  for (const auto& o : outcomes) {
    ++summary.attempted;
    switch (o.status) {
      case detail::TaskStatus::skipped:
        ++summary.skipped;
        continue;
      case detail::TaskStatus::timed_out:
        ++summary.timed_out;
        summary.messages.push_back(o.message);
        continue;
      case detail::TaskStatus::generation_failed:
        ++summary.generation_failures;
        summary.messages.push_back(o.message);
        continue;
      case detail::TaskStatus::error:
        ++summary.errors;
        summary.messages.push_back(o.message);
        continue;
      case detail::TaskStatus::completed:
        break;
    }
    ++summary.completed;
    const BoundReport& r = *o.report;
    for (const auto& v : r.verdicts) {
      summary.tallies[v.name].add(v.verdict);
      if (v.verdict == Verdict::equality) summary.equality_witnesses.push_back(r.graph_id + ":" + v.name);
    }
    if (r.theorem_failure()) summary.theorem_failures.push_back(r.graph_id);
    if (r.conjecture_failure()) summary.candidates.push_back(r.graph_id);
  }
  summary.elapsed_ms = clock.lap_ms();
  detail::write_json_file(cfg.out_dir / "summary.json", to_json(summary));
  return summary;
}

}  // namespace lplab

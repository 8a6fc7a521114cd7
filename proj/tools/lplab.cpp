// lplab: command-line front end for the longest-path intersection lab.
//
//   lplab gen tight --k 2 --ell 1 --out k26.json
//   lplab analyze k26.json
//   lplab sweep --n 5..9 --k-min 4 --density 0.7 --out runs/k4
//   lplab connectivity k26.json
//   lplab fan k4.json --v 0 --s 1,2,3 --k 3
//   lplab rotate g.json --path 0,1,2,3,4 --r 3

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lplab/bounds.hpp"
#include "lplab/connectivity.hpp"
#include "lplab/families.hpp"
#include "lplab/io.hpp"
#include "lplab/path.hpp"
#include "lplab/sweep.hpp"

namespace {

using namespace lplab;

constexpr int kExitUsage = 1;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw PreconditionError("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  return out;
}

Graph read_graph(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  GraphFormat f = format.empty() ? format_from_path(path) : format_from_name(format);
  return load_graph(in, f);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
}

int default_jobs() {
  if (const char* env = std::getenv("LPLAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

Engine engine_from_name(const std::string& name) {
  if (name == "dfs") return Engine::dfs;
  if (name == "dp") return Engine::dp;
  if (name == "auto") return Engine::automatic;
  throw PreconditionError("unknown engine '" + name + "'");
}

void print_table(std::ostream& os, const BoundReport& r) {
  os << "graph " << r.graph_id << ": n=" << r.n << " m=" << r.m << " k=" << r.k << " L=" << r.L << "\n";
  os << "  longest paths: " << r.census_count << (r.census_truncated ? " (stored list truncated)" : "")
     << ", engine " << r.engine << "\n";
  os << "  min pairwise intersection: " << r.min_intersection << (r.min_is_upper_bound ? " (upper bound only)" : "")
     << "\n";
  os << "  hamiltonian cycle: " << (r.hamiltonian_cycle ? "yes" : "no")
     << ", hamiltonian path: " << (r.hamiltonian_path ? "yes" : "no") << "\n";
  os << "  bounds: prop3=" << r.bound_prop3 << " lemma4=" << r.bound_lemma4 << " main=" << r.bound_main
     << " hippchen=" << r.bound_hippchen << "\n";
  for (const auto& v : r.verdicts) {
    os << "  " << std::left << std::setw(10) << v.name << std::setw(18) << verdict_name(v.verdict);
    if (v.verdict != Verdict::not_applicable) os << "measured " << v.measured << " vs required " << v.required;
    os << "\n";
  }
  if (r.proof_claims) {
    os << "  proof claims: " << (r.proof_claims->pass() ? "pass" : "FAIL") << " over "
       << r.proof_claims->configurations << " configurations"
       << (r.proof_claims->limited ? " (stopped at the configuration limit)" : "") << "\n";
    for (const auto& f : r.proof_claims->failures) os << "    " << f << "\n";
  }
  auto eq = r.equalities();
  if (!eq.empty()) {
    os << "  equality:";
    for (const auto& e : eq) os << ' ' << e;
    os << "\n";
  }
  if (r.theorem_failure()) os << "  ALARM: a proven bound failed; this is an implementation bug\n";
  if (r.conjecture_failure()) os << "  CANDIDATE: a conjectured bound failed; re-verify independently\n";
  os << "  elapsed: " << std::fixed << std::setprecision(1) << r.elapsed.total_ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact longest-path intersection lab for k-connected graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph: tight | bipartite | random");
  std::string gen_kind;
  int gen_k = 0, gen_ell = 0, gen_a = 0, gen_b = 0, gen_n = 0, gen_m = 0, gen_kmin = 1, gen_tries = 10000;
  std::uint64_t gen_seed = 1;
  std::string gen_out, gen_format = "json";
  gen->add_option("kind", gen_kind, "tight, bipartite or random")
      ->required()
      ->check(CLI::IsMember({"tight", "bipartite", "random"}));
  gen->add_option("--k", gen_k, "connectivity parameter (tight)");
  gen->add_option("--ell", gen_ell, "chain length (tight)");
  gen->add_option("--a", gen_a, "left side size (bipartite)");
  gen->add_option("--b", gen_b, "right side size (bipartite)");
  gen->add_option("--n", gen_n, "vertex count (random)");
  gen->add_option("--m", gen_m, "edge count (random)");
  gen->add_option("--k-min", gen_kmin, "minimum connectivity (random)");
  gen->add_option("--seed", gen_seed, "seed (random)");
  gen->add_option("--max-tries", gen_tries, "rejection budget (random)");
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");
  gen->add_option("--format", gen_format, "json or edgelist")->check(CLI::IsMember({"json", "edgelist"}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Measure a graph and check every bound");
  std::string an_in, an_input_format, an_format = "table", an_csv, an_json, an_engine = "auto";
  bool an_allow_truncated = false, an_claims = false;
  double an_budget = 0;
  std::size_t an_cap = 100000;
  int an_jobs = default_jobs();
  analyze->add_option("input", an_in, "graph file (.json or edge list)")->required();
  analyze->add_option("--input-format", an_input_format, "json or edgelist (default: by extension)");
  analyze->add_option("--format", an_format, "stdout format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  analyze->add_option("--csv", an_csv, "append the CSV row to this file");
  analyze->add_option("--json", an_json, "write the JSON report to this file");
  analyze->add_option("--engine", an_engine, "auto, dfs or dp")->check(CLI::IsMember({"auto", "dfs", "dp"}));
  analyze->add_option("--cap", an_cap, "stored longest-path cap");
  analyze->add_option("--time-budget", an_budget, "seconds before the search gives up");
  analyze->add_option("--jobs", an_jobs, "search threads (default LPLAB_JOBS or 1)");
  analyze->add_flag("--allow-truncated", an_allow_truncated, "accept an upper-bound minimum");
  analyze->add_flag("--claims", an_claims, "also sweep the fan/path claims over all longest-path pairs");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate a corpus of random graphs or tight families");
  SweepConfig sc;
  std::string sw_n = "5..9", sw_m, sw_k = "1..4", sw_ell = "1..3", sw_engine = "auto", sw_out = "sweep-out";
  bool sw_families = false;
  sc.jobs = default_jobs();
  sweep->add_flag("--families", sw_families, "sweep tight families over --k x --ell");
  sweep->add_option("--n", sw_n, "vertex range, e.g. 5..9");
  sweep->add_option("--m", sw_m, "edge range, e.g. 12..20 (overrides --density)");
  sweep->add_option("--density", sc.density, "edge fraction of all pairs");
  sweep->add_option("--k-min", sc.k_min, "minimum connectivity of random graphs");
  sweep->add_option("--k", sw_k, "k range for --families");
  sweep->add_option("--ell", sw_ell, "ell range for --families");
  sweep->add_option("--seed", sc.seed, "base seed");
  sweep->add_option("--count", sc.per_cell, "graphs per (n, m) cell");
  sweep->add_option("--max-tries", sc.max_tries, "rejection budget per graph");
  sweep->add_option("--engine", sw_engine, "auto, dfs or dp")->check(CLI::IsMember({"auto", "dfs", "dp"}));
  sweep->add_option("--out,-o", sw_out, "output directory");
  sweep->add_option("--jobs", sc.jobs, "worker threads (default LPLAB_JOBS or 1)");
  sweep->add_option("--time-budget", sc.time_budget_s, "seconds per graph");
  sweep->add_flag("--resume", sc.resume, "skip graphs already in reports.csv");
  sweep->add_flag("--allow-truncated", sc.allow_truncated, "accept upper-bound minima");
  sweep->add_flag("--claims", sc.proof_claims, "also sweep the fan/path claims");

  // connectivity
  auto* conn = app.add_subcommand("connectivity", "Vertex connectivity, or disjoint u-v paths");
  std::string cn_in, cn_input_format;
  int cn_u = -1, cn_v = -1, cn_k = 0;
  conn->add_option("input", cn_in, "graph file")->required();
  conn->add_option("--input-format", cn_input_format, "json or edgelist");
  conn->add_option("--u", cn_u, "first endpoint for disjoint paths");
  conn->add_option("--v", cn_v, "second endpoint for disjoint paths");
  conn->add_option("--k", cn_k, "number of disjoint paths");

  // fan
  auto* fan_cmd = app.add_subcommand("fan", "k internally disjoint v-S paths");
  std::string fn_in, fn_input_format, fn_s;
  int fn_v = -1, fn_k = 0;
  fan_cmd->add_option("input", fn_in, "graph file")->required();
  fan_cmd->add_option("--input-format", fn_input_format, "json or edgelist");
  fan_cmd->add_option("--v", fn_v, "fan center")->required();
  fan_cmd->add_option("--s", fn_s, "comma-separated target set")->required();
  fan_cmd->add_option("--k", fn_k, "number of paths")->required();

  // rotate
  auto* rotate = app.add_subcommand("rotate", "Posa rotation at the first vertex of a path");
  std::string rt_in, rt_input_format, rt_path;
  int rt_r = -1;
  rotate->add_option("input", rt_in, "graph file")->required();
  rotate->add_option("--input-format", rt_input_format, "json or edgelist");
  rotate->add_option("--path", rt_path, "comma-separated path")->required();
  rotate->add_option("--r", rt_r, "on-path neighbor of the first vertex")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      GraphFormat fmt = format_from_name(gen_format);
      if (gen_kind == "tight") {
        FamilySpec f = tight_family(gen_k, gen_ell);
        write_text(gen_out, fmt == GraphFormat::json ? family_to_json(f).dump() + "\n" : save_graph(f.graph, fmt));
        (gen_out.empty() ? std::cerr : std::cout) << GraphId::of(f.graph).id << "\n";
        return 0;
      }
      Graph g;
      if (gen_kind == "bipartite") {
        g = complete_bipartite(gen_a, gen_b);
      } else {
        auto r = random_k_connected(gen_n, gen_m, gen_kmin, gen_seed, gen_tries);
        if (!r.graph) {
          std::cerr << "error: exhausted after " << r.tries << " tries (acceptance rate "
                    << r.acceptance_rate() << ")\n";
          return kExitUsage;
        }
        g = std::move(*r.graph);
      }
      write_text(gen_out, save_graph(g, fmt));
      (gen_out.empty() ? std::cerr : std::cout) << GraphId::of(g).id << "\n";
      return 0;
    }

    if (*analyze) {
      Graph g = read_graph(an_in, an_input_format);
      std::optional<Deadline> deadline;
      EvaluateOptions opt;
      opt.engine = engine_from_name(an_engine);
      opt.census.cap = an_cap;
      opt.census.jobs = an_jobs;
      if (an_budget > 0) {
        deadline.emplace(std::chrono::duration<double>(an_budget));
        opt.census.deadline = &*deadline;
      }
      opt.allow_truncated = an_allow_truncated;
      opt.proof_claims = an_claims;
      BoundReport r = evaluate(g, opt);
      if (an_format == "json") {
        std::cout << to_json(r).dump(2) << "\n";
      } else if (an_format == "csv") {
        std::cout << kCsvHeader << "\n" << to_csv_row(r) << "\n";
      } else {
        print_table(std::cout, r);
      }
      if (!an_csv.empty()) {
        bool fresh = !std::filesystem::exists(an_csv) || std::filesystem::file_size(an_csv) == 0;
        std::ofstream out(an_csv, std::ios::app);
        if (fresh) out << kCsvHeader << "\n";
        out << to_csv_row(r) << "\n";
      }
      if (!an_json.empty()) write_text(an_json, to_json(r).dump(2) + "\n");
      return r.exit_code();
    }

    if (*sweep) {
      sc.kind = sw_families ? SweepConfig::Kind::tight : SweepConfig::Kind::random;
      sc.n = parse_range(sw_n);
      if (!sw_m.empty()) sc.m = parse_range(sw_m);
      sc.k = parse_range(sw_k);
      sc.ell = parse_range(sw_ell);
      sc.engine = engine_from_name(sw_engine);
      sc.out_dir = sw_out;
      SweepSummary s = run_sweep(sc);
      std::cout << to_json(s).dump(2) << "\n";
      return s.exit_code();
    }

    if (*conn) {
      Graph g = read_graph(cn_in, cn_input_format);
      if (cn_u >= 0 || cn_v >= 0) {
        auto paths = disjoint_paths(g, cn_u, cn_v, cn_k);
        nlohmann::json j = {{"u", cn_u}, {"v", cn_v}, {"k", cn_k}, {"feasible", paths.has_value()}};
        if (paths) {
          j["paths"] = nlohmann::json::array();
          for (const auto& p : *paths) j["paths"].push_back(p.vertices);
        }
        std::cout << j.dump() << "\n";
        return 0;
      }
      std::cout << vertex_connectivity(g) << "\n";
      return 0;
    }

    if (*fan_cmd) {
      Graph g = read_graph(fn_in, fn_input_format);
      auto r = fan(g, fn_v, parse_int_list(fn_s), fn_k);
      nlohmann::json j = {{"center", fn_v}, {"k", fn_k}, {"feasible", r.has_value()}};
      if (r) {
        j["targets"] = r->targets;
        j["paths"] = nlohmann::json::array();
        for (const auto& p : r->paths) j["paths"].push_back(p.vertices);
      }
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*rotate) {
      Graph g = read_graph(rt_in, rt_input_format);
      Path q(parse_int_list(rt_path));
      require_valid_path(g, q, "--path");
      Path rotated = posa_rotate(g, q, rt_r);
      std::cout << nlohmann::json(rotated.vertices).dump() << "\n";
      return 0;
    }
  } catch (const lplab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lplab/sweep.hpp"

using namespace lplab;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("lplab-test-" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<std::string> csv_rows_without_timing(const fs::path& csv) {
  std::ifstream in(csv);
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(line.substr(0, line.rfind(',')));
  return rows;
}

SweepConfig small_random(const fs::path& out) {
  SweepConfig cfg;
  cfg.kind = SweepConfig::Kind::random;
  cfg.n = {5, 8};
  cfg.density = 0.6;
  cfg.k_min = 2;
  cfg.per_cell = 3;
  cfg.seed = 11;
  cfg.out_dir = out;
  return cfg;
}

}  // namespace

TEST(ParseRange, AcceptedForms) {
  auto r = parse_range("5..9");
  EXPECT_EQ(r.lo, 5);
  EXPECT_EQ(r.hi, 9);
  r = parse_range("5-9");
  EXPECT_EQ(r.lo, 5);
  EXPECT_EQ(r.hi, 9);
  r = parse_range("7");
  EXPECT_EQ(r.lo, 7);
  EXPECT_EQ(r.hi, 7);
  EXPECT_TRUE(parse_range("9..5").empty());
  EXPECT_THROW(parse_range("a..b"), PreconditionError);
  EXPECT_THROW(parse_range("5..9x"), PreconditionError);
  EXPECT_THROW(parse_range(""), PreconditionError);
}

TEST(SweepConfig, RejectsEmptyRanges) {
  SweepConfig cfg;
  cfg.n = parse_range("9..5");
  try {
    cfg.validate();
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "empty n range");
  }
  cfg.n = {5, 6};
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), PreconditionError);
  SweepConfig tight;
  tight.kind = SweepConfig::Kind::tight;
  tight.k = {3, 2};
  EXPECT_THROW(tight.validate(), PreconditionError);
}

TEST(RunSweep, ReproducibleForAFixedSeed) {
  fs::path a = scratch_dir("repro-a");
  fs::path b = scratch_dir("repro-b");
  SweepSummary sa = run_sweep(small_random(a));
  SweepConfig cfg_b = small_random(b);
  cfg_b.jobs = 3;
  SweepSummary sb = run_sweep(cfg_b);
  EXPECT_EQ(sa.completed, sb.completed);
  EXPECT_GT(sa.completed, 0U);
  EXPECT_EQ(sa.exit_code(), 0);
  auto rows_a = csv_rows_without_timing(a / "reports.csv");
  EXPECT_EQ(rows_a, csv_rows_without_timing(b / "reports.csv"));
  EXPECT_EQ(rows_a.size(), sa.completed + 1);
  EXPECT_EQ(rows_a.front() + ",elapsed_ms", kCsvHeader);
  EXPECT_TRUE(fs::exists(a / "summary.json"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(RunSweep, ResumeSkipsFinishedGraphs) {
  fs::path dir = scratch_dir("resume");
  SweepConfig cfg = small_random(dir);
  cfg.n = {5, 6};
  SweepSummary first = run_sweep(cfg);
  cfg.n = {5, 7};
  cfg.resume = true;
  SweepSummary second = run_sweep(cfg);
  EXPECT_EQ(second.skipped, first.completed);
  auto rows = csv_rows_without_timing(dir / "reports.csv");
  EXPECT_EQ(rows.size(), 1 + first.completed + second.completed);
  std::set<std::string> ids;
  for (std::size_t i = 1; i < rows.size(); ++i) ids.insert(rows[i].substr(0, rows[i].find(',')));
  EXPECT_EQ(ids.size(), rows.size() - 1);
  fs::remove_all(dir);
}

TEST(RunSweep, TightFamiliesAllMeetTheConjectureWithEquality) {
  fs::path dir = scratch_dir("tight");
  SweepConfig cfg;
  cfg.kind = SweepConfig::Kind::tight;
  cfg.k = {1, 3};
  cfg.ell = {1, 3};
  cfg.out_dir = dir;
  SweepSummary s = run_sweep(cfg);
  EXPECT_EQ(s.completed, 9U);
  EXPECT_EQ(s.tallies["hippchen"].equality, 9U);
  EXPECT_EQ(s.exit_code(), 0);
  EXPECT_TRUE(s.theorem_failures.empty());
  std::ifstream csv(dir / "reports.csv");
  std::stringstream text;
  text << csv.rdbuf();
  EXPECT_NE(text.str().find("tight_k3_l3,"), std::string::npos);
  fs::remove_all(dir);
}

TEST(RunSweep, TimeoutsAreRecordedNotFatal) {
  fs::path dir = scratch_dir("timeout");
  SweepConfig cfg;
  cfg.kind = SweepConfig::Kind::tight;
  cfg.k = {4, 4};
  cfg.ell = {3, 3};
  cfg.time_budget_s = 0.01;
  cfg.out_dir = dir;
  SweepSummary s = run_sweep(cfg);
  EXPECT_EQ(s.timed_out, 1U);
  EXPECT_EQ(s.completed, 0U);
  EXPECT_EQ(s.exit_code(), 0);
  fs::remove_all(dir);
}

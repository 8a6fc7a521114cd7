#include <gtest/gtest.h>

#include <algorithm>
#include <cstring>

#include "lplab/bounds.hpp"
#include "lplab/families.hpp"
#include "oracles.hpp"

using namespace lplab;

TEST(Rational, NormalizesAndRounds) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(8, 4).str(), "2");
  EXPECT_EQ(Rational(-7, 5).ceil(), -1);
  EXPECT_EQ(Rational(-7, 5).floor(), -2);
  EXPECT_EQ(Rational(3, 2).ceil(), 2);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), PreconditionError);
}

TEST(Bounds, Examples) {
  EXPECT_EQ(bound_prop3(5, 4), Rational(5));
  EXPECT_EQ(bound_prop3(8, 4), Rational(2));
  EXPECT_EQ(bound_prop3(1, 0), Rational(1));
  EXPECT_EQ(bound_lemma4(2, 4), Rational(2));
  EXPECT_EQ(bound_lemma4(4, 8), Rational(4));
  EXPECT_EQ(bound_lemma4(3, 9), Rational(3, 2));
  EXPECT_EQ(bound_main(8, 2), Rational(2));
  EXPECT_EQ(bound_main(20, 1), Rational(-2));
  EXPECT_EQ(bound_main(17, 1), Rational(-7, 5));
  EXPECT_EQ(effective_bound(bound_main(17, 1), true), 1);
  EXPECT_EQ(effective_bound(bound_main(20, 1), true), 1);
  EXPECT_EQ(effective_bound(bound_main(20, 1), false), 0);
  EXPECT_EQ(effective_bound(Rational(3, 2), true), 2);
  EXPECT_EQ(corollary_threshold(8), Rational(2));
  EXPECT_EQ(corollary_threshold(5), Rational(1));
  EXPECT_EQ(corollary_threshold(14), Rational(4));
  for (int k = 1; k <= 40; ++k) EXPECT_EQ(bound_main(3 * k + 2, k), Rational(k));
}

TEST(Bounds, CombinedBoundIsTheMinimaxOverL) {
  // max(prop3, lemma4) is minimized where the two cross; the crossing value is the main bound.
  for (int n = 3; n <= 200; ++n) {
    for (int k = 1; 2 * k <= n - 1; ++k) {
      Rational best(1'000'000);
      for (int L = 2 * k; L <= n - 1; ++L) {
        Rational y = max(bound_prop3(n, L), bound_lemma4(k, L));
        if (y < best) best = y;
        EXPECT_GE(y, bound_main(n, k)) << "n=" << n << " k=" << k << " L=" << L;
      }
      const int twice_crossing = 4 * k + 2 * n - 4;
      if (twice_crossing % 5 == 0 && twice_crossing / 5 >= 2 * k && twice_crossing / 5 <= n - 1) {
        EXPECT_EQ(best, bound_main(n, k)) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Bounds, Monotonicity) {
  for (int n = 3; n <= 100; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_LT(bound_main(n, k), bound_main(n, k + 1));
      EXPECT_GT(bound_main(n, k), bound_main(n + 1, k));
    }
  }
}

TEST(Evaluate, CycleC5) {
  BoundReport r = evaluate(oracle::cycle(5));
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.L, 4);
  EXPECT_EQ(r.census_count, 5U);
  EXPECT_EQ(r.min_intersection, 5);
  EXPECT_TRUE(r.hamiltonian_cycle);
  EXPECT_TRUE(r.hamiltonian_path);
  EXPECT_EQ(r.find("prop2")->verdict, Verdict::not_applicable);
  EXPECT_EQ(r.find("prop3")->verdict, Verdict::equality);
  EXPECT_EQ(r.find("hippchen")->verdict, Verdict::pass);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Evaluate, CompleteBipartiteK410) {
  BoundReport r = evaluate(complete_bipartite(4, 10));
  EXPECT_EQ(r.k, 4);
  EXPECT_EQ(r.L, 8);
  EXPECT_EQ(r.min_intersection, 4);
  EXPECT_FALSE(r.hamiltonian_cycle);
  EXPECT_EQ(r.find("prop2")->verdict, Verdict::equality);
  EXPECT_EQ(r.find("main")->verdict, Verdict::equality);
  EXPECT_EQ(r.find("theorem7")->verdict, Verdict::equality);
  EXPECT_EQ(r.find("hippchen")->verdict, Verdict::equality);
  EXPECT_EQ(r.find("conj10")->verdict, Verdict::not_applicable);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Evaluate, TightFamilyMeetsTheConjectureWithEquality) {
  FamilySpec f = tight_family(3, 2);
  BoundReport r = evaluate(f.graph);
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.L, 10);
  EXPECT_EQ(r.min_intersection, 3);
  EXPECT_EQ(r.find("hippchen")->verdict, Verdict::equality);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Evaluate, Petersen) {
  BoundReport r = evaluate(oracle::petersen());
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.L, 9);
  EXPECT_EQ(r.min_intersection, 10);
  EXPECT_FALSE(r.hamiltonian_cycle);
  EXPECT_TRUE(r.hamiltonian_path);
  EXPECT_EQ(r.find("prop2")->verdict, Verdict::pass);
  EXPECT_EQ(r.find("corollary")->verdict, Verdict::pass);
}

TEST(Evaluate, DisconnectedAndTinyGraphs) {
  BoundReport r = evaluate(Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(r.k, 0);
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.min_intersection, 0);
  EXPECT_EQ(r.find("prop3")->required, 0);
  EXPECT_EQ(r.find("hippchen")->verdict, Verdict::not_applicable);
  EXPECT_EQ(r.exit_code(), 0);
  BoundReport single = evaluate(Graph(1, {}));
  EXPECT_EQ(single.min_intersection, 1);
  EXPECT_EQ(single.exit_code(), 0);
  BoundReport k2 = evaluate(oracle::complete(2));
  EXPECT_EQ(k2.find("prop2")->verdict, Verdict::not_applicable);
}

TEST(Verdicts, ExitCodes) {
  BoundReport r = evaluate(oracle::cycle(5));
  ASSERT_EQ(r.exit_code(), 0);

  BoundReport broken = r;
  broken.min_intersection = 1;  // below the proven prop3 bound of 5
  apply_verdicts(broken);
  EXPECT_TRUE(broken.theorem_failure());
  EXPECT_TRUE(broken.conjecture_failure());
  EXPECT_EQ(broken.exit_code(), 2);

  // Synthetic report where only the conjectured bound k is missed.
  BoundReport candidate = r;
  candidate.n = 60;
  candidate.k = 6;
  candidate.L = 20;
  candidate.min_intersection = 5;
  candidate.bound_prop3 = bound_prop3(60, 20);
  candidate.bound_lemma4 = bound_lemma4(6, 20);
  candidate.bound_main = bound_main(60, 6);
  candidate.corollary_threshold = corollary_threshold(60);
  candidate.dense_threshold = dense_conjecture_threshold(60);
  apply_verdicts(candidate);
  EXPECT_FALSE(candidate.theorem_failure());
  EXPECT_EQ(candidate.find("hippchen")->verdict, Verdict::fail);
  EXPECT_EQ(candidate.find("conj10")->verdict, Verdict::equality);
  EXPECT_EQ(candidate.exit_code(), 3);

  BoundReport claims = r;
  claims.proof_claims = ClaimSummary{};
  claims.proof_claims->gap_failures = 1;
  EXPECT_EQ(claims.exit_code(), 2);
  EXPECT_NE(claims.verdict_flags().find("claims=F"), std::string::npos);
  EXPECT_TRUE(to_json(claims).contains("alarm"));
}

TEST(Output, CsvAndJson) {
  EvaluateOptions opt;
  opt.name = "k26";
  BoundReport r = evaluate(complete_bipartite(2, 6), opt);
  std::string row = to_csv_row(r);
  EXPECT_EQ(row.rfind("k26,8,12,2,4,", 0), 0U) << row;
  EXPECT_NE(row.find("hippchen=E"), std::string::npos) << row;
  int header_commas = static_cast<int>(std::count(kCsvHeader, kCsvHeader + std::strlen(kCsvHeader), ','));
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), header_commas);
  auto j = to_json(r);
  EXPECT_EQ(j["min_intersection"], 2);
  EXPECT_EQ(j["verdicts"]["hippchen"]["verdict"], "pass-at-equality");
  EXPECT_EQ(j["bounds"]["main"]["exact"], "2");
  EXPECT_EQ(j["bounds"]["main"]["effective"], 2);
  EXPECT_EQ(j["bounds"]["corollary_threshold"], "2");
  EXPECT_EQ(j["bounds"]["corollary_threshold_n_over_3"], "8/3");
  EXPECT_FALSE(j.contains("alarm"));
}

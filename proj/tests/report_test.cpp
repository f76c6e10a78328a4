#include <gtest/gtest.h>

#include "lpack/error.hpp"
#include "lpack/report.hpp"
#include "lpack/sweep.hpp"

using namespace lpack;

TEST(Report, CycleOfEightWithOracle) {
  ReportOptions opts;
  opts.oracle = true;
  const ReportResult r = make_report(cycle_graph(8), opts);
  EXPECT_EQ(r.report.lower_main, 5u);
  EXPECT_EQ(r.report.lower_woz, 4u);
  EXPECT_EQ(r.report.upper_mis, 6u);
  EXPECT_FALSE(r.report.constructed_cycles); // 8 edges: no construction
  EXPECT_EQ(r.report.oracle_lambda2, std::optional<std::size_t>(6));
  EXPECT_TRUE(r.report.consistent());
  EXPECT_EQ(r.upper_vacuous, false);
}

TEST(Report, JsonFields) {
  ReportOptions opts;
  opts.oracle = true;
  const ReportResult r = make_report(cycle_graph(4), opts);
  const auto j = to_json(r.report);
  EXPECT_EQ(j["oracle_lambda2"], "none");
  EXPECT_TRUE(j["constructed_cycles"].is_null());
  EXPECT_EQ(r.upper_vacuous, true);

  const ReportResult t = make_report(tight_graph(2));
  const auto k = to_json(t.report);
  EXPECT_EQ(k["constructed_cycles"], 6);
  EXPECT_EQ(k["upper_mis"], 6);
  EXPECT_TRUE(k["oracle_lambda2"].is_null());
  EXPECT_EQ(k["trace"]["final_cycles"], 6);
  EXPECT_EQ(k["trace"]["steps"][0]["case"], "C3");
}

TEST(Report, InconsistentChainIsDetected) {
  BoundsReport r;
  r.lower_woz = 2;
  r.lower_main = 4;
  r.constructed_cycles = 5;
  r.upper_mis = 4;
  EXPECT_FALSE(r.consistent());
  r.upper_mis = 5;
  EXPECT_TRUE(r.consistent());
}

TEST(Sweep, RowsAndFooter) {
  SweepOptions opts;
  opts.n_min = 3;
  opts.n_max = 5;
  opts.exhaustive = true;
  opts.oracle_upto = 5;
  const auto rows = run_sweep(opts);
  EXPECT_EQ(rows.size(), 3u + 15u + 120u);
  const SweepSummary s = summarize(rows);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.verified, rows.size());
  const std::string csv = sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSweepCsvHeader);
  EXPECT_NE(csv.find("# rows=138 verified=138 failures=0"), std::string::npos);
}

TEST(Sweep, SameOutputForAnyJobCount) {
  SweepOptions opts;
  opts.n_min = 8;
  opts.n_max = 14;
  opts.samples = 20;
  opts.seed = 42;
  const std::string one = sweep_csv(run_sweep(opts));
  opts.jobs = 4;
  EXPECT_EQ(sweep_csv(run_sweep(opts)), one);
  opts.seed = 43;
  EXPECT_NE(sweep_csv(run_sweep(opts)), one);
}

TEST(Sweep, Limits) {
  SweepOptions opts;
  opts.exhaustive = true;
  opts.n_max = 8;
  EXPECT_THROW(run_sweep(opts), Error);
  opts.exhaustive = false;
  opts.n_min = 2;
  EXPECT_THROW(run_sweep(opts), Error);
}

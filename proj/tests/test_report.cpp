#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minpower/greedy.hpp"
#include "minpower/instances.hpp"
#include "minpower/report.hpp"
#include "support.hpp"

using namespace minpower;

TEST_CASE("line report") {
  RunReport r = solve_instance(gen_line(20, 0.01), {}, "line", "family=line,n=20,eps=0.01");
  CHECK(r.mst_baseline_power == 40.0);
  CHECK(r.n == 40);
  CHECK(r.m == 780);
  CHECK(r.certificates_passed());
  CHECK(r.greedy_power < 40.0);
  CHECK(r.greedy_iterations >= 1);
  CHECK(r.exact == OracleOutcome::not_run);
  CHECK_FALSE(r.lp_opt_star);
  CHECK(exit_status(r, {}) == 0);
}

TEST_CASE("triangle with every bound") {
  SolveOptions opts;
  opts.exact = true;
  opts.lp = true;
  RunReport r = solve_instance(minpower::testing::triangle(), opts);
  CHECK(r.certificates_passed());
  CHECK(r.c_mst == 7.0);
  CHECK(r.greedy_power == 11.0);
  CHECK(r.greedy_star_power == 4.0);
  REQUIRE(r.exact_opt);
  CHECK(*r.exact_opt == 11.0);
  REQUIRE(r.lp_opt_star);
  CHECK(*r.lp_opt_star == doctest::Approx(11.0).epsilon(1e-9));
  CHECK(*r.greedy_over_exact == 1.0);
  CHECK(*r.mst_over_exact == r.mst_baseline_power / 11.0);
  CHECK(exit_status(r, opts) == 0);
}

TEST_CASE("oracle refusal and inconclusive runs") {
  SolveOptions opts;
  opts.exact = true;
  opts.max_exact_n = 5;
  RunReport refused = solve_instance(gen_random_geometric(8, 2.0, 1), opts);
  CHECK(refused.exact == OracleOutcome::refused);
  CHECK(refused.certificates_passed());
  CHECK(exit_status(refused, opts) == 3);

  opts.max_exact_n = 9;
  opts.limits.max_nodes = 1;
  RunReport stopped = solve_instance(gen_random_geometric(8, 2.0, 1), opts);
  CHECK(stopped.exact == OracleOutcome::inconclusive);
  CHECK_FALSE(stopped.exact_opt);
  CHECK(exit_status(stopped, opts) == 3);
}

TEST_CASE("certificate failure sets exit status 2") {
  RunReport r = solve_instance(minpower::testing::triangle(), {});
  r.failed_certificates.push_back("greedy:power-bound");
  CHECK(exit_status(r, {}) == 2);
}

TEST_CASE("records are self-contained and deterministic") {
  SolveOptions opts;
  opts.exact = true;
  opts.lp = true;
  Instance inst = gen_random_geometric(7, 2.0, 3);
  RunReport a = solve_instance(inst, opts, "r", "family=random-geometric,n=7,kappa=2,seed=3");
  RunReport b = solve_instance(inst, opts, "r", "family=random-geometric,n=7,kappa=2,seed=3");
  auto ja = to_json(a);
  CHECK(ja.dump() == to_json(b).dump());
  CHECK_FALSE(ja.contains("timings_ms"));
  CHECK(to_json(a, true).contains("timings_ms"));

  CHECK(ja["metadata"] == "family=random-geometric,n=7,kappa=2,seed=3");
  CHECK(ja["exact"] == "optimal");
  const double greedy = ja["greedy_power"];
  CHECK(ja["greedy_over_exact"].get<double>() == greedy / ja["exact_opt"].get<double>());
  CHECK(ja["greedy_over_lp"].get<double>() == greedy / ja["lp_opt_star"].get<double>());
  CHECK(ja["mst_over_exact"].get<double>() ==
        ja["mst_baseline_power"].get<double>() / ja["exact_opt"].get<double>());
  CHECK(ja["greedy_over_exact"].get<double>() >= 1.0 - 1e-9);
  CHECK(ja["greedy_over_lp"].get<double>() >= 1.0 - 1e-9);
  CHECK(ja["mst_over_exact"].get<double>() >= 1.0 - 1e-9);
}

TEST_CASE("bench summary") {
  SolveOptions opts;
  opts.exact = true;
  std::vector<RunReport> reports;
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    reports.push_back(solve_instance(gen_random_geometric(6, 2.0, seed), opts));
  BenchSummary s = summarize(reports);
  CHECK(s.instances == 10);
  CHECK(s.certificate_failures == 0);
  REQUIRE(s.max_greedy_over_exact);
  CHECK(*s.max_greedy_over_exact <= ratio_beta(0.5) + 1e-9);
  CHECK(*s.max_greedy_over_exact >= 1.0);
  CHECK_FALSE(s.max_greedy_over_lp);
  auto j = to_json(s);
  CHECK(j["summary"]["instances"] == 10);

  CHECK(table_row(reports[0]).size() == table_header().size());
}

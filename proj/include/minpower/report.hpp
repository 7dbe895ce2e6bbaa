#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minpower/exact.hpp"
#include "minpower/graph.hpp"

namespace minpower {

struct SolveOptions {
  bool exact = false;
  bool lp = false;
  int max_exact_n = 9;
  double tol = 1e-7;
  SearchLimits limits;
};

enum class OracleOutcome { not_run, optimal, inconclusive, refused };

struct RunReport {
  std::string instance;
  std::string metadata;  // generator spec recorded in the instance file, if any
  int n = 0;
  std::size_t m = 0;

  double c_mst = 0.0;
  double mst_baseline_power = 0.0;
  double greedy_power = 0.0;
  std::size_t greedy_iterations = 0;
  double greedy_star_power = 0.0;  // w(A)
  std::vector<std::string> failed_certificates;

  std::optional<double> lp_opt_star;
  std::optional<std::string> lp_error;
  OracleOutcome exact = OracleOutcome::not_run;
  std::optional<double> exact_opt;

  std::optional<double> greedy_over_exact;
  std::optional<double> greedy_over_lp;
  std::optional<double> mst_over_exact;

  std::map<std::string, double> timings_ms;

  bool certificates_passed() const { return failed_certificates.empty(); }
};

/// MST baseline and greedy always; the exact oracle and the LP bound on
/// request. Every ratio and bracketing relation is checked and any failure is
/// listed in failed_certificates.
RunReport solve_instance(const Instance& inst, const SolveOptions& options,
                         std::string label = {}, std::string metadata = {});

/// 0 all certificates pass, 2 a certificate failed, 3 the oracle was
/// requested but did not return an optimum.
int exit_status(const RunReport& report, const SolveOptions& options);

nlohmann::json to_json(const RunReport& report, bool with_timings = false);

std::string table_header();
std::string table_row(const RunReport& report);

struct BenchSummary {
  std::size_t instances = 0;
  std::size_t certificate_failures = 0;
  std::optional<double> max_greedy_over_exact;
  std::optional<double> max_mst_over_exact;
  std::optional<double> max_greedy_over_lp;
};

BenchSummary summarize(const std::vector<RunReport>& reports);
nlohmann::json to_json(const BenchSummary& summary);

}  // namespace minpower

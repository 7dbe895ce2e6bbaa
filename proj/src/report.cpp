#include "minpower/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "minpower/greedy.hpp"
#include "minpower/lp_bound.hpp"

namespace minpower {

namespace {

constexpr double kRatioSlack = 1e-9;
constexpr double kLpSlack = 1e-6;

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

double ratio(double value, double bound) { return bound > 0.0 ? value / bound : 1.0; }

const char* outcome_name(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::not_run: return "not-run";
    case OracleOutcome::optimal: return "optimal";
    case OracleOutcome::inconclusive: return "inconclusive";
    case OracleOutcome::refused: return "refused";
  }
  return "unknown";
}

std::string cell(const std::optional<double>& v, const char* fmt = "%.6f") {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, *v);
  return buf;
}

}  // namespace

RunReport solve_instance(const Instance& inst, const SolveOptions& options, std::string label,
                         std::string metadata) {
  RunReport r;
  r.instance = std::move(label);
  r.metadata = std::move(metadata);
  r.n = inst.num_vertices();
  r.m = inst.edges().size();
  auto fail = [&](bool ok, const char* name) {
    if (!ok) r.failed_certificates.emplace_back(name);
  };

  Stopwatch clock;
  Tree tree = minimum_spanning_tree(inst);
  r.c_mst = tree.cost();
  r.mst_baseline_power = power_of(inst, bidirect(tree)).total();
  r.timings_ms["mst"] = clock.lap_ms();

  Solution greedy = greedy_solve(inst);
  r.greedy_power = greedy.total_power;
  r.greedy_iterations = greedy.trace.size();
  r.greedy_star_power = greedy.certificate.star_power;
  for (const auto& check : certify(inst, greedy).checks)
    if (!check.passed) r.failed_certificates.push_back("greedy:" + check.name);
  r.timings_ms["greedy"] = clock.lap_ms();

  const double beta = ratio_beta(0.5);
  if (options.lp) {
    try {
      r.lp_opt_star = lp_lower_bound(inst, options.tol).value;
      r.greedy_over_lp = ratio(r.greedy_power, *r.lp_opt_star);
      fail(r.c_mst <= *r.lp_opt_star + kLpSlack, "mst-below-lp");
      fail(r.greedy_power <= beta * *r.lp_opt_star + kLpSlack, "greedy-within-beta-of-lp");
    } catch (const LpError& err) {
      r.lp_error = err.what();
      r.failed_certificates.emplace_back("lp-solve");
    }
    r.timings_ms["lp"] = clock.lap_ms();
  }

  if (options.exact) {
    if (r.n > options.max_exact_n) {
      r.exact = OracleOutcome::refused;
    } else {
      SearchLimits limits = options.limits;
      limits.max_vertices = options.max_exact_n;
      ExactResult res = exact_optimum(inst, limits);
      if (res.status == ExactStatus::optimal) {
        r.exact = OracleOutcome::optimal;
        r.exact_opt = res.opt;
        const double opt = res.opt;
        const double scale = std::max(1.0, opt);
        fail(verify_assignment(inst, res.assignment), "exact-witness");
        fail(r.c_mst <= opt + kRatioSlack * scale, "mst-below-exact");
        fail(opt <= r.greedy_power + kRatioSlack * scale, "exact-below-greedy");
        fail(opt <= r.mst_baseline_power + kRatioSlack * scale, "exact-below-mst-baseline");
        fail(r.greedy_power <= beta * opt + kRatioSlack, "greedy-within-beta-of-exact");
        if (r.lp_opt_star) fail(*r.lp_opt_star <= opt + kLpSlack, "lp-below-exact");
        r.greedy_over_exact = ratio(r.greedy_power, opt);
        r.mst_over_exact = ratio(r.mst_baseline_power, opt);
      } else {
        r.exact = OracleOutcome::inconclusive;
      }
    }
    r.timings_ms["exact"] = clock.lap_ms();
  }
  return r;
}

int exit_status(const RunReport& report, const SolveOptions& options) {
  if (!report.certificates_passed()) return 2;
  if (options.exact && report.exact != OracleOutcome::optimal) return 3;
  return 0;
}

nlohmann::json to_json(const RunReport& r, bool with_timings) {
  nlohmann::json j;
  j["instance"] = r.instance;
  if (!r.metadata.empty()) j["metadata"] = r.metadata;
  j["n"] = r.n;
  j["m"] = r.m;
  j["c_mst"] = r.c_mst;
  j["mst_baseline_power"] = r.mst_baseline_power;
  j["greedy_power"] = r.greedy_power;
  j["greedy_iterations"] = r.greedy_iterations;
  j["greedy_star_power"] = r.greedy_star_power;
  j["certificates_passed"] = r.certificates_passed();
  j["failed_certificates"] = r.failed_certificates;
  j["exact"] = outcome_name(r.exact);
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  put("exact_opt", r.exact_opt);
  put("lp_opt_star", r.lp_opt_star);
  if (r.lp_error) j["lp_error"] = *r.lp_error;
  put("greedy_over_exact", r.greedy_over_exact);
  put("greedy_over_lp", r.greedy_over_lp);
  put("mst_over_exact", r.mst_over_exact);
  if (with_timings) j["timings_ms"] = r.timings_ms;
  return j;
}

std::string table_header() {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-32s %5s %7s %12s %12s %12s %12s %12s %8s %8s %8s", "instance",
                "n", "m", "c_mst", "mst_power", "greedy", "lp_opt*", "exact", "g/exact", "g/lp",
                "cert");
  return buf;
}

std::string table_row(const RunReport& r) {
  std::string exact = r.exact_opt ? cell(r.exact_opt) : outcome_name(r.exact);
  std::string label = r.instance.size() > 32 ? "..." + r.instance.substr(r.instance.size() - 29)
                                             : r.instance;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-32s %5d %7zu %12.6f %12.6f %12.6f %12s %12s %8s %8s %8s",
                label.c_str(), r.n, r.m, r.c_mst, r.mst_baseline_power, r.greedy_power,
                cell(r.lp_opt_star).c_str(), exact.c_str(),
                cell(r.greedy_over_exact, "%.4f").c_str(), cell(r.greedy_over_lp, "%.4f").c_str(),
                r.certificates_passed() ? "ok" : "FAIL");
  return buf;
}

BenchSummary summarize(const std::vector<RunReport>& reports) {
  BenchSummary s;
  s.instances = reports.size();
  auto raise = [](std::optional<double>& acc, const std::optional<double>& v) {
    if (v) acc = acc ? std::max(*acc, *v) : *v;
  };
  for (const RunReport& r : reports) {
    if (!r.certificates_passed()) ++s.certificate_failures;
    raise(s.max_greedy_over_exact, r.greedy_over_exact);
    raise(s.max_mst_over_exact, r.mst_over_exact);
    raise(s.max_greedy_over_lp, r.greedy_over_lp);
  }
  return s;
}

nlohmann::json to_json(const BenchSummary& s) {
  nlohmann::json j;
  j["instances"] = s.instances;
  j["certificate_failures"] = s.certificate_failures;
  if (s.max_greedy_over_exact) j["max_greedy_over_exact"] = *s.max_greedy_over_exact;
  if (s.max_mst_over_exact) j["max_mst_over_exact"] = *s.max_mst_over_exact;
  if (s.max_greedy_over_lp) j["max_greedy_over_lp"] = *s.max_greedy_over_lp;
  return nlohmann::json{{"summary", j}};
}

}  // namespace minpower

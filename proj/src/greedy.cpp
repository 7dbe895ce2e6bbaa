#include "minpower/greedy.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace minpower {

namespace {

// Slack for comparing sums accumulated in different orders.
constexpr double kSumSlack = 1e-12;

bool at_most(double lhs, double rhs) {
  return lhs <= rhs + kSumSlack * std::max(1.0, std::abs(rhs));
}

std::string describe(double lhs, const char* op, double rhs) {
  std::ostringstream out;
  out.precision(17);
  out << lhs << ' ' << op << ' ' << rhs;
  return out.str();
}

double ratio_of(double gain, double radius) {
  if (radius == 0.0) return gain > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  return gain / radius;
}

}  // namespace

Selection select_best_star(const Instance& inst, const CoverState& state) {
  const StarGain* best = nullptr;
  double best_ratio = 0.0;
  auto gains = all_star_gains(inst, state);
  for (const StarGain& g : gains) {
    if (!(g.gain > 0.0)) continue;
    double ratio = ratio_of(g.gain, g.radius);
    // Scan order is (center, radius) ascending, so strict comparisons keep
    // the smallest center and radius among equals.
    if (!best || ratio > best_ratio || (ratio == best_ratio && g.gain > best->gain)) {
      best = &g;
      best_ratio = ratio;
    }
  }
  if (!best)
    throw std::logic_error("no star with positive gain while tree edges remain uncovered");
  return {make_star(inst, best->center, best->radius), best->gain};
}

Solution greedy_solve(const Instance& inst) {
  Tree tree = minimum_spanning_tree(inst);
  Solution solution;
  solution.tree_edges.assign(tree.edges().begin(), tree.edges().end());
  solution.certificate.tree_cost = tree.cost();

  CoverState state(std::move(tree));
  auto take = [&](const Star& star) {
    MarginalGain mg = marginal_gain(state, star);
    apply_star(state, star, mg.new_arcs);
    solution.trace.push_back({star, mg.gain, star.power()});
    solution.certificate.star_power += star.power();
  };

  // Zero-cost tree edges are covered up front by radius-0 stars at their tails.
  for (std::size_t i = 0; i < state.tree().num_edges(); ++i) {
    const Edge& e = state.tree().edges()[i];
    if (e.cost == 0.0 && !state.is_covered(static_cast<int>(i))) take(make_star(inst, e.u, 0.0));
  }
  while (!state.fully_covered()) take(select_best_star(inst, state).star);

  solution.survivors = state.surviving_arcs();
  solution.arcs = solution.survivors;
  for (const Star& s : state.chosen()) solution.arcs.merge(star_arcs(s));
  solution.powers = power_of(inst, solution.arcs);
  solution.total_power = solution.powers.total();
  return solution;
}

double ratio_beta(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in (0, 1]");
  return 1.0 + alpha + alpha * std::log(1.0 / alpha);
}

bool CertificateReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CertificateCheck* CertificateReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CertificateReport certify(const Instance& inst, const Solution& solution) {
  CertificateReport report;
  const double c_tree = solution.certificate.tree_cost;
  const double w_stars = solution.certificate.star_power;

  report.checks.push_back({"strongly-connected", is_strongly_connected(inst, solution.arcs), ""});

  report.checks.push_back({"power-bound", at_most(solution.total_power, c_tree + w_stars),
                           describe(solution.total_power, "<=", c_tree + w_stars)});

  bool ratios_ok = true;
  std::string worst;
  for (std::size_t i = 0; i < solution.trace.size(); ++i) {
    const TraceStep& step = solution.trace[i];
    if (step.power > 0.0 && !(step.gain >= step.power)) {
      ratios_ok = false;
      worst = "step " + std::to_string(i) + ": " + describe(step.gain, ">=", step.power);
    }
  }
  report.checks.push_back({"star-ratio", ratios_ok, worst});

  double gain_sum = 0.0;
  for (const TraceStep& step : solution.trace) gain_sum += step.gain;
  report.checks.push_back({"star-power-bound", at_most(w_stars, c_tree) && at_most(w_stars, gain_sum),
                           describe(w_stars, "<=", c_tree)});

  bool one_arc = solution.survivors.size() == solution.tree_edges.size();
  for (const Edge& e : solution.tree_edges) {
    int kept = solution.survivors.contains({e.u, e.v}) + solution.survivors.contains({e.v, e.u});
    one_arc = one_arc && kept == 1;
  }
  report.checks.push_back({"one-arc-per-edge", one_arc, ""});

  report.checks.push_back({"twice-mst", at_most(solution.total_power, 2.0 * c_tree),
                           describe(solution.total_power, "<=", 2.0 * c_tree)});
  return report;
}

}  // namespace minpower

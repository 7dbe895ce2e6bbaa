#pragma once

#include <string>
#include <vector>

#include "minpower/graph.hpp"
#include "minpower/star_cover.hpp"

namespace minpower {

struct TraceStep {
  Star star;
  double gain;   // f_i
  double power;  // p_i
};

/// Quantities of the bound p(H) <= c(T) + w(A).
struct PowerCertificate {
  double tree_cost = 0.0;   // c(T)
  double star_power = 0.0;  // w(A)
};

struct Solution {
  /// Union of the chosen stars' arcs and the surviving tree arcs M.
  ArcSet arcs;
  PowerAssignment powers;
  double total_power = 0.0;
  std::vector<TraceStep> trace;
  PowerCertificate certificate;
  /// Terminal M.
  ArcSet survivors;
  std::vector<Edge> tree_edges;
};

struct Selection {
  Star star;
  double gain;
};

/// Star maximizing f_A(S)/p(S) among stars with positive gain; ties go to the
/// larger gain, then smaller center, then smaller radius. Throws
/// std::logic_error when no star has positive gain.
Selection select_best_star(const Instance& inst, const CoverState& state);

/// Relative greedy star cover of the bidirected minimum spanning tree.
Solution greedy_solve(const Instance& inst);

/// 1 + alpha + alpha ln(1/alpha); throws std::domain_error unless 0 < alpha <= 1.
double ratio_beta(double alpha);

struct CertificateCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;

  bool passed() const;
  const CertificateCheck* find(const std::string& name) const;
};

/// Checks a greedy output: strong connectivity, p(H) <= c(T) + w(A),
/// f_i >= p_i for every positive-power star, w(A) <= c(T), a single surviving
/// arc per tree edge, and p(H) <= 2 c(T). Failures are reported, not thrown.
CertificateReport certify(const Instance& inst, const Solution& solution);

}  // namespace minpower

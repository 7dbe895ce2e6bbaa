#pragma once

#include <chrono>
#include <cstdint>

#include "minpower/graph.hpp"

namespace minpower {

struct SearchLimits {
  int max_vertices = 9;
  std::uint64_t max_nodes = 200'000'000;
  std::chrono::milliseconds time_budget{60'000};
};

enum class ExactStatus { optimal, inconclusive };

struct ExactResult {
  ExactStatus status = ExactStatus::inconclusive;
  /// Proven optimum when status is optimal; otherwise the best total found,
  /// which is only an upper bound.
  double opt = 0.0;
  PowerAssignment assignment;
  std::uint64_t nodes = 0;
  /// True when the search found an assignment cheaper than the greedy incumbent.
  bool improved_incumbent = false;
};

/// Branch-and-bound minimum total power over per-vertex levels drawn from the
/// incident costs, seeded with the greedy solution. Throws
/// std::invalid_argument when the instance exceeds limits.max_vertices.
ExactResult exact_optimum(const Instance& inst, const SearchLimits& limits = {});

/// Plain enumeration of every level combination in {0} u incident costs.
/// Only for tiny instances (throws std::invalid_argument above 7 vertices).
ExactResult naive_optimum(const Instance& inst);

/// True iff H(p) is strongly connected.
bool verify_assignment(const Instance& inst, const PowerAssignment& p);

}  // namespace minpower

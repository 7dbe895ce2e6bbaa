#include "minpower/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "minpower/greedy.hpp"

namespace minpower {

namespace {

using Mask = std::uint64_t;
constexpr double kInf = std::numeric_limits<double>::infinity();

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const SearchLimits& limits)
      : inst_(inst), limits_(limits), n_(inst.num_vertices()),
        cost_(n_ * n_, kInf), levels_(n_), reach_(n_), min_level_(n_),
        power_(n_, 0.0), assigned_(n_, 0) {
    for (const Edge& e : inst.edges()) {
      cost_[e.u * n_ + e.v] = e.cost;
      cost_[e.v * n_ + e.u] = e.cost;
    }
    for (Vertex u = 0; u < n_; ++u) {
      for (const Incidence& inc : inst.incident(u))
        if (levels_[u].empty() || levels_[u].back() != inc.cost) levels_[u].push_back(inc.cost);
      std::reverse(levels_[u].begin(), levels_[u].end());
      for (double level : levels_[u]) {
        Mask m = 0;
        for (const Incidence& inc : inst.incident(u))
          if (inc.cost <= level) m |= Mask{1} << inc.neighbor;
        reach_[u].push_back(m);
      }
      min_level_[u] = levels_[u].back();
    }
    order_.resize(n_);
    for (Vertex u = 0; u < n_; ++u) order_[u] = u;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return inst.incident(a).size() > inst.incident(b).size();
    });
    choice_.assign(n_, 0);
  }

  ExactResult run() {
    Solution greedy = greedy_solve(inst_);
    best_ = greedy.powers;
    best_total_ = best_.total();
    start_ = std::chrono::steady_clock::now();
    search(0, 0.0);

    ExactResult result;
    result.status = aborted_ ? ExactStatus::inconclusive : ExactStatus::optimal;
    result.assignment = best_;
    result.opt = best_.total();
    result.nodes = nodes_;
    result.improved_incumbent = improved_;
    return result;
  }

 private:
  Mask out_mask(Vertex u) const {
    return reach_[u][assigned_[u] ? choice_[u] : 0];
  }

  // Strong connectivity of H(p) with every unassigned vertex at its top level.
  bool can_connect() const {
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    Mask forward = 1;
    for (Mask frontier = 1; frontier;) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= out_mask(std::countr_zero(f));
      frontier = next & ~forward;
      forward |= next;
    }
    if (forward != all) return false;
    Mask backward = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex u = 0; u < n_; ++u) {
        if ((backward >> u) & 1) continue;
        if (out_mask(u) & backward) {
          backward |= Mask{1} << u;
          grew = true;
        }
      }
    }
    return backward == all;
  }

  // Any strongly connected H(p) contains an in-arborescence; charging each
  // arborescence arc to its tail gives a spanning tree whose edges cost 0 when
  // an assigned endpoint already reaches across, else c for an unassigned tail.
  double arborescence_bound() const {
    std::vector<double> key(n_, kInf);
    std::vector<char> in_tree(n_, 0);
    key[0] = 0.0;
    double total = 0.0;
    for (int step = 0; step < n_; ++step) {
      Vertex u = -1;
      for (Vertex v = 0; v < n_; ++v)
        if (!in_tree[v] && (u < 0 || key[v] < key[u])) u = v;
      if (key[u] == kInf) return kInf;
      in_tree[u] = 1;
      total += key[u];
      for (Vertex v = 0; v < n_; ++v) {
        if (in_tree[v]) continue;
        double c = cost_[u * n_ + v];
        if (c == kInf) continue;
        double w;
        if ((assigned_[u] && power_[u] >= c) || (assigned_[v] && power_[v] >= c)) w = 0.0;
        else if (!assigned_[u] || !assigned_[v]) w = c;
        else continue;
        key[v] = std::min(key[v], w);
      }
    }
    return total;
  }

  bool out_of_budget() {
    if (limits_.max_nodes && nodes_ >= limits_.max_nodes) return true;
    if ((nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > limits_.time_budget)
      return true;
    return false;
  }

  void search(int depth, double partial) {
    if (aborted_) return;
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    if (depth == n_) {
      if (!can_connect()) return;
      PowerAssignment candidate(power_);
      if (candidate.total() < best_total_) {
        best_ = candidate;
        best_total_ = candidate.total();
        improved_ = true;
      }
      return;
    }

    double rest = 0.0;
    for (int k = depth; k < n_; ++k) rest += min_level_[order_[k]];
    double bound = partial + std::max(rest, arborescence_bound());
    if (bound >= best_total_) return;
    if (!can_connect()) return;

    Vertex u = order_[depth];
    assigned_[u] = 1;
    for (std::size_t i = 0; i < levels_[u].size() && !aborted_; ++i) {
      choice_[u] = static_cast<int>(i);
      power_[u] = levels_[u][i];
      search(depth + 1, partial + power_[u]);
    }
    assigned_[u] = 0;
    power_[u] = 0.0;
    choice_[u] = 0;
  }

  const Instance& inst_;
  SearchLimits limits_;
  int n_;
  std::vector<double> cost_;
  std::vector<std::vector<double>> levels_;  // descending
  std::vector<std::vector<Mask>> reach_;     // out-neighbors per level
  std::vector<double> min_level_;
  std::vector<Vertex> order_;
  std::vector<double> power_;
  std::vector<char> assigned_;
  std::vector<int> choice_;

  PowerAssignment best_;
  double best_total_ = kInf;
  bool improved_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ExactResult exact_optimum(const Instance& inst, const SearchLimits& limits) {
  const int n = inst.num_vertices();
  if (n > limits.max_vertices || n > 64)
    throw std::invalid_argument("exact search is limited to " +
                                std::to_string(std::min(limits.max_vertices, 64)) +
                                " vertices; instance has " + std::to_string(n));
  if (n == 1) return {ExactStatus::optimal, 0.0, PowerAssignment(1), 1, false};
  return BranchAndBound(inst, limits).run();
}

ExactResult naive_optimum(const Instance& inst) {
  const int n = inst.num_vertices();
  if (n > 7) throw std::invalid_argument("naive enumeration is limited to 7 vertices");
  std::vector<std::vector<double>> levels(n);
  for (Vertex u = 0; u < n; ++u) {
    levels[u].push_back(0.0);
    for (const Incidence& inc : inst.incident(u))
      if (inc.cost != levels[u].back()) levels[u].push_back(inc.cost);
  }

  ExactResult result;
  result.status = ExactStatus::optimal;
  result.opt = kInf;
  std::vector<std::size_t> digit(n, 0);
  PowerAssignment p(n);
  while (true) {
    ++result.nodes;
    for (Vertex u = 0; u < n; ++u) p[u] = levels[u][digit[u]];
    if (verify_assignment(inst, p) && p.total() < result.opt) {
      result.opt = p.total();
      result.assignment = p;
    }
    int k = 0;
    while (k < n && ++digit[k] == levels[k].size()) digit[k++] = 0;
    if (k == n) break;
  }
  return result;
}

bool verify_assignment(const Instance& inst, const PowerAssignment& p) {
  if (p.num_vertices() != inst.num_vertices()) return false;
  return is_strongly_connected(inst, induced_arcs(inst, p));
}

}  // namespace minpower

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minpower/graph.hpp"
#include "minpower/instances.hpp"
#include "support.hpp"

using namespace minpower;
using minpower::testing::triangle;

namespace {

double sum_tree(const Tree& t) {
  double s = 0.0;
  for (const Edge& e : t.edges()) s += e.cost;
  return s;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_WITH_AS(Instance(3, {{0, 1, 1.0}}), "instance not connected", std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, {{0, 0, 1.0}, {0, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_NOTHROW(Instance(1, {}));
  CHECK_NOTHROW(Instance(2, {{0, 1, 0.0}}));

  Instance t = triangle();
  CHECK(t.cost(1, 0) == 3.0);
  CHECK(t.cost(2, 1) == 4.0);
  CHECK_FALSE(Instance(3, {{0, 1, 1.0}, {1, 2, 1.0}}).has_edge(0, 2));
  auto inc = t.incident(2);
  REQUIRE(inc.size() == 2);
  CHECK(inc[0].neighbor == 1);
  CHECK(inc[1].neighbor == 0);
}

TEST_CASE("minimum spanning tree") {
  SUBCASE("triangle") {
    Tree t = minimum_spanning_tree(triangle());
    CHECK(t.cost() == 7.0);
    CHECK(t.edge_between(0, 1) >= 0);
    CHECK(t.edge_between(1, 2) >= 0);
    CHECK(t.edge_between(0, 2) == -1);
  }
  SUBCASE("single edge") {
    Tree t = minimum_spanning_tree(Instance(2, {{0, 1, 2.5}}));
    CHECK(t.num_edges() == 1);
    CHECK(t.cost() == 2.5);
  }
  SUBCASE("line n=2") {
    const double eps = 0.125;
    Tree t = minimum_spanning_tree(gen_line(2, eps));
    CHECK(t.cost() == 2.0 + eps * eps);
    for (int v = 0; v + 1 < 4; ++v) CHECK(t.edge_between(v, v + 1) >= 0);
  }
  SUBCASE("ties break by endpoint ids") {
    Instance square(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
    Tree t = minimum_spanning_tree(square);
    CHECK(t.edge_between(0, 3) >= 0);
    CHECK(t.edge_between(2, 3) == -1);
  }
  SUBCASE("minimum over all spanning trees of K4") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      Instance inst = minpower::testing::random_graph(rng, 4, 1.0, trial % 2 == 0);
      std::vector<Edge> edges(inst.edges().begin(), inst.edges().end());
      double best = INFINITY;
      for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        if (std::popcount(mask) != 3) continue;
        std::vector<Edge> chosen;
        for (std::size_t i = 0; i < edges.size(); ++i)
          if ((mask >> i) & 1) chosen.push_back(edges[i]);
        try {
          best = std::min(best, sum_tree(Tree(4, chosen)));
        } catch (const std::invalid_argument&) {
        }
      }
      CHECK(minimum_spanning_tree(inst).cost() == doctest::Approx(best).epsilon(1e-12));
    }
  }
}

TEST_CASE("tree paths") {
  Tree t(5, {{0, 1, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {3, 4, 1.0}});
  CHECK(t.parent(4) == 3);
  CHECK(t.depth(4) == 3);
  CHECK(t.path(2, 4) == std::vector<Vertex>{2, 1, 3, 4});
  CHECK(t.path(4, 4) == std::vector<Vertex>{4});
  CHECK_THROWS_AS(Tree(3, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
}

TEST_CASE("bidirect") {
  Tree ab(2, {{0, 1, 1.0}});
  CHECK(bidirect(ab) == ArcSet{{0, 1}, {1, 0}});
  Tree abc(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  CHECK(bidirect(abc) == ArcSet{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  Tree t5(5, {{0, 1, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {3, 4, 1.0}});
  CHECK(bidirect(t5).size() == 8);
}

TEST_CASE("strong connectivity") {
  Instance t = triangle();
  CHECK(is_strongly_connected(t, bidirect(minimum_spanning_tree(t))));
  CHECK_FALSE(is_strongly_connected(t, ArcSet{{0, 1}, {1, 2}}));
  CHECK(is_strongly_connected(t, ArcSet{{0, 1}, {1, 2}, {2, 0}}));
  CHECK(is_strongly_connected(Instance(1, {}), ArcSet{}));
  CHECK_FALSE(is_strongly_connected(Instance(2, {{0, 1, 1.0}}), ArcSet{{0, 1}}));
}

TEST_CASE("strong connectivity agrees with transitive closure") {
  std::mt19937_64 rng(2024);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 800; ++trial) {
    int n = 1 + trial % 6;
    Instance inst = minpower::testing::random_graph(rng, n, 0.6, true);
    ArcSet arcs;
    for (const Edge& e : inst.edges()) {
      if (coin(rng)) arcs.insert({e.u, e.v});
      if (coin(rng)) arcs.insert({e.v, e.u});
    }
    CHECK(is_strongly_connected(inst, arcs) ==
          minpower::testing::closure_strongly_connected(n, arcs));
  }
}

TEST_CASE("power of an arc set") {
  Instance t = triangle();
  ArcSet tree_arcs{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  PowerAssignment p = power_of(t, tree_arcs);
  CHECK(p[0] == 3.0);
  CHECK(p[1] == 4.0);
  CHECK(p[2] == 4.0);
  CHECK(p.total() == 11.0);
  CHECK(power_of(t, ArcSet{}).total() == 0.0);
  CHECK_THROWS_AS(power_of(Instance(3, {{0, 1, 1.0}, {1, 2, 1.0}}), ArcSet{{0, 2}}),
                  std::invalid_argument);

  Instance line = gen_line(20, 0.01);
  CHECK(mst_baseline(line).total() == 40.0);
}

TEST_CASE("induced arcs") {
  Instance ab(2, {{0, 1, 3.0}});
  CHECK(induced_arcs(ab, PowerAssignment(std::vector<double>{3.0, 0.0})) == ArcSet{{0, 1}});
  CHECK(induced_arcs(triangle(), PowerAssignment(3)).empty());

  Instance t = triangle();
  PowerAssignment top(std::vector<double>{5.0, 4.0, 5.0});
  ArcSet all;
  for (const Edge& e : t.edges()) {
    all.insert({e.u, e.v});
    all.insert({e.v, e.u});
  }
  CHECK(induced_arcs(t, top) == all);
}

TEST_CASE("power and induced arc invariants") {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 8;
    Instance inst = minpower::testing::random_graph(rng, n, 0.5, trial % 3 == 0);
    ArcSet arcs;
    double arc_sum = 0.0;
    for (const Edge& e : inst.edges()) {
      if (coin(rng)) arcs.insert({e.u, e.v}), arc_sum += e.cost;
      if (coin(rng)) arcs.insert({e.v, e.u}), arc_sum += e.cost;
    }
    PowerAssignment p = power_of(inst, arcs);
    CHECK(p.total() <= arc_sum * (1 + 1e-12));
    for (Vertex u = 0; u < n; ++u) {
      bool has_out = false;
      for (Arc a : arcs) has_out |= a.tail == u;
      if (!has_out) CHECK(p[u] == 0.0);
    }
    ArcSet induced = induced_arcs(inst, p);
    CHECK(induced.includes(arcs));
    CHECK(power_of(inst, induced).total() == p.total());

    Tree tree = minimum_spanning_tree(inst);
    CHECK(mst_baseline(inst).total() <= 2.0 * tree.cost() * (1 + 1e-12));
    CHECK(mst_baseline(inst).total() >= tree.cost() * (1 - 1e-12));
  }
}

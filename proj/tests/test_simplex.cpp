#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minpower/simplex.hpp"

using namespace minpower;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd mat(int rows, int cols, std::initializer_list<double> values) {
  MatrixXd m(rows, cols);
  auto it = values.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

VectorXd vec(std::initializer_list<double> values) {
  VectorXd v(values.size());
  int i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("textbook maximum") {
  // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18
  auto r = lp::maximize(mat(3, 2, {1, 0, 0, 2, 3, 2}), vec({4, 12, 18}), vec({3, 5}));
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.objective == doctest::Approx(36.0));
  CHECK(r.x(0) == doctest::Approx(2.0));
  CHECK(r.x(1) == doctest::Approx(6.0));
  CHECK(r.duals(0) == doctest::Approx(0.0));
  CHECK(r.duals(1) == doctest::Approx(1.5));
  CHECK(r.duals(2) == doctest::Approx(1.0));
}

TEST_CASE("negative right-hand sides need phase one") {
  // min x + y  s.t.  x + 2y >= 2, 3x + y >= 3
  auto r = lp::maximize(mat(2, 2, {-1, -2, -3, -1}), vec({-2, -3}), vec({-1, -1}));
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(-r.objective == doctest::Approx(1.4));
  CHECK(r.x(0) == doctest::Approx(0.8));
  CHECK(r.x(1) == doctest::Approx(0.6));
}

TEST_CASE("infeasible and unbounded") {
  // x <= 1 and x >= 2
  auto inf = lp::maximize(mat(2, 1, {1, -1}), vec({1, -2}), vec({1}));
  CHECK(inf.status == lp::Status::infeasible);

  auto unb = lp::maximize(mat(1, 2, {1, -1}), vec({1}), vec({1, 1}));
  CHECK(unb.status == lp::Status::unbounded);
}

TEST_CASE("degenerate vertex does not cycle") {
  // Beale's cycling example for the largest-coefficient rule.
  MatrixXd A = mat(3, 4, {0.25, -60, -0.04, 9, 0.5, -90, -0.02, 3, 0, 0, 1, 0});
  auto r = lp::maximize(A, vec({0, 0, 1}), vec({0.75, -150, 0.02, -6}));
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.objective == doctest::Approx(0.05));
}

TEST_CASE("empty problems") {
  auto none = lp::maximize(MatrixXd(0, 2), VectorXd(0), vec({-1, -2}));
  REQUIRE(none.status == lp::Status::optimal);
  CHECK(none.objective == 0.0);
  auto free_up = lp::maximize(MatrixXd(0, 1), VectorXd(0), vec({1}));
  CHECK(free_up.status == lp::Status::unbounded);
}

TEST_CASE("iteration limit is reported") {
  lp::Options<double> opts;
  opts.max_iterations = 1;
  auto r = lp::maximize(mat(3, 2, {1, 0, 0, 2, 3, 2}), vec({4, 12, 18}), vec({3, 5}), opts);
  CHECK(r.status == lp::Status::iteration_limit);
}

TEST_CASE("strong duality on random feasible programs") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 7, n = 1 + (trial / 7) % 6;
    MatrixXd A(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = u(rng) < 0.2 ? 0.0 : u(rng) * 2.0 - 0.3;
    A.row(0).setConstant(1.0);
    VectorXd b(m), c(n);
    for (int i = 0; i < m; ++i) b(i) = 0.5 + u(rng);
    for (int j = 0; j < n; ++j) c(j) = u(rng) * 2.0 - 0.5;
    auto r = lp::maximize(A, b, c);
    REQUIRE(r.status == lp::Status::optimal);
    CAPTURE(trial);
    // primal feasibility
    CHECK(((A * r.x - b).array() <= 1e-9).all());
    CHECK((r.x.array() >= -1e-12).all());
    // dual feasibility and equal objectives
    CHECK((r.duals.array() >= -1e-9).all());
    CHECK(((A.transpose() * r.duals - c).array() >= -1e-9).all());
    CHECK(b.dot(r.duals) == doctest::Approx(r.objective).epsilon(1e-9));
    CHECK(c.dot(r.x) == doctest::Approx(r.objective).epsilon(1e-9));
  }
}

TEST_CASE("long double instantiation") {
  using M = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using V = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  M A(2, 2);
  A << 1, 1, 1, 3;
  V b(2), c(2);
  b << 4, 6;
  c << 1, 2;
  lp::DenseSimplex<long double> solver;
  auto r = solver.maximize(A, b, c);
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(static_cast<double>(r.objective) == doctest::Approx(5.0));
}

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace minpower::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };

template <typename Scalar>
struct Options {
  Scalar tolerance = Scalar(1e-9);
  int max_iterations = 200'000;
};

template <typename Scalar>
struct Result {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Status status = Status::iteration_limit;
  Scalar objective = Scalar(0);
  Vector x;
  /// Shadow prices of the constraint rows (solution of the dual LP).
  Vector duals;
  int iterations = 0;
};

/// Dense tableau simplex for  max c'x  s.t.  Ax <= b, x >= 0.
///
/// Two phases (a single auxiliary column when some b_i < 0), Bland's rule for
/// both the entering column and ties in the ratio test.
template <typename Scalar>
class DenseSimplex {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit DenseSimplex(Options<Scalar> options = {}) : options_(options) {}

  Result<Scalar> maximize(const Matrix& A, const Vector& b, const Vector& c) {
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    m_ = m;
    n_ = n;
    aux_ = n + m;
    tableau_.setZero(m, n + m + 1);
    tableau_.leftCols(n) = A;
    tableau_.middleCols(n, m).setIdentity();
    tableau_.col(aux_).setConstant(Scalar(-1));
    rhs_ = b;
    basis_.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) basis_[i] = n + i;
    excluded_.assign(n + m + 1, false);
    iterations_ = 0;

    Result<Scalar> result;
    const Scalar tol = options_.tolerance;

    if (m > 0 && rhs_.minCoeff() < -tol) {
      reduced_.setZero(n + m + 1);
      reduced_(aux_) = Scalar(-1);
      Eigen::Index row;
      rhs_.minCoeff(&row);
      pivot(row, aux_);
      Status s = run();
      if (s != Status::optimal) return finish(result, s);
      if (objective_of_aux() < -tol) return finish(result, Status::infeasible);
      for (Eigen::Index i = 0; i < m; ++i) {
        if (basis_[i] != aux_) continue;
        for (Eigen::Index j = 0; j < n + m; ++j) {
          if (std::abs(tableau_(i, j)) > tol) {
            pivot(i, j);
            break;
          }
        }
      }
    }
    excluded_[aux_] = true;

    // Phase 2 reduced costs d_j = c_j - c_B' B^-1 A_j.
    Vector costs = Vector::Zero(n + m + 1);
    costs.head(n) = c;
    reduced_ = costs;
    for (Eigen::Index i = 0; i < m; ++i) reduced_ -= costs(basis_[i]) * tableau_.row(i).transpose();
    Status s = run();
    if (s != Status::optimal) return finish(result, s);

    result.x = Vector::Zero(n);
    result.objective = Scalar(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis_[i] < n) result.x(basis_[i]) = rhs_(i);
      result.objective += costs(basis_[i]) * rhs_(i);
    }
    result.duals = -reduced_.segment(n, m);
    return finish(result, Status::optimal);
  }

 private:
  Result<Scalar>& finish(Result<Scalar>& r, Status s) {
    r.status = s;
    r.iterations = iterations_;
    return r;
  }

  Scalar objective_of_aux() const {
    for (Eigen::Index i = 0; i < m_; ++i)
      if (basis_[i] == aux_) return -rhs_(i);
    return Scalar(0);
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar inv = Scalar(1) / tableau_(row, col);
    tableau_.row(row) *= inv;
    rhs_(row) *= inv;
    Vector factors = tableau_.col(col);
    factors(row) = Scalar(0);
    tableau_.noalias() -= factors * tableau_.row(row);
    rhs_ -= factors * rhs_(row);
    reduced_ -= reduced_(col) * tableau_.row(row).transpose();
    basis_[row] = col;
    ++iterations_;
  }

  Status run() {
    const Scalar tol = options_.tolerance;
    while (true) {
      if (iterations_ >= options_.max_iterations) return Status::iteration_limit;
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < reduced_.size(); ++j) {
        if (!excluded_[j] && reduced_(j) > tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::optimal;

      Eigen::Index leave = -1;
      Scalar best = Scalar(0);
      for (Eigen::Index i = 0; i < m_; ++i) {
        const Scalar a = tableau_(i, enter);
        if (a <= tol) continue;
        const Scalar ratio = rhs_(i) / a;
        const Scalar slack = tol * std::max(Scalar(1), std::abs(best));
        if (leave < 0 || ratio < best - slack ||
            (ratio <= best + slack && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return Status::unbounded;
      pivot(leave, enter);
    }
  }

  Options<Scalar> options_;
  Eigen::Index m_ = 0;
  Eigen::Index n_ = 0;
  Eigen::Index aux_ = 0;
  Matrix tableau_;
  Vector rhs_;
  Vector reduced_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> excluded_;
  int iterations_ = 0;
};

template <typename Derived, typename VecB, typename VecC>
auto maximize(const Eigen::MatrixBase<Derived>& A, const Eigen::MatrixBase<VecB>& b,
              const Eigen::MatrixBase<VecC>& c,
              Options<typename Derived::Scalar> options = {}) {
  using Scalar = typename Derived::Scalar;
  DenseSimplex<Scalar> solver(options);
  return solver.maximize(A.eval(), b.eval(), c.eval());
}

}  // namespace minpower::lp

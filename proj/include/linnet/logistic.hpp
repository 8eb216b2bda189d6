#pragma once

#include <Eigen/Dense>

namespace linnet::detail {

struct LogisticFit {
  Eigen::VectorXd coef;
  bool converged = false;
  double grad_max_norm = 0.0;
};

// Minimizes the L2-penalized negative Bernoulli log-likelihood
//   J(b) = -sum_i [ y_i log s(x_i.b) + (1-y_i) log(1 - s(x_i.b)) ] + (l2/2) |b|^2
// by damped Newton iterations. Stops when the gradient max-norm drops to
// `grad_tol` or after `max_iter` iterations.
LogisticFit fit_logistic(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                         double l2, double grad_tol = 1e-6, int max_iter = 500);

// Objective and gradient at b, shared with the fitter (and with
// finite-difference tests).
double logistic_objective(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                          double l2, const Eigen::VectorXd& b,
                          Eigen::VectorXd* grad = nullptr);

}  // namespace linnet::detail

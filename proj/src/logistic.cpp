#include "linnet/logistic.hpp"

#include <cmath>

namespace linnet::detail {

namespace {
inline double log1p_exp(double x) {
  // log(1 + e^x), stable for both tails
  return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}
}  // namespace

double logistic_objective(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                          double l2, const Eigen::VectorXd& b,
                          Eigen::VectorXd* grad) {
  Eigen::VectorXd eta = X * b;
  double nll = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    // -[y eta - log(1+e^eta)]
    nll += log1p_exp(eta[i]) - y[i] * eta[i];
  }
  nll += 0.5 * l2 * b.squaredNorm();
  if (grad) {
    Eigen::VectorXd p = eta.unaryExpr([](double e) { return 1.0 / (1.0 + std::exp(-e)); });
    *grad = X.transpose() * (p - y) + l2 * b;
  }
  return nll;
}

LogisticFit fit_logistic(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                         double l2, double grad_tol, int max_iter) {
  const Eigen::Index k = X.cols();
  LogisticFit fit;
  fit.coef = Eigen::VectorXd::Zero(k);

  Eigen::VectorXd grad(k);
  double obj = logistic_objective(X, y, l2, fit.coef, &grad);

  for (int iter = 0; iter < max_iter; ++iter) {
    fit.grad_max_norm = grad.lpNorm<Eigen::Infinity>();
    if (fit.grad_max_norm <= grad_tol) {
      fit.converged = true;
      return fit;
    }
    Eigen::VectorXd eta = X * fit.coef;
    Eigen::VectorXd w = eta.unaryExpr([](double e) {
      double p = 1.0 / (1.0 + std::exp(-e));
      return p * (1.0 - p);
    });
    Eigen::MatrixXd H = X.transpose() * w.asDiagonal() * X;
    H.diagonal().array() += l2 + 1e-12;  // keep the solve well posed
    Eigen::VectorXd step = H.ldlt().solve(grad);

    // backtracking on the Newton step
    double scale = 1.0;
    for (int bt = 0; bt < 40; ++bt) {
      Eigen::VectorXd cand = fit.coef - scale * step;
      Eigen::VectorXd cand_grad(k);
      double cand_obj = logistic_objective(X, y, l2, cand, &cand_grad);
      if (cand_obj <= obj) {
        fit.coef = std::move(cand);
        grad = std::move(cand_grad);
        obj = cand_obj;
        break;
      }
      scale *= 0.5;
    }
  }
  fit.grad_max_norm = grad.lpNorm<Eigen::Infinity>();
  fit.converged = fit.grad_max_norm <= grad_tol;
  return fit;
}

}  // namespace linnet::detail

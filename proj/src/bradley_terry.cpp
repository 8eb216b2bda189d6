#include "linnet/bradley_terry.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "linnet/logistic.hpp"

namespace linnet {

double predict(const BTModel& m, const Eigen::VectorXd& xi, const Eigen::VectorXd& xj) {
  if (xi.size() != m.coefficients.size() || xj.size() != m.coefficients.size()) {
    throw std::invalid_argument("predict: dimension mismatch");
  }
  double eta = m.coefficients.dot(xi - xj);
  return 1.0 / (1.0 + std::exp(-eta));
}

BTModel fit_bt(const std::vector<BTSample>& train, double l2) {
  if (train.empty()) throw std::invalid_argument("fit_bt: no training pairs");
  if (l2 < 0.0) throw std::invalid_argument("fit_bt: negative l2");
  const Eigen::Index d = train.front().xi.size();

  Eigen::MatrixXd X(static_cast<Eigen::Index>(train.size()), d);
  Eigen::VectorXd y(static_cast<Eigen::Index>(train.size()));
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (train[i].xi.size() != d || train[i].xj.size() != d) {
      throw std::invalid_argument("fit_bt: dimension mismatch in training pair");
    }
    X.row(static_cast<Eigen::Index>(i)) = (train[i].xi - train[i].xj).transpose();
    y[static_cast<Eigen::Index>(i)] = train[i].label ? 1.0 : 0.0;
  }

  detail::LogisticFit fit = detail::fit_logistic(X, y, l2);
  if (!fit.converged) {
    std::fprintf(stderr,
                 "fit_bt: optimizer stopped without convergence (grad max-norm %.3g); "
                 "input may be separable\n",
                 fit.grad_max_norm);
  }
  return BTModel{fit.coef, l2};
}

Eigen::VectorXd impute_unseen(const Embedding& emb,
                              const std::vector<Lineup>& team_lineups,
                              const Lineup& fresh) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(emb.d);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(emb.d);
  double sigma_total = 0.0;
  int n = 0;
  for (const auto& mate : team_lineups) {
    auto it = emb.vectors.find(mate.id);
    if (it == emb.vectors.end()) continue;
    Eigen::Map<const Eigen::VectorXd> x(it->second.data(),
                                        static_cast<Eigen::Index>(it->second.size()));
    double sigma = player_overlap(fresh, mate);
    acc += sigma * x;
    mean += x;
    sigma_total += sigma;
    ++n;
  }
  if (n == 0) {
    std::fprintf(stderr, "impute_unseen: lineup %d has no embedded teammates, zero vector\n",
                 fresh.id);
    return Eigen::VectorXd::Zero(emb.d);
  }
  if (sigma_total == 0.0) return mean / n;
  return acc / sigma_total;
}

void save_bt_model(const BTModel& m, std::ostream& out) {
  std::ostringstream os;
  os.precision(17);
  os << m.coefficients.size() << ' ' << m.l2_penalty << '\n';
  for (Eigen::Index i = 0; i < m.coefficients.size(); ++i) os << m.coefficients[i] << '\n';
  out << os.str();
}

BTModel load_bt_model(std::istream& in) {
  Eigen::Index d = 0;
  double l2 = 0.0;
  if (!(in >> d >> l2) || d < 1) throw std::runtime_error("load_bt_model: bad header");
  BTModel m;
  m.l2_penalty = l2;
  m.coefficients.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!(in >> m.coefficients[i])) throw std::runtime_error("load_bt_model: truncated coefficients");
  }
  return m;
}

}  // namespace linnet

#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "linnet/dataset.hpp"
#include "linnet/embedding.hpp"

namespace linnet {

// Logistic model on embedding differences. No intercept: the win probability
// must satisfy P(i beats j) + P(j beats i) = 1 under the arbitrary lower-id
// orientation.
struct BTModel {
  Eigen::VectorXd coefficients;
  double l2_penalty = 0.0;
};

struct BTSample {
  Eigen::VectorXd xi;
  Eigen::VectorXd xj;
  bool label = false;  // true iff the reference lineup (xi side) outperformed
};

// P(i beats j) = logistic(coef . (xi - xj)).
double predict(const BTModel& m, const Eigen::VectorXd& xi, const Eigen::VectorXd& xj);

// L2-penalized maximum-likelihood fit; converges to gradient max-norm <= 1e-6
// or stops after 500 Newton iterations. Warns on separable degenerate input.
BTModel fit_bt(const std::vector<BTSample>& train, double l2);

// Latent vector for a lineup never embedded: overlap-weighted mean
// of its team's embedded lineups. Falls back to the unweighted team mean when
// every overlap is zero, and to the zero vector (with a warning) when the
// team has no embedded lineups.
Eigen::VectorXd impute_unseen(const Embedding& emb,
                              const std::vector<Lineup>& team_lineups,
                              const Lineup& fresh);

// Text dump: `d l2` header line, then one coefficient per line.
void save_bt_model(const BTModel& m, std::ostream& out);
BTModel load_bt_model(std::istream& in);

}  // namespace linnet

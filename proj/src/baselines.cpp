#include "linnet/baselines.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "linnet/logistic.hpp"

namespace linnet {

namespace {

// Out-edge weights (or 1s) and the degree matrix diagonal.
struct PRSystem {
  std::vector<std::vector<MatchupNetwork::Edge>> out;  // possibly binarized
  std::vector<double> degree;                          // d_ii = max(1, k_out)
};

PRSystem pr_system(const MatchupNetwork& net, bool weighted) {
  PRSystem sys;
  sys.out.resize(net.num_nodes());
  sys.degree.assign(net.num_nodes(), 0.0);
  for (int i = 0; i < net.num_nodes(); ++i) {
    double k = 0.0;
    for (const auto& e : net.out[i]) {
      double w = weighted ? e.weight : 1.0;
      sys.out[i].push_back({e.target, w});
      k += w;
    }
    sys.degree[i] = std::max(1.0, k);
  }
  return sys;
}

std::vector<double> pr_direct(const PRSystem& sys, double alpha) {
  const int n = static_cast<int>(sys.degree.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    M(i, i) = sys.degree[i];
    for (const auto& e : sys.out[i]) M(e.target, i) -= alpha * e.weight;
  }
  // (D - alpha A^T) x = 1, r = D x
  Eigen::VectorXd x = M.partialPivLu().solve(Eigen::VectorXd::Ones(n));
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) r[i] = sys.degree[i] * x[i];
  return r;
}

std::vector<double> pr_iterative(const PRSystem& sys, double alpha) {
  const int n = static_cast<int>(sys.degree.size());
  std::vector<double> r(n, 1.0), next(n);
  for (int iter = 0; iter < 100000; ++iter) {
    std::fill(next.begin(), next.end(), 1.0);
    for (int i = 0; i < n; ++i) {
      double push = alpha * r[i] / sys.degree[i];
      for (const auto& e : sys.out[i]) next[e.target] += push * e.weight;
    }
    double resid = 0.0;
    for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(next[i] - r[i]));
    r.swap(next);
    if (resid <= 1e-10) break;
  }
  return r;
}

}  // namespace

PageRankScores pagerank(const MatchupNetwork& net, double alpha, bool weighted,
                        PageRankMethod method) {
  if (!(alpha >= 0.0) || alpha >= 1.0) throw std::invalid_argument("pagerank: alpha must be in [0,1)");
  if (net.num_nodes() == 0) throw std::invalid_argument("pagerank: empty network");

  if (alpha == 0.0) {  // no diffusion: every node keeps the unit source, exactly
    PageRankScores out;
    out.alpha = 0.0;
    for (int id : net.node_ids) out.scores[id] = 1.0;
    return out;
  }

  PRSystem sys = pr_system(net, weighted);
  bool direct = method == PageRankMethod::Direct ||
                (method == PageRankMethod::Auto && net.num_nodes() <= 2000);
  std::vector<double> r = direct ? pr_direct(sys, alpha) : pr_iterative(sys, alpha);

  PageRankScores out;
  out.alpha = alpha;
  for (int i = 0; i < net.num_nodes(); ++i) out.scores[net.node_ids[i]] = r[i];
  return out;
}

APMRatings compute_apm(const SeasonDataset& ds, double ridge) {
  if (ds.matchups.empty()) throw std::invalid_argument("compute_apm: no matchups");
  if (ridge < 0.0) throw std::invalid_argument("compute_apm: negative ridge");

  std::map<PlayerId, int> index;
  for (const auto& [id, lineup] : ds.lineups) {
    (void)id;
    for (const auto& p : lineup.players) index.emplace(p, 0);
  }
  int k = 0;
  for (auto& [p, idx] : index) idx = k++;

  const int n = static_cast<int>(ds.matchups.size());
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, k);
  Eigen::VectorXd y(n), w(n);
  for (int row = 0; row < n; ++row) {
    const auto& rec = ds.matchups[static_cast<std::size_t>(row)];
    for (const auto& p : ds.lineups.at(rec.lineup_a).players) P(row, index.at(p)) += 1.0;
    for (const auto& p : ds.lineups.at(rec.lineup_b).players) P(row, index.at(p)) -= 1.0;
    y[row] = rec.point_diff / rec.minutes * 48.0;
    w[row] = rec.minutes;
  }
  double total_w = w.sum();

  Eigen::VectorXd a;
  if (ridge > 0.0) {
    // (P' W P / sum(w) + ridge I) a = P' W y / sum(w); weight-normalized so
    // duplicating rows leaves the solution unchanged
    Eigen::MatrixXd G = P.transpose() * w.asDiagonal() * P / total_w;
    G.diagonal().array() += ridge;
    a = G.ldlt().solve(P.transpose() * (w.asDiagonal() * y) / total_w);
  } else {
    Eigen::VectorXd sw = w.array().sqrt();
    Eigen::MatrixXd Pw = sw.asDiagonal() * P;
    Eigen::VectorXd yw = sw.asDiagonal() * y;
    a = Pw.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(yw);  // minimum-norm
  }

  APMRatings out;
  out.ridge = ridge;
  for (const auto& [p, idx] : index) out.player_apm[p] = a[idx];
  return out;
}

double lineup_apm(const APMRatings& r, const Lineup& l) {
  double sum = 0.0;
  for (const auto& p : l.players) {
    auto it = r.player_apm.find(p);
    if (it == r.player_apm.end()) {
      throw std::invalid_argument("lineup_apm: unrated player '" + p + "'");
    }
    sum += it->second;
  }
  return sum / 5.0;
}

ScalarModel fit_scalar_model(const std::vector<std::pair<double, bool>>& features) {
  if (features.empty()) throw std::invalid_argument("fit_scalar_model: no pairs");
  const int n = static_cast<int>(features.size());
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = features[static_cast<std::size_t>(i)].first;
    X(i, 1) = 1.0;  // intercept
    y[i] = features[static_cast<std::size_t>(i)].second ? 1.0 : 0.0;
  }
  detail::LogisticFit fit = detail::fit_logistic(X, y, 0.0);
  if (!fit.converged) {
    std::fprintf(stderr, "fit_scalar_model: separable input, refitting with l2 = 1e-6\n");
    fit = detail::fit_logistic(X, y, 1e-6);
  }
  return ScalarModel{fit.coef[0], fit.coef[1]};
}

double predict_scalar(const ScalarModel& m, double delta) {
  return 1.0 / (1.0 + std::exp(-(m.slope * delta + m.intercept)));
}

}  // namespace linnet

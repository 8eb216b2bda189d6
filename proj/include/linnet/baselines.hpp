#pragma once

#include <map>
#include <vector>

#include "linnet/dataset.hpp"
#include "linnet/network.hpp"

namespace linnet {

struct PageRankScores {
  std::map<int, double> scores;  // lineup id -> score
  double alpha = 0.85;
};

enum class PageRankMethod { Auto, Direct, Iterative };

// PageRank of the matchup network: scores satisfy r = 1 + alpha A^T D^-1 r
// with A the (weighted) adjacency matrix and d_ii = max(1, out-degree of i),
// so credit flows along edges toward the outperforming lineup. alpha = 0
// returns all ones. `weighted` = false uses binary adjacency. Auto picks a
// dense direct solve up to 2000 nodes and the fixed-point iteration beyond
// (residual max-norm <= 1e-10).
PageRankScores pagerank(const MatchupNetwork& net, double alpha,
                        bool weighted = true,
                        PageRankMethod method = PageRankMethod::Auto);

struct APMRatings {
  std::map<PlayerId, double> player_apm;
  double ridge = 0.0;
};

// Adjusted plus/minus: one regression row per matchup record with response
// point_diff / minutes * 48, +1 entries for the lower-id ("home") lineup's
// players and -1 for the other five. Rows are weighted by minutes and the
// weighted mean squared error is ridge-penalized; ridge = 0 gives the
// minimum-norm least-squares solution.
APMRatings compute_apm(const SeasonDataset& ds, double ridge);

// Mean APM of a lineup's five players; throws naming any unrated player.
double lineup_apm(const APMRatings& r, const Lineup& l);

struct ScalarModel {
  double slope = 0.0;
  double intercept = 0.0;
};

// Single-feature logistic regression (with intercept) on rating differentials.
// Separable input falls back to a tiny L2 penalty (1e-6) with a warning.
ScalarModel fit_scalar_model(const std::vector<std::pair<double, bool>>& features);

double predict_scalar(const ScalarModel& m, double delta);

}  // namespace linnet

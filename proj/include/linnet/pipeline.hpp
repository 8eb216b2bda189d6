#pragma once

#include <map>
#include <string>
#include <vector>

#include "linnet/baselines.hpp"
#include "linnet/bradley_terry.hpp"
#include "linnet/dataset.hpp"
#include "linnet/embedding.hpp"
#include "linnet/evaluate.hpp"
#include "linnet/network.hpp"
#include "linnet/walks.hpp"

namespace linnet {

struct PipelineConfig {
  WalkConfig walk;
  EmbedConfig embed;
  double bt_l2 = 1.0;
  double pagerank_alpha = 0.85;
  bool pagerank_weighted = true;
  double apm_ridge = 100.0;
  SplitSpec split;
  double min_minutes = 0.0;
};

// Embedding-model artifacts trained on one dataset.
struct FittedModel {
  MatchupNetwork net;
  Embedding embedding;
  BTModel bt;
};

FittedModel fit_pipeline(const SeasonDataset& train, const PipelineConfig& cfg);

// Vector for a lineup: the trained embedding when present, otherwise the
// overlap-weighted imputation over the lineup's embedded teammates. `unseen`
// is set when imputation was needed.
Eigen::VectorXd lineup_vector(const FittedModel& model, const SeasonDataset& ds,
                              const Lineup& lineup, bool* unseen = nullptr);

struct EvaluateResult {
  EvalReport linnet;
  EvalReport pagerank;
  EvalReport apm;
};

// Splits the dataset, trains all three systems on the train half, and scores
// them on the same test half.
EvaluateResult run_evaluate(const SeasonDataset& ds, const PipelineConfig& cfg);

// Mean win probability of each lineup against all lineups of other teams,
// aggregated into per-team minutes-weighted ratings. Requires team tokens.
std::map<std::string, double> rate_teams(const SeasonDataset& ds,
                                         const FittedModel& model);

}  // namespace linnet

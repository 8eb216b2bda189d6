#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linnet/dataset.hpp"
#include "linnet/embedding.hpp"

namespace linnet {

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 1;
};

// Uniform random partition of the labeled (nonzero-margin) records; tied
// records all go to train. Both halves share the full lineup/team tables.
std::pair<SeasonDataset, SeasonDataset> split(const SeasonDataset& ds, const SplitSpec& spec);

// Mean squared difference between probabilities and binary outcomes.
double brier(const std::vector<double>& preds, const std::vector<int>& labels);

// Constant base-rate reference: returns (positive fraction, its Brier score).
std::pair<double, double> climatology(const std::vector<int>& labels);

// Fraction of correct classifications at the 0.5 threshold; a prediction of
// exactly 0.5 counts as incorrect.
double accuracy(const std::vector<double>& preds, const std::vector<int>& labels);

struct CalibrationBin {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  double predicted_mean = 0.0;
  double empirical_rate = 0.0;
};

struct CalibrationResult {
  std::vector<CalibrationBin> bins;  // 20 fixed 5% bins
  std::optional<double> slope;       // count-weighted least-squares line over
  std::optional<double> intercept;   // nonempty bins; absent when degenerate
};

CalibrationResult calibration(const std::vector<double>& preds, const std::vector<int>& labels);

// Minutes-weighted mean win probability over a team's lineups; entries are
// (mean win probability, total minutes). Lineups at 48 minutes or fewer are
// excluded; throws when none qualify.
double team_rating(const std::vector<std::pair<double, double>>& prob_minutes);

// Pearson correlation between player overlap and embedding distance over all
// unordered pairs of one team's embedded lineups. Absent when fewer than 3
// pairs exist or either variable has zero variance.
std::optional<double> similarity_distance_diag(const Embedding& emb,
                                               const std::vector<Lineup>& team_lineups);

struct EvalReport {
  std::string method;
  double accuracy = 0.0;
  double brier = 0.0;
  double brier_climatology = 0.0;
  double climatology_prob = 0.0;
  CalibrationResult calib;
  int n_test = 0;
  int n_unseen = 0;  // distinct test lineups imputed or defaulted
};

// Deterministic JSON rendering (stable key order and float formatting).
std::string report_to_json(const EvalReport& report);

// CSV rendering of the calibration bins: lo,hi,count,pred_mean,emp_rate.
std::string calibration_to_csv(const CalibrationResult& calib);

}  // namespace linnet

#pragma once

#include <cstdint>
#include <map>

#include "linnet/dataset.hpp"

namespace linnet {

struct SynthConfig {
  int n_teams = 8;
  int lineups_per_team = 6;
  double ability_sd = 1.0;
  double noise_sd = 0.5;
  double matchup_density = 0.5;  // probability a cross-team pair plays
  double minutes_lo = 4.0;
  double minutes_hi = 40.0;
  std::uint64_t seed = 7;
};

struct SynthResult {
  SeasonDataset dataset;
  std::map<int, double> ability;  // planted latent ability per lineup
};

// Synthetic season with planted ground truth. Each team draws lineups as a
// sliding window over a shared player pool (adjacent lineups overlap in 4
// players). Every lineup gets a latent ability with marginal variance
// ability_sd^2, mostly inherited from its players' shared skills plus a
// smaller lineup-specific term, so roster overlap implies correlated
// performance. Scheduling is rotation-weighted: lineups earlier in a team's
// rotation see geometrically more matchups (as real floor time does), with
// matchup_density the average cross-team pair probability. Minutes are
// uniform and the per-minute margin ~ N(ability_i - ability_j, noise_sd^2).
SynthResult generate(const SynthConfig& cfg);

}  // namespace linnet

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "linnet/dataset.hpp"
#include "linnet/synth.hpp"

using namespace linnet;

TEST_CASE("noiseless seasons are won by the higher-ability lineup") {
  SynthConfig cfg;
  cfg.noise_sd = 0.0;
  cfg.seed = 4;
  auto [ds, ability] = generate(cfg);
  REQUIRE(!ds.matchups.empty());
  for (const auto& m : ds.matchups) {
    double gap = ability.at(m.lineup_a) - ability.at(m.lineup_b);
    if (gap > 0) CHECK(m.point_diff > 0);
    if (gap < 0) CHECK(m.point_diff < 0);
  }
}

TEST_CASE("generation is deterministic per seed") {
  SynthConfig cfg;
  auto r1 = generate(cfg);
  auto r2 = generate(cfg);
  CHECK(r1.dataset == r2.dataset);
  CHECK(r1.ability == r2.ability);
  cfg.seed = 8;
  CHECK(generate(cfg).dataset != r1.dataset);
}

TEST_CASE("structure: team sizes, overlap, cross-team matchups only") {
  SynthConfig cfg;
  cfg.n_teams = 4;
  cfg.lineups_per_team = 5;
  auto [ds, ability] = generate(cfg);
  CHECK(ds.lineups.size() == 20);
  CHECK(ability.size() == 20);
  for (const auto& m : ds.matchups) {
    CHECK(ds.team_of.at(m.lineup_a) != ds.team_of.at(m.lineup_b));
    CHECK(m.lineup_a < m.lineup_b);
    CHECK(m.minutes >= cfg.minutes_lo);
    CHECK(m.minutes <= cfg.minutes_hi);
  }
  // adjacent lineups of a team share 4 players under the sliding window
  for (int t = 0; t < 4; ++t) {
    for (int k = 0; k < 4; ++k) {
      int id = t * 5 + k + 1;
      CHECK(player_overlap(ds.lineups.at(id), ds.lineups.at(id + 1)) == 4);
    }
  }
}

TEST_CASE("generated CSV round-trips through ingest") {
  SynthConfig cfg;
  cfg.n_teams = 3;
  cfg.lineups_per_team = 4;
  auto [ds, ability] = generate(cfg);
  std::ostringstream os;
  serialize(ds, os);
  std::istringstream is(os.str());
  auto back = ingest(is);
  // the CSV carries matchup rows only, so a lineup with no matchups (a deep
  // rotation slot can sit out a whole season) is not representable
  SeasonDataset played = ds;
  std::erase_if(played.lineups, [&](const auto& kv) {
    return std::none_of(ds.matchups.begin(), ds.matchups.end(), [&](const MatchupRecord& m) {
      return m.lineup_a == kv.first || m.lineup_b == kv.first;
    });
  });
  std::erase_if(played.team_of,
                [&](const auto& kv) { return !played.lineups.count(kv.first); });
  CHECK(back == played);
  CHECK(back.matchups == ds.matchups);
}

TEST_CASE("win rate of the stronger lineup is monotone in the ability gap") {
  SynthConfig cfg;
  cfg.n_teams = 10;
  cfg.lineups_per_team = 10;
  cfg.matchup_density = 1.0;
  cfg.noise_sd = 0.5;
  cfg.seed = 99;
  auto [ds, ability] = generate(cfg);
  REQUIRE(ds.matchups.size() >= 500);

  const int n_bins = 6;
  std::vector<double> wins(n_bins, 0.0), counts(n_bins, 0.0);
  for (const auto& m : ds.matchups) {
    double gap = std::abs(ability.at(m.lineup_a) - ability.at(m.lineup_b));
    int bin = std::min(n_bins - 1, static_cast<int>(gap / 0.5));
    bool stronger_won = (ability.at(m.lineup_a) > ability.at(m.lineup_b)) ==
                        (m.point_diff > 0.0);
    wins[bin] += stronger_won;
    counts[bin] += 1.0;
  }
  int violations = 0;
  double prev = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    if (counts[b] < 10) continue;
    double rate = wins[b] / counts[b];
    if (rate + 1e-12 < prev) ++violations;
    prev = rate;
  }
  CHECK(violations <= 2);
}

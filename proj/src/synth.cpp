#include "linnet/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "linnet/rng.hpp"

namespace linnet {

SynthResult generate(const SynthConfig& cfg) {
  if (cfg.n_teams < 2 || cfg.lineups_per_team < 2 || !(cfg.ability_sd > 0.0) ||
      cfg.noise_sd < 0.0 || !(cfg.matchup_density > 0.0) || cfg.matchup_density > 1.0 ||
      !(cfg.minutes_lo > 0.0) || cfg.minutes_lo > cfg.minutes_hi) {
    throw std::invalid_argument("generate: invalid SynthConfig");
  }

  std::mt19937_64 rng(cfg.seed);
  SynthResult out;
  char buf[32];

  // Three quarters of the ability variance comes from shared player skills,
  // the rest is lineup-specific, so overlapping lineups perform alike without
  // making the season exactly linear in the players.
  const double skill_component_sd = cfg.ability_sd * std::sqrt(0.75);
  const double idio_sd = cfg.ability_sd * 0.5;
  const double skill_sd = skill_component_sd * std::sqrt(5.0);  // mean of 5

  int next_id = 1;
  for (int t = 0; t < cfg.n_teams; ++t) {
    std::snprintf(buf, sizeof buf, "T%02d", t);
    std::string team = buf;
    // pool of lineups_per_team + 4 players; lineup k takes pool[k .. k+4]
    std::vector<PlayerId> pool;
    std::vector<double> skill;
    for (int p = 0; p < cfg.lineups_per_team + 4; ++p) {
      std::snprintf(buf, sizeof buf, "T%02dP%02d", t, p);
      pool.emplace_back(buf);
      skill.push_back(normal(rng, 0.0, skill_sd));
    }
    for (int k = 0; k < cfg.lineups_per_team; ++k) {
      Lineup l;
      l.id = next_id++;
      l.players.assign(pool.begin() + k, pool.begin() + k + 5);
      std::sort(l.players.begin(), l.players.end());
      out.dataset.team_of[l.id] = team;
      double from_players = 0.0;
      for (int p = k; p < k + 5; ++p) from_players += skill[static_cast<std::size_t>(p)];
      out.ability[l.id] = from_players / 5.0 + normal(rng, 0.0, idio_sd);
      out.dataset.lineups.emplace(l.id, std::move(l));
    }
  }

  // Rotation-weighted exposure: lineup k of each team carries usage decay^k,
  // so early-rotation lineups play far more matchups, as real floor time
  // does. Pair probabilities are scaled so the season-wide mean stays at
  // matchup_density.
  const double decay = 0.4;
  const int total = cfg.n_teams * cfg.lineups_per_team;
  std::vector<double> usage(static_cast<std::size_t>(total));
  double mean_usage = 0.0;
  for (int i = 0; i < total; ++i) {
    usage[static_cast<std::size_t>(i)] = std::pow(decay, i % cfg.lineups_per_team);
    mean_usage += usage[static_cast<std::size_t>(i)];
  }
  mean_usage /= total;

  for (int i = 1; i <= total; ++i) {
    for (int j = i + 1; j <= total; ++j) {
      if (out.dataset.team_of.at(i) == out.dataset.team_of.at(j)) continue;
      double pair_prob = cfg.matchup_density * usage[static_cast<std::size_t>(i - 1)] *
                         usage[static_cast<std::size_t>(j - 1)] / (mean_usage * mean_usage);
      if (uniform01(rng) >= std::min(1.0, pair_prob)) continue;
      double minutes = uniform_real(rng, cfg.minutes_lo, cfg.minutes_hi);
      double margin = normal(rng, out.ability.at(i) - out.ability.at(j), cfg.noise_sd);
      out.dataset.matchups.push_back(MatchupRecord{i, j, minutes, margin * minutes});
    }
  }
  return out;
}

}  // namespace linnet

#include "linnet/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace linnet {

namespace {

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<Lineup> team_lineups_of(const SeasonDataset& ds, const std::string& team) {
  std::vector<Lineup> out;
  for (const auto& [id, t] : ds.team_of) {
    if (t == team) out.push_back(ds.lineups.at(id));
  }
  return out;
}

EvalReport score(const std::string& method, const std::vector<double>& preds,
                 const std::vector<int>& labels, int n_unseen) {
  EvalReport r;
  r.method = method;
  r.accuracy = accuracy(preds, labels);
  r.brier = brier(preds, labels);
  auto [base, base_brier] = climatology(labels);
  r.climatology_prob = base;
  r.brier_climatology = base_brier;
  r.calib = calibration(preds, labels);
  r.n_test = static_cast<int>(preds.size());
  r.n_unseen = n_unseen;
  return r;
}

}  // namespace

FittedModel fit_pipeline(const SeasonDataset& train, const PipelineConfig& cfg) {
  FittedModel model;
  model.net = build_network(train);
  auto walks = generate_walks(model.net, cfg.walk);
  model.embedding = train_embedding(model.net, walks, cfg.embed);

  std::vector<BTSample> samples;
  for (const auto& rec : train.matchups) {
    if (rec.point_diff == 0.0) continue;  // ties carry no label
    samples.push_back(BTSample{to_eigen(model.embedding.vectors.at(rec.lineup_a)),
                               to_eigen(model.embedding.vectors.at(rec.lineup_b)),
                               rec.point_diff > 0.0});
  }
  if (samples.empty()) throw std::invalid_argument("fit_pipeline: no labeled matchups");
  model.bt = fit_bt(samples, cfg.bt_l2);
  return model;
}

Eigen::VectorXd lineup_vector(const FittedModel& model, const SeasonDataset& ds,
                              const Lineup& lineup, bool* unseen) {
  auto it = model.embedding.vectors.find(lineup.id);
  if (it != model.embedding.vectors.end()) {
    if (unseen) *unseen = false;
    return to_eigen(it->second);
  }
  if (unseen) *unseen = true;
  auto team_it = ds.team_of.find(lineup.id);
  if (team_it == ds.team_of.end()) {
    throw std::invalid_argument("lineup_vector: lineup " + std::to_string(lineup.id) +
                                " is unseen and has no team token for imputation");
  }
  return impute_unseen(model.embedding, team_lineups_of(ds, team_it->second), lineup);
}

EvaluateResult run_evaluate(const SeasonDataset& ds, const PipelineConfig& cfg) {
  auto [train, test] = split(ds, cfg.split);
  if (test.matchups.empty()) throw std::invalid_argument("run_evaluate: empty test split");

  FittedModel model = fit_pipeline(train, cfg);

  std::vector<int> labels;
  labels.reserve(test.matchups.size());
  for (const auto& rec : test.matchups) labels.push_back(rec.point_diff > 0.0 ? 1 : 0);

  // LinNet
  std::vector<double> preds;
  std::set<int> unseen_ids;
  for (const auto& rec : test.matchups) {
    bool ua = false, ub = false;
    Eigen::VectorXd xa = lineup_vector(model, ds, ds.lineups.at(rec.lineup_a), &ua);
    Eigen::VectorXd xb = lineup_vector(model, ds, ds.lineups.at(rec.lineup_b), &ub);
    if (ua) unseen_ids.insert(rec.lineup_a);
    if (ub) unseen_ids.insert(rec.lineup_b);
    preds.push_back(predict(model.bt, xa, xb));
  }

  EvaluateResult result;
  result.linnet = score("linnet", preds, labels, static_cast<int>(unseen_ids.size()));

  // PageRank baseline
  PageRankScores pr = pagerank(model.net, cfg.pagerank_alpha, cfg.pagerank_weighted);
  auto pr_score = [&](int id) {
    auto it = pr.scores.find(id);
    return it != pr.scores.end() ? it->second : 1.0;  // isolated-node value
  };
  std::vector<std::pair<double, bool>> pr_train;
  for (const auto& rec : train.matchups) {
    if (rec.point_diff == 0.0) continue;
    pr_train.emplace_back(pr_score(rec.lineup_a) - pr_score(rec.lineup_b),
                          rec.point_diff > 0.0);
  }
  ScalarModel pr_model = fit_scalar_model(pr_train);
  std::vector<double> pr_preds;
  std::set<int> pr_unseen;
  for (const auto& rec : test.matchups) {
    for (int id : {rec.lineup_a, rec.lineup_b}) {
      if (!pr.scores.count(id)) pr_unseen.insert(id);
    }
    pr_preds.push_back(predict_scalar(pr_model, pr_score(rec.lineup_a) - pr_score(rec.lineup_b)));
  }
  result.pagerank = score("pagerank", pr_preds, labels, static_cast<int>(pr_unseen.size()));

  // APM baseline; players missing from the train half rate 0
  APMRatings apm = compute_apm(train, cfg.apm_ridge);
  auto apm_lineup = [&](const Lineup& l, bool* missing) {
    double sum = 0.0;
    for (const auto& p : l.players) {
      auto it = apm.player_apm.find(p);
      if (it == apm.player_apm.end()) {
        if (missing) *missing = true;
        continue;
      }
      sum += it->second;
    }
    return sum / 5.0;
  };
  std::vector<std::pair<double, bool>> apm_train;
  for (const auto& rec : train.matchups) {
    if (rec.point_diff == 0.0) continue;
    apm_train.emplace_back(apm_lineup(train.lineups.at(rec.lineup_a), nullptr) -
                               apm_lineup(train.lineups.at(rec.lineup_b), nullptr),
                           rec.point_diff > 0.0);
  }
  ScalarModel apm_model = fit_scalar_model(apm_train);
  std::vector<double> apm_preds;
  std::set<int> apm_unseen;
  for (const auto& rec : test.matchups) {
    bool ma = false, mb = false;
    double da = apm_lineup(ds.lineups.at(rec.lineup_a), &ma);
    double db = apm_lineup(ds.lineups.at(rec.lineup_b), &mb);
    if (ma) apm_unseen.insert(rec.lineup_a);
    if (mb) apm_unseen.insert(rec.lineup_b);
    apm_preds.push_back(predict_scalar(apm_model, da - db));
  }
  result.apm = score("apm", apm_preds, labels, static_cast<int>(apm_unseen.size()));

  return result;
}

std::map<std::string, double> rate_teams(const SeasonDataset& ds, const FittedModel& model) {
  if (ds.team_of.empty()) {
    throw std::invalid_argument("rate_teams: dataset carries no team tokens");
  }
  std::map<int, double> minutes_of;
  for (const auto& rec : ds.matchups) {
    minutes_of[rec.lineup_a] += rec.minutes;
    minutes_of[rec.lineup_b] += rec.minutes;
  }

  // mean win probability of each lineup against every other team's lineup
  std::map<int, Eigen::VectorXd> vectors;
  for (const auto& [id, lineup] : ds.lineups) {
    if (!ds.team_of.count(id)) {
      throw std::invalid_argument("rate_teams: lineup " + std::to_string(id) +
                                  " has no team token");
    }
    vectors.emplace(id, lineup_vector(model, ds, lineup));
  }

  std::map<std::string, std::vector<std::pair<double, double>>> per_team;
  for (const auto& [id, xi] : vectors) {
    const std::string& team = ds.team_of.at(id);
    double acc = 0.0;
    int n = 0;
    for (const auto& [jd, xj] : vectors) {
      if (ds.team_of.at(jd) == team) continue;
      acc += predict(model.bt, xi, xj);
      ++n;
    }
    if (n == 0) continue;
    per_team[team].emplace_back(acc / n, minutes_of.count(id) ? minutes_of.at(id) : 0.0);
  }

  std::map<std::string, double> ratings;
  for (const auto& [team, entries] : per_team) {
    bool qualifies = std::any_of(entries.begin(), entries.end(),
                                 [](const auto& e) { return e.second > 48.0; });
    if (!qualifies) {
      std::fprintf(stderr, "rate_teams: team %s has no lineup above 48 minutes, skipped\n",
                   team.c_str());
      continue;
    }
    ratings[team] = team_rating(entries);
  }
  return ratings;
}

}  // namespace linnet

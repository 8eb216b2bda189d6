// Batch pipeline driver: ingestion -> network -> embedding -> models ->
// evaluation, plus the synthetic-experiment command. All randomness flows
// from config seeds.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linnet/pipeline.hpp"
#include "linnet/synth.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace linnet;

namespace {

struct CliConfig {
  std::string data_csv;
  std::string out_dir = "runs";
  std::string records_csv;  // optional team,wins,losses file
  PipelineConfig pipeline;
  SynthConfig synth;
};

template <typename T>
void read_key(const json& j, const char* key, T& out) {
  if (j.contains(key)) {
    try {
      out = j.at(key).get<T>();
    } catch (const std::exception&) {
      throw std::runtime_error(std::string("config key '") + key + "' has the wrong type");
    }
  }
}

CliConfig load_config(const std::string& path) {
  CliConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("config '" + path + "': " + e.what());
  }
  read_key(j, "data_csv", cfg.data_csv);
  read_key(j, "out_dir", cfg.out_dir);
  read_key(j, "records_csv", cfg.records_csv);
  read_key(j, "min_minutes", cfg.pipeline.min_minutes);
  read_key(j, "bt_l2", cfg.pipeline.bt_l2);
  read_key(j, "apm_ridge", cfg.pipeline.apm_ridge);
  if (j.contains("walk")) {
    const json& w = j.at("walk");
    read_key(w, "p", cfg.pipeline.walk.p);
    read_key(w, "q", cfg.pipeline.walk.q);
    read_key(w, "num_walks", cfg.pipeline.walk.num_walks);
    read_key(w, "walk_length", cfg.pipeline.walk.walk_length);
    read_key(w, "seed", cfg.pipeline.walk.seed);
  }
  if (j.contains("embed")) {
    const json& e = j.at("embed");
    read_key(e, "d", cfg.pipeline.embed.d);
    read_key(e, "window", cfg.pipeline.embed.window);
    read_key(e, "negatives", cfg.pipeline.embed.negatives);
    read_key(e, "epochs", cfg.pipeline.embed.epochs);
    read_key(e, "lr_initial", cfg.pipeline.embed.lr_initial);
    read_key(e, "seed", cfg.pipeline.embed.seed);
  }
  if (j.contains("pagerank")) {
    const json& p = j.at("pagerank");
    read_key(p, "alpha", cfg.pipeline.pagerank_alpha);
    read_key(p, "weighted", cfg.pipeline.pagerank_weighted);
  }
  if (j.contains("split")) {
    const json& s = j.at("split");
    read_key(s, "train_fraction", cfg.pipeline.split.train_fraction);
    read_key(s, "seed", cfg.pipeline.split.seed);
  }
  if (j.contains("synth")) {
    const json& s = j.at("synth");
    read_key(s, "n_teams", cfg.synth.n_teams);
    read_key(s, "lineups_per_team", cfg.synth.lineups_per_team);
    read_key(s, "ability_sd", cfg.synth.ability_sd);
    read_key(s, "noise_sd", cfg.synth.noise_sd);
    read_key(s, "matchup_density", cfg.synth.matchup_density);
    read_key(s, "minutes_lo", cfg.synth.minutes_lo);
    read_key(s, "minutes_hi", cfg.synth.minutes_hi);
    read_key(s, "seed", cfg.synth.seed);
  }
  return cfg;
}

SeasonDataset load_dataset(const CliConfig& cfg) {
  if (cfg.data_csv.empty()) throw std::runtime_error("missing config key 'data_csv'");
  std::ifstream in(cfg.data_csv);
  if (!in) throw std::runtime_error("cannot open data file '" + cfg.data_csv + "'");
  return ingest(in, cfg.pipeline.min_minutes);
}

fs::path run_dir(const CliConfig& cfg, const std::string& command, std::uint64_t seed) {
  fs::path dir = fs::path(cfg.out_dir) / (command + "-" + std::to_string(seed));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_synth(const CliConfig& cfg) {
  auto dir = run_dir(cfg, "synth", cfg.synth.seed);
  auto result = generate(cfg.synth);
  std::ostringstream csv;
  serialize(result.dataset, csv);
  write_file(dir / "season.csv", csv.str());
  std::ostringstream truth;
  truth.precision(17);
  truth << "lineup_id,ability\n";
  for (const auto& [id, a] : result.ability) truth << id << ',' << a << '\n';
  write_file(dir / "ground_truth.csv", truth.str());
  std::cout << "synth: " << result.dataset.lineups.size() << " lineups, "
            << result.dataset.matchups.size() << " matchups -> " << dir.string() << "\n";
  return 0;
}

int cmd_ingest_check(const CliConfig& cfg) {
  auto ds = load_dataset(cfg);
  int ties = 0;
  double minutes = 0.0;
  for (const auto& m : ds.matchups) {
    ties += m.point_diff == 0.0;
    minutes += m.minutes;
  }
  std::cout << "ingest-check: " << ds.lineups.size() << " lineups, " << ds.matchups.size()
            << " matchups (" << ties << " tied), " << minutes << " total minutes, "
            << ds.team_of.size() << " team-tagged lineups\n";
  return 0;
}

int cmd_build_net(const CliConfig& cfg) {
  auto ds = load_dataset(cfg);
  auto net = build_network(ds);
  auto dir = run_dir(cfg, "build-net", 0);
  std::ostringstream os;
  write_edge_list(net, os);
  write_file(dir / "edges.txt", os.str());
  int edges = 0;
  for (const auto& out : net.out) edges += static_cast<int>(out.size());
  std::cout << "build-net: " << net.num_nodes() << " nodes, " << edges << " edges -> "
            << (dir / "edges.txt").string() << "\n";
  return 0;
}

int cmd_embed(const CliConfig& cfg) {
  auto ds = load_dataset(cfg);
  auto net = build_network(ds);
  auto walks = generate_walks(net, cfg.pipeline.walk);
  TrainStats stats;
  auto emb = train_embedding(net, walks, cfg.pipeline.embed, &stats);
  auto dir = run_dir(cfg, "embed", cfg.pipeline.embed.seed);
  std::ostringstream os;
  save_embedding(emb, os);
  write_file(dir / "embedding.txt", os.str());
  std::cout << "embed: " << emb.vectors.size() << " vectors of dim " << emb.d << ", "
            << stats.total_updates << " updates, " << stats.isolated_nodes
            << " isolated -> " << (dir / "embedding.txt").string() << "\n";
  return 0;
}

int cmd_fit(const CliConfig& cfg) {
  auto ds = load_dataset(cfg);
  auto model = fit_pipeline(ds, cfg.pipeline);
  auto dir = run_dir(cfg, "fit", cfg.pipeline.embed.seed);
  std::ostringstream emb_os, model_os;
  save_embedding(model.embedding, emb_os);
  save_bt_model(model.bt, model_os);
  write_file(dir / "embedding.txt", emb_os.str());
  write_file(dir / "bt_model.txt", model_os.str());
  std::cout << "fit: d=" << model.embedding.d << ", |coef|="
            << model.bt.coefficients.norm() << " -> " << dir.string() << "\n";
  return 0;
}

int cmd_evaluate(const CliConfig& cfg) {
  auto ds = load_dataset(cfg);
  auto result = run_evaluate(ds, cfg.pipeline);
  auto dir = run_dir(cfg, "evaluate", cfg.pipeline.split.seed);
  for (const auto* report : {&result.linnet, &result.pagerank, &result.apm}) {
    write_file(dir / (report->method + "_report.json"), report_to_json(*report));
    write_file(dir / (report->method + "_calibration.csv"),
               calibration_to_csv(report->calib));
    std::cout << "evaluate[" << report->method << "]: accuracy=" << report->accuracy
              << " brier=" << report->brier << " (climatology " << report->brier_climatology
              << ") n_test=" << report->n_test << " n_unseen=" << report->n_unseen << "\n";
  }
  std::cout << "evaluate: reports -> " << dir.string() << "\n";
  return 0;
}

Lineup parse_player_list(const std::string& spec, int synthetic_id) {
  std::vector<PlayerId> players;
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, '|')) {
    if (!tok.empty()) players.push_back(tok);
  }
  std::sort(players.begin(), players.end());
  if (players.size() != 5 ||
      std::adjacent_find(players.begin(), players.end()) != players.end()) {
    throw std::runtime_error("player list must contain exactly 5 distinct tokens");
  }
  return Lineup{synthetic_id, std::move(players)};
}

struct PredictSide {
  std::optional<int> lineup_id;
  std::string players;  // '|'-separated, for unseen lineups
  std::string team;
};

Eigen::VectorXd side_vector(const SeasonDataset& ds, const FittedModel& model,
                            const PredictSide& side, int synthetic_id) {
  if (side.lineup_id) {
    auto it = ds.lineups.find(*side.lineup_id);
    if (it == ds.lineups.end()) {
      std::ostringstream known;
      int shown = 0;
      for (const auto& [id, l] : ds.lineups) {
        if (shown++) known << ' ';
        known << id;
      }
      throw std::runtime_error("unknown lineup id " + std::to_string(*side.lineup_id) +
                               " and no player list given; known ids: " + known.str());
    }
    return lineup_vector(model, ds, it->second);
  }
  if (side.players.empty()) throw std::runtime_error("need --id or --players per side");
  if (side.team.empty()) {
    throw std::runtime_error("a player list needs --team to pick imputation candidates");
  }
  Lineup fresh = parse_player_list(side.players, synthetic_id);
  std::vector<Lineup> mates;
  for (const auto& [id, t] : ds.team_of) {
    if (t == side.team) mates.push_back(ds.lineups.at(id));
  }
  if (mates.empty()) throw std::runtime_error("no lineups found for team '" + side.team + "'");
  return impute_unseen(model.embedding, mates, fresh);
}

int cmd_predict(const CliConfig& cfg, const PredictSide& a, const PredictSide& b,
                const std::string& model_dir) {
  auto ds = load_dataset(cfg);
  FittedModel model;
  if (!model_dir.empty()) {
    model.net = build_network(ds);
    std::istringstream emb_is(slurp(fs::path(model_dir) / "embedding.txt"));
    model.embedding = load_embedding(emb_is);
    std::istringstream bt_is(slurp(fs::path(model_dir) / "bt_model.txt"));
    model.bt = load_bt_model(bt_is);
  } else {
    model = fit_pipeline(ds, cfg.pipeline);
  }
  Eigen::VectorXd xa = side_vector(ds, model, a, -1);
  Eigen::VectorXd xb = side_vector(ds, model, b, -2);
  std::cout.precision(6);
  std::cout << "P(side A outperforms side B) = " << predict(model.bt, xa, xb) << "\n";
  return 0;
}

int cmd_rate_teams(const CliConfig& cfg) {
  auto ds = load_dataset(cfg);
  auto model = fit_pipeline(ds, cfg.pipeline);
  auto ratings = rate_teams(ds, model);
  auto dir = run_dir(cfg, "rate-teams", cfg.pipeline.embed.seed);
  std::ostringstream os;
  os.precision(17);
  os << "team,rating\n";
  for (const auto& [team, r] : ratings) os << team << ',' << r << '\n';
  write_file(dir / "team_ratings.csv", os.str());
  std::cout << "rate-teams: " << ratings.size() << " teams -> "
            << (dir / "team_ratings.csv").string() << "\n";

  if (!cfg.records_csv.empty()) {
    // optional win-loss correlation against a team,wins,losses file
    std::ifstream in(cfg.records_csv);
    if (!in) throw std::runtime_error("cannot open records file '" + cfg.records_csv + "'");
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> x, y;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream is(line);
      std::string team, wins, losses;
      std::getline(is, team, ',');
      std::getline(is, wins, ',');
      std::getline(is, losses, ',');
      auto it = ratings.find(team);
      if (it == ratings.end()) continue;
      double w = std::stod(wins), l = std::stod(losses);
      x.push_back(it->second);
      y.push_back(w / (w + l));
    }
    if (x.size() >= 3) {
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
      }
      mx /= x.size();
      my /= y.size();
      double sxx = 0, syy = 0, sxy = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
      }
      std::cout << "rate-teams: correlation with win fraction = "
                << sxy / std::sqrt(sxx * syy) << " over " << x.size() << " teams\n";
    } else {
      std::cout << "rate-teams: too few matched teams for a correlation\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lineup matchup prediction via network embedding"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("-c,--config", config_path, "JSON config file");

  // flag overrides shared across subcommands
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> data_override, out_override;
  app.add_option("--seed", seed_override, "override every seed in the config");
  app.add_option("--data", data_override, "override data_csv");
  app.add_option("--out", out_override, "override out_dir");

  auto* synth = app.add_subcommand("synth", "generate a synthetic season");
  auto* ingest_check = app.add_subcommand("ingest-check", "validate and summarize a data file");
  auto* build_net = app.add_subcommand("build-net", "dump the matchup network edge list");
  auto* embed = app.add_subcommand("embed", "train and dump the embedding");
  auto* fit = app.add_subcommand("fit", "fit the full model and dump artifacts");
  auto* evaluate = app.add_subcommand("evaluate", "train/test split evaluation of all systems");
  auto* predict_cmd = app.add_subcommand("predict", "probability that side A outperforms side B");
  auto* rate = app.add_subcommand("rate-teams", "minutes-weighted team ratings");

  // let `linnet <cmd> --config ...` work; global options may follow the command
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  PredictSide side_a, side_b;
  std::string model_dir;
  predict_cmd->add_option("--id-a", side_a.lineup_id, "lineup id of side A");
  predict_cmd->add_option("--id-b", side_b.lineup_id, "lineup id of side B");
  predict_cmd->add_option("--players-a", side_a.players, "5 '|'-separated players for side A");
  predict_cmd->add_option("--players-b", side_b.players, "5 '|'-separated players for side B");
  predict_cmd->add_option("--team-a", side_a.team, "team token for an unseen side A");
  predict_cmd->add_option("--team-b", side_b.team, "team token for an unseen side B");
  predict_cmd->add_option("--model-dir", model_dir, "artifacts from a previous `fit` run");

  CLI11_PARSE(app, argc, argv);

  try {
    CliConfig cfg = load_config(config_path);
    if (data_override) cfg.data_csv = *data_override;
    if (out_override) cfg.out_dir = *out_override;
    if (seed_override) {
      cfg.pipeline.walk.seed = *seed_override;
      cfg.pipeline.embed.seed = *seed_override;
      cfg.pipeline.split.seed = *seed_override;
      cfg.synth.seed = *seed_override;
    }
    if (synth->parsed()) return cmd_synth(cfg);
    if (ingest_check->parsed()) return cmd_ingest_check(cfg);
    if (build_net->parsed()) return cmd_build_net(cfg);
    if (embed->parsed()) return cmd_embed(cfg);
    if (fit->parsed()) return cmd_fit(cfg);
    if (evaluate->parsed()) return cmd_evaluate(cfg);
    if (predict_cmd->parsed()) return cmd_predict(cfg, side_a, side_b, model_dir);
    if (rate->parsed()) return cmd_rate_teams(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

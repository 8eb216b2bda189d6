// Python bindings for the linnet core library.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linnet/baselines.hpp"
#include "linnet/bradley_terry.hpp"
#include "linnet/dataset.hpp"
#include "linnet/embedding.hpp"
#include "linnet/evaluate.hpp"
#include "linnet/network.hpp"
#include "linnet/pipeline.hpp"
#include "linnet/synth.hpp"
#include "linnet/walks.hpp"

namespace py = pybind11;
using namespace linnet;

namespace {

SeasonDataset ingest_csv_string(const std::string& csv, double min_minutes) {
  std::istringstream in(csv);
  return ingest(in, min_minutes);
}

std::string dataset_to_csv(const SeasonDataset& ds) {
  std::ostringstream out;
  serialize(ds, out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lineup matchup-network prediction core";

  py::class_<Lineup>(m, "Lineup")
      .def(py::init<>())
      .def_readwrite("id", &Lineup::id)
      .def_readwrite("players", &Lineup::players);

  py::class_<MatchupRecord>(m, "MatchupRecord")
      .def_readwrite("lineup_a", &MatchupRecord::lineup_a)
      .def_readwrite("lineup_b", &MatchupRecord::lineup_b)
      .def_readwrite("minutes", &MatchupRecord::minutes)
      .def_readwrite("point_diff", &MatchupRecord::point_diff);

  py::class_<SeasonDataset>(m, "SeasonDataset")
      .def(py::init<>())
      .def_readwrite("lineups", &SeasonDataset::lineups)
      .def_readwrite("matchups", &SeasonDataset::matchups)
      .def_readwrite("team_of", &SeasonDataset::team_of)
      .def("to_csv", &dataset_to_csv);

  m.def("ingest_csv", &ingest_csv_string, py::arg("csv"), py::arg("min_minutes") = 0.0);
  m.def("player_overlap", &player_overlap);

  py::class_<MatchupNetwork>(m, "MatchupNetwork")
      .def_readonly("node_ids", &MatchupNetwork::node_ids)
      .def("out_weight", &MatchupNetwork::out_weight)
      .def("has_edge", &MatchupNetwork::has_edge)
      .def("edges", [](const MatchupNetwork& net) {
        std::vector<std::tuple<int, int, double>> edges;
        for (std::size_t i = 0; i < net.out.size(); ++i) {
          for (const auto& e : net.out[i]) {
            edges.emplace_back(net.node_ids[i], net.node_ids[static_cast<std::size_t>(e.target)],
                               e.weight);
          }
        }
        return edges;
      });

  m.def("build_network", &build_network);

  py::class_<WalkConfig>(m, "WalkConfig")
      .def(py::init<>())
      .def_readwrite("p", &WalkConfig::p)
      .def_readwrite("q", &WalkConfig::q)
      .def_readwrite("num_walks", &WalkConfig::num_walks)
      .def_readwrite("walk_length", &WalkConfig::walk_length)
      .def_readwrite("seed", &WalkConfig::seed);

  m.def("generate_walks", &generate_walks);

  py::class_<EmbedConfig>(m, "EmbedConfig")
      .def(py::init<>())
      .def_readwrite("d", &EmbedConfig::d)
      .def_readwrite("window", &EmbedConfig::window)
      .def_readwrite("negatives", &EmbedConfig::negatives)
      .def_readwrite("epochs", &EmbedConfig::epochs)
      .def_readwrite("lr_initial", &EmbedConfig::lr_initial)
      .def_readwrite("seed", &EmbedConfig::seed);

  py::class_<Embedding>(m, "Embedding")
      .def_readonly("d", &Embedding::d)
      .def_readonly("vectors", &Embedding::vectors);

  m.def(
      "train_embedding",
      [](const MatchupNetwork& net, const std::vector<std::vector<int>>& walks,
         const EmbedConfig& cfg) { return train_embedding(net, walks, cfg); },
      py::arg("network"), py::arg("walks"), py::arg("config"));

  py::class_<BTModel>(m, "BTModel")
      .def_readonly("coefficients", &BTModel::coefficients)
      .def_readonly("l2_penalty", &BTModel::l2_penalty);

  m.def("fit_bt", &fit_bt, py::arg("samples"), py::arg("l2") = 1.0);
  m.def("bt_predict",
        [](const BTModel& model, const Eigen::VectorXd& xi, const Eigen::VectorXd& xj) {
          return predict(model, xi, xj);
        });
  m.def("impute_unseen", &impute_unseen);

  py::class_<BTSample>(m, "BTSample")
      .def(py::init<>())
      .def_readwrite("xi", &BTSample::xi)
      .def_readwrite("xj", &BTSample::xj)
      .def_readwrite("label", &BTSample::label);

  py::class_<PageRankScores>(m, "PageRankScores")
      .def_readonly("scores", &PageRankScores::scores)
      .def_readonly("alpha", &PageRankScores::alpha);

  m.def(
      "pagerank",
      [](const MatchupNetwork& net, double alpha, bool weighted) {
        return pagerank(net, alpha, weighted);
      },
      py::arg("network"), py::arg("alpha") = 0.85, py::arg("weighted") = true);

  py::class_<APMRatings>(m, "APMRatings")
      .def_readonly("player_apm", &APMRatings::player_apm)
      .def_readonly("ridge", &APMRatings::ridge);

  m.def("compute_apm", &compute_apm, py::arg("dataset"), py::arg("ridge") = 100.0);

  py::class_<SynthConfig>(m, "SynthConfig")
      .def(py::init<>())
      .def_readwrite("n_teams", &SynthConfig::n_teams)
      .def_readwrite("lineups_per_team", &SynthConfig::lineups_per_team)
      .def_readwrite("ability_sd", &SynthConfig::ability_sd)
      .def_readwrite("noise_sd", &SynthConfig::noise_sd)
      .def_readwrite("matchup_density", &SynthConfig::matchup_density)
      .def_readwrite("minutes_lo", &SynthConfig::minutes_lo)
      .def_readwrite("minutes_hi", &SynthConfig::minutes_hi)
      .def_readwrite("seed", &SynthConfig::seed);

  py::class_<SynthResult>(m, "SynthResult")
      .def_readonly("dataset", &SynthResult::dataset)
      .def_readonly("ability", &SynthResult::ability);

  m.def("generate_season", &generate, py::arg("config") = SynthConfig{});

  py::class_<SplitSpec>(m, "SplitSpec")
      .def(py::init<>())
      .def_readwrite("train_fraction", &SplitSpec::train_fraction)
      .def_readwrite("seed", &SplitSpec::seed);

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_readwrite("walk", &PipelineConfig::walk)
      .def_readwrite("embed", &PipelineConfig::embed)
      .def_readwrite("bt_l2", &PipelineConfig::bt_l2)
      .def_readwrite("pagerank_alpha", &PipelineConfig::pagerank_alpha)
      .def_readwrite("pagerank_weighted", &PipelineConfig::pagerank_weighted)
      .def_readwrite("apm_ridge", &PipelineConfig::apm_ridge)
      .def_readwrite("split", &PipelineConfig::split)
      .def_readwrite("min_minutes", &PipelineConfig::min_minutes);

  m.def("evaluate_json", [](const SeasonDataset& ds, const PipelineConfig& cfg) {
    auto result = run_evaluate(ds, cfg);
    py::dict out;
    out["linnet"] = report_to_json(result.linnet);
    out["pagerank"] = report_to_json(result.pagerank);
    out["apm"] = report_to_json(result.apm);
    return out;
  });

  m.def("rate_teams", [](const SeasonDataset& ds, const PipelineConfig& cfg) {
    auto model = fit_pipeline(ds, cfg);
    return rate_teams(ds, model);
  });
}

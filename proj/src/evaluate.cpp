#include "linnet/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "linnet/rng.hpp"

#include <nlohmann/json.hpp>

namespace linnet {

std::pair<SeasonDataset, SeasonDataset> split(const SeasonDataset& ds, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0) || !(spec.train_fraction < 1.0)) {
    throw std::invalid_argument("split: train_fraction must be in (0,1)");
  }
  std::vector<std::size_t> labeled;
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < ds.matchups.size(); ++i) {
    (ds.matchups[i].point_diff == 0.0 ? tied : labeled).push_back(i);
  }
  if (labeled.size() < 5) throw std::invalid_argument("split: fewer than 5 labeled matchups");

  // Fisher-Yates with our own uniform draw, for a reproducible shuffle
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = labeled.size() - 1; i > 0; --i) {
    std::size_t j = uniform_index(rng, i + 1);
    std::swap(labeled[i], labeled[j]);
  }
  std::size_t n_train = static_cast<std::size_t>(
      std::llround(spec.train_fraction * static_cast<double>(labeled.size())));
  n_train = std::clamp<std::size_t>(n_train, 1, labeled.size() - 1);

  SeasonDataset train{ds.lineups, {}, ds.team_of};
  SeasonDataset test{ds.lineups, {}, ds.team_of};
  std::vector<std::size_t> train_idx(labeled.begin(), labeled.begin() + n_train);
  train_idx.insert(train_idx.end(), tied.begin(), tied.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::vector<std::size_t> test_idx(labeled.begin() + n_train, labeled.end());
  std::sort(test_idx.begin(), test_idx.end());
  for (std::size_t i : train_idx) train.matchups.push_back(ds.matchups[i]);
  for (std::size_t i : test_idx) test.matchups.push_back(ds.matchups[i]);
  return {std::move(train), std::move(test)};
}

double brier(const std::vector<double>& preds, const std::vector<int>& labels) {
  if (preds.size() != labels.size()) throw std::invalid_argument("brier: length mismatch");
  if (preds.empty()) throw std::invalid_argument("brier: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    double d = preds[i] - labels[i];
    sum += d * d;
  }
  return sum / static_cast<double>(preds.size());
}

std::pair<double, double> climatology(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("climatology: empty input");
  double base = std::accumulate(labels.begin(), labels.end(), 0.0) /
                static_cast<double>(labels.size());
  std::vector<double> constant(labels.size(), base);
  return {base, brier(constant, labels)};
}

double accuracy(const std::vector<double>& preds, const std::vector<int>& labels) {
  if (preds.size() != labels.size()) throw std::invalid_argument("accuracy: length mismatch");
  if (preds.empty()) throw std::invalid_argument("accuracy: empty input");
  int correct = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    // 0.5 never classifies correctly
    if ((preds[i] > 0.5 && labels[i] == 1) || (preds[i] < 0.5 && labels[i] == 0)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(preds.size());
}

CalibrationResult calibration(const std::vector<double>& preds, const std::vector<int>& labels) {
  if (preds.size() != labels.size()) throw std::invalid_argument("calibration: length mismatch");
  if (preds.empty()) throw std::invalid_argument("calibration: empty input");

  CalibrationResult out;
  out.bins.resize(20);
  std::vector<double> pred_sum(20, 0.0), label_sum(20, 0.0);
  for (int b = 0; b < 20; ++b) {
    out.bins[b].lo = b * 0.05;
    out.bins[b].hi = (b + 1) * 0.05;
  }
  for (std::size_t i = 0; i < preds.size(); ++i) {
    int b = std::min(19, static_cast<int>(preds[i] / 0.05));
    ++out.bins[b].count;
    pred_sum[b] += preds[i];
    label_sum[b] += labels[i];
  }
  for (int b = 0; b < 20; ++b) {
    if (out.bins[b].count > 0) {
      out.bins[b].predicted_mean = pred_sum[b] / out.bins[b].count;
      out.bins[b].empirical_rate = label_sum[b] / out.bins[b].count;
    }
  }

  // count-weighted least squares through the nonempty bin points
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& bin : out.bins) {
    if (bin.count == 0) continue;
    double w = bin.count, x = bin.predicted_mean, y = bin.empirical_rate;
    sw += w;
    sx += w * x;
    sy += w * y;
    sxx += w * x * x;
    sxy += w * x * y;
  }
  double denom = sw * sxx - sx * sx;
  if (sw > 0.0 && std::abs(denom) > 1e-12 * sw * sw) {
    double slope = (sw * sxy - sx * sy) / denom;
    out.slope = slope;
    out.intercept = (sy - slope * sx) / sw;
  }
  return out;
}

double team_rating(const std::vector<std::pair<double, double>>& prob_minutes) {
  double acc = 0.0, total = 0.0;
  for (const auto& [p, gamma] : prob_minutes) {
    if (gamma <= 48.0) continue;  // less than a full game of minutes
    acc += gamma * p;
    total += gamma;
  }
  if (total == 0.0) throw std::invalid_argument("team_rating: no lineup above 48 minutes");
  return acc / total;
}

std::optional<double> similarity_distance_diag(const Embedding& emb,
                                               const std::vector<Lineup>& team_lineups) {
  std::vector<const Lineup*> embedded;
  for (const auto& l : team_lineups) {
    if (emb.vectors.count(l.id)) embedded.push_back(&l);
  }
  std::vector<double> overlap, dist;
  for (std::size_t i = 0; i < embedded.size(); ++i) {
    for (std::size_t j = i + 1; j < embedded.size(); ++j) {
      overlap.push_back(player_overlap(*embedded[i], *embedded[j]));
      const auto& xi = emb.vectors.at(embedded[i]->id);
      const auto& xj = emb.vectors.at(embedded[j]->id);
      double ss = 0.0;
      for (int k = 0; k < emb.d; ++k) {
        double dk = xi[static_cast<std::size_t>(k)] - xj[static_cast<std::size_t>(k)];
        ss += dk * dk;
      }
      dist.push_back(std::sqrt(ss));
    }
  }
  const std::size_t n = overlap.size();
  if (n < 3) return std::nullopt;
  double mo = std::accumulate(overlap.begin(), overlap.end(), 0.0) / n;
  double md = std::accumulate(dist.begin(), dist.end(), 0.0) / n;
  double so = 0, sd = 0, sod = 0;
  for (std::size_t i = 0; i < n; ++i) {
    so += (overlap[i] - mo) * (overlap[i] - mo);
    sd += (dist[i] - md) * (dist[i] - md);
    sod += (overlap[i] - mo) * (dist[i] - md);
  }
  if (so == 0.0 || sd == 0.0) return std::nullopt;
  return sod / std::sqrt(so * sd);
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["method"] = report.method;
  j["accuracy"] = report.accuracy;
  j["brier"] = report.brier;
  j["brier_climatology"] = report.brier_climatology;
  j["climatology_prob"] = report.climatology_prob;
  j["n_test"] = report.n_test;
  j["n_unseen"] = report.n_unseen;
  if (report.calib.slope) {
    j["calibration_slope"] = *report.calib.slope;
    j["calibration_intercept"] = *report.calib.intercept;
  } else {
    j["calibration_slope"] = nullptr;
    j["calibration_intercept"] = nullptr;
  }
  j["calibration_bins"] = nlohmann::ordered_json::array();
  for (const auto& bin : report.calib.bins) {
    j["calibration_bins"].push_back({{"lo", bin.lo},
                                     {"hi", bin.hi},
                                     {"count", bin.count},
                                     {"pred_mean", bin.predicted_mean},
                                     {"emp_rate", bin.empirical_rate}});
  }
  return j.dump(2) + "\n";
}

std::string calibration_to_csv(const CalibrationResult& calib) {
  std::ostringstream os;
  os.precision(17);
  os << "lo,hi,count,pred_mean,emp_rate\n";
  for (const auto& bin : calib.bins) {
    os << bin.lo << ',' << bin.hi << ',' << bin.count << ',' << bin.predicted_mean
       << ',' << bin.empirical_rate << '\n';
  }
  return os.str();
}

}  // namespace linnet

#include "linnet/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "linnet/rng.hpp"

namespace linnet {

namespace detail {

namespace {
inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
}  // namespace

double sgns_loss_grad(const double* center, const double* positive,
                      const std::vector<const double*>& negatives, int d,
                      double* center_grad, double* positive_grad,
                      std::vector<std::vector<double>>* negative_grads) {
  double loss = 0.0;
  std::fill(center_grad, center_grad + d, 0.0);

  double s = 0.0;
  for (int k = 0; k < d; ++k) s += center[k] * positive[k];
  double g = sigmoid(s) - 1.0;  // d loss / d s for the positive pair
  loss -= std::log(std::max(sigmoid(s), 1e-300));
  for (int k = 0; k < d; ++k) {
    positive_grad[k] = g * center[k];
    center_grad[k] += g * positive[k];
  }

  for (std::size_t n = 0; n < negatives.size(); ++n) {
    const double* neg = negatives[n];
    double sn = 0.0;
    for (int k = 0; k < d; ++k) sn += center[k] * neg[k];
    double gn = sigmoid(sn);  // d loss / d s for a negative pair
    loss -= std::log(std::max(sigmoid(-sn), 1e-300));
    auto& ngrad = (*negative_grads)[n];
    for (int k = 0; k < d; ++k) {
      ngrad[k] = gn * center[k];
      center_grad[k] += gn * neg[k];
    }
  }
  return loss;
}

}  // namespace detail

Embedding train_embedding(const MatchupNetwork& net,
                          const std::vector<std::vector<int>>& walks,
                          const EmbedConfig& cfg, TrainStats* stats) {
  if (cfg.d < 1 || cfg.window < 1 || cfg.negatives < 1 || cfg.epochs < 1 ||
      !(cfg.lr_initial > 0.0)) {
    throw std::invalid_argument("train_embedding: invalid EmbedConfig");
  }
  if (walks.empty()) throw std::invalid_argument("train_embedding: no walks");

  const int n = net.num_nodes();
  const int d = cfg.d;

  std::vector<double> counts(n, 0.0);
  std::uint64_t pairs_per_epoch = 0;
  for (const auto& walk : walks) {
    const int len = static_cast<int>(walk.size());
    for (int t = 0; t < len; ++t) {
      if (walk[t] < 0 || walk[t] >= n) {
        throw std::invalid_argument("train_embedding: walk node out of range");
      }
      counts[walk[t]] += 1.0;
      pairs_per_epoch += std::min(t, cfg.window) + std::min(len - 1 - t, cfg.window);
    }
  }
  const std::uint64_t total_updates = pairs_per_epoch * cfg.epochs;

  std::vector<double> noise_mass(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (counts[i] > 0.0) noise_mass[i] = std::pow(counts[i], 0.75);
  }
  DiscreteSampler noise(noise_mass);

  std::mt19937_64 rng(cfg.seed);
  std::vector<double> input(static_cast<std::size_t>(n) * d);
  std::vector<double> output(static_cast<std::size_t>(n) * d, 0.0);
  for (int i = 0; i < n; ++i) {
    bool visited = counts[i] > 0.0;
    for (int k = 0; k < d; ++k) {
      double v = uniform01(rng);
      input[static_cast<std::size_t>(i) * d + k] = visited ? (v - 0.5) / d : 0.0;
    }
  }

  const double lr_final = cfg.lr_initial / 100.0;
  std::vector<double> center_grad(d), positive_grad(d);
  std::vector<std::vector<double>> negative_grads(cfg.negatives, std::vector<double>(d));
  std::vector<const double*> negative_ptrs(cfg.negatives);
  std::vector<int> negative_idx(cfg.negatives);

  const std::uint64_t decile = std::max<std::uint64_t>(1, total_updates / 10);
  double loss_head = 0.0, loss_tail = 0.0;
  std::uint64_t n_head = 0, n_tail = 0;
  std::uint64_t update = 0;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& walk : walks) {
      const int len = static_cast<int>(walk.size());
      for (int t = 0; t < len; ++t) {
        const int center = walk[t];
        double* cvec = &input[static_cast<std::size_t>(center) * d];
        const int lo = std::max(0, t - cfg.window);
        const int hi = std::min(len - 1, t + cfg.window);
        for (int c = lo; c <= hi; ++c) {
          if (c == t) continue;
          const int ctx = walk[c];
          double* pvec = &output[static_cast<std::size_t>(ctx) * d];

          int n_neg = 0;
          for (int k = 0; k < cfg.negatives; ++k) {
            int cand = -1;
            for (int attempt = 0; attempt < 100; ++attempt) {
              cand = noise.sample(rng);
              if (cand != ctx) break;
              cand = -1;
            }
            if (cand < 0) continue;  // single-node vocabulary
            negative_idx[n_neg] = cand;
            negative_ptrs[n_neg] = &output[static_cast<std::size_t>(cand) * d];
            ++n_neg;
          }
          std::vector<const double*> negs(negative_ptrs.begin(),
                                          negative_ptrs.begin() + n_neg);

          double loss = detail::sgns_loss_grad(cvec, pvec, negs, d,
                                               center_grad.data(),
                                               positive_grad.data(),
                                               &negative_grads);

          double frac = total_updates > 1
                            ? static_cast<double>(update) / (total_updates - 1)
                            : 0.0;
          double lr = cfg.lr_initial + (lr_final - cfg.lr_initial) * frac;

          for (int k = 0; k < d; ++k) pvec[k] -= lr * positive_grad[k];
          for (int j = 0; j < n_neg; ++j) {
            double* nvec = &output[static_cast<std::size_t>(negative_idx[j]) * d];
            for (int k = 0; k < d; ++k) nvec[k] -= lr * negative_grads[j][k];
          }
          for (int k = 0; k < d; ++k) cvec[k] -= lr * center_grad[k];

          if (update < decile) {
            loss_head += loss;
            ++n_head;
          }
          if (update >= total_updates - decile) {
            loss_tail += loss;
            ++n_tail;
          }
          ++update;
        }
      }
    }
  }

  Embedding emb;
  emb.d = d;
  int isolated = 0;
  for (int i = 0; i < n; ++i) {
    if (counts[i] == 0.0) ++isolated;
    const double* v = &input[static_cast<std::size_t>(i) * d];
    emb.vectors.emplace(net.node_ids[i], std::vector<double>(v, v + d));
  }
  if (isolated > 0) {
    std::fprintf(stderr, "train_embedding: %d node(s) absent from all walks, zero vectors assigned\n",
                 isolated);
  }
  if (stats) {
    stats->total_updates = update;
    stats->mean_loss_first_decile = n_head ? loss_head / n_head : 0.0;
    stats->mean_loss_last_decile = n_tail ? loss_tail / n_tail : 0.0;
    stats->isolated_nodes = isolated;
  }
  return emb;
}

void save_embedding(const Embedding& emb, std::ostream& out) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [id, vec] : emb.vectors) {
    os.str("");
    os << id;
    for (double v : vec) os << ' ' << v;
    os << '\n';
    out << os.str();
  }
}

Embedding load_embedding(std::istream& in) {
  Embedding emb;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    int id;
    if (!(is >> id)) throw std::runtime_error("load_embedding: bad line '" + line + "'");
    std::vector<double> vec;
    double v;
    while (is >> v) vec.push_back(v);
    if (emb.d == 0) emb.d = static_cast<int>(vec.size());
    if (static_cast<int>(vec.size()) != emb.d || emb.d == 0) {
      throw std::runtime_error("load_embedding: inconsistent dimension");
    }
    emb.vectors.emplace(id, std::move(vec));
  }
  return emb;
}

}  // namespace linnet

#include "linnet/walks.hpp"

#include <stdexcept>

#include "linnet/rng.hpp"

namespace linnet {

namespace {

// Unnormalized masses over net.out[curr].
std::vector<double> transition_masses(const MatchupNetwork& net,
                                      std::optional<int> prev, int curr,
                                      double p, double q) {
  const auto& edges = net.out[curr];
  std::vector<double> masses;
  masses.reserve(edges.size());
  for (const auto& e : edges) {
    double alpha = 1.0;
    if (prev) {
      if (e.target == *prev) {
        alpha = 1.0 / p;
      } else if (net.has_edge(*prev, e.target)) {
        alpha = 1.0;
      } else {
        alpha = 1.0 / q;
      }
    }
    masses.push_back(alpha * e.weight);
  }
  return masses;
}

}  // namespace

std::vector<double> transition_distribution(const MatchupNetwork& net,
                                            std::optional<int> prev, int curr,
                                            double p, double q) {
  std::vector<double> masses = transition_masses(net, prev, curr, p, q);
  double total = 0.0;
  for (double m : masses) total += m;
  for (double& m : masses) m /= total;
  return masses;
}

std::vector<std::vector<int>> generate_walks(const MatchupNetwork& net,
                                             const WalkConfig& cfg) {
  if (net.num_nodes() == 0) throw std::invalid_argument("generate_walks: empty network");
  if (!(cfg.p > 0.0) || !(cfg.q > 0.0) || cfg.num_walks < 1 || cfg.walk_length < 1) {
    throw std::invalid_argument("generate_walks: invalid WalkConfig");
  }

  std::vector<std::vector<int>> walks(cfg.num_walks);
  for (int w = 0; w < cfg.num_walks; ++w) {
    std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(w)));
    std::vector<int>& walk = walks[w];
    walk.reserve(cfg.walk_length + 1);
    int curr = w % net.num_nodes();
    walk.push_back(curr);
    std::optional<int> prev;
    for (int hop = 0; hop < cfg.walk_length; ++hop) {
      std::vector<double> masses = transition_masses(net, prev, curr, cfg.p, cfg.q);
      if (masses.empty()) break;  // dead end
      int pick = sample_discrete(rng, masses);
      prev = curr;
      curr = net.out[curr][pick].target;
      walk.push_back(curr);
    }
  }
  return walks;
}

}  // namespace linnet

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linnet/network.hpp"

namespace linnet {

struct WalkConfig {
  double p = 0.5;           // return parameter
  double q = 3.0;           // in-out parameter
  int num_walks = 3000;     // total walks per network
  int walk_length = 3500;   // hops per walk
  std::uint64_t seed = 1;
};

// Second-order transition probabilities out of `curr`, aligned with
// net.out[curr]. With no `prev` (first hop) the masses are the raw edge
// weights. Otherwise each out-neighbor x gets weight scaled by
//   1/p  when x == prev,
//   1    when prev has an out-edge to x,
//   1/q  otherwise.
// Returns an empty vector at a dead end (no out-neighbors).
std::vector<double> transition_distribution(const MatchupNetwork& net,
                                            std::optional<int> prev, int curr,
                                            double p, double q);

// num_walks node-index sequences, each at most walk_length+1 nodes. Start
// nodes cycle round-robin through all nodes in sorted order; a dead end ends
// the walk early. Walk w uses its own generator seeded from (cfg.seed, w), so
// the result is independent of execution order.
std::vector<std::vector<int>> generate_walks(const MatchupNetwork& net,
                                             const WalkConfig& cfg);

}  // namespace linnet

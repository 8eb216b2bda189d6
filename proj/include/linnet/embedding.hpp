#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "linnet/network.hpp"

namespace linnet {

struct EmbedConfig {
  int d = 128;
  int window = 10;            // context radius
  int negatives = 5;          // negative samples per positive pair
  int epochs = 1;             // passes over the walk corpus
  double lr_initial = 0.025;  // decays linearly to lr_initial/100
  std::uint64_t seed = 1;
};

struct Embedding {
  int d = 0;
  std::map<int, std::vector<double>> vectors;  // lineup id -> vector
};

struct TrainStats {
  std::uint64_t total_updates = 0;
  double mean_loss_first_decile = 0.0;
  double mean_loss_last_decile = 0.0;
  int isolated_nodes = 0;  // nodes absent from all walks (zero vector)
};

// Skip-gram with negative sampling over the walk corpus. Every node within
// `window` positions of a center is a positive context; negatives come from
// the walk unigram distribution raised to 3/4. Single-threaded and
// deterministic for a fixed seed. Nodes never visited by a walk get the zero
// vector (counted in stats).
Embedding train_embedding(const MatchupNetwork& net,
                          const std::vector<std::vector<int>>& walks,
                          const EmbedConfig& cfg, TrainStats* stats = nullptr);

// Text dump: one `lineup_id v1 v2 ... vd` line per node.
void save_embedding(const Embedding& emb, std::ostream& out);
Embedding load_embedding(std::istream& in);

namespace detail {

// Loss and gradients for one training example: a center vector, the positive
// context output vector, and k negative output vectors. Gradients are written
// to the *_grad arrays (each of length d, not accumulated). Exposed for
// finite-difference checks.
double sgns_loss_grad(const double* center, const double* positive,
                      const std::vector<const double*>& negatives, int d,
                      double* center_grad, double* positive_grad,
                      std::vector<std::vector<double>>* negative_grads);

}  // namespace detail

}  // namespace linnet

#include "linnet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace linnet {

int sample_discrete(std::mt19937_64& rng, const std::vector<double>& masses) {
  double total = 0.0;
  for (double m : masses) total += m;
  if (!(total > 0.0)) throw std::invalid_argument("sample_discrete: zero total mass");
  double u = uniform01(rng) * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    acc += masses[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(masses.size()) - 1;  // rounding spill
}

DiscreteSampler::DiscreteSampler(const std::vector<double>& masses) {
  cumulative_.reserve(masses.size());
  double acc = 0.0;
  for (double m : masses) {
    acc += m;
    cumulative_.push_back(acc);
  }
  if (cumulative_.empty() || !(acc > 0.0)) {
    throw std::invalid_argument("DiscreteSampler: zero total mass");
  }
}

int DiscreteSampler::sample(std::mt19937_64& rng) const {
  double u = uniform01(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return static_cast<int>(it - cumulative_.begin());
}

}  // namespace linnet

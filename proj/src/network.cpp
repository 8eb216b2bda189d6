#include "linnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

namespace linnet {

int MatchupNetwork::index_of(int lineup_id) const {
  auto it = std::lower_bound(node_ids.begin(), node_ids.end(), lineup_id);
  if (it == node_ids.end() || *it != lineup_id) return -1;
  return static_cast<int>(it - node_ids.begin());
}

bool MatchupNetwork::has_edge(int from, int to) const {
  const auto& edges = out[from];
  auto it = std::lower_bound(edges.begin(), edges.end(), to,
                             [](const Edge& e, int t) { return e.target < t; });
  return it != edges.end() && it->target == to;
}

double MatchupNetwork::out_weight(int node) const {
  double sum = 0.0;
  for (const auto& e : out[node]) sum += e.weight;
  return sum;
}

double margin_per_minute(const MatchupRecord& rec) {
  return rec.point_diff / rec.minutes;
}

MatchupNetwork build_network(const SeasonDataset& ds) {
  MatchupNetwork net;
  std::set<int> ids;
  for (const auto& rec : ds.matchups) {
    ids.insert(rec.lineup_a);
    ids.insert(rec.lineup_b);
  }
  net.node_ids.assign(ids.begin(), ids.end());  // sorted ascending
  net.out.resize(net.node_ids.size());

  for (const auto& rec : ds.matchups) {
    double m = margin_per_minute(rec);
    if (m == 0.0) continue;  // ties carry no direction
    int a = net.index_of(rec.lineup_a);
    int b = net.index_of(rec.lineup_b);
    if (m > 0.0) {
      net.out[b].push_back({a, m});  // a outperformed: loser b points to a
    } else {
      net.out[a].push_back({b, -m});
    }
  }
  for (auto& edges : net.out) {
    std::sort(edges.begin(), edges.end(),
              [](const MatchupNetwork::Edge& x, const MatchupNetwork::Edge& y) {
                return x.target < y.target;
              });
  }
  return net;
}

void write_edge_list(const MatchupNetwork& net, std::ostream& out) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < net.num_nodes(); ++i) {
    for (const auto& e : net.out[i]) {
      os.str("");
      os << net.node_ids[i] << ' ' << net.node_ids[e.target] << ' ' << e.weight << '\n';
      out << os.str();
    }
  }
}

}  // namespace linnet

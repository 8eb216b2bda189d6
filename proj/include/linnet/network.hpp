#pragma once

#include <iosfwd>
#include <vector>

#include "linnet/dataset.hpp"

namespace linnet {

// Weighted directed matchup network. Nodes are lineups (indexed by sorted
// lineup id); an edge i->j exists iff lineup j outperformed lineup i in their
// aggregate record, weighted by point margin per minute.
struct MatchupNetwork {
  struct Edge {
    int target = 0;     // node index
    double weight = 0;  // > 0
  };

  std::vector<int> node_ids;             // sorted lineup ids
  std::vector<std::vector<Edge>> out;    // out[i] sorted by target index

  int num_nodes() const { return static_cast<int>(node_ids.size()); }

  // Node index of a lineup id, or -1 when the lineup is not in the network.
  int index_of(int lineup_id) const;

  bool has_edge(int from, int to) const;

  double out_weight(int node) const;
};

// Signed point margin per minute; positive means lineup_a outperformed.
double margin_per_minute(const MatchupRecord& rec);

// Every lineup appearing in a matchup record becomes a node, even when all of
// its records are ties (zero margin adds no edge).
MatchupNetwork build_network(const SeasonDataset& ds);

// Edge list dump: one `src_lineup_id dst_lineup_id weight` line per edge.
void write_edge_list(const MatchupNetwork& net, std::ostream& out);

}  // namespace linnet

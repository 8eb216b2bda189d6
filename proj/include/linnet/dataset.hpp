#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace linnet {

using PlayerId = std::string;

// Five players on court together for one team. Player tokens are kept
// sorted so set operations and equality are cheap.
struct Lineup {
  int id = 0;
  std::vector<PlayerId> players;  // sorted, exactly 5, no duplicates

  bool operator==(const Lineup&) const = default;
};

// Aggregate pairing of two lineups. Oriented so lineup_a < lineup_b;
// point_diff is points of a minus points of b over the shared minutes.
struct MatchupRecord {
  int lineup_a = 0;
  int lineup_b = 0;
  double minutes = 0.0;
  double point_diff = 0.0;

  bool operator==(const MatchupRecord&) const = default;
};

struct SeasonDataset {
  std::map<int, Lineup> lineups;
  std::vector<MatchupRecord> matchups;     // one per unordered pair, sorted by (a,b)
  std::map<int, std::string> team_of;      // lineup id -> team token (optional column)

  bool operator==(const SeasonDataset&) const = default;
};

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads the matchup CSV (header row required):
//   lineup_a_id,lineup_b_id,minutes,point_diff,players_a,players_b,team_a,team_b
// players_* are '|'-separated lists of exactly 5 player tokens; team_* may be
// empty. Rows for the same unordered pair are summed; orientation is
// normalized to lineup_a < lineup_b, flipping the sign of point_diff when the
// columns arrive swapped. Aggregated records with minutes < min_minutes are
// dropped (0 disables the filter).
SeasonDataset ingest(std::istream& in, double min_minutes = 0.0);

// Writes a dataset back out in the ingest CSV format (round-trip safe).
void serialize(const SeasonDataset& ds, std::ostream& out);

// Number of common players between two lineups; 0..4 for distinct lineups,
// 5 only when the player sets are identical.
int player_overlap(const Lineup& a, const Lineup& b);

}  // namespace linnet

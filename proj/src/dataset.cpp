#include "linnet/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace linnet {

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw IngestError("line " + std::to_string(line_no) + ": bad " + what +
                      " '" + tok + "'");
  }
  return value;
}

double parse_real(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    double value = std::stod(tok, &used);
    if (used != tok.size() || !std::isfinite(value)) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw IngestError("line " + std::to_string(line_no) + ": bad " + what +
                      " '" + tok + "'");
  }
}

std::vector<PlayerId> parse_players(const std::string& tok, int line_no, int lineup_id) {
  std::vector<PlayerId> players = split_on(tok, '|');
  for (auto& p : players) p = strip(p);
  std::sort(players.begin(), players.end());
  if (players.size() != 5 ||
      std::adjacent_find(players.begin(), players.end()) != players.end() ||
      players.front().empty()) {
    throw IngestError("line " + std::to_string(line_no) + ": lineup " +
                      std::to_string(lineup_id) +
                      " must list exactly 5 distinct players");
  }
  return players;
}

void register_lineup(SeasonDataset& ds, int id, std::vector<PlayerId> players,
                     const std::string& team, int line_no) {
  auto [it, inserted] = ds.lineups.try_emplace(id, Lineup{id, players});
  if (!inserted && it->second.players != players) {
    throw IngestError("line " + std::to_string(line_no) + ": lineup " +
                      std::to_string(id) + " redefined with a different player set");
  }
  if (!team.empty()) {
    auto [tit, tin] = ds.team_of.try_emplace(id, team);
    if (!tin && tit->second != team) {
      throw IngestError("line " + std::to_string(line_no) + ": lineup " +
                        std::to_string(id) + " assigned to two teams ('" +
                        tit->second + "' vs '" + team + "')");
    }
  }
}

}  // namespace

SeasonDataset ingest(std::istream& in, double min_minutes) {
  SeasonDataset ds;
  std::map<std::pair<int, int>, std::pair<double, double>> agg;  // (a,b) -> (min, diff)

  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = strip(line);
    if (trimmed.empty()) continue;
    if (!saw_header) {
      saw_header = true;  // header row is required but not re-validated field by field
      continue;
    }
    std::vector<std::string> cols = split_on(trimmed, ',');
    if (cols.size() != 8) {
      throw IngestError("line " + std::to_string(line_no) + ": expected 8 columns, got " +
                        std::to_string(cols.size()));
    }
    int id_a = parse_int(strip(cols[0]), line_no, "lineup_a_id");
    int id_b = parse_int(strip(cols[1]), line_no, "lineup_b_id");
    double minutes = parse_real(strip(cols[2]), line_no, "minutes");
    double diff = parse_real(strip(cols[3]), line_no, "point_diff");
    if (id_a == id_b) {
      throw IngestError("line " + std::to_string(line_no) + ": lineup " +
                        std::to_string(id_a) + " matched against itself");
    }
    if (minutes <= 0.0) {
      throw IngestError("line " + std::to_string(line_no) + ": minutes must be > 0, got " +
                        strip(cols[2]));
    }
    register_lineup(ds, id_a, parse_players(strip(cols[4]), line_no, id_a),
                    strip(cols[6]), line_no);
    register_lineup(ds, id_b, parse_players(strip(cols[5]), line_no, id_b),
                    strip(cols[7]), line_no);

    if (id_a > id_b) {
      std::swap(id_a, id_b);
      diff = -diff;
    }
    auto& slot = agg[{id_a, id_b}];
    slot.first += minutes;
    slot.second += diff;
  }

  for (const auto& [pair, md] : agg) {
    if (min_minutes > 0.0 && md.first < min_minutes) continue;
    ds.matchups.push_back(MatchupRecord{pair.first, pair.second, md.first, md.second});
  }
  return ds;
}

void serialize(const SeasonDataset& ds, std::ostream& out) {
  out << "lineup_a_id,lineup_b_id,minutes,point_diff,players_a,players_b,team_a,team_b\n";
  auto team = [&](int id) -> std::string {
    auto it = ds.team_of.find(id);
    return it == ds.team_of.end() ? std::string{} : it->second;
  };
  auto players = [&](int id) {
    std::string joined;
    for (const auto& p : ds.lineups.at(id).players) {
      if (!joined.empty()) joined += '|';
      joined += p;
    }
    return joined;
  };
  std::ostringstream os;
  os.precision(17);
  for (const auto& m : ds.matchups) {
    os.str("");
    os << m.lineup_a << ',' << m.lineup_b << ',' << m.minutes << ',' << m.point_diff
       << ',' << players(m.lineup_a) << ',' << players(m.lineup_b) << ','
       << team(m.lineup_a) << ',' << team(m.lineup_b) << '\n';
    out << os.str();
  }
}

int player_overlap(const Lineup& a, const Lineup& b) {
  int count = 0;
  auto ia = a.players.begin();
  auto ib = b.players.begin();
  while (ia != a.players.end() && ib != b.players.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace linnet

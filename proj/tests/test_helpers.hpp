#pragma once

#include <sstream>
#include <string>

#include "linnet/dataset.hpp"

namespace linnet::testing {

// One CSV row in the ingest format.
inline std::string row(int a, int b, double minutes, double diff,
                       const std::string& players_a, const std::string& players_b,
                       const std::string& team_a = "", const std::string& team_b = "") {
  std::ostringstream os;
  os << a << ',' << b << ',' << minutes << ',' << diff << ',' << players_a << ','
     << players_b << ',' << team_a << ',' << team_b << '\n';
  return os.str();
}

inline const char* kHeader =
    "lineup_a_id,lineup_b_id,minutes,point_diff,players_a,players_b,team_a,team_b\n";

// Five distinct tokens derived from a stem, e.g. p("L1") -> "L1a|L1b|...".
inline std::string p(const std::string& stem) {
  std::string out;
  for (char c : {'a', 'b', 'c', 'd', 'e'}) {
    if (!out.empty()) out += '|';
    out += stem + c;
  }
  return out;
}

inline SeasonDataset ingest_str(const std::string& body, double min_minutes = 0.0) {
  std::istringstream is(std::string(kHeader) + body);
  return ingest(is, min_minutes);
}

}  // namespace linnet::testing

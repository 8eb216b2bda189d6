#include "doctest.h"

#include <sstream>

#include "linnet/dataset.hpp"
#include "test_helpers.hpp"

using namespace linnet;
using namespace linnet::testing;

TEST_CASE("ingest aggregates rows of the same unordered pair") {
  // pair reported as (7,3) twice, oriented from 7's perspective
  auto ds = ingest_str(row(7, 3, 2, +4, p("L7"), p("L3")) +
                       row(7, 3, 3, -1, p("L7"), p("L3")));
  REQUIRE(ds.matchups.size() == 1);
  const auto& m = ds.matchups[0];
  CHECK(m.lineup_a == 3);
  CHECK(m.lineup_b == 7);
  CHECK(m.minutes == doctest::Approx(5.0));
  CHECK(m.point_diff == doctest::Approx(-3.0));  // a-minus-b after the flip
}

TEST_CASE("ingest rejects malformed input") {
  CHECK_THROWS_AS(ingest_str("1,2,3\n"), IngestError);
  CHECK_THROWS_AS(ingest_str(row(1, 2, 3, 1, "a|b|c|d", p("L2"))), IngestError);  // 4 players
  CHECK_THROWS_AS(ingest_str(row(1, 2, 0, 1, p("L1"), p("L2"))), IngestError);    // minutes 0
  CHECK_THROWS_AS(ingest_str(row(1, 2, -2, 1, p("L1"), p("L2"))), IngestError);
  CHECK_THROWS_AS(ingest_str(row(1, 1, 3, 1, p("L1"), p("L1"))), IngestError);    // self pair
  CHECK_THROWS_AS(ingest_str("1,2,oops,1," + p("L1") + "," + p("L2") + ",,\n"),
                  IngestError);  // non-numeric minutes
  // duplicate lineup id with a different player set
  CHECK_THROWS_AS(ingest_str(row(1, 2, 3, 1, p("L1"), p("L2")) +
                             row(1, 3, 3, 1, p("LX"), p("L3"))),
                  IngestError);
}

TEST_CASE("error names the offending lineup") {
  try {
    ingest_str(row(1, 2, 3, 1, "a|b|c|d", p("L2")));
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(std::string(e.what()).find("lineup 1") != std::string::npos);
  }
}

TEST_CASE("empty stream gives an empty dataset") {
  std::istringstream is(kHeader);
  auto ds = ingest(is);
  CHECK(ds.lineups.empty());
  CHECK(ds.matchups.empty());
}

TEST_CASE("ingest is idempotent through serialize") {
  auto ds = ingest_str(row(7, 3, 2, 4.25, p("L7"), p("L3"), "A", "B") +
                       row(1, 9, 10, -2.5, p("L1"), p("L9"), "A", "C") +
                       row(3, 7, 1, 1, p("L3"), p("L7"), "B", "A"));
  std::ostringstream os;
  serialize(ds, os);
  std::istringstream is(os.str());
  auto ds2 = ingest(is);
  CHECK(ds == ds2);
}

TEST_CASE("orientation flip yields an identical dataset") {
  auto ds1 = ingest_str(row(3, 7, 5, -3, p("L3"), p("L7")));
  auto ds2 = ingest_str(row(7, 3, 5, +3, p("L7"), p("L3")));
  CHECK(ds1 == ds2);
}

TEST_CASE("min-minutes filter drops short aggregates") {
  auto ds = ingest_str(row(1, 2, 1.5, 3, p("L1"), p("L2")) +
                       row(3, 4, 10, 3, p("L3"), p("L4")),
                       2.0);
  REQUIRE(ds.matchups.size() == 1);
  CHECK(ds.matchups[0].lineup_a == 3);
  CHECK(ds.lineups.size() == 4);  // lineups stay even when records are filtered
}

TEST_CASE("player_overlap counts common players") {
  Lineup a{1, {"a", "b", "c", "d", "e"}};
  Lineup b{2, {"c", "d", "e", "f", "g"}};
  Lineup c{3, {"v", "w", "x", "y", "z"}};
  CHECK(player_overlap(a, b) == 3);
  CHECK(player_overlap(b, a) == 3);
  CHECK(player_overlap(a, c) == 0);
  CHECK(player_overlap(a, a) == 5);
}

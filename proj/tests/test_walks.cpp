#include "doctest.h"

#include <algorithm>
#include <map>

#include "linnet/rng.hpp"
#include "linnet/walks.hpp"

using namespace linnet;

namespace {

MatchupNetwork make_net(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  MatchupNetwork net;
  for (int i = 0; i < n; ++i) net.node_ids.push_back(i);
  net.out.resize(n);
  for (const auto& [u, v, w] : edges) net.out[u].push_back({v, w});
  for (auto& out : net.out) {
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.target < b.target; });
  }
  return net;
}

}  // namespace

TEST_CASE("p=q=1 reduces to weight-proportional transitions") {
  auto net = make_net(4, {{0, 1, 2.0}, {0, 2, 1.0}, {0, 3, 3.0}, {3, 0, 1.0}});
  for (std::optional<int> prev : {std::optional<int>{}, std::optional<int>{3}}) {
    auto dist = transition_distribution(net, prev, 0, 1.0, 1.0);
    REQUIRE(dist.size() == 3);
    CHECK(dist[0] == doctest::Approx(2.0 / 6.0));
    CHECK(dist[1] == doctest::Approx(1.0 / 6.0));
    CHECK(dist[2] == doctest::Approx(3.0 / 6.0));
  }
}

TEST_CASE("alpha cases: return, adjacent, and far neighbors") {
  // walk sits at u=1 having come from v=0; u points back to v and out to x=2
  auto net = make_net(3, {{0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}});
  auto dist = transition_distribution(net, 0, 1, 0.5, 3.0);
  REQUIRE(dist.size() == 2);
  // masses: back to v -> (1/p) w = 2; on to x (not adjacent to v) -> (1/q) w = 1/3
  CHECK(dist[0] == doctest::Approx(6.0 / 7.0));
  CHECK(dist[1] == doctest::Approx(1.0 / 7.0));

  // add edge v -> x: x becomes distance-1 from v, so alpha = 1
  auto net2 = make_net(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}});
  auto dist2 = transition_distribution(net2, 0, 1, 0.5, 3.0);
  REQUIRE(dist2.size() == 2);
  CHECK(dist2[0] == doctest::Approx(2.0 / 3.0));
  CHECK(dist2[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("single out-neighbor gets probability 1 regardless of p,q") {
  auto net = make_net(3, {{0, 1, 0.25}, {1, 2, 4.0}});
  auto dist = transition_distribution(net, 0, 1, 0.01, 100.0);
  REQUIRE(dist.size() == 1);
  CHECK(dist[0] == doctest::Approx(1.0));
}

TEST_CASE("distribution sums to 1 over out-neighbors") {
  auto net = make_net(5, {{0, 1, 1.5}, {0, 2, 0.2}, {0, 3, 7.0}, {0, 4, 0.01}, {4, 0, 1.0}});
  auto dist = transition_distribution(net, 4, 0, 0.5, 3.0);
  double total = 0.0;
  for (double d : dist) total += d;
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("dead end at the start yields single-node walks") {
  auto net = make_net(1, {});
  WalkConfig cfg{0.5, 3.0, 10, 5, 42};
  auto walks = generate_walks(net, cfg);
  REQUIRE(walks.size() == 10);
  for (const auto& w : walks) CHECK(w == std::vector<int>{0});
}

TEST_CASE("same seed gives identical walks") {
  auto net = make_net(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 0, 1.0}, {2, 3, 0.5}, {3, 1, 1.0}});
  WalkConfig cfg{0.5, 3.0, 25, 40, 9};
  CHECK(generate_walks(net, cfg) == generate_walks(net, cfg));
  cfg.seed = 10;
  CHECK(generate_walks(net, cfg) != generate_walks(net, WalkConfig{0.5, 3.0, 25, 40, 9}));
}

TEST_CASE("2-cycle walks alternate") {
  auto net = make_net(2, {{0, 1, 1.0}, {1, 0, 1.0}});
  WalkConfig cfg{0.5, 3.0, 4, 4, 3};
  auto walks = generate_walks(net, cfg);
  REQUIRE(walks.size() == 4);
  CHECK(walks[0] == std::vector<int>{0, 1, 0, 1, 0});
  CHECK(walks[1] == std::vector<int>{1, 0, 1, 0, 1});  // round-robin start nodes
  CHECK(walks[2] == std::vector<int>{0, 1, 0, 1, 0});
}

TEST_CASE("walks stop early at dead ends") {
  auto net = make_net(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  WalkConfig cfg{1.0, 1.0, 3, 10, 1};
  auto walks = generate_walks(net, cfg);
  CHECK(walks[0] == std::vector<int>{0, 1, 2});
  CHECK(walks[2] == std::vector<int>{2});
}

TEST_CASE("first-order walk law: empirical frequencies match weights") {
  // weighted 10-node graph, strongly connected via a ring plus chords
  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i < 10; ++i) {
    edges.push_back({i, (i + 1) % 10, 1.0 + 0.3 * i});
    edges.push_back({i, (i + 3) % 10, 0.5 + 0.2 * ((i * 7) % 5)});
  }
  auto net = make_net(10, edges);
  WalkConfig cfg{1.0, 1.0, 10, 10000, 13};  // 1e5 steps total
  auto walks = generate_walks(net, cfg);

  std::map<std::pair<int, int>, double> transitions;
  std::vector<double> visits(10, 0.0);
  for (const auto& w : walks) {
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      transitions[{w[t], w[t + 1]}] += 1.0;
      visits[static_cast<std::size_t>(w[t])] += 1.0;
    }
  }
  for (int u = 0; u < 10; ++u) {
    double total_w = net.out_weight(u);
    double n = visits[static_cast<std::size_t>(u)];
    REQUIRE(n > 100);
    for (const auto& e : net.out[u]) {
      double expect = e.weight / total_w;
      double observed = transitions[{u, e.target}] / n;
      double se = std::sqrt(expect * (1.0 - expect) / n);
      CHECK(std::abs(observed - expect) <= 3.0 * se + 1e-12);
    }
  }
}

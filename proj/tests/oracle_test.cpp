// Copyright 2026 The wheelembed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "test_support.hpp"
#include "wheelembed/embedding.hpp"
#include "wheelembed/families.hpp"
#include "wheelembed/oracle.hpp"

namespace wheelembed {
namespace {

struct Brute {
  std::int64_t optimum;
  std::vector<Vertex> vmap;
};

// Distance-only metrics by permutation scan over Floyd-Warshall distances.
Brute brute_distance_metric(Metric metric, const Graph& guest, const Graph& host) {
  const auto d = testing::floyd_warshall(host);
  std::vector<Vertex> p(guest.order());
  for (int i = 0; i < guest.order(); ++i) p[i] = i + 1;
  Brute best{std::numeric_limits<std::int64_t>::max(), {}};
  do {
    std::int64_t value = 0;
    for (const Edge& e : guest.edges()) {
      const int x = d[p[e.u - 1] - 1][p[e.v - 1] - 1];
      value = metric == Metric::dilation ? std::max<std::int64_t>(value, x) : value + x;
    }
    if (value < best.optimum) best = {value, p};
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// All shortest paths between two host vertices, as edge-index lists.
std::vector<std::vector<int>> all_shortest(const Graph& h, const std::vector<std::vector<int>>& d,
                                           Vertex a, Vertex b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(Vertex)> walk = [&](Vertex x) {
    if (x == b) { out.push_back(cur); return; }
    for (Vertex y : h.neighbors(x)) {
      if (d[y - 1][b - 1] + 1 != d[x - 1][b - 1]) continue;
      cur.push_back(*h.edge_index(x, y));
      walk(y);
      cur.pop_back();
    }
  };
  walk(a);
  return out;
}

// Congestion over bijections and every combination of shortest routes.
std::int64_t brute_congestion(const Graph& guest, const Graph& host) {
  const auto d = testing::floyd_warshall(host);
  std::vector<Vertex> p(guest.order());
  for (int i = 0; i < guest.order(); ++i) p[i] = i + 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::vector<std::vector<std::vector<int>>> choices;
    for (const Edge& e : guest.edges()) choices.push_back(all_shortest(host, d, p[e.u - 1], p[e.v - 1]));
    std::vector<int> load(host.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == choices.size()) {
        best = std::min<std::int64_t>(best, *std::max_element(load.begin(), load.end()));
        return;
      }
      for (const auto& route : choices[k]) {
        for (int i : route) ++load[i];
        rec(k + 1);
        for (int i : route) --load[i];
      }
    };
    rec(0);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

TEST(OracleTest, StarIntoSmallHypertree) {
  const auto r = exact_dilation(star(7), hypertree(3));
  EXPECT_EQ(r.optimum, 2);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.metric, Metric::dilation);
}

TEST(OracleTest, CycleIntoPathWirelength) {
  const auto r = exact_wirelength(cycle_graph(4), path_graph(4));
  EXPECT_EQ(r.optimum, 6);
  EXPECT_EQ(r.witness_vmap, brute_distance_metric(Metric::wirelength, cycle_graph(4), path_graph(4)).vmap);
}

TEST(OracleTest, WheelIntoCirculantWirelength) {
  const auto r = exact_wirelength(wheel(8), circulant(8, {1, 2}));
  EXPECT_EQ(r.optimum, 17);
  const auto emb = route_shortest(wheel(8), circulant(8, {1, 2}), r.witness_vmap);
  EXPECT_EQ(evaluate(emb).wirelength, 17);
}

TEST(OracleTest, CongestionExamples) {
  EXPECT_EQ(exact_congestion(windmill(4), circulant(8, {1, 2})).optimum, 2);
  EXPECT_EQ(exact_congestion(cycle_graph(4), path_graph(4)).optimum, 2);
  const auto s = exact_congestion(star(4), star(4));
  EXPECT_EQ(s.optimum, 1);
  EXPECT_TRUE(s.exact);
}

TEST(OracleTest, MatchesBruteForceOnRandomPairs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 3;
    const Graph guest = testing::random_graph(n, 0.5, rng);
    const Graph host = testing::random_connected_graph(n, 0.45, rng);
    for (Metric m : {Metric::dilation, Metric::wirelength}) {
      const auto brute = brute_distance_metric(m, guest, host);
      const auto r = exact_metric(m, guest, host);
      EXPECT_EQ(r.optimum, brute.optimum) << trial;
      EXPECT_EQ(r.witness_vmap, brute.vmap) << trial;
    }
    const auto c = exact_congestion(guest, host);
    ASSERT_TRUE(c.exact);
    EXPECT_EQ(c.optimum, guest.size() == 0 ? 0 : brute_congestion(guest, host)) << trial;
  }
}

TEST(OracleTest, ParallelMatchesSerial) {
  const std::vector<std::pair<Graph, Graph>> pairs{
      {wheel(7), circulant(7, {1, 2})}, {fan(7), x_tree(3)}, {friendship(3), cycle_graph(7)},
      {windmill(3), path_graph(6)},     {star(6), complete_graph(6)}};
  for (const auto& [guest, host] : pairs) {
    for (Metric m : {Metric::dilation, Metric::congestion, Metric::wirelength}) {
      const auto a = exact_metric(m, guest, host);
      const auto b = exact_metric_serial(m, guest, host);
      EXPECT_EQ(a.optimum, b.optimum) << guest.name() << " " << metric_name(m);
      EXPECT_EQ(a.witness_vmap, b.witness_vmap) << guest.name() << " " << metric_name(m);
      EXPECT_EQ(a.exact, b.exact);
    }
  }
}

TEST(OracleTest, JobCountDoesNotChangeResult) {
  OracleOptions one;
  one.jobs = 1;
  OracleOptions four;
  four.jobs = 4;
  for (Metric m : {Metric::dilation, Metric::congestion, Metric::wirelength}) {
    const auto a = exact_metric(m, wheel(8), circulant(8, {1, 3}), one);
    const auto b = exact_metric(m, wheel(8), circulant(8, {1, 3}), four);
    EXPECT_EQ(a.optimum, b.optimum);
    EXPECT_EQ(a.witness_vmap, b.witness_vmap);
  }
}

TEST(OracleTest, ConstructionsAreNeverBelowOptimum) {
  const auto tree = embed_wheel_like_into_tree_host(GuestKind::fan, 3, TreeHostKind::sibling_tree);
  EXPECT_EQ(exact_dilation(tree.guest, tree.host).optimum, evaluate(tree).max_dilation);
  const auto wm = embed_windmill_into_circulant(3);
  EXPECT_EQ(exact_congestion(wm.guest, wm.host).optimum, evaluate(wm).max_congestion);
  const auto med = embed_fan_via_median(torus({3, 3}));
  EXPECT_EQ(exact_wirelength(med.guest, med.host).optimum, evaluate(med).wirelength);
}

TEST(OracleTest, RoutingCapMarksInexact) {
  OracleOptions opts;
  opts.routing_cap = 1;
  const auto r = exact_congestion(wheel(6), circulant(6, {1}), opts);
  EXPECT_FALSE(r.exact);
  EXPECT_GE(r.optimum, exact_congestion(wheel(6), circulant(6, {1})).optimum);
}

TEST(OracleTest, Limits) {
  EXPECT_THROW(exact_wirelength(wheel(10), circulant(10, {1, 2})), OracleLimitError);
  EXPECT_THROW(exact_wirelength(wheel(6), wheel(7)), std::invalid_argument);
  EXPECT_THROW(exact_dilation(star(4), build_graph(4, {{1, 2}, {3, 4}})), std::invalid_argument);
  OracleOptions opts;
  opts.limit = 30;
  EXPECT_THROW(exact_wirelength(star(21), star(21), opts), OracleLimitError);
}

}  // namespace
}  // namespace wheelembed

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

#include <numeric>
#include <random>
#include <set>

#include "test_support.hpp"
#include "wheelembed/embedding.hpp"
#include "wheelembed/families.hpp"

namespace wheelembed {
namespace {

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

TEST(RouteShortestTest, IdentityOnFourCycle) {
  const Graph c4 = cycle_graph(4);
  const auto emb = route_shortest(c4, c4, identity(4));
  for (const auto& r : emb.routes) EXPECT_EQ(r.size(), 2u);
  const auto m = evaluate(emb);
  EXPECT_EQ(m.wirelength, 4);
  EXPECT_EQ(m.max_dilation, 1);
  EXPECT_EQ(m.max_congestion, 1);
  EXPECT_EQ(expansion(emb), (Rational{1, 1}));
}

TEST(RouteShortestTest, SpokeLengthsOnCirculant) {
  const auto emb = route_shortest(wheel(8), circulant(8, {1, 2}), identity(8));
  for (Vertex i = 2; i <= 8; ++i) {
    const int k = i - 1;
    const int expected = (std::min(k, 8 - k) + 1) / 2;
    EXPECT_EQ(emb.route(1, i).size() - 1, static_cast<std::size_t>(expected)) << i;
  }
  EXPECT_EQ(expansion(emb), (Rational{1, 1}));
}

TEST(RouteShortestTest, SingleEdge) {
  const Graph k2 = complete_graph(2);
  const auto emb = route_shortest(k2, k2, {2, 1});
  ASSERT_EQ(emb.routes.size(), 1u);
  EXPECT_EQ(emb.routes[0], (std::vector<Vertex>{2, 1}));
}

TEST(RouteShortestTest, LexicographicallyLeastShortestPath) {
  // Two shortest paths 1-2-4 and 1-3-4 on C_4: the least one goes through 2.
  const Graph c4 = cycle_graph(4);
  const auto d = all_pairs_distances(c4);
  EXPECT_EQ(shortest_route(c4, d, 1, 3), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(shortest_route(c4, d, 2, 4), (std::vector<Vertex>{2, 1, 4}));
}

TEST(RouteShortestTest, RejectsBadInput) {
  EXPECT_THROW(route_shortest(cycle_graph(4), cycle_graph(5), identity(4)), EmbeddingError);
  EXPECT_THROW(route_shortest(cycle_graph(4), cycle_graph(4), {1, 1, 2, 3}), EmbeddingError);
  EXPECT_THROW(route_shortest(cycle_graph(4), cycle_graph(4), {1, 2, 3}), EmbeddingError);
  EXPECT_THROW(route_shortest(cycle_graph(4), build_graph(4, {{1, 2}, {3, 4}}), identity(4)),
               EmbeddingError);
}

TEST(ValidateTest, RejectsBrokenRoutes) {
  const Graph c4 = cycle_graph(4);
  auto emb = route_shortest(c4, c4, identity(4));
  validate(emb);
  auto wrong_end = emb;
  wrong_end.routes[0] = {1, 4};
  EXPECT_THROW(validate(wrong_end), EmbeddingError);
  auto non_edge = emb;
  non_edge.routes[0] = {1, 3, 2};
  EXPECT_THROW(validate(non_edge), EmbeddingError);
  auto repeated = emb;
  repeated.routes[0] = {1, 2, 1, 2};
  EXPECT_THROW(validate(repeated), EmbeddingError);
}

TEST(EvaluateTest, LongRoutesCountOnEveryHostEdge) {
  const Graph c4 = cycle_graph(4);
  auto emb = route_shortest(c4, c4, identity(4));
  emb.routes[0] = {1, 4, 3, 2};  // guest edge (1,2) the long way round
  validate(emb);
  const auto m = evaluate(emb);
  EXPECT_EQ(m.wirelength, 6);
  EXPECT_EQ(m.congestion_sum, 6);
  EXPECT_EQ(m.max_dilation, 3);
  EXPECT_EQ(m.max_congestion, 2);
  EXPECT_EQ(m.congestion[*c4.edge_index(1, 2)], 0);
}

TEST(EvaluateTest, DoubleCountingOnRandomEmbeddings) {
  const std::vector<std::pair<Graph, Graph>> pairs{
      {wheel(8), circulant(8, {1, 2})},
      {fan(15), hypertree(4)},
      {friendship(7), x_tree(4)},
      {windmill(8), circulant(16, {1, 4})},
      {star(10), generalized_petersen(5, 2)},
  };
  std::uint64_t seed = 1;
  for (const auto& [guest, host] : pairs) {
    const auto dist = all_pairs_distances(host);
    for (int i = 0; i < 20; ++i) {
      const auto emb = random_embedding(guest, host, seed++);
      validate(emb);
      const auto m = evaluate(emb);
      EXPECT_EQ(m.wirelength, m.congestion_sum);
      std::int64_t distance_sum = 0;
      for (const Edge& e : guest.edges()) distance_sum += dist(emb.image(e.u), emb.image(e.v));
      EXPECT_EQ(m.wirelength, distance_sum);
      for (std::size_t k = 0; k < guest.size(); ++k) {
        const Edge e = guest.edges()[k];
        EXPECT_GE(m.dilation[k], dist(emb.image(e.u), emb.image(e.v)));
      }
    }
  }
}

TEST(EvaluateTest, RandomEmbeddingIsSeedDeterministic) {
  const auto a = random_embedding(wheel(9), torus({3, 3}), 42);
  const auto b = random_embedding(wheel(9), torus({3, 3}), 42);
  EXPECT_EQ(a.vmap, b.vmap);
  EXPECT_EQ(a.routes, b.routes);
}

TEST(PreorderTest, LabelsForThreeLevels) {
  EXPECT_EQ(preorder_heap_labels(3), (std::vector<Vertex>{1, 2, 4, 5, 3, 6, 7}));
  const auto four = preorder_heap_labels(4);
  EXPECT_EQ(four.size(), 15u);
  EXPECT_EQ(four.front(), 1);
  EXPECT_EQ(four[1], 2);
  EXPECT_EQ(four[2], 4);
  EXPECT_EQ(four[3], 8);
  EXPECT_EQ(four.back(), 15);
}

TEST(TreeHostEmbeddingTest, FriendshipIntoHypertree) {
  const auto emb = embed_wheel_like_into_tree_host(GuestKind::friendship, 4, TreeHostKind::hypertree);
  EXPECT_EQ(emb.guest.order(), 15);
  EXPECT_EQ(emb.guest.name(), "T_7");
  EXPECT_EQ(emb.image(1), 1);
  EXPECT_EQ(evaluate(emb).max_dilation, 3);
}

TEST(TreeHostEmbeddingTest, StarIntoHypertree) {
  const auto emb = embed_wheel_like_into_tree_host(GuestKind::star, 3, TreeHostKind::hypertree);
  EXPECT_EQ(evaluate(emb).max_dilation, 2);
}

TEST(TreeHostEmbeddingTest, WheelIntoSiblingTree) {
  const auto emb = embed_wheel_like_into_tree_host(GuestKind::wheel, 3, TreeHostKind::sibling_tree);
  std::vector<Vertex> rim;
  for (Vertex g = 2; g <= 7; ++g) rim.push_back(emb.image(g));
  EXPECT_EQ(rim, (std::vector<Vertex>{2, 4, 5, 3, 6, 7}));
  const auto d = all_pairs_distances(emb.host);
  for (std::size_t i = 0; i < rim.size(); ++i) {
    EXPECT_LE(d(rim[i], rim[(i + 1) % rim.size()]), 2);
  }
  EXPECT_EQ(evaluate(emb).max_dilation, 2);
}

TEST(TreeHostEmbeddingTest, MaxDilationEqualsRadiusAcrossSweep) {
  for (int l = 3; l <= 8; ++l) {
    for (auto host_kind : {TreeHostKind::hypertree, TreeHostKind::sibling_tree, TreeHostKind::x_tree}) {
      const int radius = radius_diameter(tree_host(host_kind, l)).radius;
      EXPECT_EQ(radius, l - 1);
      for (auto kind : {GuestKind::wheel, GuestKind::fan, GuestKind::friendship, GuestKind::star}) {
        const auto emb = embed_wheel_like_into_tree_host(kind, l, host_kind);
        EXPECT_EQ(evaluate(emb).max_dilation, l - 1)
            << guest_kind_name(kind) << " into " << tree_host_name(host_kind) << " l=" << l;
      }
    }
  }
}

TEST(TreeHostEmbeddingTest, RejectsSmallLevels) {
  EXPECT_THROW(embed_wheel_like_into_tree_host(GuestKind::wheel, 2, TreeHostKind::hypertree),
               EmbeddingError);
  EXPECT_THROW(embed_preorder(wheel(6), wheel(6)), EmbeddingError);
}

TEST(WindmillEmbeddingTest, FourLevelInstance) {
  const auto emb = embed_windmill_into_circulant(4);
  EXPECT_EQ(emb.guest.order(), 16);
  EXPECT_TRUE(same_topology(emb.host, circulant(16, {1, 4})));
  const auto m = evaluate(emb);
  EXPECT_EQ(m.max_congestion, 4);
  for (const auto& [a, b] : std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 5}, {5, 6}, {1, 16}}) {
    EXPECT_EQ(m.congestion[*emb.host.edge_index(a, b)], 4) << a << "-" << b;
  }
}

TEST(WindmillEmbeddingTest, FullMaximumSetForFourLevels) {
  // Hand count: besides the four spoke-only edges, rim pairs (2,3), (6,7) and
  // (12,13) each carry one rim edge on top of three spoke routes.
  const auto emb = embed_windmill_into_circulant(4);
  const auto m = evaluate(emb);
  std::set<std::pair<Vertex, Vertex>> at_max;
  for (std::size_t i = 0; i < emb.host.size(); ++i) {
    if (m.congestion[i] == 4) at_max.insert({emb.host.edges()[i].u, emb.host.edges()[i].v});
  }
  const std::set<std::pair<Vertex, Vertex>> expected{{1, 2}, {2, 3}, {1, 5}, {5, 6},
                                                     {6, 7}, {12, 13}, {1, 16}};
  EXPECT_EQ(at_max, expected);
}

TEST(WindmillEmbeddingTest, SpokeRoutesFollowTheFourRanges) {
  const auto emb = embed_windmill_into_circulant(4);
  EXPECT_EQ(emb.route(1, 5), (std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_EQ(emb.route(1, 13), (std::vector<Vertex>{1, 16, 15, 14, 13}));
  EXPECT_EQ(emb.route(1, 9), (std::vector<Vertex>{1, 5, 6, 7, 8, 9}));
  EXPECT_EQ(emb.route(1, 10), (std::vector<Vertex>{1, 13, 12, 11, 10}));
  EXPECT_EQ(emb.route(6, 7), (std::vector<Vertex>{6, 7}));
}

TEST(WindmillEmbeddingTest, SmallestInstance) {
  EXPECT_EQ(evaluate(embed_windmill_into_circulant(3)).max_congestion, 2);
  EXPECT_THROW(embed_windmill_into_circulant(2), EmbeddingError);
}

TEST(WindmillEmbeddingTest, CongestionSweep) {
  for (int n = 3; n <= 8; ++n) {
    const auto m = evaluate(embed_windmill_into_circulant(n));
    const int q = 1 << (n - 2);
    EXPECT_EQ(m.max_congestion, q) << n;
    for (int c : m.congestion) EXPECT_LE(c, q);
  }
}

TEST(WindmillEmbeddingTest, RejectsOtherGraphs) {
  EXPECT_THROW(embed_windmill(windmill(8), circulant(16, {1, 2})), EmbeddingError);
  EXPECT_THROW(embed_windmill(wheel(16), circulant(16, {1, 4})), EmbeddingError);
}

TEST(MedianEmbeddingTest, WheelIntoCirculant) {
  const auto emb = embed_wheel_via_median(circulant(8, {1, 2}));
  EXPECT_EQ(emb.image(1), 1);
  EXPECT_EQ(evaluate(emb).wirelength, 17);
  EXPECT_TRUE(testing::is_spanning_walk(emb.host,
                                        std::vector<Vertex>(emb.vmap.begin() + 1, emb.vmap.end()),
                                        true, {1}));
}

TEST(MedianEmbeddingTest, WheelIntoPetersen) {
  EXPECT_EQ(evaluate(embed_wheel_via_median(generalized_petersen(5, 2))).wirelength, 24);
}

TEST(MedianEmbeddingTest, WheelIntoTorus) {
  EXPECT_EQ(evaluate(embed_wheel_via_median(torus({3, 3}))).wirelength, 20);
}

TEST(MedianEmbeddingTest, FanIntoCirculant) {
  const auto emb = embed_fan_via_median(circulant(8, {1, 2}));
  EXPECT_EQ(evaluate(emb).wirelength, 16);
}

TEST(MedianEmbeddingTest, WirelengthIndependentOfMedianChoice) {
  for (const Graph& host : {circulant(10, {1, 2}), torus({3, 4}), generalized_petersen(5, 2)}) {
    const auto info = status_and_median(host);
    for (Vertex u : info.medians) {
      EXPECT_EQ(evaluate(embed_wheel_via_median(host, u)).wirelength,
                host.order() - 1 + info.delta);
    }
  }
}

TEST(MedianEmbeddingTest, FailsWithoutHamiltonianCycle) {
  EXPECT_THROW(embed_wheel_via_median(star(8)), EmbeddingError);
  EXPECT_THROW(embed_wheel_via_median(circulant(8, {1, 2}), 99), EmbeddingError);
  EXPECT_THROW(embed_wheel_via_median(generalized_petersen(5, 2), std::nullopt, SearchBudget{1}),
               SearchInconclusive);
}

}  // namespace
}  // namespace wheelembed

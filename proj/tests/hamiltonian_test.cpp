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
#include <random>

#include "test_support.hpp"
#include "wheelembed/families.hpp"
#include "wheelembed/hamiltonian.hpp"

namespace wheelembed {
namespace {

using testing::SubsetDp;

std::uint32_t alive_mask(const Graph& g, const FaultSpec& faults) {
  std::uint32_t mask = testing::all_alive(g.order());
  for (Vertex v : faults.vertices) mask &= ~(1u << (v - 1));
  return mask;
}

// First cycle sequence in lexicographic order, by plain permutation scan.
std::vector<Vertex> brute_lex_cycle(const Graph& g) {
  std::vector<Vertex> rest;
  for (Vertex v = 2; v <= g.order(); ++v) rest.push_back(v);
  do {
    Vertex prev = 1;
    bool ok = true;
    for (Vertex v : rest) {
      if (!g.adjacent(prev, v)) { ok = false; break; }
      prev = v;
    }
    if (ok && g.adjacent(prev, 1)) {
      std::vector<Vertex> seq{1};
      seq.insert(seq.end(), rest.begin(), rest.end());
      return seq;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {};
}

std::vector<Vertex> brute_lex_path(const Graph& g) {
  std::vector<Vertex> seq(g.order());
  for (int i = 0; i < g.order(); ++i) seq[i] = i + 1;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i) ok = g.adjacent(seq[i], seq[i + 1]);
    if (ok) return seq;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return {};
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(CycleSearchTest, PetersenHasNone) {
  const auto r = find_hamiltonian_cycle(generalized_petersen(5, 2));
  EXPECT_EQ(r.verdict, Verdict::no);
  EXPECT_TRUE(r.witness.empty());
}

TEST(CycleSearchTest, CirculantHasOne) {
  const Graph g = circulant(8, {1, 2});
  const auto r = find_hamiltonian_cycle(g);
  ASSERT_EQ(r.verdict, Verdict::yes);
  EXPECT_TRUE(testing::is_spanning_walk(g, r.witness, true, {}));
  EXPECT_EQ(r.witness, brute_lex_cycle(g));
}

TEST(PathSearchTest, PetersenIsTraceable) {
  const Graph g = generalized_petersen(5, 2);
  const auto r = find_hamiltonian_path(g);
  ASSERT_EQ(r.verdict, Verdict::yes);
  EXPECT_TRUE(testing::is_spanning_walk(g, r.witness, false, {}));
}

TEST(PathSearchTest, FixedEnds) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(find_hamiltonian_path(p4, std::pair{1, 4}).witness, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(find_hamiltonian_path(p4, std::pair{4, 1}).verdict, Verdict::yes);
  EXPECT_EQ(find_hamiltonian_path(p4, std::pair{1, 2}).verdict, Verdict::no);
}

TEST(CycleSearchTest, TinySurvivorsNeverCycle) {
  EXPECT_EQ(find_hamiltonian_cycle(complete_graph(2)).verdict, Verdict::no);
  EXPECT_EQ(find_hamiltonian_cycle(complete_graph(3)).verdict, Verdict::yes);
  EXPECT_EQ(find_hamiltonian_cycle(complete_graph(3), FaultSpec{{1}, {}}).verdict, Verdict::no);
}

TEST(CycleSearchTest, FaultsMustExist) {
  const Graph c5 = cycle_graph(5);
  EXPECT_THROW(find_hamiltonian_cycle(c5, FaultSpec{{9}, {}}), GraphError);
  EXPECT_THROW(find_hamiltonian_cycle(c5, FaultSpec{{}, {make_edge(1, 3)}}), GraphError);
}

TEST(CycleSearchTest, BudgetExhaustionIsInconclusive) {
  const auto r = find_hamiltonian_cycle(generalized_petersen(5, 2), {}, SearchBudget{3});
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
}

TEST(SearchOracleTest, RandomGraphsAgreeWithSubsetDp) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = testing::random_graph(n, 0.35 + 0.1 * (trial % 5), rng);
    const SubsetDp dp(g, testing::all_alive(n));
    const auto cycle = find_hamiltonian_cycle(g);
    EXPECT_EQ(cycle.verdict == Verdict::yes, dp.cycle()) << trial;
    const auto path = find_hamiltonian_path(g);
    EXPECT_EQ(path.verdict == Verdict::yes, dp.any_path()) << trial;
    if (n <= 7) {
      EXPECT_EQ(cycle.witness, brute_lex_cycle(g)) << trial;
      EXPECT_EQ(path.witness, brute_lex_path(g)) << trial;
    }
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = a + 1; b <= n; ++b) {
        EXPECT_EQ(find_hamiltonian_path(g, std::pair{a, b}).verdict == Verdict::yes,
                  dp.path_between(a - 1, b - 1));
      }
    }
  }
}

TEST(SearchOracleTest, FaultyRandomGraphsAgreeWithSubsetDp) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(7, 0.6, rng);
    for (const FaultSpec& fs : enumerate_fault_sets(g, 2)) {
      const SubsetDp dp(g, alive_mask(g, fs), fs.edges);
      const auto r = find_hamiltonian_cycle(g, fs);
      ASSERT_EQ(r.verdict == Verdict::yes, dp.cycle()) << trial << " " << describe(fs);
      if (r.verdict == Verdict::yes) {
        // Witness must avoid every faulty edge.
        for (std::size_t i = 0; i < r.witness.size(); ++i) {
          const Edge e = make_edge(r.witness[i], r.witness[(i + 1) % r.witness.size()]);
          EXPECT_EQ(std::count(fs.edges.begin(), fs.edges.end(), e), 0);
        }
      }
    }
  }
}

TEST(FaultEnumerationTest, CountsMatchBinomials) {
  for (const Graph& g : {cycle_graph(5), complete_graph(5), circulant(8, {1, 2})}) {
    for (int f = 0; f <= 3; ++f) {
      std::int64_t expected = 0;
      for (int s = 0; s <= f; ++s)
        for (int k = 0; k <= s; ++k) expected += binom(g.order(), k) * binom(g.size(), s - k);
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_fault_sets(g, f).size()), expected);
    }
  }
}

TEST(FaultEnumerationTest, CanonicalOrder) {
  const auto sets = enumerate_fault_sets(cycle_graph(3), 2);
  ASSERT_EQ(sets.size(), 1u + 6u + 3u + 3u + 9u);
  EXPECT_TRUE(sets[0].empty());
  EXPECT_EQ(sets[1], (FaultSpec{{1}, {}}));
  EXPECT_EQ(sets[4], (FaultSpec{{}, {make_edge(1, 2)}}));
  EXPECT_EQ(sets[7], (FaultSpec{{1, 2}, {}}));
  EXPECT_EQ(sets[10], (FaultSpec{{}, {make_edge(1, 2), make_edge(1, 3)}}));
  EXPECT_EQ(sets[13], (FaultSpec{{1}, {make_edge(1, 2)}}));
  EXPECT_EQ(sets.back(), (FaultSpec{{3}, {make_edge(2, 3)}}));
  EXPECT_EQ(describe(sets[13]), "{v1, e(1,2)}");
}

TEST(FaultHamiltonianTest, CompleteGraphTwoFaults) {
  const auto r = is_f_fault_hamiltonian(complete_graph(5), 2);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_FALSE(r.failing_fault.has_value());
}

TEST(FaultHamiltonianTest, CycleFailsOnFirstVertex) {
  const auto r = is_f_fault_hamiltonian(cycle_graph(5), 1);
  EXPECT_EQ(r.verdict, Verdict::no);
  ASSERT_TRUE(r.failing_fault.has_value());
  EXPECT_EQ(*r.failing_fault, (FaultSpec{{1}, {}}));
}

TEST(FaultHamiltonianTest, CirculantOneFault) {
  EXPECT_EQ(is_f_fault_hamiltonian(circulant(8, {1, 2}), 1).verdict, Verdict::yes);
}

TEST(FaultHamiltonianTest, AgreesWithOracleAndSerial) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(6 + trial % 2, 0.7, rng);
    for (int f = 0; f <= 2; ++f) {
      const auto par = is_f_fault_hamiltonian(g, f);
      const auto ser = is_f_fault_hamiltonian_serial(g, f);
      EXPECT_EQ(par.verdict, ser.verdict);
      EXPECT_EQ(par.failing_fault, ser.failing_fault);
      std::optional<FaultSpec> first;
      for (const FaultSpec& fs : enumerate_fault_sets(g, f)) {
        if (!SubsetDp(g, alive_mask(g, fs), fs.edges).cycle()) { first = fs; break; }
      }
      EXPECT_EQ(par.verdict == Verdict::yes, !first.has_value());
      EXPECT_EQ(par.failing_fault, first);
    }
  }
}

TEST(FaultHamiltonianTest, MonotoneInF) {
  for (const Graph& g : {circulant(9, {1, 2}), circulant(8, {1, 2, 3}), complete_graph(6),
                         torus({3, 3})}) {
    bool previous = true;
    for (int f = 0; f <= 3; ++f) {
      const bool yes = is_f_fault_hamiltonian(g, f).verdict == Verdict::yes;
      if (!previous) EXPECT_FALSE(yes);
      previous = yes;
    }
    EXPECT_EQ(is_f_fault_hamiltonian(g, 0).verdict, find_hamiltonian_cycle(g).verdict);
  }
}

TEST(FaultHamiltonianTest, PetersenIsHypohamiltonian) {
  const Graph p = generalized_petersen(5, 2);
  const auto r = is_f_fault_hamiltonian(p, 1);
  EXPECT_EQ(r.verdict, Verdict::no);
  ASSERT_TRUE(r.failing_fault.has_value());
  EXPECT_TRUE(r.failing_fault->empty());
  EXPECT_NE(r.notes.find("hypohamiltonian"), std::string::npos);
  EXPECT_EQ(is_hypohamiltonian(p), Verdict::yes);
  EXPECT_EQ(is_hypohamiltonian(cycle_graph(5)), Verdict::no);
  EXPECT_EQ(is_hypohamiltonian(complete_graph(4)), Verdict::no);
}

TEST(FaultTraceableTest, CompleteGraphOnFourVertices) {
  // Vertex faults leave K_3, traceable between any pair. The edge fault (1,2)
  // leaves no spanning path joining 3 and 4: both interior vertices would need
  // the missing edge. The literal definition therefore says no.
  const Graph k4 = complete_graph(4);
  for (Vertex v = 1; v <= 4; ++v) {
    const FaultSpec fs{{v}, {}};
    const SubsetDp dp(k4, alive_mask(k4, fs));
    for (Vertex a = 1; a <= 4; ++a)
      for (Vertex b = a + 1; b <= 4; ++b)
        if (a != v && b != v) EXPECT_TRUE(dp.path_between(a - 1, b - 1));
  }
  EXPECT_FALSE(SubsetDp(k4, testing::all_alive(4), {make_edge(1, 2)}).path_between(2, 3));
  const auto r = is_f_fault_traceable(k4, 1);
  EXPECT_EQ(r.verdict, Verdict::no);
  EXPECT_EQ(r.failing_fault, (FaultSpec{{}, {make_edge(1, 2)}}));
  EXPECT_EQ(r.failing_pair, (std::pair<Vertex, Vertex>{3, 4}));
  EXPECT_EQ(is_f_fault_traceable(complete_graph(5), 1).verdict, Verdict::yes);
}

TEST(FaultTraceableTest, SmallExamples) {
  const auto r = is_f_fault_traceable(path_graph(4), 0);
  EXPECT_EQ(r.verdict, Verdict::no);
  ASSERT_TRUE(r.failing_pair.has_value());
  EXPECT_EQ(*r.failing_pair, (std::pair<Vertex, Vertex>{1, 2}));
}

TEST(FaultTraceableTest, CirculantAgreesWithOracle) {
  const Graph g = circulant(8, {1, 2});
  bool expected = true;
  for (const FaultSpec& fs : enumerate_fault_sets(g, 1)) {
    const SubsetDp dp(g, alive_mask(g, fs), fs.edges);
    for (Vertex a = 1; a <= 8 && expected; ++a) {
      for (Vertex b = a + 1; b <= 8 && expected; ++b) {
        if (!(alive_mask(g, fs) >> (a - 1) & 1) || !(alive_mask(g, fs) >> (b - 1) & 1)) continue;
        expected = dp.path_between(a - 1, b - 1);
      }
    }
  }
  EXPECT_EQ(is_f_fault_traceable(g, 1).verdict == Verdict::yes, expected);
}

TEST(PathConstructionTest, TwoFaultHamiltonianHosts) {
  for (const Graph& g : {complete_graph(5), circulant(8, {1, 2}), circulant(8, {1, 2, 3}),
                         circulant(10, {1, 2, 3})}) {
    ASSERT_EQ(is_f_fault_hamiltonian(g, 2).verdict, Verdict::yes) << g.name();
    const auto pc = path_from_2fault_hamiltonian(g);
    EXPECT_TRUE(testing::is_spanning_walk(g, pc.path, false, {})) << g.name();
    EXPECT_TRUE(pc.from_cycle_construction) << g.name();
  }
}

TEST(PathConstructionTest, RejectsNonQualifyingGraphs) {
  EXPECT_THROW(path_from_2fault_hamiltonian(cycle_graph(5)), std::invalid_argument);
  EXPECT_THROW(path_from_2fault_hamiltonian(torus({4, 4})), std::invalid_argument);
  EXPECT_THROW(path_from_2fault_hamiltonian(generalized_petersen(5, 2)), std::invalid_argument);
  EXPECT_THROW(path_from_2fault_hamiltonian(complete_graph(6), SearchBudget{2}),
               SearchInconclusive);
}

}  // namespace
}  // namespace wheelembed

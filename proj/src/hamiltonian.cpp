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

#include "wheelembed/hamiltonian.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <string>

namespace wheelembed {

namespace {

using Mask = std::uint64_t;

struct BudgetExceeded {};

constexpr Mask bit(int i) { return Mask{1} << i; }
int lowest(Mask m) { return std::countr_zero(m); }

// 0-based bitmask view of the non-faulty part of a graph.
struct MaskGraph {
  int order = 0;
  std::vector<Mask> adj;
  Mask alive = 0;

  MaskGraph(const Graph& g, const FaultSpec& faults) : order(g.order()), adj(g.order(), 0) {
    if (g.order() > kMaxSearchOrder) {
      throw std::invalid_argument("hamiltonian search supports at most " +
                                  std::to_string(kMaxSearchOrder) + " vertices");
    }
    alive = order == 64 ? ~Mask{0} : bit(order) - 1;
    for (const Edge& e : g.edges()) {
      adj[e.u - 1] |= bit(e.v - 1);
      adj[e.v - 1] |= bit(e.u - 1);
    }
    for (Vertex v : faults.vertices) {
      if (!g.contains(v)) throw GraphError("faulty vertex " + std::to_string(v) + " not in graph");
      alive &= ~bit(v - 1);
    }
    for (const Edge& e : faults.edges) {
      if (!g.adjacent(e.u, e.v)) {
        throw GraphError("faulty edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") not in graph");
      }
      adj[e.u - 1] &= ~bit(e.v - 1);
      adj[e.v - 1] &= ~bit(e.u - 1);
    }
    for (int v = 0; v < order; ++v) adj[v] &= alive;
  }

  Mask flood(Mask within, int start) const {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj[lowest(m)];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }
};

class Searcher {
 public:
  Searcher(const MaskGraph& g, std::uint64_t max_nodes) : g_(g), max_nodes_(max_nodes) {}

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& trail() const { return trail_; }

  bool cycle() {
    const Mask alive = g_.alive;
    if (std::popcount(alive) < 3) return false;
    for (Mask m = alive; m; m &= m - 1) {
      if (std::popcount(g_.adj[lowest(m)]) < 2) return false;
    }
    start_ = lowest(alive);
    if (g_.flood(alive, start_) != alive) return false;
    trail_ = {start_};
    return extend_cycle(start_, alive & ~bit(start_));
  }

  // end < 0 leaves the far end free.
  bool path(int start, int end) {
    start_ = start;
    end_ = end;
    const Mask rest = g_.alive & ~bit(start);
    if (!path_feasible(start, rest)) return false;
    trail_ = {start};
    return extend_path(start, rest);
  }

 private:
  void tick() {
    if (++nodes_ > max_nodes_) throw BudgetExceeded{};
  }

  bool cycle_feasible(int head, Mask rest) const {
    const auto& adj = g_.adj;
    if (rest == 0) return (adj[head] & bit(start_)) != 0;
    if (!(adj[head] & rest) || !(adj[start_] & rest)) return false;
    const Mask pool = rest | bit(head) | bit(start_);
    for (Mask m = rest; m; m &= m - 1) {
      if (std::popcount(adj[lowest(m)] & pool) < 2) return false;
    }
    const Mask region = rest | bit(head);
    return g_.flood(region, head) == region;
  }

  bool extend_cycle(int head, Mask remaining) {
    if (remaining == 0) return (g_.adj[head] & bit(start_)) != 0;
    for (Mask options = g_.adj[head] & remaining; options; options &= options - 1) {
      const int next = lowest(options);
      tick();
      const Mask rest = remaining & ~bit(next);
      if (!cycle_feasible(next, rest)) continue;
      trail_.push_back(next);
      if (extend_cycle(next, rest)) return true;
      trail_.pop_back();
    }
    return false;
  }

  bool path_feasible(int head, Mask rest) const {
    const auto& adj = g_.adj;
    if (rest == 0) return end_ < 0 || head == end_;
    if (end_ >= 0 && head == end_) return false;
    if (!(adj[head] & rest)) return false;
    const Mask pool = rest | bit(head);
    int loose = 0;
    for (Mask m = rest; m; m &= m - 1) {
      const int w = lowest(m);
      const int d = std::popcount(adj[w] & pool);
      if (d == 0) return false;
      if (d == 1) {
        if (end_ >= 0 && w != end_) return false;
        if (++loose > 1) return false;
      }
    }
    return g_.flood(pool, head) == pool;
  }

  bool extend_path(int head, Mask remaining) {
    if (remaining == 0) return end_ < 0 || head == end_;
    for (Mask options = g_.adj[head] & remaining; options; options &= options - 1) {
      const int next = lowest(options);
      tick();
      const Mask rest = remaining & ~bit(next);
      if (!path_feasible(next, rest)) continue;
      trail_.push_back(next);
      if (extend_path(next, rest)) return true;
      trail_.pop_back();
    }
    return false;
  }

  const MaskGraph& g_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  int start_ = 0;
  int end_ = -1;
  std::vector<int> trail_;
};

std::vector<Vertex> to_ids(const std::vector<int>& trail) {
  std::vector<Vertex> ids(trail.size());
  std::transform(trail.begin(), trail.end(), ids.begin(), [](int i) { return i + 1; });
  return ids;
}

// Calls fn with every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Vertex> surviving_vertices(const Graph& g, const FaultSpec& fault) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!std::binary_search(fault.vertices.begin(), fault.vertices.end(), v)) out.push_back(v);
  }
  return out;
}

constexpr std::size_t kNoFailure = static_cast<std::size_t>(-1);

void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t current = target.load();
  while (value < current && !target.compare_exchange_weak(current, value)) {
  }
}

// Shared reduction for the fault sweeps: first definite failure wins, an
// inconclusive check only matters when no failure was proven.
HamiltonicityReport reduce_sweep(const std::vector<FaultSpec>& sets,
                                 const std::vector<Verdict>& verdicts, std::size_t first_failure) {
  HamiltonicityReport report;
  bool unsure_before = false;
  const std::size_t limit = std::min(first_failure, sets.size());
  for (std::size_t i = 0; i < limit; ++i) unsure_before |= verdicts[i] == Verdict::inconclusive;
  if (first_failure != kNoFailure) {
    report.verdict = Verdict::no;
    report.failing_fault = sets[first_failure];
    report.fault_sets_checked = first_failure + 1;
    if (unsure_before) {
      report.notes = "an earlier fault set was inconclusive; the reported failure may not be the "
                     "first in canonical order";
    }
  } else {
    report.verdict = unsure_before ? Verdict::inconclusive : Verdict::yes;
    report.fault_sets_checked = sets.size();
  }
  return report;
}

void annotate_zero_fault_failure(const Graph& g, HamiltonicityReport& report, SearchBudget budget) {
  if (report.verdict != Verdict::no || !report.failing_fault || !report.failing_fault->empty()) {
    return;
  }
  std::string note = "fails with no faults: the graph itself is not hamiltonian";
  if (g.order() >= 4 && is_hypohamiltonian(g, budget) == Verdict::yes) {
    note += "; every single-vertex deletion is hamiltonian (hypohamiltonian)";
  }
  report.notes = report.notes.empty() ? note : report.notes + "; " + note;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string describe(const FaultSpec& fault) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : fault.vertices) {
    out += (first ? "" : ", ") + std::string("v") + std::to_string(v);
    first = false;
  }
  for (const Edge& e : fault.edges) {
    out += (first ? "" : ", ") + std::string("e(") + std::to_string(e.u) + "," +
           std::to_string(e.v) + ")";
    first = false;
  }
  return out + "}";
}

SearchResult find_hamiltonian_cycle(const Graph& g, const FaultSpec& faults, SearchBudget budget) {
  const MaskGraph mg(g, faults);
  Searcher search(mg, budget.max_nodes);
  SearchResult result;
  try {
    if (search.cycle()) {
      result.verdict = Verdict::yes;
      result.witness = to_ids(search.trail());
    }
  } catch (const BudgetExceeded&) {
    result.verdict = Verdict::inconclusive;
  }
  result.nodes = search.nodes();
  return result;
}

SearchResult find_hamiltonian_path(const Graph& g, std::optional<std::pair<Vertex, Vertex>> ends,
                                   const FaultSpec& faults, SearchBudget budget) {
  const MaskGraph mg(g, faults);
  Searcher search(mg, budget.max_nodes);
  SearchResult result;
  const Mask alive = mg.alive;
  if (alive == 0) return result;
  try {
    bool found = false;
    if (ends) {
      const auto [u, v] = *ends;
      if (!g.contains(u) || !g.contains(v)) throw GraphError("path end outside the graph");
      const bool both_alive = (alive & bit(u - 1)) && (alive & bit(v - 1));
      if (both_alive && u == v) {
        found = std::popcount(alive) == 1 && search.path(u - 1, v - 1);
      } else if (both_alive) {
        found = search.path(u - 1, v - 1);
      }
    } else {
      for (Mask m = alive; m && !found; m &= m - 1) found = search.path(lowest(m), -1);
    }
    if (found) {
      result.verdict = Verdict::yes;
      result.witness = to_ids(search.trail());
    }
  } catch (const BudgetExceeded&) {
    result.verdict = Verdict::inconclusive;
  }
  result.nodes = search.nodes();
  return result;
}

std::vector<FaultSpec> enumerate_fault_sets(const Graph& g, int f) {
  if (f < 0) throw std::invalid_argument("fault budget must be non-negative");
  const auto& edges = g.edges();
  const int n = g.order();
  const int m = static_cast<int>(edges.size());
  std::vector<FaultSpec> out;
  auto emit = [&](int vertex_count, int edge_count) {
    for_each_combination(n, vertex_count, [&](const std::vector<int>& vs) {
      for_each_combination(m, edge_count, [&](const std::vector<int>& es) {
        FaultSpec spec;
        for (int v : vs) spec.vertices.push_back(v + 1);
        for (int e : es) spec.edges.push_back(edges[e]);
        out.push_back(std::move(spec));
      });
    });
  };
  for (int size = 0; size <= f; ++size) {
    emit(size, 0);
    if (size == 0) continue;
    emit(0, size);
    for (int vertex_count = size - 1; vertex_count >= 1; --vertex_count) {
      emit(vertex_count, size - vertex_count);
    }
  }
  return out;
}

HamiltonicityReport is_f_fault_hamiltonian(const Graph& g, int f, SearchBudget budget) {
  const auto sets = enumerate_fault_sets(g, f);
  std::vector<Verdict> verdicts(sets.size(), Verdict::yes);
  std::atomic<std::size_t> first_failure{kNoFailure};
  const auto fault_free = find_hamiltonian_cycle(g, {}, budget);
  verdicts[0] = fault_free.verdict;
  if (fault_free.verdict == Verdict::no) first_failure = 0;

  const long long count = static_cast<long long>(sets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 1; i < count; ++i) {
    if (static_cast<std::size_t>(i) > first_failure.load()) continue;
    verdicts[i] = find_hamiltonian_cycle(g, sets[i], budget).verdict;
    if (verdicts[i] == Verdict::no) atomic_min(first_failure, static_cast<std::size_t>(i));
  }

  auto report = reduce_sweep(sets, verdicts, first_failure.load());
  if (report.verdict == Verdict::yes) report.witness = fault_free.witness;
  annotate_zero_fault_failure(g, report, budget);
  return report;
}

HamiltonicityReport is_f_fault_hamiltonian_serial(const Graph& g, int f, SearchBudget budget) {
  const auto sets = enumerate_fault_sets(g, f);
  std::vector<Verdict> verdicts(sets.size(), Verdict::yes);
  std::size_t first_failure = kNoFailure;
  std::vector<Vertex> witness;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto result = find_hamiltonian_cycle(g, sets[i], budget);
    verdicts[i] = result.verdict;
    if (i == 0) witness = std::move(result.witness);
    if (verdicts[i] == Verdict::no) {
      first_failure = i;
      break;
    }
  }
  auto report = reduce_sweep(sets, verdicts, first_failure);
  if (report.verdict == Verdict::yes) report.witness = witness;
  annotate_zero_fault_failure(g, report, budget);
  return report;
}

HamiltonicityReport is_f_fault_traceable(const Graph& g, int f, SearchBudget budget) {
  const auto sets = enumerate_fault_sets(g, f);
  std::vector<Verdict> verdicts(sets.size(), Verdict::yes);
  std::vector<std::pair<Vertex, Vertex>> failing_pairs(sets.size());
  std::atomic<std::size_t> first_failure{kNoFailure};

  const long long count = static_cast<long long>(sets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    if (static_cast<std::size_t>(i) > first_failure.load()) continue;
    const auto alive = surviving_vertices(g, sets[i]);
    Verdict verdict = Verdict::yes;
    for (std::size_t a = 0; a < alive.size() && verdict != Verdict::no; ++a) {
      for (std::size_t b = a + 1; b < alive.size(); ++b) {
        const auto r = find_hamiltonian_path(g, std::pair{alive[a], alive[b]}, sets[i], budget);
        if (r.verdict == Verdict::no) {
          verdict = Verdict::no;
          failing_pairs[i] = {alive[a], alive[b]};
          break;
        }
        if (r.verdict == Verdict::inconclusive) verdict = Verdict::inconclusive;
      }
    }
    verdicts[i] = verdict;
    if (verdict == Verdict::no) atomic_min(first_failure, static_cast<std::size_t>(i));
  }

  auto report = reduce_sweep(sets, verdicts, first_failure.load());
  if (report.verdict == Verdict::no) report.failing_pair = failing_pairs[first_failure.load()];
  if (report.verdict == Verdict::yes) {
    report.witness = find_hamiltonian_path(g, std::nullopt, {}, budget).witness;
  }
  return report;
}

Verdict is_hypohamiltonian(const Graph& g, SearchBudget budget) {
  const auto whole = find_hamiltonian_cycle(g, {}, budget).verdict;
  if (whole != Verdict::no) return whole == Verdict::yes ? Verdict::no : Verdict::inconclusive;
  bool unsure = false;
  for (Vertex v = 1; v <= g.order(); ++v) {
    const auto r = find_hamiltonian_cycle(g, FaultSpec{{v}, {}}, budget).verdict;
    if (r == Verdict::no) return Verdict::no;
    unsure |= r == Verdict::inconclusive;
  }
  return unsure ? Verdict::inconclusive : Verdict::yes;
}

PathConstruction path_from_2fault_hamiltonian(const Graph& g, SearchBudget budget) {
  const auto check = is_f_fault_hamiltonian(g, 2, budget);
  if (check.verdict == Verdict::inconclusive) {
    throw SearchInconclusive("2-fault hamiltonicity check ran out of search budget");
  }
  if (check.verdict == Verdict::no) {
    throw std::invalid_argument("graph '" + g.name() + "' is not 2-fault hamiltonian (fails at " +
                                describe(*check.failing_fault) + ")");
  }

  for (Vertex a = 1; a <= g.order(); ++a) {
    for (Vertex b = a + 1; b <= g.order(); ++b) {
      const auto cycle = find_hamiltonian_cycle(g, FaultSpec{{a, b}, {}}, budget);
      if (cycle.verdict != Verdict::yes) continue;
      const auto& c = cycle.witness;
      const int len = static_cast<int>(c.size());
      for (const auto& [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
        for (int p = 0; p < len; ++p) {
          if (!g.adjacent(u, c[p])) continue;
          for (int step : {1, len - 1}) {
            // u, w = c[p], then around the cycle; the last vertex z is w's other cycle neighbour.
            std::vector<Vertex> path{u};
            for (int k = 0; k < len; ++k) path.push_back(c[(p + k * step) % len]);
            if (g.adjacent(v, path.back())) {
              path.push_back(v);
              return {path, {a, b}, true};
            }
            if (g.adjacent(v, u)) {
              path.insert(path.begin(), v);
              return {path, {a, b}, true};
            }
          }
        }
      }
    }
  }

  const auto direct = find_hamiltonian_path(g, std::nullopt, {}, budget);
  if (direct.verdict == Verdict::inconclusive) {
    throw SearchInconclusive("hamiltonian path search ran out of search budget");
  }
  if (direct.verdict == Verdict::no) {
    // Would contradict the statement being implemented.
    throw std::logic_error("2-fault hamiltonian graph '" + g.name() + "' has no hamiltonian path");
  }
  return {direct.witness, {0, 0}, false};
}

}  // namespace wheelembed

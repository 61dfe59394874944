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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wheelembed/graph.hpp"

namespace wheelembed {

/// Exact search runs on 64-bit vertex masks.
inline constexpr int kMaxSearchOrder = 64;

enum class Verdict { yes, no, inconclusive };

std::string_view verdict_name(Verdict v);

/// Node-expansion cap for the backtracking searches. Hitting it yields
/// Verdict::inconclusive, never a guessed answer.
struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
};

/// Raised by callers that need a definite answer when the budget ran out.
class SearchInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Faulty vertices and edges removed from a graph before a search.
struct FaultSpec {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Edge> edges;       // ascending

  std::size_t size() const { return vertices.size() + edges.size(); }
  bool empty() const { return size() == 0; }
  bool operator==(const FaultSpec&) const = default;
};

std::string describe(const FaultSpec& fault);

struct SearchResult {
  Verdict verdict = Verdict::no;
  std::vector<Vertex> witness;  // cycle (without repeating the start) or path
  std::uint64_t nodes = 0;
};

/// Hamiltonian cycle on the non-faulty part of g. The witness is the
/// lexicographically least cycle sequence: it starts at the smallest surviving
/// vertex and neighbours are tried in increasing id order. Fewer than three
/// surviving vertices never form a cycle.
SearchResult find_hamiltonian_cycle(const Graph& g, const FaultSpec& faults = {},
                                    SearchBudget budget = {});

/// Hamiltonian path on the non-faulty part of g, optionally with fixed end
/// vertices. Without ends the witness is the lexicographically least path.
SearchResult find_hamiltonian_path(const Graph& g,
                                   std::optional<std::pair<Vertex, Vertex>> ends = std::nullopt,
                                   const FaultSpec& faults = {}, SearchBudget budget = {});

/// All fault sets of total size <= f in canonical order: by size, and inside
/// one size vertex-only sets, then edge-only sets, then mixed sets with the
/// vertex share decreasing; each group in lexicographic order.
std::vector<FaultSpec> enumerate_fault_sets(const Graph& g, int f);

struct HamiltonicityReport {
  Verdict verdict = Verdict::no;
  std::vector<Vertex> witness;  // fault-free witness when verdict is yes
  std::optional<FaultSpec> failing_fault;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;  // traceability only
  std::size_t fault_sets_checked = 0;
  std::string notes;
};

/// Exhaustive f-fault hamiltonicity. Fault sets are checked in parallel; the
/// reported failure is the first one in canonical order.
HamiltonicityReport is_f_fault_hamiltonian(const Graph& g, int f, SearchBudget budget = {});
/// Reference kernel: same contract, one fault set at a time.
HamiltonicityReport is_f_fault_hamiltonian_serial(const Graph& g, int f,
                                                  SearchBudget budget = {});

/// For every fault set of size <= f and every surviving pair u < v, a
/// hamiltonian path of the surviving graph must join u and v.
HamiltonicityReport is_f_fault_traceable(const Graph& g, int f, SearchBudget budget = {});

/// Non-hamiltonian while every single-vertex deletion is hamiltonian.
Verdict is_hypohamiltonian(const Graph& g, SearchBudget budget = {});

struct PathConstruction {
  std::vector<Vertex> path;
  std::pair<Vertex, Vertex> removed{0, 0};  // the deleted pair whose cycle was used
  bool from_cycle_construction = false;    // false: fell back to direct search
};

/// Spanning path of a 2-fault hamiltonian graph built from a hamiltonian
/// cycle of g minus two vertices: attach one deleted vertex at a cycle
/// neighbour, open the cycle next to it, and hook the second deleted vertex
/// onto an end when it is adjacent. Falls back to direct search otherwise.
/// Throws std::invalid_argument if g is not 2-fault hamiltonian.
PathConstruction path_from_2fault_hamiltonian(const Graph& g, SearchBudget budget = {});

}  // namespace wheelembed

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
#include <stdexcept>
#include <vector>

#include "wheelembed/embedding.hpp"
#include "wheelembed/graph.hpp"

namespace wheelembed {

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleOptions {
  int limit = 9;                          // largest accepted order
  int jobs = 0;                           // OpenMP threads; 0 keeps the runtime default
  std::uint64_t routing_cap = 1'000'000;  // per-bijection product of shortest-path counts
};

/// Optimum of a metric over all bijections V(G) -> V(H).
///
/// Dilation and wirelength use shortest-path routing, which is optimal for
/// both since each edge costs at least the host distance of its images.
/// Congestion minimises over bijections and over the choice of a shortest
/// path per guest edge; `exact` is false when some bijection had more routing
/// combinations than routing_cap and was evaluated with lexicographically
/// least routes only, making `optimum` an upper bound.
struct OracleResult {
  Metric metric = Metric::dilation;
  std::int64_t optimum = 0;
  std::vector<Vertex> witness_vmap;  // lexicographically least optimal bijection
  std::uint64_t bijections_examined = 0;
  bool exact = true;
};

/// Branch and bound over bijections, split by the images of guest vertices 1
/// and 2 across OpenMP threads. Results do not depend on scheduling.
OracleResult exact_dilation(const Graph& guest, const Graph& host, const OracleOptions& opts = {});
OracleResult exact_wirelength(const Graph& guest, const Graph& host, const OracleOptions& opts = {});
OracleResult exact_congestion(const Graph& guest, const Graph& host,
                              const OracleOptions& opts = {});
OracleResult exact_metric(Metric metric, const Graph& guest, const Graph& host,
                          const OracleOptions& opts = {});

/// Reference kernel: plain enumeration of all n! bijections in lexicographic
/// order, no pruning, one thread.
OracleResult exact_metric_serial(Metric metric, const Graph& guest, const Graph& host,
                                 const OracleOptions& opts = {});

}  // namespace wheelembed

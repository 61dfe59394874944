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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wheelembed/embedding.hpp"
#include "wheelembed/graph.hpp"
#include "wheelembed/hamiltonian.hpp"

namespace wheelembed {

/// A lower bound paired, when available, with a witness embedding.
/// Invariant: achieved >= bound whenever both are set, and sharp == (achieved == bound).
struct BoundReport {
  Metric metric = Metric::dilation;
  std::int64_t bound = 0;
  std::optional<std::int64_t> achieved;
  std::optional<bool> sharp;
  std::optional<EmbeddingMap> witness;
  std::string notes;
};

/// dil(G, H) >= radius(H) for a guest with a universal vertex. When
/// radius(H) == diameter(H) every embedding has dilation <= diameter, so the
/// bound is attained; the report then carries the identity embedding as witness.
BoundReport dilation_lower_bound(const Graph& guest, const Graph& host);

/// EC(G, H) >= ceil((n - 1) / max_degree(H)) for a guest with a universal vertex.
BoundReport congestion_lower_bound(const Graph& guest, const Graph& host);

enum class RimKind { wheel, fan };

/// WL(W_n, H) >= n - 1 + delta and WL(F_n, H) >= n - 2 + delta, delta being the
/// status of a median. The bound is attained iff H minus some median has a
/// hamiltonian cycle (wheel) or path (fan); every median is tried in id order
/// and the first success is built and evaluated as the witness.
BoundReport wirelength_lower_bound(RimKind kind, const Graph& host, SearchBudget budget = {});

enum class TheoremId { dil_hypertree, dil_sibling, dil_xtree, ec_windmill, wl_wheel, wl_fan };

std::string_view theorem_name(TheoremId id);
/// "dil-hypertree", "ec-windmill", "wl-wheel", ...
TheoremId parse_theorem(std::string_view name);

struct TheoremInstance {
  TheoremId id = TheoremId::dil_hypertree;
  GuestKind guest = GuestKind::wheel;  // dil-* only
  int param = 0;                       // level l for dil-*, n for ec-windmill
  std::optional<Graph> host;           // wl-* only
};

/// Builds guest, host and construction for one theorem instance and compares
/// the construction's value to the lower bound. For dil-* and ec-windmill the
/// notes also flag any disagreement with the closed-form claimed value.
BoundReport verify_theorem(const TheoremInstance& instance, SearchBudget budget = {});

}  // namespace wheelembed

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
#include <string_view>
#include <vector>

#include "wheelembed/graph.hpp"
#include "wheelembed/hamiltonian.hpp"

namespace wheelembed {

class EmbeddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A one-to-one vertex map f from guest to host together with a host path
/// P_f(e) for every guest edge.
///
/// routes[i] belongs to guest.edges()[i] = (u, v) with u < v and runs from
/// f(u) to f(v). Routes are stored explicitly, so congestion is defined for
/// any routing, shortest or not.
struct EmbeddingMap {
  Graph guest;
  Graph host;
  std::vector<Vertex> vmap;                 // vmap[g-1] = f(g)
  std::vector<std::vector<Vertex>> routes;  // aligned with guest.edges()

  Vertex image(Vertex g) const { return vmap.at(g - 1); }
  /// Route of guest edge {a, b}, oriented from f(min) to f(max).
  const std::vector<Vertex>& route(Vertex a, Vertex b) const;
};

/// Throws EmbeddingError unless vmap is a bijection onto the host and every
/// route is a simple host path between the right images.
void validate(const EmbeddingMap& emb);

struct EmbeddingMetrics {
  std::vector<int> dilation;    // per guest edge, aligned with guest.edges()
  std::vector<int> congestion;  // per host edge, aligned with host.edges()
  int max_dilation = 0;
  int max_congestion = 0;
  std::int64_t wirelength = 0;      // sum of dilations
  std::int64_t congestion_sum = 0;  // sum of congestions, counted independently
};

EmbeddingMetrics evaluate(const EmbeddingMap& emb);

enum class Metric { dilation, congestion, wirelength };

std::string_view metric_name(Metric m);
/// Accepts "dilation"/"dil", "congestion"/"ec", "wirelength"/"wl".
Metric parse_metric(std::string_view name);

/// Lexicographically least shortest host path from a to b.
std::vector<Vertex> shortest_route(const Graph& host, const DistanceTable& dist, Vertex a, Vertex b);

/// Routes every guest edge along shortest_route(). Requires equal orders, a
/// bijective vmap and a connected host.
EmbeddingMap route_shortest(const Graph& guest, const Graph& host, std::vector<Vertex> vmap);

/// Uniformly random bijection (seeded mt19937_64) with shortest routing.
EmbeddingMap random_embedding(const Graph& guest, const Graph& host, std::uint64_t seed);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Rational&) const = default;
};

/// |V(host)| / |V(guest)| in lowest terms.
Rational expansion(const EmbeddingMap& emb);

// ---------------------------------------------------------------------------
// Constructive embeddings

enum class GuestKind { wheel, fan, friendship, star };
enum class TreeHostKind { hypertree, sibling_tree, x_tree };

std::string_view guest_kind_name(GuestKind kind);
std::string_view tree_host_name(TreeHostKind kind);
GuestKind parse_guest_kind(std::string_view name);
TreeHostKind parse_tree_host(std::string_view name);

/// The order-n member of a hub-centred guest family. Friendship needs odd n.
Graph wheel_like_guest(GuestKind kind, int n);
Graph tree_host(TreeHostKind kind, int levels);

/// Heap labels of the complete binary tree in pre-order: result[rank-1] is
/// the heap label visited at position `rank` (root, left subtree, right subtree).
std::vector<Vertex> preorder_heap_labels(int levels);

/// Guest vertex g goes to the host vertex of pre-order rank g; shortest routes.
/// The host must have 2^l - 1 vertices for some l >= 2.
EmbeddingMap embed_preorder(const Graph& guest, const Graph& host);

/// Wheel, fan, friendship or star of order 2^l - 1 into HT(l), ST(l) or XT(l).
EmbeddingMap embed_wheel_like_into_tree_host(GuestKind kind, int levels, TreeHostKind host_kind);

/// WM_{2^(n-1)} into G(2^n; +-{1, 2^(n-2)}) with the fixed four-range spoke routing:
/// spokes to 2..q+1 go clockwise along the outer cycle, spokes to 3q+1..2^n go
/// anticlockwise, spokes to q+2..2q+1 take the chord (1, q+1) and then go
/// clockwise, and spokes to 2q+2..3q take the chord (1, 3q+1) and go
/// anticlockwise (q = 2^(n-2)). Rim pairs use their direct host edge.
EmbeddingMap embed_windmill_into_circulant(int n);
/// Same routing for caller-supplied graphs; checks they are the expected pair.
EmbeddingMap embed_windmill(const Graph& guest, const Graph& host);

/// W_n into host: hub to a median u, rim onto a hamiltonian cycle of host - u.
/// Uses the smallest-id median unless `median` is given. Throws EmbeddingError
/// when host - u has no hamiltonian cycle and SearchInconclusive when the
/// search budget runs out.
EmbeddingMap embed_wheel_via_median(const Graph& host, std::optional<Vertex> median = std::nullopt,
                                    SearchBudget budget = {});
/// F_n into host: hub to a median u, rim path onto a hamiltonian path of host - u.
EmbeddingMap embed_fan_via_median(const Graph& host, std::optional<Vertex> median = std::nullopt,
                                  SearchBudget budget = {});

}  // namespace wheelembed

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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wheelembed {

/// Vertex ids are 1-based everywhere in the public interface.
using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Raised for malformed graphs and for distance queries on disconnected input.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Labeled simple undirected graph on vertices 1..order.
///
/// Construct through build_graph(), which validates the edge list. The edge
/// list is kept sorted, so edge indices are stable and can key per-edge
/// tables (congestion counts, routes).
class Graph {
 public:
  Graph() = default;

  int order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(Vertex v) const { return v >= 1 && v <= order_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v - 1); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v - 1).size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Position of edge {a, b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  Graph renamed(std::string name) const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_ && name_ == other.name_;
  }

 private:
  friend Graph build_graph(int order, std::span<const std::pair<Vertex, Vertex>> edges,
                           std::string name);

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::string name_;
};

/// Validates and builds a graph. Throws GraphError on an out-of-range
/// endpoint, a self-loop, a duplicate edge or a non-positive order.
Graph build_graph(int order, std::span<const std::pair<Vertex, Vertex>> edges,
                  std::string name = "");
Graph build_graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges,
                  std::string name = "");

/// Same vertex set and edge set, ignoring names.
bool same_topology(const Graph& a, const Graph& b);

/// Deletes `removed` and compacts the remaining labels in increasing order.
/// Returns the new graph and, for each new vertex id i, the old id at [i-1].
std::pair<Graph, std::vector<Vertex>> delete_vertices(const Graph& g,
                                                      std::span<const Vertex> removed);

bool is_connected(const Graph& g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Square table of hop distances; kUnreachable marks disconnected pairs.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(int order)
      : order_(order), dist_(static_cast<std::size_t>(order) * order, kUnreachable) {}

  int order() const { return order_; }
  int operator()(Vertex a, Vertex b) const { return dist_[index(a, b)]; }
  int& at(Vertex a, Vertex b) { return dist_[index(a, b)]; }
  /// Distances from `a` to 1..order, stored at [v-1].
  std::span<const int> row(Vertex a) const {
    return {dist_.data() + static_cast<std::size_t>(a - 1) * order_,
            static_cast<std::size_t>(order_)};
  }

  bool operator==(const DistanceTable&) const = default;

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a - 1) * order_ + static_cast<std::size_t>(b - 1);
  }

  int order_ = 0;
  std::vector<int> dist_;
};

/// Single-source BFS; result[v-1] is the hop distance or kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs BFS, one source per OpenMP iteration.
DistanceTable all_pairs_distances(const Graph& g);
/// Reference kernel for all_pairs_distances; single-threaded.
DistanceTable all_pairs_distances_serial(const Graph& g);

struct RadiusDiameter {
  int radius = 0;
  int diameter = 0;
};

/// Eccentricity of every vertex, at [v-1]. Throws GraphError when disconnected.
std::vector<int> eccentricities(const Graph& g);
std::vector<int> eccentricities(const Graph& g, const DistanceTable& dist);
RadiusDiameter radius_diameter(const Graph& g);
RadiusDiameter radius_diameter(const Graph& g, const DistanceTable& dist);

struct MedianInfo {
  std::vector<Vertex> medians;  // ascending
  std::int64_t delta = 0;       // minimum status, sum of distances from a median
};

/// Status-minimizing vertices. Throws GraphError when disconnected.
MedianInfo status_and_median(const Graph& g);
MedianInfo status_and_median(const Graph& g, const DistanceTable& dist);

/// Distance layers N_1(center), N_2(center), ... around a vertex.
struct Shells {
  Vertex center = 0;
  std::vector<std::vector<Vertex>> layers;  // layers[i-1] = N_i(center)

  const std::vector<Vertex>& at(int distance) const { return layers.at(distance - 1); }
  /// sum over i of i * |N_i(center)|
  std::int64_t status() const;
};

Shells shells(const Graph& g, Vertex center);

int max_degree(const Graph& g);
int min_degree(const Graph& g);
/// Smallest-id vertex of degree order-1, i.e. a dominating vertex.
std::optional<Vertex> universal_vertex(const Graph& g);

}  // namespace wheelembed

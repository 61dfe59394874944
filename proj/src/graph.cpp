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

#include "wheelembed/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace wheelembed {

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_connected(const Graph& g, const DistanceTable& dist, const char* what) {
  for (Vertex v = 2; v <= g.order(); ++v) {
    if (dist(1, v) == kUnreachable) {
      throw GraphError(std::string(what) + ": graph '" + g.name() + "' is disconnected");
    }
  }
}

}  // namespace

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& row = adjacency_[a - 1];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Graph build_graph(int order, std::span<const std::pair<Vertex, Vertex>> edges,
                  std::string name) {
  if (order < 1) throw GraphError("graph order must be positive, got " + std::to_string(order));
  Graph g;
  g.order_ = order;
  g.name_ = std::move(name);
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > order || b < 1 || b > order) {
      throw GraphError("edge " + edge_text(a, b) + " has an endpoint outside 1.." +
                       std::to_string(order));
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(make_edge(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) throw GraphError("duplicate edge " + edge_text(dup->u, dup->v));

  g.adjacency_.assign(order, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u - 1].push_back(e.v);
    g.adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

Graph build_graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges,
                  std::string name) {
  return build_graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
                     std::move(name));
}

bool same_topology(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edges() == b.edges();
}

std::pair<Graph, std::vector<Vertex>> delete_vertices(const Graph& g,
                                                      std::span<const Vertex> removed) {
  std::vector<Vertex> relabel(g.order() + 1, 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw GraphError("cannot delete vertex " + std::to_string(v));
    relabel[v] = -1;
  }
  std::vector<Vertex> old_ids;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (relabel[v] == 0) {
      old_ids.push_back(v);
      relabel[v] = static_cast<Vertex>(old_ids.size());
    }
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] > 0 && relabel[e.v] > 0) kept.emplace_back(relabel[e.u], relabel[e.v]);
  }
  return {build_graph(static_cast<int>(old_ids.size()), kept, g.name()), std::move(old_ids)};
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw GraphError("invalid vertex id " + std::to_string(source));
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[source - 1] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y - 1] == kUnreachable) {
        dist[y - 1] = dist[x - 1] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 1);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

DistanceTable all_pairs_distances(const Graph& g) {
  DistanceTable table(g.order());
  const int n = g.order();
#pragma omp parallel for schedule(dynamic, 8)
  for (int s = 1; s <= n; ++s) {
    const auto row = bfs_distances(g, s);
    for (int v = 1; v <= n; ++v) table.at(s, v) = row[v - 1];
  }
  return table;
}

DistanceTable all_pairs_distances_serial(const Graph& g) {
  DistanceTable table(g.order());
  for (Vertex s = 1; s <= g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    for (Vertex v = 1; v <= g.order(); ++v) table.at(s, v) = row[v - 1];
  }
  return table;
}

std::vector<int> eccentricities(const Graph& g, const DistanceTable& dist) {
  require_connected(g, dist, "eccentricity");
  std::vector<int> ecc(g.order(), 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    const auto row = dist.row(v);
    ecc[v - 1] = *std::max_element(row.begin(), row.end());
  }
  return ecc;
}

std::vector<int> eccentricities(const Graph& g) {
  return eccentricities(g, all_pairs_distances(g));
}

RadiusDiameter radius_diameter(const Graph& g, const DistanceTable& dist) {
  const auto ecc = eccentricities(g, dist);
  const auto [lo, hi] = std::minmax_element(ecc.begin(), ecc.end());
  return {*lo, *hi};
}

RadiusDiameter radius_diameter(const Graph& g) { return radius_diameter(g, all_pairs_distances(g)); }

MedianInfo status_and_median(const Graph& g, const DistanceTable& dist) {
  require_connected(g, dist, "median");
  MedianInfo info;
  info.delta = std::numeric_limits<std::int64_t>::max();
  for (Vertex v = 1; v <= g.order(); ++v) {
    std::int64_t status = 0;
    for (int d : dist.row(v)) status += d;
    if (status < info.delta) {
      info.delta = status;
      info.medians.clear();
    }
    if (status == info.delta) info.medians.push_back(v);
  }
  return info;
}

MedianInfo status_and_median(const Graph& g) {
  return status_and_median(g, all_pairs_distances(g));
}

std::int64_t Shells::status() const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    total += static_cast<std::int64_t>(i + 1) * static_cast<std::int64_t>(layers[i].size());
  }
  return total;
}

Shells shells(const Graph& g, Vertex center) {
  const auto dist = bfs_distances(g, center);
  Shells result{center, {}};
  for (Vertex v = 1; v <= g.order(); ++v) {
    const int d = dist[v - 1];
    if (d == kUnreachable) throw GraphError("shells: graph '" + g.name() + "' is disconnected");
    if (d == 0) continue;
    if (static_cast<std::size_t>(d) > result.layers.size()) result.layers.resize(d);
    result.layers[d - 1].push_back(v);
  }
  return result;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 1; v <= g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (Vertex v = 1; v <= g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::optional<Vertex> universal_vertex(const Graph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

}  // namespace wheelembed

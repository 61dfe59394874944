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

#include "wheelembed/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "wheelembed/families.hpp"

namespace wheelembed {

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_bijection(const Graph& guest, const Graph& host, const std::vector<Vertex>& vmap) {
  if (guest.order() != host.order()) {
    throw EmbeddingError("guest has " + std::to_string(guest.order()) + " vertices, host has " +
                         std::to_string(host.order()));
  }
  if (vmap.size() != static_cast<std::size_t>(guest.order())) {
    throw EmbeddingError("vertex map has " + std::to_string(vmap.size()) + " entries, expected " +
                         std::to_string(guest.order()));
  }
  std::vector<bool> used(host.order() + 1, false);
  for (Vertex image : vmap) {
    if (!host.contains(image)) throw EmbeddingError("image " + std::to_string(image) + " not in host");
    if (used[image]) throw EmbeddingError("vertex map is not injective at " + std::to_string(image));
    used[image] = true;
  }
}

int log2_exact(int value) {
  int l = 0;
  while ((1 << l) < value) ++l;
  return (1 << l) == value ? l : -1;
}

EmbeddingMap embed_hub_and_rim(const Graph& guest, const Graph& host, Vertex hub_image,
                               const std::vector<Vertex>& rim_images) {
  std::vector<Vertex> vmap{hub_image};
  vmap.insert(vmap.end(), rim_images.begin(), rim_images.end());
  return route_shortest(guest, host, std::move(vmap));
}

}  // namespace

const std::vector<Vertex>& EmbeddingMap::route(Vertex a, Vertex b) const {
  const auto idx = guest.edge_index(a, b);
  if (!idx) throw EmbeddingError("guest has no edge " + edge_text(a, b));
  return routes.at(*idx);
}

void validate(const EmbeddingMap& emb) {
  check_bijection(emb.guest, emb.host, emb.vmap);
  const auto& edges = emb.guest.edges();
  if (emb.routes.size() != edges.size()) {
    throw EmbeddingError("expected " + std::to_string(edges.size()) + " routes, got " +
                         std::to_string(emb.routes.size()));
  }
  std::vector<int> seen(emb.host.order() + 1, -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& r = emb.routes[i];
    const Edge e = edges[i];
    if (r.size() < 2 || r.front() != emb.image(e.u) || r.back() != emb.image(e.v)) {
      throw EmbeddingError("route of guest edge " + edge_text(e.u, e.v) +
                           " does not join its images");
    }
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (!emb.host.contains(r[k])) throw EmbeddingError("route leaves the host");
      if (seen[r[k]] == static_cast<int>(i)) {
        throw EmbeddingError("route of guest edge " + edge_text(e.u, e.v) + " repeats a vertex");
      }
      seen[r[k]] = static_cast<int>(i);
      if (k > 0 && !emb.host.adjacent(r[k - 1], r[k])) {
        throw EmbeddingError("route of guest edge " + edge_text(e.u, e.v) +
                             " uses non-edge " + edge_text(r[k - 1], r[k]));
      }
    }
  }
}

EmbeddingMetrics evaluate(const EmbeddingMap& emb) {
  EmbeddingMetrics m;
  m.dilation.resize(emb.routes.size());
  m.congestion.assign(emb.host.size(), 0);
  for (std::size_t i = 0; i < emb.routes.size(); ++i) {
    const auto& r = emb.routes[i];
    m.dilation[i] = static_cast<int>(r.size()) - 1;
    for (std::size_t k = 1; k < r.size(); ++k) {
      const auto idx = emb.host.edge_index(r[k - 1], r[k]);
      if (!idx) throw EmbeddingError("route uses non-edge " + edge_text(r[k - 1], r[k]));
      ++m.congestion[*idx];
    }
  }
  for (int d : m.dilation) {
    m.wirelength += d;
    m.max_dilation = std::max(m.max_dilation, d);
  }
  for (int c : m.congestion) {
    m.congestion_sum += c;
    m.max_congestion = std::max(m.max_congestion, c);
  }
  return m;
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::dilation: return "dilation";
    case Metric::congestion: return "congestion";
    case Metric::wirelength: return "wirelength";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  if (name == "dilation" || name == "dil") return Metric::dilation;
  if (name == "congestion" || name == "ec") return Metric::congestion;
  if (name == "wirelength" || name == "wl") return Metric::wirelength;
  throw EmbeddingError("unknown metric '" + std::string(name) + "'");
}

std::vector<Vertex> shortest_route(const Graph& host, const DistanceTable& dist, Vertex a,
                                   Vertex b) {
  if (dist(a, b) == kUnreachable) {
    throw EmbeddingError("host vertices " + std::to_string(a) + " and " + std::to_string(b) +
                         " are disconnected");
  }
  std::vector<Vertex> route{a};
  Vertex cur = a;
  while (cur != b) {
    const int remaining = dist(cur, b);
    // Neighbours are sorted, so the first one closer to b gives the least sequence.
    for (Vertex next : host.neighbors(cur)) {
      if (dist(next, b) == remaining - 1) {
        cur = next;
        break;
      }
    }
    route.push_back(cur);
  }
  return route;
}

EmbeddingMap route_shortest(const Graph& guest, const Graph& host, std::vector<Vertex> vmap) {
  check_bijection(guest, host, vmap);
  const auto dist = all_pairs_distances(host);
  EmbeddingMap emb{guest, host, std::move(vmap), {}};
  emb.routes.reserve(guest.size());
  for (const Edge& e : guest.edges()) {
    emb.routes.push_back(shortest_route(host, dist, emb.image(e.u), emb.image(e.v)));
  }
  return emb;
}

EmbeddingMap random_embedding(const Graph& guest, const Graph& host, std::uint64_t seed) {
  std::vector<Vertex> vmap(host.order());
  std::iota(vmap.begin(), vmap.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(vmap.begin(), vmap.end(), rng);
  return route_shortest(guest, host, std::move(vmap));
}

Rational expansion(const EmbeddingMap& emb) {
  const std::int64_t num = emb.host.order();
  const std::int64_t den = emb.guest.order();
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string_view guest_kind_name(GuestKind kind) {
  switch (kind) {
    case GuestKind::wheel: return "wheel";
    case GuestKind::fan: return "fan";
    case GuestKind::friendship: return "friendship";
    case GuestKind::star: return "star";
  }
  return "unknown";
}

std::string_view tree_host_name(TreeHostKind kind) {
  switch (kind) {
    case TreeHostKind::hypertree: return "hypertree";
    case TreeHostKind::sibling_tree: return "sibling_tree";
    case TreeHostKind::x_tree: return "x_tree";
  }
  return "unknown";
}

GuestKind parse_guest_kind(std::string_view name) {
  for (auto k : {GuestKind::wheel, GuestKind::fan, GuestKind::friendship, GuestKind::star}) {
    if (guest_kind_name(k) == name) return k;
  }
  throw EmbeddingError("unknown guest kind '" + std::string(name) + "'");
}

TreeHostKind parse_tree_host(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (auto k : {TreeHostKind::hypertree, TreeHostKind::sibling_tree, TreeHostKind::x_tree}) {
    if (tree_host_name(k) == normalized) return k;
  }
  throw EmbeddingError("unknown tree host '" + std::string(name) + "'");
}

Graph wheel_like_guest(GuestKind kind, int n) {
  switch (kind) {
    case GuestKind::wheel: return wheel(n);
    case GuestKind::fan: return fan(n);
    case GuestKind::friendship:
      if (n % 2 == 0) throw EmbeddingError("friendship graphs have odd order");
      return friendship((n - 1) / 2);
    case GuestKind::star: return star(n);
  }
  throw EmbeddingError("unknown guest kind");
}

Graph tree_host(TreeHostKind kind, int levels) {
  switch (kind) {
    case TreeHostKind::hypertree: return hypertree(levels);
    case TreeHostKind::sibling_tree: return sibling_tree(levels);
    case TreeHostKind::x_tree: return x_tree(levels);
  }
  throw EmbeddingError("unknown tree host");
}

std::vector<Vertex> preorder_heap_labels(int levels) {
  if (levels < 1 || levels > 24) throw EmbeddingError("pre-order labels need 1 <= levels <= 24");
  const Vertex last = (1 << levels) - 1;
  std::vector<Vertex> order;
  order.reserve(last);
  std::vector<Vertex> stack{1};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    order.push_back(x);
    if (2 * x + 1 <= last) stack.push_back(2 * x + 1);
    if (2 * x <= last) stack.push_back(2 * x);
  }
  return order;
}

EmbeddingMap embed_preorder(const Graph& guest, const Graph& host) {
  const int levels = log2_exact(host.order() + 1);
  if (levels < 2) {
    throw EmbeddingError("pre-order embedding needs a host of order 2^l - 1, got " +
                         std::to_string(host.order()));
  }
  return route_shortest(guest, host, preorder_heap_labels(levels));
}

EmbeddingMap embed_wheel_like_into_tree_host(GuestKind kind, int levels, TreeHostKind host_kind) {
  if (levels < 3) throw EmbeddingError("tree-host embedding needs l >= 3, got " + std::to_string(levels));
  const Graph host = tree_host(host_kind, levels);
  return embed_preorder(wheel_like_guest(kind, host.order()), host);
}

EmbeddingMap embed_windmill(const Graph& guest, const Graph& host) {
  const int n = log2_exact(host.order());
  if (n < 3) {
    throw EmbeddingError("windmill routing needs a host of order 2^n with n >= 3, got " +
                         std::to_string(host.order()));
  }
  const int total = 1 << n;
  const int q = 1 << (n - 2);
  if (!same_topology(guest, windmill(total / 2))) {
    throw EmbeddingError("guest is not WM_" + std::to_string(total / 2) + " in windmill labeling");
  }
  if (!same_topology(host, circulant(total, {1, q}))) {
    throw EmbeddingError("host is not G(" + std::to_string(total) + ";{1," + std::to_string(q) + "})");
  }

  auto clockwise = [total](Vertex x) { return x == total ? 1 : x + 1; };
  auto anticlockwise = [total](Vertex x) { return x == 1 ? total : x - 1; };
  auto walk = [](std::vector<Vertex> route, Vertex target, auto step) {
    while (route.back() != target) route.push_back(step(route.back()));
    return route;
  };

  std::vector<Vertex> vmap(total);
  std::iota(vmap.begin(), vmap.end(), 1);
  EmbeddingMap emb{guest, host, std::move(vmap), {}};
  for (const Edge& e : guest.edges()) {
    if (e.u != 1) {
      emb.routes.push_back({e.u, e.v});
      continue;
    }
    const Vertex i = e.v;
    if (i <= q + 1) {
      emb.routes.push_back(walk({1}, i, clockwise));
    } else if (i >= 3 * q + 1) {
      emb.routes.push_back(walk({1}, i, anticlockwise));
    } else if (i <= 2 * q + 1) {
      emb.routes.push_back(walk({1, q + 1}, i, clockwise));
    } else {
      emb.routes.push_back(walk({1, 3 * q + 1}, i, anticlockwise));
    }
  }
  validate(emb);
  return emb;
}

EmbeddingMap embed_windmill_into_circulant(int n) {
  if (n < 3 || n > 20) throw EmbeddingError("windmill embedding needs 3 <= n <= 20, got " + std::to_string(n));
  const int total = 1 << n;
  return embed_windmill(windmill(total / 2), circulant(total, {1, 1 << (n - 2)}));
}

namespace {

Vertex pick_median(const Graph& host, std::optional<Vertex> median) {
  const auto info = status_and_median(host);
  if (!median) return info.medians.front();
  if (!std::binary_search(info.medians.begin(), info.medians.end(), *median)) {
    throw EmbeddingError("vertex " + std::to_string(*median) + " is not a median of the host");
  }
  return *median;
}

std::vector<Vertex> require_witness(const SearchResult& r, const Graph& host, Vertex u,
                                    const char* what) {
  if (r.verdict == Verdict::inconclusive) {
    throw SearchInconclusive(std::string(what) + " search in host minus vertex " +
                             std::to_string(u) + " ran out of budget");
  }
  if (r.verdict == Verdict::no) {
    throw EmbeddingError(std::string("host '") + host.name() + "' minus median " +
                         std::to_string(u) + " has no " + what);
  }
  return r.witness;
}

}  // namespace

EmbeddingMap embed_wheel_via_median(const Graph& host, std::optional<Vertex> median,
                                    SearchBudget budget) {
  const Vertex u = pick_median(host, median);
  const auto cycle = require_witness(find_hamiltonian_cycle(host, FaultSpec{{u}, {}}, budget), host,
                                     u, "hamiltonian cycle");
  return embed_hub_and_rim(wheel(host.order()), host, u, cycle);
}

EmbeddingMap embed_fan_via_median(const Graph& host, std::optional<Vertex> median,
                                  SearchBudget budget) {
  const Vertex u = pick_median(host, median);
  const auto path = require_witness(
      find_hamiltonian_path(host, std::nullopt, FaultSpec{{u}, {}}, budget), host, u,
      "hamiltonian path");
  return embed_hub_and_rim(fan(host.order()), host, u, path);
}

}  // namespace wheelembed

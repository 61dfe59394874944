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

#include "wheelembed/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wheelembed {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// 0-based flattened view of a (guest, host) pair.
struct Instance {
  Metric metric = Metric::dilation;
  int n = 0;
  std::vector<int> dist;                      // host distances, n * n
  std::vector<std::pair<int, int>> edges;     // guest edges
  std::vector<std::vector<int>> earlier;      // earlier[g] = guest neighbours h < g
  std::vector<int> edges_after;               // guest edges with larger endpoint > g
  std::vector<std::vector<std::vector<int>>> paths;  // [a * n + b] -> shortest paths as host edge ids
  int host_edges = 0;
  std::uint64_t routing_cap = 0;

  int d(int a, int b) const { return dist[a * n + b]; }
  const std::vector<std::vector<int>>& routes(int a, int b) const { return paths[a * n + b]; }
};

// Every shortest path from a to b, in lexicographic order of vertex sequences.
void collect_paths(const Graph& host, const DistanceTable& dt, Vertex a, Vertex b,
                   std::vector<int>& trail, std::vector<std::vector<int>>& out) {
  if (a == b) {
    out.push_back(trail);
    return;
  }
  for (Vertex next : host.neighbors(a)) {
    if (dt(next, b) != dt(a, b) - 1) continue;
    trail.push_back(static_cast<int>(*host.edge_index(a, next)));
    collect_paths(host, dt, next, b, trail, out);
    trail.pop_back();
  }
}

Instance make_instance(Metric metric, const Graph& guest, const Graph& host,
                       const OracleOptions& opts) {
  if (guest.order() != host.order()) {
    throw std::invalid_argument("guest and host orders differ (" + std::to_string(guest.order()) +
                                " vs " + std::to_string(host.order()) + ")");
  }
  if (host.order() > opts.limit || host.order() > 20) {
    throw OracleLimitError("oracle instance has " + std::to_string(host.order()) +
                           " vertices, limit is " + std::to_string(std::min(opts.limit, 20)));
  }
  const auto dt = all_pairs_distances(host);
  if (!is_connected(host)) throw GraphError("oracle needs a connected host");

  Instance inst;
  inst.metric = metric;
  inst.n = host.order();
  inst.routing_cap = opts.routing_cap;
  inst.host_edges = static_cast<int>(host.size());
  inst.dist.resize(static_cast<std::size_t>(inst.n) * inst.n);
  for (int a = 0; a < inst.n; ++a) {
    for (int b = 0; b < inst.n; ++b) inst.dist[a * inst.n + b] = dt(a + 1, b + 1);
  }
  inst.earlier.resize(inst.n);
  inst.edges_after.assign(inst.n, 0);
  for (const Edge& e : guest.edges()) {
    inst.edges.emplace_back(e.u - 1, e.v - 1);
    inst.earlier[e.v - 1].push_back(e.u - 1);
    for (int g = 0; g < e.v - 1; ++g) ++inst.edges_after[g];
  }
  if (metric == Metric::congestion) {
    inst.paths.resize(static_cast<std::size_t>(inst.n) * inst.n);
    std::vector<int> trail;
    for (int a = 0; a < inst.n; ++a) {
      for (int b = 0; b < inst.n; ++b) {
        if (a != b) collect_paths(host, dt, a + 1, b + 1, trail, inst.paths[a * inst.n + b]);
      }
    }
  }
  return inst;
}

struct RoutingValue {
  std::int64_t value = kInf;
  bool exact = true;
};

// Minimum over shortest-path choices of the maximum host-edge load, looking
// only for values strictly below `below`.
class RoutingSearch {
 public:
  explicit RoutingSearch(const Instance& inst) : inst_(inst), load_(inst.host_edges, 0) {}

  RoutingValue run(const std::vector<int>& img, std::int64_t below) {
    choices_.clear();
    long double product = 1;
    for (const auto& [u, v] : inst_.edges) {
      choices_.push_back(&inst_.routes(img[u], img[v]));
      product *= static_cast<long double>(choices_.back()->size());
    }
    std::sort(choices_.begin(), choices_.end(),
              [](const auto* x, const auto* y) { return x->size() < y->size(); });
    if (product > static_cast<long double>(inst_.routing_cap)) {
      std::fill(load_.begin(), load_.end(), 0);
      int worst = 0;
      for (const auto* c : choices_) {
        for (int e : c->front()) worst = std::max(worst, ++load_[e]);
      }
      return {worst, false};
    }
    best_ = below;
    std::fill(load_.begin(), load_.end(), 0);
    descend(0, 0);
    return {best_, true};
  }

 private:
  void descend(std::size_t i, int current) {
    if (i == choices_.size()) {
      best_ = current;
      return;
    }
    for (const auto& path : *choices_[i]) {
      int worst = current;
      for (int e : path) worst = std::max(worst, ++load_[e]);
      if (worst < best_) descend(i + 1, worst);
      for (int e : path) --load_[e];
    }
  }

  const Instance& inst_;
  std::vector<const std::vector<std::vector<int>>*> choices_;
  std::vector<int> load_;
  std::int64_t best_ = kInf;
};

RoutingValue evaluate_full(const Instance& inst, const std::vector<int>& img, RoutingSearch& routing,
                           std::int64_t below) {
  switch (inst.metric) {
    case Metric::dilation: {
      std::int64_t worst = 0;
      for (const auto& [u, v] : inst.edges) worst = std::max<std::int64_t>(worst, inst.d(img[u], img[v]));
      return {worst, true};
    }
    case Metric::wirelength: {
      std::int64_t total = 0;
      for (const auto& [u, v] : inst.edges) total += inst.d(img[u], img[v]);
      return {total, true};
    }
    case Metric::congestion:
      return routing.run(img, below);
  }
  return {};
}

struct TaskResult {
  std::int64_t best = kInf;
  std::vector<int> witness;
  std::uint64_t leaves = 0;
  bool exact = true;
};

// Depth-first assignment of guest vertices 0, 1, ... in order, host images
// tried in increasing order, so the first optimum met is the least bijection.
class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, std::int64_t ceiling)
      : inst_(inst), routing_(inst), img_(inst.n, -1), forced_(inst.host_edges, 0) {
    result_.best = ceiling;
  }

  TaskResult run(const std::vector<int>& prefix) {
    std::uint32_t used = 0;
    std::int64_t partial = 0;
    for (std::size_t g = 0; g < prefix.size(); ++g) {
      partial = place(static_cast<int>(g), prefix[g], partial);
      used |= 1u << prefix[g];
      if (pruned(static_cast<int>(g), partial)) return result_;
    }
    descend(static_cast<int>(prefix.size()), used, partial);
    return result_;
  }

 private:
  // Assigns g -> h and returns the new partial cost. For congestion the
  // partial cost is the worst load from edges with a unique shortest path.
  std::int64_t place(int g, int h, std::int64_t partial) {
    img_[g] = h;
    for (int x : inst_.earlier[g]) {
      switch (inst_.metric) {
        case Metric::dilation: partial = std::max<std::int64_t>(partial, inst_.d(img_[x], h)); break;
        case Metric::wirelength: partial += inst_.d(img_[x], h); break;
        case Metric::congestion: {
          const auto& r = inst_.routes(img_[x], h);
          if (r.size() == 1) {
            for (int e : r.front()) partial = std::max<std::int64_t>(partial, ++forced_[e]);
          }
          break;
        }
      }
    }
    return partial;
  }

  void unplace(int g) {
    if (inst_.metric == Metric::congestion) {
      for (int x : inst_.earlier[g]) {
        const auto& r = inst_.routes(img_[x], img_[g]);
        if (r.size() == 1) {
          for (int e : r.front()) --forced_[e];
        }
      }
    }
    img_[g] = -1;
  }

  bool pruned(int g, std::int64_t partial) const {
    const std::int64_t floor =
        inst_.metric == Metric::wirelength ? partial + inst_.edges_after[g] : partial;
    return floor >= result_.best;
  }

  void descend(int g, std::uint32_t used, std::int64_t partial) {
    if (g == inst_.n) {
      ++result_.leaves;
      const auto value = evaluate_full(inst_, img_, routing_, result_.best);
      result_.exact &= value.exact;
      if (value.value < result_.best) {
        result_.best = value.value;
        result_.witness = img_;
      }
      return;
    }
    for (int h = 0; h < inst_.n; ++h) {
      if (used & (1u << h)) continue;
      const std::int64_t next = place(g, h, partial);
      if (!pruned(g, next)) descend(g + 1, used | (1u << h), next);
      unplace(g);
    }
  }

  const Instance& inst_;
  RoutingSearch routing_;
  std::vector<int> img_;
  std::vector<int> forced_;
  TaskResult result_;
};

OracleResult finish(Metric metric, std::int64_t optimum, const std::vector<int>& witness,
                    std::uint64_t examined, bool exact) {
  OracleResult r;
  r.metric = metric;
  r.optimum = optimum;
  r.witness_vmap.resize(witness.size());
  std::transform(witness.begin(), witness.end(), r.witness_vmap.begin(), [](int h) { return h + 1; });
  r.bijections_examined = examined;
  r.exact = exact;
  return r;
}

}  // namespace

OracleResult exact_metric(Metric metric, const Graph& guest, const Graph& host,
                          const OracleOptions& opts) {
  const Instance inst = make_instance(metric, guest, host, opts);
  const int n = inst.n;

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  RoutingSearch seed_routing(inst);
  const std::int64_t ceiling = evaluate_full(inst, identity, seed_routing, kInf).value + 1;

  std::vector<std::vector<int>> prefixes;
  if (n == 1) {
    prefixes.push_back({0});
  } else {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) prefixes.push_back({a, b});
      }
    }
  }

  std::vector<TaskResult> results(prefixes.size());
  const long long count = static_cast<long long>(prefixes.size());
#ifdef _OPENMP
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (long long t = 0; t < count; ++t) {
    BranchAndBound search(inst, ceiling);
    results[t] = search.run(prefixes[t]);
  }

  std::size_t winner = results.size();
  std::uint64_t examined = 0;
  bool exact = true;
  for (std::size_t t = 0; t < results.size(); ++t) {
    examined += results[t].leaves;
    exact &= results[t].exact;
    if (!results[t].witness.empty() &&
        (winner == results.size() || results[t].best < results[winner].best)) {
      winner = t;
    }
  }
  // The identity bijection lies under the ceiling, so some task always finds a witness.
  return finish(metric, results[winner].best, results[winner].witness, examined, exact);
}

OracleResult exact_dilation(const Graph& guest, const Graph& host, const OracleOptions& opts) {
  return exact_metric(Metric::dilation, guest, host, opts);
}

OracleResult exact_wirelength(const Graph& guest, const Graph& host, const OracleOptions& opts) {
  return exact_metric(Metric::wirelength, guest, host, opts);
}

OracleResult exact_congestion(const Graph& guest, const Graph& host, const OracleOptions& opts) {
  return exact_metric(Metric::congestion, guest, host, opts);
}

OracleResult exact_metric_serial(Metric metric, const Graph& guest, const Graph& host,
                                 const OracleOptions& opts) {
  const Instance inst = make_instance(metric, guest, host, opts);
  RoutingSearch routing(inst);
  std::vector<int> perm(inst.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = kInf;
  std::vector<int> witness;
  std::uint64_t examined = 0;
  bool exact = true;
  do {
    ++examined;
    const auto value = evaluate_full(inst, perm, routing, kInf);
    exact &= value.exact;
    if (value.value < best) {
      best = value.value;
      witness = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return finish(metric, best, witness, examined, exact);
}

}  // namespace wheelembed

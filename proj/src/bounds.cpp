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

#include "wheelembed/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wheelembed/families.hpp"

namespace wheelembed {

namespace {

Vertex require_universal(const Graph& guest, const Graph& host) {
  if (guest.order() != host.order()) {
    throw std::invalid_argument("guest and host orders differ (" + std::to_string(guest.order()) +
                                " vs " + std::to_string(host.order()) + ")");
  }
  const auto hub = universal_vertex(guest);
  if (!hub) {
    throw std::invalid_argument("guest '" + guest.name() +
                                "' has no universal vertex; the bound needs domination number 1");
  }
  return *hub;
}

void settle(BoundReport& report, std::int64_t achieved) {
  report.achieved = achieved;
  report.sharp = achieved == report.bound;
}

}  // namespace

BoundReport dilation_lower_bound(const Graph& guest, const Graph& host) {
  require_universal(guest, host);
  const auto dist = all_pairs_distances(host);
  const auto rd = radius_diameter(host, dist);
  BoundReport report;
  report.metric = Metric::dilation;
  report.bound = rd.radius;
  report.notes = "radius " + std::to_string(rd.radius) + ", diameter " + std::to_string(rd.diameter);
  if (rd.radius == rd.diameter) {
    std::vector<Vertex> identity(host.order());
    std::iota(identity.begin(), identity.end(), 1);
    auto emb = route_shortest(guest, host, std::move(identity));
    settle(report, evaluate(emb).max_dilation);
    report.witness = std::move(emb);
    report.notes += "; radius equals diameter, so every embedding has dilation exactly " +
                    std::to_string(rd.diameter);
  }
  return report;
}

BoundReport congestion_lower_bound(const Graph& guest, const Graph& host) {
  require_universal(guest, host);
  const int delta = max_degree(host);
  if (delta == 0) throw std::invalid_argument("host has no edges");
  BoundReport report;
  report.metric = Metric::congestion;
  report.bound = (host.order() - 1 + delta - 1) / delta;
  report.notes = "n - 1 = " + std::to_string(host.order() - 1) + ", max degree " +
                 std::to_string(delta);
  return report;
}

BoundReport wirelength_lower_bound(RimKind kind, const Graph& host, SearchBudget budget) {
  if (host.order() < 4) throw std::invalid_argument("wirelength bound needs a host with n >= 4");
  const auto info = status_and_median(host);  // throws on a disconnected host
  const int n = host.order();
  BoundReport report;
  report.metric = Metric::wirelength;
  report.bound = (kind == RimKind::wheel ? n - 1 : n - 2) + info.delta;
  report.notes = "median status " + std::to_string(info.delta);

  bool unsure = false;
  for (Vertex u : info.medians) {
    try {
      auto emb = kind == RimKind::wheel ? embed_wheel_via_median(host, u, budget)
                                        : embed_fan_via_median(host, u, budget);
      settle(report, evaluate(emb).wirelength);
      report.witness = std::move(emb);
      report.notes += "; hub at median " + std::to_string(u);
      return report;
    } catch (const SearchInconclusive&) {
      unsure = true;
    } catch (const EmbeddingError&) {
    }
  }
  const char* structure = kind == RimKind::wheel ? "hamiltonian cycle" : "hamiltonian path";
  if (unsure) {
    report.notes += std::string("; search budget exhausted before a ") + structure +
                    " was found or ruled out";
    return report;
  }
  report.sharp = false;
  report.notes += std::string("; no median u leaves H - u with a ") + structure +
                  ", so the bound is not attained";
  return report;
}

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::dil_hypertree: return "dil-hypertree";
    case TheoremId::dil_sibling: return "dil-sibling";
    case TheoremId::dil_xtree: return "dil-xtree";
    case TheoremId::ec_windmill: return "ec-windmill";
    case TheoremId::wl_wheel: return "wl-wheel";
    case TheoremId::wl_fan: return "wl-fan";
  }
  return "unknown";
}

TheoremId parse_theorem(std::string_view name) {
  for (auto id : {TheoremId::dil_hypertree, TheoremId::dil_sibling, TheoremId::dil_xtree,
                  TheoremId::ec_windmill, TheoremId::wl_wheel, TheoremId::wl_fan}) {
    if (theorem_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown theorem id '" + std::string(name) + "'");
}

BoundReport verify_theorem(const TheoremInstance& instance, SearchBudget budget) {
  switch (instance.id) {
    case TheoremId::dil_hypertree:
    case TheoremId::dil_sibling:
    case TheoremId::dil_xtree: {
      const int l = instance.param;
      const TreeHostKind host_kind = instance.id == TheoremId::dil_hypertree ? TreeHostKind::hypertree
                                     : instance.id == TheoremId::dil_sibling ? TreeHostKind::sibling_tree
                                                                             : TreeHostKind::x_tree;
      auto emb = embed_wheel_like_into_tree_host(instance.guest, l, host_kind);
      BoundReport report = dilation_lower_bound(emb.guest, emb.host);
      const int achieved = evaluate(emb).max_dilation;
      report.witness = std::move(emb);
      settle(report, achieved);
      if (report.bound != l - 1) {
        report.notes += "; radius differs from the claimed l - 1 = " + std::to_string(l - 1);
      }
      return report;
    }
    case TheoremId::ec_windmill: {
      const int n = instance.param;
      auto emb = embed_windmill_into_circulant(n);
      BoundReport report = congestion_lower_bound(emb.guest, emb.host);
      const int achieved = evaluate(emb).max_congestion;
      report.witness = std::move(emb);
      settle(report, achieved);
      if (achieved != (1 << (n - 2))) {
        report.notes += "; construction differs from the claimed 2^(n-2) = " +
                        std::to_string(1 << (n - 2));
      }
      return report;
    }
    case TheoremId::wl_wheel:
    case TheoremId::wl_fan:
      if (!instance.host) throw std::invalid_argument("wirelength theorems need a host graph");
      return wirelength_lower_bound(
          instance.id == TheoremId::wl_wheel ? RimKind::wheel : RimKind::fan, *instance.host,
          budget);
  }
  throw std::invalid_argument("unhandled theorem id");
}

}  // namespace wheelembed

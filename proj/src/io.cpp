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

#include "wheelembed/io.hpp"

#include <fstream>
#include <sstream>

namespace wheelembed {

namespace {

Json vertex_pair(const std::pair<Vertex, Vertex>& p) { return Json::array({p.first, p.second}); }

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  return Json{{"name", g.name()}, {"order", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw GraphError("graph JSON must be an object");
    const int order = j.at("order").get<int>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("each edge must be a [u, v] pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return build_graph(order, edges, j.value("name", std::string{}));
  } catch (const Json::exception& ex) {
    throw GraphError(std::string("malformed graph JSON: ") + ex.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  try {
    return graph_from_json(Json::parse(in));
  } catch (const Json::parse_error& ex) {
    throw GraphError("'" + path + "' is not valid JSON: " + ex.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string edge_key(Vertex a, Vertex b) {
  const Edge e = make_edge(a, b);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Json to_json(const EmbeddingMap& emb) {
  Json routes = Json::object();
  const auto& edges = emb.guest.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    routes[edge_key(edges[i].u, edges[i].v)] = emb.routes[i];
  }
  return Json{{"vmap", emb.vmap}, {"routes", std::move(routes)}};
}

EmbeddingMap embedding_from_json(const Graph& guest, const Graph& host, const Json& j) {
  EmbeddingMap emb{guest, host, {}, {}};
  try {
    emb.vmap = j.at("vmap").get<std::vector<Vertex>>();
    const auto& routes = j.at("routes");
    for (const Edge& e : guest.edges()) {
      const auto key = edge_key(e.u, e.v);
      if (!routes.contains(key)) throw EmbeddingError("embedding JSON has no route for " + key);
      emb.routes.push_back(routes.at(key).get<std::vector<Vertex>>());
    }
    if (routes.size() != guest.size()) throw EmbeddingError("embedding JSON has extra routes");
  } catch (const Json::exception& ex) {
    throw EmbeddingError(std::string("malformed embedding JSON: ") + ex.what());
  }
  validate(emb);
  return emb;
}

Json to_json(const EmbeddingMetrics& m, const EmbeddingMap& emb) {
  Json dil = Json::object();
  const auto& guest_edges = emb.guest.edges();
  for (std::size_t i = 0; i < guest_edges.size(); ++i) {
    dil[edge_key(guest_edges[i].u, guest_edges[i].v)] = m.dilation[i];
  }
  Json cong = Json::object();
  const auto& host_edges = emb.host.edges();
  for (std::size_t i = 0; i < host_edges.size(); ++i) {
    cong[edge_key(host_edges[i].u, host_edges[i].v)] = m.congestion[i];
  }
  const auto ratio = expansion(emb);
  return Json{{"guest", emb.guest.name()},
              {"host", emb.host.name()},
              {"max_dilation", m.max_dilation},
              {"max_congestion", m.max_congestion},
              {"wirelength", m.wirelength},
              {"congestion_sum", m.congestion_sum},
              {"expansion", std::to_string(ratio.num) + "/" + std::to_string(ratio.den)},
              {"dilation", std::move(dil)},
              {"congestion", std::move(cong)}};
}

Json to_json(const BoundReport& r) {
  Json j{{"metric", metric_name(r.metric)},
         {"bound", r.bound},
         {"achieved", optional_int(r.achieved)},
         {"sharp", r.sharp ? Json(*r.sharp) : Json(nullptr)},
         {"notes", r.notes}};
  if (r.witness) {
    j["guest"] = r.witness->guest.name();
    j["host"] = r.witness->host.name();
    j["witness"] = to_json(*r.witness);
  }
  return j;
}

Json to_json(const FaultSpec& f) {
  Json edges = Json::array();
  for (const Edge& e : f.edges) edges.push_back(Json::array({e.u, e.v}));
  return Json{{"vertices", f.vertices}, {"edges", std::move(edges)}};
}

Json to_json(const SearchResult& r, std::string_view query) {
  return Json{{"query", query},
              {"verdict", verdict_name(r.verdict)},
              {"witness", r.verdict == Verdict::yes ? Json(r.witness) : Json(nullptr)},
              {"nodes", r.nodes}};
}

Json to_json(const HamiltonicityReport& r, std::string_view query, int f) {
  return Json{{"query", query},
              {"f", f},
              {"verdict", verdict_name(r.verdict)},
              {"witness", r.witness.empty() ? Json(nullptr) : Json(r.witness)},
              {"failing_fault", r.failing_fault ? to_json(*r.failing_fault) : Json(nullptr)},
              {"failing_pair", r.failing_pair ? vertex_pair(*r.failing_pair) : Json(nullptr)},
              {"fault_sets_checked", r.fault_sets_checked},
              {"notes", r.notes}};
}

Json to_json(const OracleResult& r) {
  return Json{{"metric", metric_name(r.metric)},
              {"optimum", r.optimum},
              {"witness_vmap", r.witness_vmap},
              {"bijections_examined", r.bijections_examined},
              {"exact", r.exact}};
}

std::string export_dot(const Graph& g, const EmbeddingMetrics* metrics) {
  std::ostringstream out;
  out << "graph \"" << g.name() << "\" {\n";
  for (Vertex v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << "  " << edges[i].u << " -- " << edges[i].v;
    if (metrics) out << " [label=\"" << metrics->congestion.at(i) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wheelembed

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

#include <json.hpp>

#include "wheelembed/bounds.hpp"
#include "wheelembed/embedding.hpp"
#include "wheelembed/graph.hpp"
#include "wheelembed/hamiltonian.hpp"
#include "wheelembed/oracle.hpp"

namespace wheelembed {

using Json = nlohmann::ordered_json;

// Graph interchange format: {"name": str, "order": int, "edges": [[u, v], ...]}.
Json to_json(const Graph& g);
/// Throws GraphError on schema violations or invalid graphs.
Graph graph_from_json(const Json& j);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Canonical route key "u-v" with u < v.
std::string edge_key(Vertex a, Vertex b);

// Embedding format: {"vmap": [f(1), f(2), ...], "routes": {"u-v": [host path], ...}}.
Json to_json(const EmbeddingMap& emb);
/// Rebuilds and validates an embedding of `guest` into `host`.
EmbeddingMap embedding_from_json(const Graph& guest, const Graph& host, const Json& j);

Json to_json(const EmbeddingMetrics& m, const EmbeddingMap& emb);
Json to_json(const BoundReport& r);
Json to_json(const FaultSpec& f);
Json to_json(const SearchResult& r, std::string_view query);
Json to_json(const HamiltonicityReport& r, std::string_view query, int f);
Json to_json(const OracleResult& r);

/// Graphviz text with vertices in id order; when `metrics` is given, host
/// edges are labelled with their congestion.
std::string export_dot(const Graph& g, const EmbeddingMetrics* metrics = nullptr);

}  // namespace wheelembed

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

#include "wheelembed/families.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

namespace wheelembed {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& message) {
  if (!ok) throw GraphError(message);
}

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

EdgeList heap_tree_edges(int levels) {
  EdgeList edges;
  const int n = (1 << levels) - 1;
  for (Vertex x = 2; x <= n; ++x) edges.emplace_back(x / 2, x);
  return edges;
}

void check_levels(int levels, const char* family) {
  require(levels >= 2 && levels <= 24,
          std::string(family) + " needs 2 <= levels <= 24, got " + std::to_string(levels));
}

}  // namespace

Graph wheel(int n) {
  require(n >= 4, "wheel needs n >= 4, got " + std::to_string(n));
  EdgeList edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  for (Vertex v = 2; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 2);
  return build_graph(n, edges, "W_" + std::to_string(n));
}

Graph fan(int n) {
  require(n >= 3, "fan needs n >= 3, got " + std::to_string(n));
  EdgeList edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  for (Vertex v = 2; v < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges, "F_" + std::to_string(n));
}

Graph friendship(int k) {
  require(k >= 1, "friendship needs k >= 1, got " + std::to_string(k));
  EdgeList edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(1, 2 * i);
    edges.emplace_back(1, 2 * i + 1);
    edges.emplace_back(2 * i, 2 * i + 1);
  }
  return build_graph(2 * k + 1, edges, "T_" + std::to_string(k));
}

Graph windmill(int k) {
  require(k >= 2, "windmill needs k >= 2, got " + std::to_string(k));
  const int n = 2 * k;
  EdgeList edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  for (Vertex v = 2; v <= n - 2; v += 2) edges.emplace_back(v, v + 1);
  return build_graph(n, edges, "WM_" + std::to_string(k));
}

Graph star(int n) {
  require(n >= 2, "star needs n >= 2, got " + std::to_string(n));
  EdgeList edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return build_graph(n, edges, "S_" + std::to_string(n));
}

Graph complete_binary_tree(int levels) {
  check_levels(levels, "complete_binary_tree");
  return build_graph((1 << levels) - 1, heap_tree_edges(levels),
                     "T(" + std::to_string(levels) + ")");
}

Graph hypertree(int levels) {
  check_levels(levels, "hypertree");
  EdgeList edges = heap_tree_edges(levels);
  for (int level = 2; level <= levels; ++level) {
    const int first = 1 << (level - 1);
    const int gap = 1 << (level - 2);
    for (Vertex x = first; x < first + gap; ++x) edges.emplace_back(x, x + gap);
  }
  return build_graph((1 << levels) - 1, edges, "HT(" + std::to_string(levels) + ")");
}

Graph sibling_tree(int levels) {
  check_levels(levels, "sibling_tree");
  EdgeList edges = heap_tree_edges(levels);
  const int internal = (1 << (levels - 1)) - 1;
  for (Vertex x = 1; x <= internal; ++x) edges.emplace_back(2 * x, 2 * x + 1);
  return build_graph((1 << levels) - 1, edges, "ST(" + std::to_string(levels) + ")");
}

Graph x_tree(int levels) {
  check_levels(levels, "x_tree");
  EdgeList edges = heap_tree_edges(levels);
  for (int level = 2; level <= levels; ++level) {
    const int first = 1 << (level - 1);
    const int last = (1 << level) - 1;
    for (Vertex x = first; x < last; ++x) edges.emplace_back(x, x + 1);
  }
  return build_graph((1 << levels) - 1, edges, "XT(" + std::to_string(levels) + ")");
}

Graph circulant(int n, const std::vector<int>& jumps) {
  require(n >= 3, "circulant needs n >= 3, got " + std::to_string(n));
  require(!jumps.empty(), "circulant needs a nonempty jump set");
  std::set<int> jump_set(jumps.begin(), jumps.end());
  require(jump_set.size() == jumps.size(), "circulant jump set has repeated values");
  std::set<std::pair<Vertex, Vertex>> unique;
  for (int s : jump_set) {
    require(s >= 1 && s <= n / 2, "circulant jump " + std::to_string(s) + " outside 1.." +
                                      std::to_string(n / 2));
    for (int i = 0; i < n; ++i) {
      const int j = (i + s) % n;
      unique.insert({std::min(i, j) + 1, std::max(i, j) + 1});
    }
  }
  EdgeList edges(unique.begin(), unique.end());
  std::vector<int> sorted(jump_set.begin(), jump_set.end());
  return build_graph(n, edges, "G(" + std::to_string(n) + ";{" + join(sorted, ',') + "})");
}

Graph generalized_petersen(int n, int m) {
  require(n >= 3, "generalized_petersen needs n >= 3, got " + std::to_string(n));
  require(m >= 1 && 2 * m < n, "generalized_petersen needs 1 <= m < n/2, got m=" + std::to_string(m));
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i + 1, (i + 1) % n + 1);
    edges.emplace_back(n + i + 1, n + (i + m) % n + 1);
    edges.emplace_back(i + 1, n + i + 1);
  }
  return build_graph(2 * n, edges,
                     "P(" + std::to_string(n) + "," + std::to_string(m) + ")");
}

Graph torus(const std::vector<int>& dims) {
  require(!dims.empty(), "torus needs at least one dimension");
  long long order = 1;
  for (int d : dims) {
    require(d >= 3, "torus dimensions must be >= 3, got " + std::to_string(d));
    order *= d;
    require(order <= (1 << 20), "torus is too large");
  }
  const int n = static_cast<int>(order);
  EdgeList edges;
  std::vector<int> coord(dims.size(), 0);
  for (int id = 0; id < n; ++id) {
    int stride = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const int next = coord[k] + 1 == dims[k] ? 0 : coord[k] + 1;
      const int other = id + (next - coord[k]) * stride;
      edges.emplace_back(id + 1, other + 1);
      stride *= dims[k];
    }
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (++coord[k] < dims[k]) break;
      coord[k] = 0;
    }
  }
  return build_graph(n, edges, "Torus(" + join(dims, 'x') + ")");
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1, got " + std::to_string(n));
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges, "P_" + std::to_string(n));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return build_graph(n, edges, "C_" + std::to_string(n));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete needs n >= 1, got " + std::to_string(n));
  EdgeList edges;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  }
  return build_graph(n, edges, "K_" + std::to_string(n));
}

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 15> kFamilyNames{{
    {FamilyKind::wheel, "wheel"},
    {FamilyKind::fan, "fan"},
    {FamilyKind::friendship, "friendship"},
    {FamilyKind::windmill, "windmill"},
    {FamilyKind::star, "star"},
    {FamilyKind::complete_binary_tree, "complete_binary_tree"},
    {FamilyKind::hypertree, "hypertree"},
    {FamilyKind::sibling_tree, "sibling_tree"},
    {FamilyKind::x_tree, "x_tree"},
    {FamilyKind::circulant, "circulant"},
    {FamilyKind::generalized_petersen, "generalized_petersen"},
    {FamilyKind::torus, "torus"},
    {FamilyKind::path, "path"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::complete, "complete"},
}};

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (const auto& [k, known] : kFamilyNames) {
    if (known == normalized) return k;
  }
  throw GraphError("unknown family '" + std::string(name) + "'");
}

Graph make_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::string name(family_name(spec.kind));
  auto exactly = [&](std::size_t count) {
    require(p.size() == count, name + " takes " + std::to_string(count) + " parameter(s), got " +
                                   std::to_string(p.size()));
  };
  switch (spec.kind) {
    case FamilyKind::wheel: exactly(1); return wheel(p[0]);
    case FamilyKind::fan: exactly(1); return fan(p[0]);
    case FamilyKind::friendship: exactly(1); return friendship(p[0]);
    case FamilyKind::windmill: exactly(1); return windmill(p[0]);
    case FamilyKind::star: exactly(1); return star(p[0]);
    case FamilyKind::complete_binary_tree: exactly(1); return complete_binary_tree(p[0]);
    case FamilyKind::hypertree: exactly(1); return hypertree(p[0]);
    case FamilyKind::sibling_tree: exactly(1); return sibling_tree(p[0]);
    case FamilyKind::x_tree: exactly(1); return x_tree(p[0]);
    case FamilyKind::circulant:
      require(p.size() >= 2, "circulant takes n followed by at least one jump");
      return circulant(p[0], std::vector<int>(p.begin() + 1, p.end()));
    case FamilyKind::generalized_petersen: exactly(2); return generalized_petersen(p[0], p[1]);
    case FamilyKind::torus: return torus(p);
    case FamilyKind::path: exactly(1); return path_graph(p[0]);
    case FamilyKind::cycle: exactly(1); return cycle_graph(p[0]);
    case FamilyKind::complete: exactly(1); return complete_graph(p[0]);
  }
  throw GraphError("unhandled family");
}

}  // namespace wheelembed

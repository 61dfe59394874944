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

#include <string>
#include <string_view>
#include <vector>

#include "wheelembed/graph.hpp"

namespace wheelembed {

// Guest families. Vertex 1 is always the hub; the rim runs 2, 3, ..., n.

/// W_n: hub 1 plus the rim cycle 2-3-...-n-2. Requires n >= 4.
Graph wheel(int n);
/// F_n: hub 1 plus the rim path 2-3-...-n. Requires n >= 3.
Graph fan(int n);
/// T_k: k triangles {1, 2i, 2i+1} sharing the hub. Order 2k+1.
Graph friendship(int k);
/// WM_k: T_k with vertex 2k+1 deleted. Order 2k; vertex 2k is the pendant.
Graph windmill(int k);
/// S_n = K_{1,n-1} with hub 1.
Graph star(int n);

// Tree hosts. Vertices carry heap labels: root 1, children of x are 2x, 2x+1.

Graph complete_binary_tree(int levels);
/// HT(l): same-level vertices whose labels differ by 2^(i-2) on level i are joined.
Graph hypertree(int levels);
/// ST(l): children 2x and 2x+1 of every internal x are joined.
Graph sibling_tree(int levels);
/// XT(l): consecutive labels on each level are joined.
Graph x_tree(int levels);

/// G(n; +-S) on 1..n: vertex i is adjacent to i +- s (mod n) for s in S.
/// S must be a nonempty subset of 1..floor(n/2).
Graph circulant(int n, const std::vector<int>& jumps);
/// P(n, m): outer cycle 1..n, inner vertices n+1..2n with jump m, spokes i -- n+i.
Graph generalized_petersen(int n, int m);
/// Cartesian product of cycles; the first dimension varies fastest in the labels.
Graph torus(const std::vector<int>& dims);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

enum class FamilyKind {
  wheel,
  fan,
  friendship,
  windmill,
  star,
  complete_binary_tree,
  hypertree,
  sibling_tree,
  x_tree,
  circulant,
  generalized_petersen,
  torus,
  path,
  cycle,
  complete,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> params;
};

std::string_view family_name(FamilyKind kind);
/// Parses names such as "hypertree" or "x_tree" (hyphens are accepted too).
FamilyKind parse_family_kind(std::string_view name);
/// Checks parameter counts and builds the graph; throws GraphError on bad input.
Graph make_family(const FamilySpec& spec);

}  // namespace wheelembed

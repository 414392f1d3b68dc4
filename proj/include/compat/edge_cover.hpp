//  Copyright 2026 The compat-frames Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef COMPAT_EDGE_COVER_HPP_
#define COMPAT_EDGE_COVER_HPP_

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "compat/error.hpp"
#include "compat/lattice.hpp"

namespace compat {

using Edge = std::pair<int, int>;  // (left index, right index)

struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<Edge> edges;
};

/// Join-irreducibles on the left, meet-irreducibles on the right, an edge
/// wherever the left element is not below the right one.
struct IrreducibleGraph {
  ElementList V;
  ElementList Lambda;
  BipartiteGraph graph;
};

inline IrreducibleGraph irreducible_graph(const FiniteLattice& L) {
  IrreducibleGraph g{join_irreducibles(L), meet_irreducibles(L), {}};
  g.graph.left = static_cast<int>(g.V.size());
  g.graph.right = static_cast<int>(g.Lambda.size());
  for (int i = 0; i < g.graph.left; ++i)
    for (int j = 0; j < g.graph.right; ++j)
      if (!L.leq(g.V[i], g.Lambda[j])) g.graph.edges.emplace_back(i, j);
  return g;
}

/// Maximum matching by repeated augmenting paths. Returns edge indices.
inline std::vector<int> max_matching(const BipartiteGraph& G) {
  std::vector<std::vector<int>> adj(G.left);  // edge indices per left vertex
  for (int e = 0; e < static_cast<int>(G.edges.size()); ++e) adj[G.edges[e].first].push_back(e);
  std::vector<int> match_right(G.right, -1);  // edge index matched at each right vertex
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int u) {
    for (int e : adj[u]) {
      const int v = G.edges[e].second;
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || augment(G.edges[match_right[v]].first)) {
        match_right[v] = e;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < G.left; ++u) {
    seen.assign(G.right, 0);
    augment(u);
  }
  std::vector<int> out;
  for (int e : match_right)
    if (e >= 0) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

/// A minimum edge cover: a maximum matching plus one edge per unmatched vertex.
/// Its size is left + right - |matching|.
inline std::vector<Edge> min_edge_cover(const BipartiteGraph& G) {
  std::vector<int> first_left(G.left, -1), first_right(G.right, -1);
  for (int e = 0; e < static_cast<int>(G.edges.size()); ++e) {
    auto [u, v] = G.edges[e];
    if (first_left[u] < 0) first_left[u] = e;
    if (first_right[v] < 0) first_right[v] = e;
  }
  for (int u = 0; u < G.left; ++u)
    if (first_left[u] < 0) throw Error(ErrorKind::IsolatedVertex, "left vertex " + std::to_string(u));
  for (int v = 0; v < G.right; ++v)
    if (first_right[v] < 0) throw Error(ErrorKind::IsolatedVertex, "right vertex " + std::to_string(v));

  const auto matching = max_matching(G);
  std::vector<char> covered_left(G.left, 0), covered_right(G.right, 0);
  std::vector<int> chosen = matching;
  for (int e : matching) {
    covered_left[G.edges[e].first] = 1;
    covered_right[G.edges[e].second] = 1;
  }
  for (int u = 0; u < G.left; ++u)
    if (!covered_left[u]) chosen.push_back(first_left[u]);
  for (int v = 0; v < G.right; ++v)
    if (!covered_right[v]) chosen.push_back(first_right[v]);
  std::sort(chosen.begin(), chosen.end());

  std::vector<Edge> cover;
  for (int e : chosen) cover.push_back(G.edges[e]);
  // every unmatched vertex adds exactly one edge, and no edge joins two unmatched vertices
  if (static_cast<int>(cover.size()) != G.left + G.right - static_cast<int>(matching.size())) {
    throw Error(ErrorKind::InvalidInput, "edge cover size disagrees with the matching bound");
  }
  return cover;
}

inline bool covers_all_vertices(const BipartiteGraph& G, const std::vector<Edge>& cover) {
  std::vector<char> l(G.left, 0), r(G.right, 0);
  for (auto [u, v] : cover) {
    l[u] = 1;
    r[v] = 1;
  }
  return std::all_of(l.begin(), l.end(), [](char c) { return c != 0; }) &&
         std::all_of(r.begin(), r.end(), [](char c) { return c != 0; });
}

}  // namespace compat

#endif  // COMPAT_EDGE_COVER_HPP_

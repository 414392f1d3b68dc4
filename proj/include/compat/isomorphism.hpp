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

#ifndef COMPAT_ISOMORPHISM_HPP_
#define COMPAT_ISOMORPHISM_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "compat/lattice.hpp"

namespace compat {

/// A bijection given as image[i] for every point i of the source.
using Bijection = std::vector<int>;

namespace detail {

// Structures for isomorphism search: n points, any number of n*n boolean relations,
// and a per-point invariant that every isomorphism must preserve.
struct RelStructure {
  int n = 0;
  std::vector<const std::vector<char>*> relations;
  std::vector<std::vector<int>> invariant;
};

inline std::optional<Bijection> find_isomorphism(const RelStructure& a, const RelStructure& b) {
  if (a.n != b.n || a.relations.size() != b.relations.size()) return std::nullopt;
  const int n = a.n;
  {
    auto ia = a.invariant, ib = b.invariant;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return std::nullopt;
  }
  // Assign the points of `a` in order of increasing class size.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto class_size = [&](int i) {
    return std::count(a.invariant.begin(), a.invariant.end(), a.invariant[i]);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return class_size(x) < class_size(y); });

  Bijection image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == n) return true;
    const int x = order[depth];
    for (int y = 0; y < n; ++y) {
      if (used[y] || a.invariant[x] != b.invariant[y]) continue;
      bool ok = true;
      for (int d = 0; d <= depth && ok; ++d) {
        const int x2 = order[d];
        const int y2 = (d == depth) ? y : image[x2];
        for (std::size_t r = 0; r < a.relations.size() && ok; ++r) {
          const auto& ra = *a.relations[r];
          const auto& rb = *b.relations[r];
          ok = ra[x * n + x2] == rb[y * n + y2] && ra[x2 * n + x] == rb[y2 * n + y];
        }
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (rec(depth + 1)) return true;
      image[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

inline std::vector<int> heights(const FiniteLattice& L) {
  // Longest chain from the bottom; indices are not assumed to be a linear extension.
  const int n = L.size();
  std::vector<int> h(n, -1);
  std::function<int(int)> height = [&](int a) -> int {
    if (h[a] >= 0) return h[a];
    int best = 0;
    for (int b : L.lower_covers(a)) best = std::max(best, height(b) + 1);
    return h[a] = best;
  };
  for (int a = 0; a < n; ++a) height(a);
  return h;
}

inline std::vector<std::vector<int>> lattice_invariants(const FiniteLattice& L) {
  const int n = L.size();
  const auto h = heights(L);
  std::vector<std::vector<int>> inv(n);
  for (int a = 0; a < n; ++a) {
    int down = 0, up = 0;
    for (int b = 0; b < n; ++b) {
      down += L.leq(b, a);
      up += L.leq(a, b);
    }
    inv[a] = {h[a], down, up, static_cast<int>(L.lower_covers(a).size()),
              static_cast<int>(L.upper_covers(a).size())};
  }
  return inv;
}

}  // namespace detail

/// An order isomorphism L1 -> L2, or nothing. Candidates are pruned by height,
/// principal up/down-set sizes and cover degrees.
inline std::optional<Bijection> lattices_isomorphic(const FiniteLattice& L1,
                                                    const FiniteLattice& L2) {
  if (L1.size() != L2.size()) return std::nullopt;
  detail::RelStructure a{L1.size(), {&L1.order_table()}, detail::lattice_invariants(L1)};
  detail::RelStructure b{L2.size(), {&L2.order_table()}, detail::lattice_invariants(L2)};
  return detail::find_isomorphism(a, b);
}

/// Canonical relabeling: elements sorted by invariant (so bottom first, top last, and
/// the labeling is a linear extension), ties broken by the lexicographically least
/// order-table code. Isomorphic lattices get identical canonical forms.
struct CanonicalForm {
  std::vector<char> code;     // relabeled order table, row-major
  std::vector<int> position;  // position[p] = original element placed at index p
};

inline CanonicalForm canonical_form(const FiniteLattice& L) {
  const int n = L.size();
  const auto inv = detail::lattice_invariants(L);
  std::vector<int> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = i;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](int x, int y) { return inv[x] < inv[y]; });
  // Slot p may hold any element whose invariant equals that of sorted[p]. The code
  // grows by the order bits between slot p and all earlier slots, so a prefix that is
  // already larger than the best complete code can be pruned.
  std::vector<int> pos(n, -1), best_pos;
  std::vector<char> used(n, 0), code, best;
  std::function<void(int)> rec = [&](int p) {
    if (p == n) {
      if (best_pos.empty() || code < best) {
        best = code;
        best_pos = pos;
      }
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (used[e] || inv[e] != inv[sorted[p]]) continue;
      const std::size_t mark = code.size();
      for (int q = 0; q < p; ++q) {
        code.push_back(L.leq(e, pos[q]));
        code.push_back(L.leq(pos[q], e));
      }
      const bool worse = !best_pos.empty() &&
                         std::lexicographical_compare(best.begin(), best.begin() + code.size(),
                                                      code.begin(), code.end());
      if (!worse) {
        pos[p] = e;
        used[e] = 1;
        rec(p + 1);
        used[e] = 0;
        pos[p] = -1;
      }
      code.resize(mark);
    }
  };
  rec(0);
  CanonicalForm out;
  out.position = best_pos;
  out.code.assign(static_cast<std::size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) out.code[p * n + q] = L.leq(best_pos[p], best_pos[q]);
  return out;
}

/// L relabeled into its canonical form.
inline FiniteLattice canonical_lattice(const FiniteLattice& L) {
  return FiniteLattice::from_order_table(L.size(), canonical_form(L).code);
}

}  // namespace compat

#endif  // COMPAT_ISOMORPHISM_HPP_

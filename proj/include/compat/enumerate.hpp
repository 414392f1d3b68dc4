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

#ifndef COMPAT_ENUMERATE_HPP_
#define COMPAT_ENUMERATE_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "compat/isomorphism.hpp"
#include "compat/lattice.hpp"

namespace compat {

inline constexpr int kDefaultLatticeCap = 8;

namespace detail {

// A bounded poset is a lattice iff every pair has a least upper bound.
inline bool has_all_joins(int n, const std::vector<char>& t) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c)
        if (t[a * n + c] && t[b * n + c] && (best < 0 || t[c * n + best])) best = c;
      for (int c = 0; c < n; ++c)
        if (t[a * n + c] && t[b * n + c] && !t[best * n + c]) return false;
    }
  return true;
}

}  // namespace detail

/// One canonical representative per isomorphism class of n-element lattices, in
/// increasing order of canonical code.
///
/// Inner posets (everything but the bounds) are generated with natural labelings: the
/// strict down-set of each new element is a down-set of the elements before it. Each
/// candidate that is a lattice is reduced to its canonical form and deduplicated.
inline std::vector<FiniteLattice> enumerate_lattices(int n, int cap = kDefaultLatticeCap) {
  if (n < 1 || n > cap) {
    throw Error(ErrorKind::CapExceeded, "lattice enumeration supports 1 <= n <= " +
                                            std::to_string(cap) + ", got " + std::to_string(n));
  }
  if (n == 1) return {FiniteLattice::from_order_table(1, {1})};
  const int k = n - 2;
  std::map<std::vector<char>, bool> seen;
  std::vector<unsigned> below(k, 0);  // strict down-set of inner element i, as a bitmask

  auto emit = [&]() {
    std::vector<char> t(static_cast<std::size_t>(n) * n, 0);
    const int top = n - 1;
    for (int a = 0; a < n; ++a) {
      t[a * n + a] = 1;
      t[0 * n + a] = 1;
      t[a * n + top] = 1;
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if ((below[i] >> j) & 1U) t[(j + 1) * n + (i + 1)] = 1;
    if (!detail::has_all_joins(n, t)) return;
    const auto L = FiniteLattice::from_order_table(n, std::move(t));
    seen.emplace(canonical_form(L).code, true);
  };

  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      emit();
      return;
    }
    for (unsigned d = 0; d < (1U << i); ++d) {
      bool closed = true;
      for (int j = 0; j < i && closed; ++j)
        if ((d >> j) & 1U) closed = (below[j] & ~d) == 0;
      if (!closed) continue;
      below[i] = d;
      rec(i + 1);
    }
  };
  rec(0);

  std::vector<FiniteLattice> out;
  out.reserve(seen.size());
  for (const auto& [code, unused] : seen) out.push_back(FiniteLattice::from_order_table(n, code));
  return out;
}

/// A catalog entry: enumeration id "n<size>-<index>" plus the lattice.
struct CatalogEntry {
  std::string id;
  FiniteLattice lattice;
};

/// Every lattice with 1..max_n elements, up to isomorphism.
inline std::vector<CatalogEntry> lattice_catalog(int max_n, int cap = kDefaultLatticeCap) {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    int index = 0;
    for (auto& L : enumerate_lattices(n, cap))
      out.push_back({"n" + std::to_string(n) + "-" + std::to_string(index++), std::move(L)});
  }
  return out;
}

}  // namespace compat

#endif  // COMPAT_ENUMERATE_HPP_

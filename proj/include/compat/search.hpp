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

#ifndef COMPAT_SEARCH_HPP_
#define COMPAT_SEARCH_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compat/edge_cover.hpp"
#include "compat/enumerate.hpp"
#include "compat/frame.hpp"
#include "compat/isomorphism.hpp"
#include "compat/parallel.hpp"
#include "compat/representation.hpp"

namespace compat {

// ---------------------------------------------------------------------------
// Small representing frames

inline constexpr int kOracleReverifyLimit = 18;
inline constexpr long kDefaultFrameSearchBudget = 1L << 22;  // relations tried per lattice

struct ConjectureReport {
  std::string id;
  int lattice_size = 0;
  int min_cover = -1;          // -1 when the cover route was not attempted
  bool gallai_ok = false;      // cover touches every vertex and meets left+right-matching
  int frame_size = 0;          // 0 when no frame was found
  bool iso_verified = false;
  std::optional<bool> oracle_verified;  // fast and oracle fixpoints agree
  std::string method;          // edge_cover | exhaustive_frame_search | none
  std::vector<StatePair> frame;  // compat pairs of the representing frame
};

namespace detail {

// Reflexive frames on k < n states, ascending k, whose fixpoint lattice is L.
inline std::optional<RelationalFrame> exhaustive_frame_search(const FiniteLattice& L, long budget) {
  long tried = 0;
  for (int k = 1; k < L.size(); ++k) {
    const int bits = k * (k - 1);
    if (bits >= 63) break;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
      if (++tried > budget) return std::nullopt;
      Relation r(k);
      int bit = 0;
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
          if (x == y) r.set(x, y);
          else if ((m >> bit++) & 1U) r.set(x, y);
        }
      RelationalFrame F(std::move(r));
      if (static_cast<int>(fixpoint_family(F).size()) != L.size()) continue;
      if (lattices_isomorphic(fixpoints(F).order, L)) return F;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// One lattice: a P1 frame from a minimum edge cover, else a brute-force search
/// over smaller reflexive frames. Degenerate (one-element) lattices give nothing.
inline std::optional<ConjectureReport> conjecture_instance(const std::string& id,
                                                           const FiniteLattice& L,
                                                           long frame_budget = kDefaultFrameSearchBudget) {
  if (L.size() < 2) return std::nullopt;
  ConjectureReport r;
  r.id = id;
  r.lattice_size = L.size();
  r.method = "none";
  std::optional<RelationalFrame> found;

  auto g = irreducible_graph(L);
  auto cover = min_edge_cover(g.graph);
  r.min_cover = static_cast<int>(cover.size());
  const int matching = static_cast<int>(max_matching(g.graph).size());
  r.gallai_ok = covers_all_vertices(g.graph, cover) &&
                r.min_cover == g.graph.left + g.graph.right - matching;
  if (r.min_cover < L.size()) {
    std::vector<ElementPair> P;
    for (auto [i, j] : cover) P.emplace_back(g.V[i], g.Lambda[j]);
    auto rep = build_pairs(L, PairKind::P1, std::nullopt, P);
    if (represent_pairs(rep).isomorphism) {
      found = rep.frame;
      r.method = "edge_cover";
    }
  }
  if (!found) {
    found = detail::exhaustive_frame_search(L, frame_budget);
    if (found) r.method = "exhaustive_frame_search";
  }
  if (found) {
    r.frame_size = found->size();
    r.frame = found->relation().pairs();
    r.iso_verified = r.frame_size < L.size() && lattices_isomorphic(fixpoints(*found).order, L);
    if (found->size() <= kOracleReverifyLimit) {
      r.oracle_verified = fixpoint_family(*found, FixpointMode::oracle, kOracleReverifyLimit) ==
                          fixpoint_family(*found, FixpointMode::fast);
    }
  }
  return r;
}

inline bool conjecture_holds(const ConjectureReport& r) {
  return r.iso_verified && r.frame_size < r.lattice_size && r.oracle_verified.value_or(true);
}

/// Reports for every nondegenerate lattice with at most max_n elements, in
/// catalog order regardless of which worker finishes first.
inline std::vector<ConjectureReport> conjecture_sweep(int max_n, int jobs = 1,
                                                      int cap = kDefaultLatticeCap) {
  if (max_n > cap) {
    throw Error(ErrorKind::CapExceeded, "sweep size " + std::to_string(max_n) + " above cap " +
                                            std::to_string(cap));
  }
  auto cat = lattice_catalog(max_n, cap);
  auto results = parallel_map(cat, jobs, [](const CatalogEntry& e) {
    return conjecture_instance(e.id, e.lattice);
  });
  std::vector<ConjectureReport> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  return out;
}

// ---------------------------------------------------------------------------
// Negations and element sets that represent L through the key relation

inline constexpr long kDefaultSearchBudget = 5'000'000;

struct QuestionWitness {
  ElementList V;
  UnaryOpTable neg;
  std::string stage;  // which enumeration stage produced it
  long candidates = 0;
  bool via_phi = true;  // iso is a ↦ {i : V[i] ≤ a}; false for non-dense V
};

namespace detail {

// Subsets of `pool` in order of size then lexicographic position.
inline void for_each_subset_by_size(const ElementList& pool, const std::function<bool(const ElementList&)>& f) {
  const int m = static_cast<int>(pool.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ElementList s;
      for (int i : idx) s.push_back(pool[i]);
      if (!f(s)) return;
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace detail

/// Searches for (V, ¬) with ¬ anti-inflationary, V a set of nonzero elements and
/// L ≅ 𝔏(V, key relation). V runs over the join-irreducibles, then their proper
/// supersets (all join-dense), then the remaining sets of nonzero elements.
/// Join-dense V must be witnessed by the down-set map itself; for the others
/// any lattice isomorphism counts.
/// For each V, negations are tried in the order: trivial protocomplement,
/// pseudocomplement, orthocomplements, protocomplements, every anti-inflationary
/// table. Throws SearchBudgetExceeded after `budget` (V, ¬) candidates.
inline std::optional<QuestionWitness> question_search(const FiniteLattice& L,
                                                      long budget = kDefaultSearchBudget) {
  if (L.size() < 2) throw Error(ErrorKind::DegenerateLattice, "one-element lattice");
  const int n = L.size();
  long count = 0;
  std::optional<QuestionWitness> hit;

  auto try_pair = [&](const ElementList& V, const UnaryOpTable& neg, const char* stage) {
    if (++count > budget) {
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "no witness within " + std::to_string(budget) + " candidates");
    }
    auto F = key_relation(L, neg, V);
    if (static_cast<int>(fixpoint_family(F).size()) != n) return false;
    const auto fl = fixpoints(F);
    const bool dense = is_join_dense(L, V);
    if (dense ? !judge_phi(L, fl, phi_down(L, V)).isomorphism
              : !lattices_isomorphic(fl.order, L)) {
      return false;
    }
    hit = QuestionWitness{V, neg, stage, count, dense};
    return true;
  };

  std::vector<ElementList> choices(n);
  for (int a = 0; a < n; ++a)
    for (int y = 0; y < n; ++y)
      if (a == L.bottom() || !L.leq(a, y)) choices[a].push_back(y);

  auto try_V = [&](const ElementList& V) {
    if (V.empty()) return false;
    std::vector<UnaryOpTable> seeded{trivial_protocomplementation(L)};
    if (auto pc = pseudocomplementation(L)) seeded.push_back(*pc);
    for (auto& o : orthocomplementations(L)) seeded.push_back(o);
    for (auto& p : protocomplementations(L)) seeded.push_back(p);
    std::vector<UnaryOpTable> tried;
    for (const auto& ng : seeded) {
      if (std::find(tried.begin(), tried.end(), ng) != tried.end()) continue;
      tried.push_back(ng);
      if (try_pair(V, ng, "seeded")) return true;
    }
    std::vector<Element> t(n);
    std::function<bool(int)> rec = [&](int a) -> bool {
      if (a == n) {
        UnaryOpTable ng(t);
        if (std::find(tried.begin(), tried.end(), ng) != tried.end()) return false;
        return try_pair(V, ng, "exhaustive");
      }
      for (Element v : choices[a]) {
        t[a] = v;
        if (rec(a + 1)) return true;
      }
      return false;
    };
    return rec(0);
  };

  const ElementList ji = join_irreducibles(L);
  if (try_V(ji)) return hit;
  ElementList others;
  for (int a = 0; a < n; ++a)
    if (a != L.bottom() && std::find(ji.begin(), ji.end(), a) == ji.end()) others.push_back(a);
  bool done = false;
  detail::for_each_subset_by_size(others, [&](const ElementList& extra) {
    if (extra.empty()) return true;
    ElementList V = ji;
    V.insert(V.end(), extra.begin(), extra.end());
    std::sort(V.begin(), V.end());
    done = try_V(V);
    return !done;
  });
  if (done) return hit;
  ElementList nonzero;
  for (int a = 0; a < n; ++a)
    if (a != L.bottom()) nonzero.push_back(a);
  detail::for_each_subset_by_size(nonzero, [&](const ElementList& V) {
    if (V.empty() || is_join_dense(L, V)) return true;
    done = try_V(V);
    return !done;
  });
  if (done) return hit;
  return std::nullopt;
}

}  // namespace compat

#endif  // COMPAT_SEARCH_HPP_

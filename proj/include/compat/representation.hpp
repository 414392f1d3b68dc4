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

#ifndef COMPAT_REPRESENTATION_HPP_
#define COMPAT_REPRESENTATION_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "compat/edge_cover.hpp"
#include "compat/frame.hpp"
#include "compat/lattice.hpp"
#include "compat/unary_op.hpp"

namespace compat {

/// Outcome of comparing L with the fixpoints of a representing frame through φ.
/// witness_iso[a] is the fixpoint index of φ(a), filled only for isomorphisms.
struct Verdict {
  bool embedding = false;
  bool isomorphism = false;
  bool neg_preserved = false;
  int frame_size = 0;
  std::vector<int> witness_iso;
  bool operator==(const Verdict&) const = default;
};

/// Checks φ against the fixpoint lattice FL. embedding: every φ(a) is a fixpoint
/// and a ≤ b iff φ(a) ⊆ φ(b); isomorphism: additionally onto. If neg is given,
/// neg_preserved reports φ(¬a) = ¬◁φ(a) for all a.
inline Verdict judge_phi(const FiniteLattice& L, const FixpointLattice& FL,
                         const std::vector<StateSet>& phi, const UnaryOpTable* neg = nullptr) {
  Verdict v;
  v.frame_size = FL.frame.size();
  const int n = L.size();
  std::vector<int> idx(n, -1);
  bool all_fix = true;
  for (int a = 0; a < n; ++a) {
    if (auto i = FL.index_of(phi[a])) idx[a] = *i;
    else all_fix = false;
  }
  bool order = true;
  for (int a = 0; a < n && order; ++a)
    for (int b = 0; b < n && order; ++b) order = L.leq(a, b) == phi[a].subset_of(phi[b]);
  v.embedding = all_fix && order;
  v.isomorphism = v.embedding && FL.size() == n;
  if (neg != nullptr) {
    v.neg_preserved = true;
    for (int a = 0; a < n && v.neg_preserved; ++a)
      v.neg_preserved = phi[(*neg)(a)] == compat::neg(FL.frame, phi[a]);
  }
  if (v.isomorphism) v.witness_iso = idx;
  return v;
}

// ---------------------------------------------------------------------------
// Join-dense representation

namespace detail {

inline void require_neg_for_key(const FiniteLattice& L, const UnaryOpTable& neg,
                                const ElementList& V) {
  neg.require_total_on(L);
  if (!classify_negation(L, neg).anti_inflationary) {
    throw Error(ErrorKind::NotAntiInflationary, "some a != 0 has a <= ¬a");
  }
  for (Element v : V) {
    if (v < 0 || v >= L.size()) throw Error(ErrorKind::InvalidInput, "V names a non-element");
    if (v == L.bottom()) throw Error(ErrorKind::ZeroInV, "V contains the bottom element");
  }
}

}  // namespace detail

/// x escapes z in V with ¬: some c in V has x ≰ ¬c and z ≤ ¬c.
inline bool escapes(const FiniteLattice& L, const UnaryOpTable& neg, const ElementList& V,
                    Element x, Element z) {
  return std::any_of(V.begin(), V.end(),
                     [&](Element c) { return !L.leq(x, neg(c)) && L.leq(z, neg(c)); });
}

/// Frame on positions of V: i ◁ j iff V[j] ≰ ¬V[i] and every z with V[j] ≤ z and
/// V[i] ≰ z is escaped by V[i].
inline RelationalFrame key_relation(const FiniteLattice& L, const UnaryOpTable& neg,
                                    const ElementList& V) {
  detail::require_neg_for_key(L, neg, V);
  if (V.empty()) throw Error(ErrorKind::DegenerateLattice, "V is empty");
  const int k = static_cast<int>(V.size());
  require_state_count(k, "key relation");
  std::vector<char> esc(static_cast<std::size_t>(k) * L.size());
  for (int i = 0; i < k; ++i)
    for (int z = 0; z < L.size(); ++z) esc[i * L.size() + z] = escapes(L, neg, V, V[i], z);
  Relation r(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Element x = V[i], y = V[j];
      if (L.leq(y, neg(x))) continue;
      bool ok = true;
      for (int z = 0; z < L.size() && ok; ++z)
        if (L.leq(y, z) && !L.leq(x, z) && !esc[i * L.size() + z]) ok = false;
      if (ok) r.set(i, j);
    }
  return RelationalFrame(std::move(r));
}

struct Suitability {
  bool first = false;
  bool second = false;
  std::optional<bool> third;  // only with a negation
  bool operator==(const Suitability&) const = default;
};

/// The three suitability conditions for a frame whose state i stands for V[i].
inline Suitability check_suitability(const FiniteLattice& L, const ElementList& V,
                                     const RelationalFrame& F, const UnaryOpTable* neg = nullptr) {
  const int k = static_cast<int>(V.size());
  Suitability s;
  s.first = true;
  for (int i = 0; i < k && s.first; ++i)
    for (int b = 0; b < L.size() && s.first; ++b) {
      if (L.leq(V[i], b)) continue;
      bool found = false;
      F.predecessors(i).for_each([&](int a1) {
        if (found) return;
        bool all = true;
        F.successors(a1).for_each([&](int a2) { all = all && !L.leq(V[a2], b); });
        found = all;
      });
      s.first = found;
    }
  s.second = true;
  for (const StateSet B : fixpoint_family(F)) {
    Element b = L.bottom();
    B.for_each([&](int i) { b = L.join(b, V[i]); });
    for (int i = 0; i < k; ++i)
      if (L.leq(V[i], b) && !B.contains(i)) s.second = false;
  }
  if (neg != nullptr) {
    bool third = true;
    for (int x = 0; x < k && third; ++x)
      for (int y = 0; y < L.size() && third; ++y) {
        if (L.leq(V[x], (*neg)(y))) continue;
        bool found = false;
        for (int y0 = 0; y0 < k && !found; ++y0) found = L.leq(V[y0], y) && F.compat(y0, x);
        third = found;
      }
    s.third = third;
  }
  return s;
}

/// Whenever a in V escapes b, some c in V with c ◁ a has b ≤ ¬c.
inline bool has_compatible_escape(const FiniteLattice& L, const UnaryOpTable& neg,
                                  const ElementList& V, const RelationalFrame& key) {
  const int k = static_cast<int>(V.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (!escapes(L, neg, V, V[a], b)) continue;
      bool found = false;
      for (int c = 0; c < k && !found; ++c) found = key.compat(c, a) && L.leq(b, neg(V[c]));
      if (!found) return false;
    }
  return true;
}

inline bool has_compatible_escape(const FiniteLattice& L, const UnaryOpTable& neg,
                                  const ElementList& V) {
  return has_compatible_escape(L, neg, V, key_relation(L, neg, V));
}

struct JoinDenseRep {
  FiniteLattice source;
  UnaryOpTable neg;
  ElementList V;
  RelationalFrame frame;
  FixpointLattice fixpoints;
  std::vector<StateSet> phi;  // φ(b) = {i : V[i] ≤ b}
  Suitability suitability;
  Verdict verdict;
};

inline std::vector<StateSet> phi_down(const FiniteLattice& L, const ElementList& V) {
  std::vector<StateSet> phi(L.size());
  for (int b = 0; b < L.size(); ++b)
    for (int i = 0; i < static_cast<int>(V.size()); ++i)
      if (L.leq(V[i], b)) phi[b].insert(i);
  return phi;
}

/// Represents (L, ¬) on V (join-irreducibles when omitted) with the key relation.
inline JoinDenseRep represent_join_dense(const FiniteLattice& L, const UnaryOpTable& neg,
                                         std::optional<ElementList> V = std::nullopt) {
  if (L.size() < 2) throw Error(ErrorKind::DegenerateLattice, "one-element lattice");
  ElementList vs = V ? *V : join_irreducibles(L);
  auto frame = key_relation(L, neg, vs);
  auto fl = fixpoints(frame);
  auto phi = phi_down(L, vs);
  auto suit = check_suitability(L, vs, frame, &neg);
  auto verdict = judge_phi(L, fl, phi, &neg);
  return JoinDenseRep{L, neg, std::move(vs), frame, std::move(fl), std::move(phi), suit, verdict};
}

// ---------------------------------------------------------------------------
// Pair representations

enum class PairKind { P0, P1, P2, P3, Pneg, custom };

inline std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::P0: return "P0";
    case PairKind::P1: return "P1";
    case PairKind::P2: return "P2";
    case PairKind::P3: return "P3";
    case PairKind::Pneg: return "Pneg";
    case PairKind::custom: return "custom";
  }
  return "?";
}

using ElementPair = std::pair<Element, Element>;

/// (a, b) ◁ (c, d) iff c ≰ b.
inline RelationalFrame pair_frame(const FiniteLattice& L, const std::vector<ElementPair>& P) {
  if (P.empty()) throw Error(ErrorKind::InvalidInput, "empty pair set");
  const int k = static_cast<int>(P.size());
  require_state_count(k, "pair frame");
  Relation r(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!L.leq(P[j].first, P[i].second)) r.set(i, j);
  return RelationalFrame(std::move(r));
}

inline bool is_separating(const FiniteLattice& L, const std::vector<ElementPair>& P) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (L.leq(a, b)) continue;
      const bool found = std::any_of(P.begin(), P.end(), [&](const ElementPair& p) {
        return L.leq(p.first, a) && !L.leq(p.first, b);
      });
      if (!found) return false;
    }
  for (const auto& [c, d] : P) {
    (void)d;
    for (int b = 0; b < n; ++b) {
      if (L.leq(c, b)) continue;
      bool found = false;
      for (const auto& [c1, d1] : P) {
        if (L.leq(c, d1)) continue;  // need (c1, d1) ◁ (c, d)
        bool all = true;
        for (const auto& q : P)
          if (!L.leq(q.first, d1) && L.leq(q.first, b)) all = false;
        if (all) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

struct PairRep {
  FiniteLattice source;
  PairKind kind = PairKind::custom;
  std::vector<ElementPair> pairs;
  std::optional<UnaryOpTable> neg;
  RelationalFrame frame;
  std::vector<StateSet> phi;  // φ(a) = {i : pairs[i].first ≤ a}
};

inline std::vector<StateSet> phi_pairs(const FiniteLattice& L, const std::vector<ElementPair>& P) {
  std::vector<StateSet> phi(L.size());
  for (int a = 0; a < L.size(); ++a)
    for (int i = 0; i < static_cast<int>(P.size()); ++i)
      if (L.leq(P[i].first, a)) phi[a].insert(i);
  return phi;
}

inline PairRep make_pair_rep(const FiniteLattice& L, PairKind kind, std::vector<ElementPair> P,
                             std::optional<UnaryOpTable> neg = std::nullopt) {
  std::sort(P.begin(), P.end());
  P.erase(std::unique(P.begin(), P.end()), P.end());
  auto frame = pair_frame(L, P);
  auto phi = phi_pairs(L, P);
  return PairRep{L, kind, std::move(P), std::move(neg), std::move(frame), std::move(phi)};
}

/// Builds one of the standard pair sets. V and Λ are the join- and
/// meet-irreducibles. P1 uses `cover` (pairs of elements) or a minimum edge cover.
inline PairRep build_pairs(const FiniteLattice& L, PairKind kind,
                           const std::optional<UnaryOpTable>& neg = std::nullopt,
                           const std::optional<std::vector<ElementPair>>& cover = std::nullopt) {
  if (L.size() < 2) throw Error(ErrorKind::DegenerateLattice, "one-element lattice");
  const ElementList V = join_irreducibles(L), Lambda = meet_irreducibles(L);
  std::vector<ElementPair> P;
  auto need_neg = [&](const char* what) -> const UnaryOpTable& {
    if (!neg) throw Error(ErrorKind::KindPreconditionFailed, std::string(what) + " needs a negation");
    neg->require_total_on(L);
    return *neg;
  };
  switch (kind) {
    case PairKind::P0:
      for (Element a : V)
        for (Element b : Lambda)
          if (!L.leq(a, b)) P.emplace_back(a, b);
      break;
    case PairKind::P1:
      if (cover) {
        for (auto [a, b] : *cover)
          if (L.leq(a, b)) throw Error(ErrorKind::KindPreconditionFailed, "cover pair has a <= b");
        P = *cover;
      } else {
        auto g = irreducible_graph(L);
        for (auto [i, j] : min_edge_cover(g.graph)) P.emplace_back(g.V[i], g.Lambda[j]);
      }
      break;
    case PairKind::P2: {
      const auto& ng = need_neg("P2");
      if (!classify_negation(L, ng).orthocomplementation) {
        throw Error(ErrorKind::KindPreconditionFailed, "P2: orthocomplementation=false");
      }
      for (Element a : V) P.emplace_back(a, ng(a));
      break;
    }
    case PairKind::P3: {
      auto h = heyting_arrow(L);
      if (!h) throw Error(ErrorKind::KindPreconditionFailed, "P3: heyting=false");
      for (Element a : V)
        for (Element b : Lambda)
          if (!L.leq(a, b)) P.emplace_back(a, (*h)(a, b));
      break;
    }
    case PairKind::Pneg: {
      const auto& ng = need_neg("Pneg");
      if (!classify_negation(L, ng).protocomplementation) {
        throw Error(ErrorKind::KindPreconditionFailed, "Pneg: protocomplementation=false");
      }
      for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
          if (!L.leq(a, b) && L.leq(ng(a), b)) P.emplace_back(a, b);
      break;
    }
    case PairKind::custom:
      throw Error(ErrorKind::InvalidInput, "custom pair sets go through make_pair_rep");
  }
  return make_pair_rep(L, kind, std::move(P), neg);
}

/// Verdict for a separating pair set; negation is judged when the rep carries one.
inline Verdict represent_pairs(const PairRep& rep) {
  if (!is_separating(rep.source, rep.pairs)) {
    throw Error(ErrorKind::NotSeparating, to_string(rep.kind) + " pair set is not separating");
  }
  auto fl = fixpoints(rep.frame);
  return judge_phi(rep.source, fl, rep.phi, rep.neg ? &*rep.neg : nullptr);
}

// ---------------------------------------------------------------------------
// Filter-ideal space

/// Points are disjoint (filter, ideal) pairs; (F, I) ◁ (F', I') iff I ∩ F' = ∅.
/// Filters and ideals are nonempty; on a finite lattice they are principal, so
/// point i is (↑top_gen[i], ↓bottom_gen[i]) with the generators kept for reference.
struct FilterIdealSpace {
  FiniteLattice source;
  std::vector<StateSet> filters;      // indexed by generator element
  std::vector<StateSet> ideals;       // indexed by generator element
  std::vector<ElementPair> points;    // (filter generator, ideal generator)
  RelationalFrame frame;
  std::vector<StateSet> hats;         // hat(a) = {points whose filter holds a}
};

inline StateSet up_set(const FiniteLattice& L, Element a) {
  StateSet s;
  for (int b = 0; b < L.size(); ++b)
    if (L.leq(a, b)) s.insert(b);
  return s;
}

inline StateSet down_set(const FiniteLattice& L, Element a) {
  StateSet s;
  for (int b = 0; b < L.size(); ++b)
    if (L.leq(b, a)) s.insert(b);
  return s;
}

inline FilterIdealSpace filter_ideal_space(const FiniteLattice& L) {
  if (L.size() < 2) {
    throw Error(ErrorKind::DegenerateLattice, "no disjoint filter-ideal pair on one element");
  }
  require_state_count(L.size(), "lattice for filter-ideal space");
  std::vector<StateSet> filters(L.size()), ideals(L.size());
  for (int a = 0; a < L.size(); ++a) {
    filters[a] = up_set(L, a);
    ideals[a] = down_set(L, a);
  }
  std::vector<ElementPair> points;
  for (int f = 0; f < L.size(); ++f)
    for (int i = 0; i < L.size(); ++i)
      if (!filters[f].intersects(ideals[i])) points.emplace_back(f, i);
  const int k = static_cast<int>(points.size());
  require_state_count(k, "filter-ideal space");
  Relation r(k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (!ideals[points[p].second].intersects(filters[points[q].first])) r.set(p, q);
  std::vector<StateSet> hats(L.size());
  for (int a = 0; a < L.size(); ++a)
    for (int p = 0; p < k; ++p)
      if (filters[points[p].first].contains(a)) hats[a].insert(p);
  return FilterIdealSpace{L, std::move(filters), std::move(ideals), std::move(points),
                          RelationalFrame(std::move(r)), std::move(hats)};
}

/// Every union of members of `basis` (the empty union included), sorted.
inline std::vector<StateSet> open_sets(const std::vector<StateSet>& basis) {
  std::set<StateSet> opens{StateSet()};
  for (const StateSet b : basis) {
    std::vector<StateSet> fresh;
    for (const StateSet o : opens) fresh.push_back(o | b);
    opens.insert(fresh.begin(), fresh.end());
  }
  std::vector<StateSet> out(opens.begin(), opens.end());
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

/// Opens that are also fixpoints (compact = every open at finite scale).
inline std::vector<StateSet> compact_open_fixpoint_family(const RelationalFrame& F,
                                                          const std::vector<StateSet>& basis) {
  std::vector<StateSet> out;
  for (const StateSet o : open_sets(basis))
    if (is_fixpoint(F, o)) out.push_back(o);
  return out;
}

struct CompactOpenReport {
  std::vector<StateSet> family;
  bool image_is_family = false;   // {hat(a)} equals the compact-open fixpoints
  bool hat_isomorphism = false;   // a ↦ hat(a) is a bounded-lattice isomorphism onto it
};

inline CompactOpenReport compact_open_fixpoints(const FilterIdealSpace& S) {
  const FiniteLattice& L = S.source;
  CompactOpenReport r;
  r.family = compact_open_fixpoint_family(S.frame, S.hats);
  std::set<StateSet> image(S.hats.begin(), S.hats.end());
  r.image_is_family = image == std::set<StateSet>(r.family.begin(), r.family.end());
  bool ok = image.size() == static_cast<std::size_t>(L.size());
  ok = ok && S.hats[L.bottom()].empty() && S.hats[L.top()] == S.frame.states();
  for (int a = 0; a < L.size() && ok; ++a)
    for (int b = 0; b < L.size() && ok; ++b) {
      ok = ok && (L.leq(a, b) == S.hats[a].subset_of(S.hats[b]));
      ok = ok && S.hats[L.meet(a, b)] == (S.hats[a] & S.hats[b]);
      ok = ok && S.hats[L.join(a, b)] == closure(S.frame, S.hats[a] | S.hats[b]);
    }
  r.hat_isomorphism = ok && r.image_is_family;
  return r;
}

struct CofixConditions {
  bool i = false;
  bool ii = false;
  bool iii = false;
  bool iv = false;
  bool all() const { return i && ii && iii && iv; }
};

inline constexpr int kMaxCofixForPairScan = 16;

namespace detail {

// Filters (up-closed, meet-closed) and ideals (down-closed, join-closed) of a
// family of sets under ⊆, by scanning subsets of the family.
inline std::pair<std::vector<StateSet>, std::vector<StateSet>> family_filters_ideals(
    const RelationalFrame& F, const std::vector<StateSet>& fam) {
  const int k = static_cast<int>(fam.size());
  if (k > kMaxCofixForPairScan) {
    throw Error(ErrorKind::CapExceeded, "compact-open fixpoint family too large to scan");
  }
  auto index = [&](StateSet s) {
    for (int i = 0; i < k; ++i)
      if (fam[i] == s) return i;
    return -1;
  };
  std::vector<int> meet(k * k), join(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      meet[a * k + b] = index(fam[a] & fam[b]);
      join[a * k + b] = index(closure(F, fam[a] | fam[b]));
    }
  std::vector<StateSet> filters, ideals;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    const StateSet s(m);
    bool up = true, down = true;
    s.for_each([&](int a) {
      for (int b = 0; b < k; ++b) {
        if (fam[a].subset_of(fam[b]) && !s.contains(b)) up = false;
        if (fam[b].subset_of(fam[a]) && !s.contains(b)) down = false;
        if (s.contains(b)) {
          if (meet[a * k + b] < 0 || !s.contains(meet[a * k + b])) up = false;
          if (join[a * k + b] < 0 || !s.contains(join[a * k + b])) down = false;
        }
      }
    });
    if (up) filters.push_back(s);
    if (down) ideals.push_back(s);
  }
  return {filters, ideals};
}

}  // namespace detail

/// Four conditions characterizing when (X, ◁) with the topology generated by
/// `basis` is a filter-ideal space. F(x), I(x) are sets of indices into COFix.
inline CofixConditions cofix_conditions(const RelationalFrame& F, const std::vector<StateSet>& basis) {
  const int n = F.size();
  const auto opens = open_sets(basis);
  const auto cofix = compact_open_fixpoint_family(F, basis);
  const int k = static_cast<int>(cofix.size());
  require_state_count(k, "compact-open fixpoint family");
  std::vector<StateSet> Fx(n), Ix(n);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < k; ++u) {
      if (cofix[u].contains(x)) Fx[x].insert(u);
      if (!F.successors(x).intersects(cofix[u])) Ix[x].insert(u);
    }
  CofixConditions c;
  c.i = true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (Fx[x] == Fx[y] && Ix[x] == Ix[y]) c.i = false;

  std::set<StateSet> cset(cofix.begin(), cofix.end());
  bool closed = true;
  for (const StateSet U : cofix)
    for (const StateSet V : cofix)
      closed = closed && cset.count(U & V) && cset.count(closure(F, U | V));
  bool basis_ok = true;
  for (const StateSet O : opens) {
    StateSet u;
    for (const StateSet U : cofix)
      if (U.subset_of(O)) u = u | U;
    basis_ok = basis_ok && u == O;
  }
  c.ii = closed && basis_ok;

  auto [filters, ideals] = detail::family_filters_ideals(F, cofix);
  c.iii = true;
  for (const StateSet f : filters)
    for (const StateSet id : ideals) {
      if (f.intersects(id)) continue;
      bool realized = false;
      for (int x = 0; x < n && !realized; ++x) realized = Fx[x] == f && Ix[x] == id;
      if (!realized) c.iii = false;
    }
  c.iv = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (F.compat(x, y) != !Ix[x].intersects(Fx[y])) c.iv = false;
  return c;
}

}  // namespace compat

#endif  // COMPAT_REPRESENTATION_HPP_

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

#ifndef COMPAT_MODAL_HPP_
#define COMPAT_MODAL_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compat/frame.hpp"
#include "compat/representation.hpp"
#include "compat/unary_op.hpp"

namespace compat {

/// A lattice with a multiplicative box (□1 = 1) and optionally a negation.
struct NecessityLattice {
  FiniteLattice lattice;
  UnaryOpTable box;
  std::optional<UnaryOpTable> neg;

  static NecessityLattice make(FiniteLattice L, UnaryOpTable box,
                               std::optional<UnaryOpTable> neg = std::nullopt) {
    box.require_total_on(L);
    if (neg) neg->require_total_on(L);
    if (!check_box(L, box).multiplicative) {
      throw Error(ErrorKind::KindPreconditionFailed, "box: multiplicative=false");
    }
    return NecessityLattice{std::move(L), std::move(box), std::move(neg)};
  }
};

/// □_R A = {x : R(x) ⊆ A}.
inline StateSet box_R(const Relation& R, StateSet A) {
  StateSet out;
  for (int x = 0; x < R.size(); ++x)
    if (R.row(x).subset_of(A)) out.insert(x);
  return out;
}

/// True iff □_R sends every fixpoint of F to a fixpoint.
inline bool is_ca_frame(const RelationalFrame& F, const Relation& R,
                        const std::vector<StateSet>& family) {
  if (R.size() != F.size()) throw Error(ErrorKind::InvalidInput, "R and frame differ in size");
  for (const StateSet A : family)
    if (!is_fixpoint(F, box_R(R, A))) return false;
  return true;
}

inline bool is_ca_frame(const RelationalFrame& F, const Relation& R) {
  return is_ca_frame(F, R, fixpoint_family(F));
}

/// z ◁_R x iff z ◁ y for some y in R(x); row x holds {z : z ◁_R x}.
inline std::vector<StateSet> compat_through_R(const RelationalFrame& F, const Relation& R) {
  std::vector<StateSet> below(F.size());
  for (int x = 0; x < F.size(); ++x)
    R.row(x).for_each([&](int y) { below[x] = below[x] | F.predecessors(y); });
  return below;
}

/// If z ◁_R x then some x' ◁ x has z ◁_R x'' for every x'' with x' ◁ x''.
inline bool fo_condition(const RelationalFrame& F, const Relation& R) {
  const auto below = compat_through_R(F, R);
  for (int x = 0; x < F.size(); ++x) {
    bool ok = true;
    below[x].for_each([&](int z) {
      if (!ok) return;
      bool found = false;
      F.predecessors(x).for_each([&](int x1) {
        if (found) return;
        bool all = true;
        F.successors(x1).for_each([&](int x2) { all = all && below[x2].contains(z); });
        found = all;
      });
      ok = found;
    });
    if (!ok) return false;
  }
  return true;
}

struct CAFrame {
  RelationalFrame frame;
  Relation R;
  bool validated = false;
};

inline CAFrame make_ca_frame(RelationalFrame F, Relation R) {
  const bool ok = F.is_compatibility_frame() && is_ca_frame(F, R);
  return CAFrame{std::move(F), std::move(R), ok};
}

/// □_R as a table on the fixpoint lattice; requires a CA frame.
inline UnaryOpTable box_table(const FixpointLattice& FL, const Relation& R) {
  std::vector<Element> t(FL.size());
  for (int a = 0; a < FL.size(); ++a) {
    auto i = FL.index_of(box_R(R, FL.fixpoints[a]));
    if (!i) throw Error(ErrorKind::InvalidInput, "box_R leaves the fixpoints");
    t[a] = *i;
  }
  return UnaryOpTable(std::move(t));
}

/// ⋀{a : x ≤ □a}; the set always holds 1 since □1 = 1.
inline Element box_kernel(const FiniteLattice& L, const UnaryOpTable& box, Element x) {
  Element m = L.top();
  for (int a = 0; a < L.size(); ++a)
    if (L.leq(x, box(a))) m = L.meet(m, a);
  return m;
}

/// x R y iff y ≤ ⋀{a : x ≤ □a}, on the elements listed in V.
inline Relation accessibility_from_box(const FiniteLattice& L, const UnaryOpTable& box,
                                       const ElementList& V) {
  const int k = static_cast<int>(V.size());
  Relation R(k);
  for (int i = 0; i < k; ++i) {
    const Element m = box_kernel(L, box, V[i]);
    for (int j = 0; j < k; ++j)
      if (L.leq(V[j], m)) R.set(i, j);
  }
  return R;
}

/// (x, x') R (y, y') iff x R y in the element sense above.
inline Relation accessibility_on_pairs(const FiniteLattice& L, const UnaryOpTable& box,
                                       const std::vector<ElementPair>& P) {
  const int k = static_cast<int>(P.size());
  Relation R(k);
  for (int i = 0; i < k; ++i) {
    const Element m = box_kernel(L, box, P[i].first);
    for (int j = 0; j < k; ++j)
      if (L.leq(P[j].first, m)) R.set(i, j);
  }
  return R;
}

enum class ModalMethod { join_dense, pairs, pairs_neg };

inline std::string to_string(ModalMethod m) {
  switch (m) {
    case ModalMethod::join_dense: return "join-dense";
    case ModalMethod::pairs: return "pairs";
    case ModalMethod::pairs_neg: return "pairs-neg";
  }
  return "?";
}

struct ModalVerdict {
  Verdict base;
  bool ca_frame = false;
  bool box_preserved = false;  // φ(□b) = □_R φ(b) for all b
};

struct ModalRep {
  CAFrame ca;
  FixpointLattice fixpoints;
  std::vector<StateSet> phi;
  ModalVerdict verdict;
};

inline ModalVerdict judge_modal(const FiniteLattice& L, const UnaryOpTable& box,
                                const CAFrame& ca, const FixpointLattice& FL,
                                const std::vector<StateSet>& phi, const UnaryOpTable* neg) {
  ModalVerdict v;
  v.base = judge_phi(L, FL, phi, neg);
  v.ca_frame = ca.validated;
  v.box_preserved = true;
  for (int b = 0; b < L.size() && v.box_preserved; ++b)
    v.box_preserved = phi[box(b)] == box_R(ca.R, phi[b]);
  return v;
}

/// (V, ◁, R) for a given frame over V, with R read off the box.
inline ModalRep modal_over_frame(const FiniteLattice& L, const UnaryOpTable& box,
                                 const ElementList& V, const RelationalFrame& F,
                                 const UnaryOpTable* neg = nullptr) {
  auto ca = make_ca_frame(F, accessibility_from_box(L, box, V));
  auto fl = fixpoints(ca.frame);
  auto phi = phi_down(L, V);
  auto v = judge_modal(L, box, ca, fl, phi, neg);
  return ModalRep{std::move(ca), std::move(fl), std::move(phi), v};
}

/// Represents (L, □[, ¬]) by a CA frame.
///   join_dense: key relation on V (join-irreducibles by default) for `neg`, which
///               defaults to the pseudocomplement or else the trivial protocomplement.
///   pairs:      a minimum edge cover pair set.
///   pairs_neg:  the pair set {(a, b) : a ≰ b, ¬a ≤ b} for a protocomplement ¬.
inline ModalRep modal_represent(const FiniteLattice& L, const UnaryOpTable& box, ModalMethod method,
                                std::optional<UnaryOpTable> neg = std::nullopt,
                                std::optional<ElementList> V = std::nullopt) {
  box.require_total_on(L);
  if (!check_box(L, box).completely_multiplicative) {
    throw Error(ErrorKind::KindPreconditionFailed, "box: completely_multiplicative=false");
  }
  if (L.size() < 2) throw Error(ErrorKind::DegenerateLattice, "one-element lattice");
  switch (method) {
    case ModalMethod::join_dense: {
      if (!neg) {
        auto pc = pseudocomplementation(L);
        neg = pc ? *pc : trivial_protocomplementation(L);
      }
      const ElementList vs = V ? *V : join_irreducibles(L);
      return modal_over_frame(L, box, vs, key_relation(L, *neg, vs), &*neg);
    }
    case ModalMethod::pairs:
    case ModalMethod::pairs_neg: {
      const PairRep rep = method == ModalMethod::pairs ? build_pairs(L, PairKind::P1)
                                                       : build_pairs(L, PairKind::Pneg, neg);
      if (!is_separating(L, rep.pairs)) {
        throw Error(ErrorKind::NotSeparating, to_string(rep.kind) + " pair set is not separating");
      }
      auto ca = make_ca_frame(rep.frame, accessibility_on_pairs(L, box, rep.pairs));
      auto fl = fixpoints(ca.frame);
      auto v = judge_modal(L, box, ca, fl, rep.phi, rep.neg ? &*rep.neg : nullptr);
      return ModalRep{std::move(ca), std::move(fl), rep.phi, v};
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown method");
}

struct ModalFilterIdeal {
  FilterIdealSpace space;
  Relation R;
  bool ca_frame = false;
  bool fo_condition = false;
  bool box_preserved = false;      // hat(□a) = □_R hat(a)
  bool embedding = false;          // a ↦ hat(a) is an order embedding into the fixpoints
  bool compact_open_iso = false;   // onto the compact-open fixpoints, closed under □_R
};

/// FI(L) with (F, I) R (F', I') iff □a ∈ F implies a ∈ F' for every a.
inline ModalFilterIdeal modal_filter_ideal(const FiniteLattice& L, const UnaryOpTable& box) {
  box.require_total_on(L);
  if (!check_box(L, box).multiplicative) {
    throw Error(ErrorKind::KindPreconditionFailed, "box: multiplicative=false");
  }
  auto S = filter_ideal_space(L);
  const int k = static_cast<int>(S.points.size());
  Relation R(k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      const StateSet& Fp = S.filters[S.points[p].first];
      const StateSet& Fq = S.filters[S.points[q].first];
      bool ok = true;
      for (int a = 0; a < L.size() && ok; ++a)
        if (Fp.contains(box(a)) && !Fq.contains(a)) ok = false;
      if (ok) R.set(p, q);
    }
  ModalFilterIdeal m{S, R};
  m.ca_frame = is_ca_frame(S.frame, R);
  m.fo_condition = fo_condition(S.frame, R);
  m.box_preserved = true;
  for (int a = 0; a < L.size(); ++a)
    m.box_preserved = m.box_preserved && S.hats[box(a)] == box_R(R, S.hats[a]);
  bool order = true;
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      order = order && is_fixpoint(S.frame, S.hats[a]);
      order = order && (L.leq(a, b) == S.hats[a].subset_of(S.hats[b]));
    }
  m.embedding = order && m.box_preserved;
  auto co = compact_open_fixpoints(S);
  bool closed = true;
  for (const StateSet U : co.family) {
    const StateSet b = box_R(R, U);
    closed = closed && std::find(co.family.begin(), co.family.end(), b) != co.family.end();
  }
  m.compact_open_iso = co.hat_isomorphism && closed && m.box_preserved;
  return m;
}

}  // namespace compat

#endif  // COMPAT_MODAL_HPP_

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

#ifndef COMPAT_SUITES_HPP_
#define COMPAT_SUITES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compat/edge_cover.hpp"
#include "compat/frame.hpp"
#include "compat/isomorphism.hpp"
#include "compat/lattice.hpp"
#include "compat/modal.hpp"
#include "compat/representation.hpp"
#include "compat/unary_op.hpp"

namespace compat {

// Named invariant checks run by `compat_cli check`. Each entry is one
// property evaluated on the given input; a failed entry is a finding, not an error.

struct SuiteCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

inline SuiteResult suite_core(const FiniteLattice& L, const std::optional<UnaryOpTable>& neg,
                              const std::optional<UnaryOpTable>& box) {
  SuiteResult r{"core", {}};
  const auto ji = join_irreducibles(L), mi = meet_irreducibles(L);
  r.add("join_irreducibles_join_dense", is_join_dense(L, ji));
  r.add("meet_irreducibles_meet_dense", is_meet_dense(L, mi));
  r.add("double_dual_isomorphic", lattices_isomorphic(dual(dual(L)), L).has_value());
  r.add("canonical_form_invariant", canonical_form(canonical_lattice(L)).code == canonical_form(L).code);
  auto pc = pseudocomplementation(L);
  if (pc) r.add("pseudocomplement_is_protocomplement", classify_negation(L, *pc).protocomplementation);
  if (is_distributive(L)) r.add("distributive_has_heyting_arrow", heyting_arrow(L).has_value());
  if (neg) {
    neg->require_total_on(L);
    auto p = classify_negation(L, *neg);
    if (p.orthocomplementation) r.add("ortho_implies_proto", p.protocomplementation);
    if (p.pseudocomplementation) r.add("pseudo_implies_proto", p.protocomplementation);
    if (p.protocomplementation) r.add("proto_implies_anti_inflationary", L.size() < 2 || p.anti_inflationary);
  }
  if (box) {
    box->require_total_on(L);
    auto p = check_box(L, *box);
    r.add("complete_multiplicativity_equals_multiplicativity",
          p.completely_multiplicative == (p.multiplicative && p.preserves_top));
    if (p.multiplicative) r.add("multiplicative_box_monotone", p.monotone);
  }
  return r;
}

inline SuiteResult suite_frames(const RelationalFrame& F, int oracle_cap = kDefaultOracleCap) {
  SuiteResult r{"frames", {}};
  const auto cls = classify_frame(F);
  r.add("reflexive", cls.reflexive, cls.reflexive ? "" : "relation misses some loop x ◁ x");
  const int n = F.size();
  if (n > oracle_cap) {
    r.add("closure_axioms", false, "frame above oracle cap " + std::to_string(oracle_cap));
    return r;
  }
  bool infl = true, idem = true, mono = true, negfix = true;
  const std::uint64_t all = std::uint64_t{1} << n;
  std::vector<StateSet> cl(all);
  for (std::uint64_t m = 0; m < all; ++m) cl[m] = closure(F, StateSet(m));
  for (std::uint64_t m = 0; m < all; ++m) {
    const StateSet A(m);
    infl = infl && A.subset_of(cl[m]);
    idem = idem && closure(F, cl[m]) == cl[m];
    negfix = negfix && is_fixpoint(F, neg(F, A));
    // monotone: adding one state never shrinks the closure
    for (int x = 0; x < n && mono; ++x) mono = cl[m].subset_of(cl[m | (std::uint64_t{1} << x)]);
  }
  r.add("closure_inflationary", infl);
  r.add("closure_idempotent", idem);
  r.add("closure_monotone", mono);
  r.add("negation_lands_in_fixpoints", negfix);
  r.add("fast_fixpoints_equal_oracle",
        fixpoint_family(F) == fixpoint_family(F, FixpointMode::oracle, oracle_cap));
  if (fixpoint_family(F).size() <= static_cast<std::size_t>(kMaxFixpointLattice)) {
    const auto FL = fixpoints(F);
    r.add("dual_frame_gives_dual_lattice",
          lattices_isomorphic(fixpoints(frame_dual(F)).order, dual(FL.order)).has_value());
  }
  return r;
}

inline SuiteResult suite_reps(const FiniteLattice& L, const std::optional<UnaryOpTable>& neg) {
  SuiteResult r{"reps", {}};
  if (L.size() < 2) {
    r.add("nondegenerate", false, "one-element lattice");
    return r;
  }
  std::optional<UnaryOpTable> ng = neg;
  if (!ng) {
    auto pc = pseudocomplementation(L);
    ng = pc ? *pc : trivial_protocomplementation(L);
  }
  const auto prof = classify_negation(L, *ng);
  if (prof.anti_inflationary) {
    auto jd = represent_join_dense(L, *ng);
    if (jd.suitability.first && jd.suitability.second) {
      r.add("join_dense_suitable_implies_isomorphism", jd.verdict.isomorphism);
    }
    if (jd.suitability.third && *jd.suitability.third && jd.verdict.isomorphism) {
      r.add("third_suitability_implies_neg_preserved", jd.verdict.neg_preserved);
    }
  }
  auto p1 = build_pairs(L, PairKind::P1);
  auto v1 = represent_pairs(p1);
  r.add("edge_cover_pairs_isomorphism", v1.isomorphism);
  r.add("edge_cover_frame_smaller", p1.frame.size() < L.size(),
        std::to_string(p1.frame.size()) + " states for " + std::to_string(L.size()) + " elements");
  if (prof.protocomplementation) {
    auto pn = build_pairs(L, PairKind::Pneg, ng);
    auto vn = represent_pairs(pn);
    r.add("neg_pairs_isomorphism", vn.isomorphism);
    r.add("neg_pairs_neg_preserved", vn.neg_preserved);
  }
  auto S = filter_ideal_space(L);
  auto co = compact_open_fixpoints(S);
  r.add("filter_ideal_image_is_open_fixpoints", co.image_is_family);
  r.add("filter_ideal_hat_isomorphism", co.hat_isomorphism);
  return r;
}

inline SuiteResult suite_modal_lattice(const FiniteLattice& L, const UnaryOpTable& box) {
  SuiteResult r{"modal", {}};
  box.require_total_on(L);
  const auto p = check_box(L, box);
  r.add("box_multiplicative", p.multiplicative);
  if (!p.multiplicative) return r;
  std::string bad;
  for (int x = 0; x < L.size() && bad.empty(); ++x)
    for (int b = 0; b < L.size() && bad.empty(); ++b)
      if (!L.leq(x, box(b)) && L.leq(box_kernel(L, box, x), b)) {
        bad = "x=" + std::to_string(x) + " b=" + std::to_string(b);
      }
  r.add("kernel_fact", bad.empty(), bad);
  if (L.size() >= 2 && p.completely_multiplicative) {
    auto rep = modal_represent(L, box, ModalMethod::pairs);
    r.add("pairs_ca_frame", rep.verdict.ca_frame);
    r.add("pairs_isomorphism", rep.verdict.base.isomorphism);
    r.add("pairs_box_preserved", rep.verdict.box_preserved);
  }
  auto fi = modal_filter_ideal(L, box);
  r.add("filter_ideal_ca_frame", fi.ca_frame);
  r.add("filter_ideal_fo_condition", fi.fo_condition);
  r.add("filter_ideal_embedding", fi.embedding);
  r.add("filter_ideal_compact_open_iso", fi.compact_open_iso);
  return r;
}

inline SuiteResult suite_modal_frame(const RelationalFrame& F, const Relation& R) {
  SuiteResult r{"modal", {}};
  const bool ca = is_ca_frame(F, R);
  const bool fo = fo_condition(F, R);
  r.add("ca_frame", ca);
  r.add("fo_implies_ca", !fo || ca);
  if (classify_frame(F).symmetric) r.add("symmetric_fo_iff_ca", fo == ca);
  if (ca) {
    const auto FL = fixpoints(F);
    const auto prof = check_box(FL.order, box_table(FL, R));
    r.add("box_R_multiplicative", prof.multiplicative);
    r.add("box_R_preserves_top", prof.preserves_top);
  }
  return r;
}

}  // namespace compat

#endif  // COMPAT_SUITES_HPP_

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

#ifndef COMPAT_CATALOG_HPP_
#define COMPAT_CATALOG_HPP_

#include <string>
#include <utility>
#include <vector>

#include "compat/frame.hpp"
#include "compat/isomorphism.hpp"
#include "compat/lattice.hpp"
#include "compat/unary_op.hpp"

// Named lattices, negations, boxes and frames used as fixtures across the library.
namespace compat::named {

/// 0 < 1 < ... < n-1.
inline FiniteLattice chain(int n) {
  std::vector<OrderPair> p;
  for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return build_lattice(p, n);
}

/// Subsets of a k-set; element i is the set with bit pattern i.
inline FiniteLattice boolean(int k) {
  const int n = 1 << k;
  std::vector<char> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a & ~b) == 0;
  return FiniteLattice::from_order_table(n, std::move(t));
}

/// Set complement on boolean(k).
inline UnaryOpTable boolean_complement(int k) {
  const int n = 1 << k;
  std::vector<Element> t(n);
  for (int a = 0; a < n; ++a) t[a] = (n - 1) & ~a;
  return UnaryOpTable(std::move(t));
}

/// 0, atoms 1..k, top k+1.
inline FiniteLattice diamond_lattice(int k) {
  std::vector<OrderPair> p;
  for (int a = 1; a <= k; ++a) {
    p.emplace_back(0, a);
    p.emplace_back(a, k + 1);
  }
  return build_lattice(p, k + 2);
}

inline FiniteLattice m3() { return diamond_lattice(3); }

/// 0 < 1 < 2 < 4 and 0 < 3 < 4 (3 is the lone atom of the short side).
inline FiniteLattice n5() {
  const std::vector<OrderPair> p{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return build_lattice(p, 5);
}

/// Four atoms 1..4; ortho pairs 1-3 and 2-4.
inline FiniteLattice mo2() { return diamond_lattice(4); }
inline UnaryOpTable mo2_neg() { return UnaryOpTable({5, 3, 4, 1, 2, 0}); }

/// Benzene ring: 0 < 1 < 3 < 5 and 0 < 2 < 4 < 5; ¬ swaps 1-4 and 2-3.
inline FiniteLattice o6() {
  const std::vector<OrderPair> p{{0, 1}, {1, 3}, {3, 5}, {0, 2}, {2, 4}, {4, 5}};
  return build_lattice(p, 6);
}
inline UnaryOpTable o6_neg() { return UnaryOpTable({5, 4, 3, 2, 1, 0}); }

/// N5 negation under which 2 is not below 1 yet 2 cannot escape 1:
/// ¬2 = 0, ¬1 = 3, ¬3 = 2.
inline UnaryOpTable n5_no_escape_neg() { return UnaryOpTable({4, 3, 0, 2, 0}); }

/// Heyting negation on chain(n): ¬0 = top, else 0.
inline UnaryOpTable chain_neg(int n) { return trivial_protocomplementation(chain(n)); }

/// The ten-element necessity ortholattice:
/// 0:0 1:d 2:□a 3:□¬a 4:a 5:¬a 6:◇a 7:◇¬a 8:□a∨□¬a 9:1, with d = ◇a∧◇¬a.
inline FiniteLattice epistemic() {
  const std::vector<OrderPair> p{{0, 1}, {0, 2}, {0, 3}, {1, 6}, {1, 7}, {2, 4}, {2, 8},
                                 {3, 5}, {3, 8}, {4, 6}, {5, 7}, {6, 9}, {7, 9}, {8, 9}};
  return build_lattice(p, 10);
}
inline UnaryOpTable epistemic_neg() { return UnaryOpTable({9, 8, 7, 6, 5, 4, 3, 2, 1, 0}); }
inline UnaryOpTable epistemic_box() { return UnaryOpTable({0, 1, 2, 3, 2, 3, 6, 7, 8, 9}); }
inline const std::vector<std::string>& epistemic_labels() {
  static const std::vector<std::string> labels{"0",   "d",   "[]a", "[]~a", "a",
                                               "~a",  "<>a", "<>~a", "[]a|[]~a", "1"};
  return labels;
}

// Frames. States are named x = 0, y = 1, z = 2 where three-state frames are used.

inline RelationalFrame frame_of(int n, const std::vector<StatePair>& extra) {
  return RelationalFrame::from_pairs(n, extra, /*add_reflexive=*/true);
}

/// y ◁ x, z ◁ y, x ◁ z: fixpoints form M3.
inline RelationalFrame c3_frame() { return frame_of(3, {{1, 0}, {2, 1}, {0, 2}}); }

/// y ◁ x, z ◁ y: fixpoints form N5.
inline RelationalFrame n5_frame() { return frame_of(3, {{1, 0}, {2, 1}}); }

/// The preorder z ≤ y ≤ x as a frame: fixpoints form the 4-chain.
inline RelationalFrame chain3_frame() { return frame_of(3, {{1, 0}, {2, 1}, {2, 0}}); }

inline RelationalFrame symmetric_frame(int n, const std::vector<StatePair>& edges) {
  std::vector<StatePair> p;
  for (auto [a, b] : edges) {
    p.emplace_back(a, b);
    p.emplace_back(b, a);
  }
  return frame_of(n, p);
}

/// Symmetric 4-cycle 0-1-2-3-0: fixpoints form MO2.
inline RelationalFrame square_frame() { return symmetric_frame(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

/// Symmetric path 0-1-2-3: fixpoints form O6.
inline RelationalFrame path4_frame() { return symmetric_frame(4, {{0, 1}, {1, 2}, {2, 3}}); }

/// Symmetric path 0-1-2-3-4 (states □a, a, d, ¬a, □¬a).
inline RelationalFrame path5_frame() {
  return symmetric_frame(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

/// Accessibility on n5_frame(): x R x, z R z, y R x, y R z.
inline Relation n5_access() {
  const std::vector<StatePair> p{{0, 0}, {2, 2}, {1, 0}, {1, 2}};
  return Relation::from_pairs(3, p);
}

/// Accessibility on path5_frame(): loops plus a R □a, a R d, ¬a R d, ¬a R □¬a.
inline Relation path5_access() {
  std::vector<StatePair> p{{1, 0}, {1, 2}, {3, 2}, {3, 4}};
  for (int i = 0; i < 5; ++i) p.emplace_back(i, i);
  return Relation::from_pairs(5, p);
}

/// Name of a well-known lattice isomorphic to L, or "" when none matches.
inline std::string identify_lattice(const FiniteLattice& L) {
  const int n = L.size();
  if (is_chain(L)) return "chain" + std::to_string(n);
  const std::vector<std::pair<std::string, FiniteLattice>> known{
      {"2^2", boolean(2)}, {"M3", m3()},  {"N5", n5()},         {"MO2", mo2()},
      {"O6", o6()},        {"2^3", boolean(3)}, {"epistemic", epistemic()}};
  for (const auto& [name, K] : known)
    if (K.size() == n && lattices_isomorphic(L, K)) return name;
  return "";
}

}  // namespace compat::named

#endif  // COMPAT_CATALOG_HPP_

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

#ifndef COMPAT_FRAME_HPP_
#define COMPAT_FRAME_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "compat/isomorphism.hpp"
#include "compat/lattice.hpp"
#include "compat/state_set.hpp"
#include "compat/unary_op.hpp"

namespace compat {

using StatePair = std::pair<int, int>;

/// A binary relation on {0..n-1} stored as row bitsets: row(x) = {y : x R y}.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), rows_(n) { require_state_count(n, "relation"); }

  static Relation from_pairs(int n, std::span<const StatePair> pairs) {
    Relation r(n);
    for (auto [x, y] : pairs) {
      if (x < 0 || y < 0 || x >= n || y >= n) {
        throw Error(ErrorKind::InvalidInput, "pair (" + std::to_string(x) + "," +
                                                 std::to_string(y) + ") out of range");
      }
      r.rows_[x].insert(y);
    }
    return r;
  }

  int size() const { return n_; }
  bool operator()(int x, int y) const { return rows_[x].contains(y); }
  StateSet row(int x) const { return rows_[x]; }
  void set(int x, int y) { rows_[x].insert(y); }

  Relation transpose() const {
    Relation t(n_);
    for (int x = 0; x < n_; ++x) rows_[x].for_each([&](int y) { t.rows_[y].insert(x); });
    return t;
  }

  std::vector<StatePair> pairs() const {
    std::vector<StatePair> out;
    for (int x = 0; x < n_; ++x) rows_[x].for_each([&](int y) { out.emplace_back(x, y); });
    return out;
  }

  /// n*n row-major 0/1 table.
  std::vector<char> table() const {
    std::vector<char> t(static_cast<std::size_t>(n_) * n_, 0);
    for (int x = 0; x < n_; ++x) rows_[x].for_each([&](int y) { t[x * n_ + y] = 1; });
    return t;
  }

  bool operator==(const Relation&) const = default;

 private:
  int n_ = 0;
  std::vector<StateSet> rows_;
};

/// A nonempty set of states with one relation ◁; compat(x, y) reads "x ◁ y".
/// The converse ▷ is derived, never stored as independent state.
class RelationalFrame {
 public:
  explicit RelationalFrame(Relation compat) : compat_(std::move(compat)) {
    if (compat_.size() < 1) throw Error(ErrorKind::InvalidInput, "a frame needs a state");
    require_state_count(compat_.size(), "frame");
    converse_ = compat_.transpose();
  }

  static RelationalFrame from_pairs(int n, std::span<const StatePair> pairs,
                                    bool add_reflexive = false) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "a frame needs a state");
    auto r = Relation::from_pairs(n, pairs);
    if (add_reflexive)
      for (int x = 0; x < n; ++x) r.set(x, x);
    return RelationalFrame(std::move(r));
  }

  int size() const { return compat_.size(); }
  bool compat(int x, int y) const { return compat_(x, y); }
  /// {y : x ◁ y}
  StateSet successors(int x) const { return compat_.row(x); }
  /// {y : y ◁ x}
  StateSet predecessors(int x) const { return converse_.row(x); }
  StateSet states() const { return StateSet::full(size()); }
  const Relation& relation() const { return compat_; }

  /// Compatibility frames are exactly the reflexive ones.
  bool is_compatibility_frame() const {
    for (int x = 0; x < size(); ++x)
      if (!compat(x, x)) return false;
    return true;
  }

  bool operator==(const RelationalFrame& o) const { return compat_ == o.compat_; }

 private:
  Relation compat_;
  Relation converse_;
};

/// c◁(A) = {x : every x' ◁ x has some x'' with x' ◁ x'' and x'' in A}.
inline StateSet closure(const RelationalFrame& F, StateSet A) {
  StateSet blind;  // states that see nothing in A
  for (int x = 0; x < F.size(); ++x)
    if (!F.successors(x).intersects(A)) blind.insert(x);
  StateSet out;
  for (int x = 0; x < F.size(); ++x)
    if (!F.predecessors(x).intersects(blind)) out.insert(x);
  return out;
}

/// ¬◁(A) = {x : no y ◁ x lies in A}.
inline StateSet neg(const RelationalFrame& F, StateSet A) {
  StateSet out;
  for (int x = 0; x < F.size(); ++x)
    if (!F.predecessors(x).intersects(A)) out.insert(x);
  return out;
}

inline bool is_fixpoint(const RelationalFrame& F, StateSet A) { return closure(F, A) == A; }

enum class FixpointMode { fast, oracle };

inline constexpr int kDefaultOracleCap = 20;
inline constexpr int kMaxFixpointLattice = 1024;

/// The c◁-fixpoints of F, listed by size then bit pattern.
///
/// Fast mode uses that c◁ is the polarity closure of the incompatibility relation:
/// the closed sets are exactly the intersections of the sets N(b) = {x : not b ◁ x}
/// (the empty intersection being X). Oracle mode scans all 2^n subsets.
inline std::vector<StateSet> fixpoint_family(const RelationalFrame& F,
                                             FixpointMode mode = FixpointMode::fast,
                                             int oracle_cap = kDefaultOracleCap) {
  const int n = F.size();
  std::vector<StateSet> family;
  if (mode == FixpointMode::oracle) {
    if (n > oracle_cap) {
      throw Error(ErrorKind::CapExceeded, "oracle fixpoint scan limited to " +
                                              std::to_string(oracle_cap) + " states");
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
      if (is_fixpoint(F, StateSet(bits))) family.push_back(StateSet(bits));
  } else {
    std::unordered_map<std::uint64_t, bool> seen;
    family.push_back(F.states());
    seen.emplace(F.states().bits(), true);
    for (int b = 0; b < n; ++b) {
      const StateSet N = F.successors(b).complement(n);
      const std::size_t current = family.size();
      for (std::size_t i = 0; i < current; ++i) {
        const StateSet s = family[i] & N;
        if (seen.emplace(s.bits(), true).second) family.push_back(s);
      }
    }
  }
  std::sort(family.begin(), family.end(), BySizeThenBits{});
  return family;
}

/// The complete lattice of c◁-fixpoints ordered by inclusion, with ¬◁ as a table.
/// Meet is intersection; join is the closure of the union.
struct FixpointLattice {
  RelationalFrame frame;
  std::vector<StateSet> fixpoints;
  FiniteLattice order;
  UnaryOpTable neg;
  std::unordered_map<std::uint64_t, int> index;

  std::optional<int> index_of(StateSet A) const {
    auto it = index.find(A.bits());
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  int size() const { return static_cast<int>(fixpoints.size()); }
};

inline FixpointLattice fixpoints(const RelationalFrame& F, FixpointMode mode = FixpointMode::fast,
                                 int oracle_cap = kDefaultOracleCap) {
  auto family = fixpoint_family(F, mode, oracle_cap);
  const int m = static_cast<int>(family.size());
  if (m > kMaxFixpointLattice) {
    throw Error(ErrorKind::CapExceeded, "fixpoint lattice has " + std::to_string(m) +
                                            " elements; limit is " +
                                            std::to_string(kMaxFixpointLattice));
  }
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < m; ++i) index.emplace(family[i].bits(), i);
  auto at = [&](StateSet s) {
    auto it = index.find(s.bits());
    if (it == index.end()) throw Error(ErrorKind::InvalidInput, "fixpoint family not closed");
    return it->second;
  };
  std::vector<char> leq(static_cast<std::size_t>(m) * m);
  std::vector<int> meet(static_cast<std::size_t>(m) * m), join(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      leq[i * m + j] = family[i].subset_of(family[j]);
      meet[i * m + j] = at(family[i] & family[j]);
      join[i * m + j] = at(closure(F, family[i] | family[j]));
    }
  std::vector<Element> negation(m);
  for (int i = 0; i < m; ++i) negation[i] = at(neg(F, family[i]));
  auto order = FiniteLattice::from_trusted_tables(m, std::move(leq), std::move(meet),
                                                  std::move(join), 0, m - 1);
  return FixpointLattice{F, std::move(family), std::move(order),
                         UnaryOpTable(std::move(negation)), std::move(index)};
}

/// Pre-, post- and full refinement plus compossibility, as relations on states.
/// pre(x, y): x pre-refines y; compossible(x, y): some w refines x and pre-refines y.
struct RefinementData {
  Relation pre;
  Relation post;
  Relation ref;
  Relation compossible;
};

inline RefinementData refinement(const RelationalFrame& F) {
  const int n = F.size();
  RefinementData d{Relation(n), Relation(n), Relation(n), Relation(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (F.predecessors(x).subset_of(F.predecessors(y))) d.pre.set(x, y);
      if (F.successors(x).subset_of(F.successors(y))) d.post.set(x, y);
      if (d.pre(x, y) && d.post(x, y)) d.ref.set(x, y);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w)
        if (d.ref(w, x) && d.pre(w, y)) {
          d.compossible.set(x, y);
          break;
        }
  return d;
}

struct FrameClass {
  bool reflexive = false;
  bool symmetric = false;
  bool preorder = false;
  bool compossible = false;
  bool operator==(const FrameClass&) const = default;
};

inline bool is_compossible(const RelationalFrame& F, const RefinementData& d) {
  for (int x = 0; x < F.size(); ++x)
    for (int y = 0; y < F.size(); ++y)
      if (F.compat(x, y) && !d.compossible(x, y)) return false;
  return true;
}

inline FrameClass classify_frame(const RelationalFrame& F) {
  const int n = F.size();
  FrameClass c;
  c.reflexive = F.is_compatibility_frame();
  c.symmetric = F.relation() == F.relation().transpose();
  bool transitive = true;
  for (int x = 0; x < n && transitive; ++x)
    F.successors(x).for_each([&](int y) {
      transitive = transitive && F.successors(y).subset_of(F.successors(x));
    });
  c.preorder = c.reflexive && transitive;
  c.compossible = is_compossible(F, refinement(F));
  return c;
}

/// A -> B = {x : every y pre-refining x with y in A is in B}; F must be a
/// compossible compatibility frame.
inline StateSet heyting_arrow_on_fixpoints(const RelationalFrame& F, const RefinementData& d,
                                           StateSet A, StateSet B) {
  if (!F.is_compatibility_frame() || !is_compossible(F, d)) {
    throw Error(ErrorKind::NotCompossible, "Heyting arrow needs a compossible frame");
  }
  StateSet out;
  for (int x = 0; x < F.size(); ++x) {
    bool ok = true;
    for (int y = 0; y < F.size() && ok; ++y)
      if (d.pre(y, x) && A.contains(y) && !B.contains(y)) ok = false;
    if (ok) out.insert(x);
  }
  return out;
}

inline StateSet heyting_arrow_on_fixpoints(const RelationalFrame& F, StateSet A, StateSet B) {
  return heyting_arrow_on_fixpoints(F, refinement(F), A, B);
}

/// (X, ▷): the converse relation.
inline RelationalFrame frame_dual(const RelationalFrame& F) {
  return RelationalFrame(F.relation().transpose());
}

namespace detail {
inline Relation juxtapose(const RelationalFrame& F, const RelationalFrame& G, bool link) {
  const int n = F.size(), m = G.size();
  require_state_count(n + m, "combined frame");
  Relation r(n + m);
  for (auto [x, y] : F.relation().pairs()) r.set(x, y);
  for (auto [x, y] : G.relation().pairs()) r.set(n + x, n + y);
  if (link)
    for (int x = 0; x < n; ++x)
      for (int g = 0; g < m; ++g) r.set(x, n + g);
  return r;
}
}  // namespace detail

/// States of F followed by states of G; every state of F is compatible with every
/// state of G (x ◁ g), and not conversely. The fixpoint lattice is the vertical sum
/// with L(F) at the bottom.
inline RelationalFrame frame_linear_sum(const RelationalFrame& F, const RelationalFrame& G) {
  return RelationalFrame(detail::juxtapose(F, G, true));
}

/// No compatibility across the two parts; the fixpoint lattice is the product.
inline RelationalFrame frame_disjoint_union(const RelationalFrame& F, const RelationalFrame& G) {
  return RelationalFrame(detail::juxtapose(F, G, false));
}

/// Sends a fixpoint A of the dual frame to {x : no y ◁ x lies in A}, a fixpoint of F;
/// this is the order-reversing bijection behind L(F^∂) ≅ L(F)^∂.
inline StateSet dual_witness(const RelationalFrame& F, StateSet A) { return neg(F, A); }

/// x ◁ y iff x and y have a common lower bound in P.
inline RelationalFrame regopen_frame(const Preorder& P) {
  Relation r(P.size());
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y)
      if (P.down(x).intersects(P.down(y))) r.set(x, y);
  return RelationalFrame(std::move(r));
}

/// The identity frame on n states.
inline RelationalFrame identity_frame(int n) {
  Relation r(n);
  for (int x = 0; x < n; ++x) r.set(x, x);
  return RelationalFrame(std::move(r));
}

/// The preorder viewed as a compatibility frame (x ◁ y iff x <= y).
inline RelationalFrame preorder_frame(const Preorder& P) {
  Relation r(P.size());
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y)
      if (P.leq(x, y)) r.set(x, y);
  return RelationalFrame(std::move(r));
}

namespace detail {
inline std::vector<std::vector<int>> frame_invariants(const std::vector<const Relation*>& rels) {
  const int n = rels.front()->size();
  std::vector<std::vector<int>> inv(n);
  for (const Relation* r : rels) {
    const Relation t = r->transpose();
    for (int x = 0; x < n; ++x) {
      inv[x].push_back(r->row(x).count());
      inv[x].push_back(t.row(x).count());
      inv[x].push_back((*r)(x, x));
    }
  }
  return inv;
}
}  // namespace detail

/// A bijection of states preserving every listed relation both ways, or nothing.
inline std::optional<Bijection> structures_isomorphic(const std::vector<const Relation*>& a,
                                                      const std::vector<const Relation*>& b) {
  if (a.size() != b.size() || a.empty() || a.front()->size() != b.front()->size()) {
    return std::nullopt;
  }
  std::vector<std::vector<char>> ta, tb;
  for (auto* r : a) ta.push_back(r->table());
  for (auto* r : b) tb.push_back(r->table());
  detail::RelStructure sa{a.front()->size(), {}, detail::frame_invariants(a)};
  detail::RelStructure sb{b.front()->size(), {}, detail::frame_invariants(b)};
  for (auto& t : ta) sa.relations.push_back(&t);
  for (auto& t : tb) sb.relations.push_back(&t);
  return detail::find_isomorphism(sa, sb);
}

inline std::optional<Bijection> frames_isomorphic(const RelationalFrame& F,
                                                  const RelationalFrame& G) {
  return structures_isomorphic({&F.relation()}, {&G.relation()});
}

}  // namespace compat

#endif  // COMPAT_FRAME_HPP_

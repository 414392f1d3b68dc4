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

#ifndef COMPAT_LATTICE_HPP_
#define COMPAT_LATTICE_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "compat/error.hpp"
#include "compat/state_set.hpp"

namespace compat {

/// Lattice elements are dense indices 0..n-1.
using Element = int;
using ElementList = std::vector<Element>;
using OrderPair = std::pair<Element, Element>;

/// A finite lattice stored as full order, meet and join tables.
///
/// Finite lattices are bounded and complete, so every hypothesis of the form
/// "L is a complete lattice" is discharged by constructing one of these.
/// Instances are immutable once built.
class FiniteLattice {
 public:
  /// Validates `leq` (row-major, n*n) as a partial order with all meets and joins.
  static FiniteLattice from_order_table(int n, std::vector<char> leq) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "a lattice needs at least one element");
    if (static_cast<int>(leq.size()) != n * n) {
      throw Error(ErrorKind::InvalidInput, "order table has the wrong size");
    }
    FiniteLattice L;
    L.n_ = n;
    L.leq_ = std::move(leq);
    for (int a = 0; a < n; ++a) {
      if (!L.leq(a, a)) {
        throw Error(ErrorKind::NotAPoset, "order is not reflexive at " + std::to_string(a));
      }
      for (int b = 0; b < n; ++b) {
        if (a != b && L.leq(a, b) && L.leq(b, a)) {
          throw Error(ErrorKind::NotAPoset, "antisymmetry fails for (" + std::to_string(a) +
                                                "," + std::to_string(b) + ")");
        }
        if (!L.leq(a, b)) continue;
        for (int c = 0; c < n; ++c) {
          if (L.leq(b, c) && !L.leq(a, c)) {
            throw Error(ErrorKind::NotAPoset,
                        "transitivity fails for (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
    L.meet_.assign(n * n, -1);
    L.join_.assign(n * n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        const int m = L.extremal_bound(a, b, /*upper=*/false);
        const int j = L.extremal_bound(a, b, /*upper=*/true);
        if (m < 0 || j < 0) {
          throw Error(ErrorKind::NotALattice,
                      std::string(m < 0 ? "no meet" : "no join") + " for pair (" +
                          std::to_string(a) + "," + std::to_string(b) + ")");
        }
        L.meet_[a * n + b] = L.meet_[b * n + a] = m;
        L.join_[a * n + b] = L.join_[b * n + a] = j;
      }
    }
    L.bottom_ = 0;
    L.top_ = 0;
    for (int a = 1; a < n; ++a) {
      L.bottom_ = L.meet(L.bottom_, a);
      L.top_ = L.join(L.top_, a);
    }
    return L;
  }

  /// Adopts precomputed meet/join tables without re-deriving them. Callers must
  /// guarantee `meet`/`join` are the glb/lub tables of `leq` (used for fixpoint
  /// lattices, where meet is intersection and join is closure of union).
  static FiniteLattice from_trusted_tables(int n, std::vector<char> leq, std::vector<int> meet,
                                           std::vector<int> join, Element bottom, Element top) {
    FiniteLattice L;
    L.n_ = n;
    L.leq_ = std::move(leq);
    L.meet_ = std::move(meet);
    L.join_ = std::move(join);
    L.bottom_ = bottom;
    L.top_ = top;
    return L;
  }

  int size() const { return n_; }
  bool leq(Element a, Element b) const { return leq_[a * n_ + b] != 0; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::vector<char>& order_table() const { return leq_; }

  /// Meet of a family; the empty meet is the top.
  Element meet_of(std::span<const Element> xs) const {
    Element m = top_;
    for (Element x : xs) m = meet(m, x);
    return m;
  }
  /// Join of a family; the empty join is the bottom.
  Element join_of(std::span<const Element> xs) const {
    Element j = bottom_;
    for (Element x : xs) j = join(j, x);
    return j;
  }

  ElementList lower_covers(Element a) const {
    ElementList out;
    for (int b = 0; b < n_; ++b) {
      if (!less(b, a)) continue;
      bool cover = true;
      for (int c = 0; c < n_ && cover; ++c) cover = !(less(b, c) && less(c, a));
      if (cover) out.push_back(b);
    }
    return out;
  }
  ElementList upper_covers(Element a) const {
    ElementList out;
    for (int b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n_ && cover; ++c) cover = !(less(a, c) && less(c, b));
      if (cover) out.push_back(b);
    }
    return out;
  }

  /// All (a, b) with a <= b.
  std::vector<OrderPair> order_pairs() const {
    std::vector<OrderPair> out;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (leq(a, b)) out.emplace_back(a, b);
    return out;
  }

  bool operator==(const FiniteLattice& o) const { return n_ == o.n_ && leq_ == o.leq_; }

 private:
  FiniteLattice() = default;

  // Greatest lower bound (upper=false) or least upper bound (upper=true), -1 if absent.
  int extremal_bound(int a, int b, bool upper) const {
    int best = -1;
    for (int c = 0; c < n_; ++c) {
      const bool bound = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
      if (!bound) continue;
      if (best < 0 || (upper ? leq(c, best) : leq(best, c))) best = c;
    }
    if (best < 0) return -1;
    for (int c = 0; c < n_; ++c) {
      const bool bound = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
      if (bound && !(upper ? leq(best, c) : leq(c, best))) return -1;
    }
    return best;
  }

  int n_ = 0;
  std::vector<char> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
};

namespace detail {

inline std::vector<char> reflexive_table(int n, std::span<const OrderPair> pairs) {
  std::vector<char> t(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) t[a * n + a] = 1;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorKind::InvalidInput, "order pair (" + std::to_string(a) + "," +
                                               std::to_string(b) + ") out of range");
    }
    t[a * n + b] = 1;
  }
  return t;
}

inline void transitive_closure(int n, std::vector<char>& t) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (t[i * n + k])
        for (int j = 0; j < n; ++j)
          if (t[k * n + j]) t[i * n + j] = 1;
}

}  // namespace detail

/// Builds a lattice from generating order pairs; reflexive and transitive closure are applied.
inline FiniteLattice build_lattice(std::span<const OrderPair> pairs, int size) {
  auto t = detail::reflexive_table(size, pairs);
  detail::transitive_closure(size, t);
  return FiniteLattice::from_order_table(size, std::move(t));
}

/// Same as build_lattice, but the pairs must already be transitively closed.
inline FiniteLattice build_lattice_exact(std::span<const OrderPair> pairs, int size) {
  return FiniteLattice::from_order_table(size, detail::reflexive_table(size, pairs));
}

inline ElementList join_irreducibles(const FiniteLattice& L) {
  ElementList out;
  for (int a = 0; a < L.size(); ++a)
    if (a != L.bottom() && L.lower_covers(a).size() == 1) out.push_back(a);
  return out;
}

inline ElementList meet_irreducibles(const FiniteLattice& L) {
  ElementList out;
  for (int a = 0; a < L.size(); ++a)
    if (a != L.top() && L.upper_covers(a).size() == 1) out.push_back(a);
  return out;
}

/// Every element is the join of the members of V below it.
inline bool is_join_dense(const FiniteLattice& L, std::span<const Element> V) {
  for (int a = 0; a < L.size(); ++a) {
    Element j = L.bottom();
    for (Element v : V)
      if (L.leq(v, a)) j = L.join(j, v);
    if (j != a) return false;
  }
  return true;
}

inline bool is_meet_dense(const FiniteLattice& L, std::span<const Element> M) {
  for (int a = 0; a < L.size(); ++a) {
    Element m = L.top();
    for (Element v : M)
      if (L.leq(a, v)) m = L.meet(m, v);
    if (m != a) return false;
  }
  return true;
}

inline bool is_distributive(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

inline bool is_chain(const FiniteLattice& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (!L.leq(a, b) && !L.leq(b, a)) return false;
  return true;
}

/// Row-major table of a binary operation on lattice elements.
struct BinaryOpTable {
  int n = 0;
  std::vector<Element> cells;
  Element operator()(Element a, Element b) const { return cells[a * n + b]; }
};

/// Relative pseudocomplement a -> b = max{c : a ∧ c <= b}; absent when some maximum
/// fails to exist (the lattice is then not Heyting). Residuation is re-checked.
inline std::optional<BinaryOpTable> heyting_arrow(const FiniteLattice& L) {
  const int n = L.size();
  BinaryOpTable arrow{n, std::vector<Element>(static_cast<std::size_t>(n) * n, -1)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c)
        if (L.leq(L.meet(a, c), b) && (best < 0 || L.leq(best, c))) best = c;
      for (int c = 0; c < n && best >= 0; ++c)
        if (L.leq(L.meet(a, c), b) && !L.leq(c, best)) best = -1;
      if (best < 0) return std::nullopt;
      arrow.cells[a * n + b] = best;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.leq(L.meet(a, c), b) != L.leq(c, arrow(a, b))) return std::nullopt;
  return arrow;
}

inline FiniteLattice dual(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<char> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = L.leq(b, a);
  return FiniteLattice::from_order_table(n, std::move(t));
}

/// Glues the top of `lower` to the bottom of `upper`. Elements of `lower` keep their
/// indices; element u != bottom of `upper` becomes |lower| + (rank of u among the rest).
inline FiniteLattice vertical_sum(const FiniteLattice& lower, const FiniteLattice& upper) {
  const int n1 = lower.size();
  const int n = n1 + upper.size() - 1;
  std::vector<int> index(upper.size());
  for (int u = 0, next = n1; u < upper.size(); ++u)
    index[u] = (u == upper.bottom()) ? lower.top() : next++;
  std::vector<char> t(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n1; ++b) t[a * n + b] = lower.leq(a, b);
    for (int u = 0; u < upper.size(); ++u)
      if (u != upper.bottom()) t[a * n + index[u]] = 1;
  }
  for (int u = 0; u < upper.size(); ++u)
    for (int v = 0; v < upper.size(); ++v)
      if (upper.leq(u, v)) t[index[u] * n + index[v]] = 1;
  return FiniteLattice::from_order_table(n, std::move(t));
}

/// Componentwise order; pair (a, b) has index a * |right| + b.
inline FiniteLattice product(const FiniteLattice& left, const FiniteLattice& right) {
  const int m = right.size();
  const int n = left.size() * m;
  std::vector<char> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * n + y] = left.leq(x / m, y / m) && right.leq(x % m, y % m);
  return FiniteLattice::from_order_table(n, std::move(t));
}

/// A reflexive, transitive relation on 0..n-1.
class Preorder {
 public:
  /// Closes the pairs reflexively and transitively.
  static Preorder from_pairs(int n, std::span<const OrderPair> pairs) {
    require_state_count(n, "preorder");
    auto t = detail::reflexive_table(n, pairs);
    detail::transitive_closure(n, t);
    return Preorder(n, std::move(t));
  }
  /// Requires a table that is already reflexive and transitive.
  static Preorder from_table(int n, std::vector<char> t) {
    require_state_count(n, "preorder");
    if (static_cast<int>(t.size()) != n * n) {
      throw Error(ErrorKind::InvalidInput, "preorder table has the wrong size");
    }
    auto closed = t;
    for (int a = 0; a < n; ++a) closed[a * n + a] = 1;
    detail::transitive_closure(n, closed);
    if (closed != t) throw Error(ErrorKind::NotAPoset, "relation is not a preorder");
    return Preorder(n, std::move(t));
  }

  int size() const { return n_; }
  bool leq(int a, int b) const { return rel_[a * n_ + b] != 0; }
  StateSet down(int a) const {
    StateSet s;
    for (int b = 0; b < n_; ++b)
      if (leq(b, a)) s.insert(b);
    return s;
  }

 private:
  Preorder(int n, std::vector<char> rel) : n_(n), rel_(std::move(rel)) {}
  int n_;
  std::vector<char> rel_;
};

inline bool is_downset(const Preorder& P, StateSet A) {
  bool ok = true;
  A.for_each([&](int a) { ok = ok && P.down(a).subset_of(A); });
  return ok;
}

/// All downsets of P, listed by size then bit pattern.
inline std::vector<StateSet> downsets(const Preorder& P) {
  std::vector<StateSet> family{StateSet{}};
  // Every downset is a union of principal downsets; close the family under union.
  for (int a = 0; a < P.size(); ++a) {
    const StateSet d = P.down(a);
    const std::size_t current = family.size();
    for (std::size_t i = 0; i < current; ++i) {
      const StateSet u = family[i] | d;
      if (std::find(family.begin(), family.end(), u) == family.end()) family.push_back(u);
    }
  }
  std::sort(family.begin(), family.end(), BySizeThenBits{});
  return family;
}

/// Downsets A with A = {x : for all x' <= x there is x'' <= x' in A}.
inline std::vector<StateSet> regular_open_downsets(const Preorder& P) {
  std::vector<StateSet> out;
  for (StateSet A : downsets(P)) {
    StateSet interior_closure;
    for (int x = 0; x < P.size(); ++x) {
      bool all = true;
      P.down(x).for_each([&](int xp) { all = all && P.down(xp).intersects(A); });
      if (all) interior_closure.insert(x);
    }
    if (interior_closure == A) out.push_back(A);
  }
  return out;
}

}  // namespace compat

#endif  // COMPAT_LATTICE_HPP_

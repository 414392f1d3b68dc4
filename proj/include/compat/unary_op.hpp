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

#ifndef COMPAT_UNARY_OP_HPP_
#define COMPAT_UNARY_OP_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "compat/lattice.hpp"

namespace compat {

/// A total function on the elements of one lattice.
class UnaryOpTable {
 public:
  UnaryOpTable() = default;
  explicit UnaryOpTable(std::vector<Element> image) : image_(std::move(image)) {}

  Element operator()(Element a) const { return image_[a]; }
  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<Element>& image() const { return image_; }
  bool operator==(const UnaryOpTable&) const = default;

  /// Throws InvalidInput unless the table is total on L.
  void require_total_on(const FiniteLattice& L) const {
    if (size() != L.size()) {
      throw Error(ErrorKind::InvalidInput, "operation table has " + std::to_string(size()) +
                                               " entries for a lattice of size " +
                                               std::to_string(L.size()));
    }
    for (Element v : image_)
      if (v < 0 || v >= L.size()) throw Error(ErrorKind::InvalidInput, "image out of range");
  }

 private:
  std::vector<Element> image_;
};

struct NegationProfile {
  bool antitone = false;
  bool involutive = false;
  bool anti_inflationary = false;
  bool semicomplementation = false;
  bool complementation = false;
  bool pseudocomplementation = false;
  bool protocomplementation = false;
  bool orthocomplementation = false;
  bool operator==(const NegationProfile&) const = default;
};

struct BoxProfile {
  bool multiplicative = false;
  bool completely_multiplicative = false;
  bool preserves_top = false;
  bool monotone = false;
  bool operator==(const BoxProfile&) const = default;
};

/// max{y : a ∧ y = 0}, or -1 when the annihilator has no maximum.
inline Element pseudocomplement_of(const FiniteLattice& L, Element a) {
  Element best = -1;
  for (int y = 0; y < L.size(); ++y)
    if (L.meet(a, y) == L.bottom() && (best < 0 || L.leq(best, y))) best = y;
  for (int y = 0; y < L.size() && best >= 0; ++y)
    if (L.meet(a, y) == L.bottom() && !L.leq(y, best)) return -1;
  return best;
}

inline NegationProfile classify_negation(const FiniteLattice& L, const UnaryOpTable& neg) {
  neg.require_total_on(L);
  const int n = L.size();
  NegationProfile p;
  p.antitone = p.involutive = p.anti_inflationary = p.semicomplementation =
      p.complementation = p.pseudocomplementation = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (L.leq(a, b) && !L.leq(neg(b), neg(a))) p.antitone = false;
    if (neg(neg(a)) != a) p.involutive = false;
    if (a != L.bottom() && L.leq(a, neg(a))) p.anti_inflationary = false;
    if (L.meet(a, neg(a)) != L.bottom()) p.semicomplementation = false;
    if (L.meet(a, neg(a)) != L.bottom() || L.join(a, neg(a)) != L.top()) {
      p.complementation = false;
    }
    if (pseudocomplement_of(L, a) != neg(a)) p.pseudocomplementation = false;
  }
  p.protocomplementation =
      p.antitone && p.semicomplementation && neg(L.bottom()) == L.top();
  p.orthocomplementation = p.involutive && p.antitone && p.complementation;
  return p;
}

/// Multiplicativity includes □1 = 1. Complete multiplicativity is checked over every
/// subset of L (with the empty meet equal to the top), so L is capped at 20 elements.
inline BoxProfile check_box(const FiniteLattice& L, const UnaryOpTable& box) {
  box.require_total_on(L);
  const int n = L.size();
  if (n > 20) throw Error(ErrorKind::CapExceeded, "check_box enumerates all subsets; n <= 20");
  BoxProfile p;
  p.preserves_top = box(L.top()) == L.top();
  p.monotone = true;
  bool pairwise = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (box(L.meet(a, b)) != L.meet(box(a), box(b))) pairwise = false;
      if (L.leq(a, b) && !L.leq(box(a), box(b))) p.monotone = false;
    }
  p.multiplicative = pairwise && p.preserves_top;
  p.completely_multiplicative = true;
  std::vector<Element> meet_of(std::size_t{1} << n), box_meet(std::size_t{1} << n);
  meet_of[0] = L.top();
  box_meet[0] = L.top();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    meet_of[mask] = L.meet(meet_of[rest], low);
    box_meet[mask] = L.meet(box_meet[rest], box(low));
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
    if (box(meet_of[mask]) != box_meet[mask]) {
      p.completely_multiplicative = false;
      break;
    }
  return p;
}

/// ¬0 = 1 and ¬a = 0 otherwise; a protocomplementation on every bounded lattice.
inline UnaryOpTable trivial_protocomplementation(const FiniteLattice& L) {
  std::vector<Element> t(L.size(), L.bottom());
  t[L.bottom()] = L.top();
  return UnaryOpTable(std::move(t));
}

/// The pseudocomplementation, if every element has a pseudocomplement.
inline std::optional<UnaryOpTable> pseudocomplementation(const FiniteLattice& L) {
  std::vector<Element> t(L.size());
  for (int a = 0; a < L.size(); ++a) {
    t[a] = pseudocomplement_of(L, a);
    if (t[a] < 0) return std::nullopt;
  }
  return UnaryOpTable(std::move(t));
}

inline UnaryOpTable identity_op(const FiniteLattice& L) {
  std::vector<Element> t(L.size());
  for (int a = 0; a < L.size(); ++a) t[a] = a;
  return UnaryOpTable(std::move(t));
}

/// ◇ = ¬□¬ as a derived table.
inline UnaryOpTable diamond(const UnaryOpTable& box, const UnaryOpTable& neg) {
  std::vector<Element> t(box.size());
  for (int a = 0; a < box.size(); ++a) t[a] = neg(box(neg(a)));
  return UnaryOpTable(std::move(t));
}

namespace detail {

// Depth-first enumeration of tables where entry a is drawn from candidates(a) and
// accept(partial, a) prunes after each assignment of entry a.
template <class Candidates, class Accept, class Emit>
void enumerate_tables(int n, Candidates&& candidates, Accept&& accept, Emit&& emit) {
  std::vector<Element> t(n, -1);
  std::function<bool(int)> rec = [&](int a) -> bool {
    if (a == n) return emit(UnaryOpTable(t));
    for (Element v : candidates(a)) {
      t[a] = v;
      if (accept(t, a) && !rec(a + 1)) return false;
    }
    t[a] = -1;
    return true;
  };
  rec(0);
}

}  // namespace detail

/// Every orthocomplementation on L.
inline std::vector<UnaryOpTable> orthocomplementations(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<UnaryOpTable> out;
  auto candidates = [&](int a) {
    ElementList c;
    for (int y = 0; y < n; ++y)
      if (L.meet(a, y) == L.bottom() && L.join(a, y) == L.top()) c.push_back(y);
    return c;
  };
  auto accept = [&](const std::vector<Element>& t, int a) {
    const Element v = t[a];
    if (v < a && t[v] != a) return false;  // involution with an earlier entry
    if (v > a && t[v] >= 0 && t[v] != a) return false;
    for (int b = 0; b < a; ++b) {
      if (L.leq(a, b) && !L.leq(t[b], v)) return false;
      if (L.leq(b, a) && !L.leq(v, t[b])) return false;
    }
    return true;
  };
  detail::enumerate_tables(n, candidates, accept, [&](UnaryOpTable op) {
    if (classify_negation(L, op).orthocomplementation) out.push_back(std::move(op));
    return true;
  });
  return out;
}

/// Every protocomplementation on L (antitone semicomplementation with ¬0 = 1).
inline std::vector<UnaryOpTable> protocomplementations(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<UnaryOpTable> out;
  auto candidates = [&](int a) {
    ElementList c;
    if (a == L.bottom()) return ElementList{L.top()};
    for (int y = 0; y < n; ++y)
      if (L.meet(a, y) == L.bottom()) c.push_back(y);
    return c;
  };
  auto accept = [&](const std::vector<Element>& t, int a) {
    for (int b = 0; b < a; ++b) {
      if (L.leq(a, b) && !L.leq(t[b], t[a])) return false;
      if (L.leq(b, a) && !L.leq(t[a], t[b])) return false;
    }
    return true;
  };
  detail::enumerate_tables(n, candidates, accept, [&](UnaryOpTable op) {
    out.push_back(std::move(op));
    return true;
  });
  return out;
}

/// Every multiplicative box (□(a∧b) = □a∧□b, □1 = 1); these are monotone maps,
/// so enumeration runs over monotone tables and filters.
inline std::vector<UnaryOpTable> multiplicative_boxes(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<UnaryOpTable> out;
  auto candidates = [&](int a) {
    if (a == L.top()) return ElementList{L.top()};
    ElementList c(n);
    for (int y = 0; y < n; ++y) c[y] = y;
    return c;
  };
  auto accept = [&](const std::vector<Element>& t, int a) {
    for (int b = 0; b < a; ++b) {
      if (L.leq(a, b) && !L.leq(t[a], t[b])) return false;
      if (L.leq(b, a) && !L.leq(t[b], t[a])) return false;
      const Element m = L.meet(a, b);
      if (m <= a && t[m] >= 0 && t[m] != L.meet(t[a], t[b])) return false;
    }
    return true;
  };
  detail::enumerate_tables(n, candidates, accept, [&](UnaryOpTable op) {
    if (check_box(L, op).multiplicative) out.push_back(std::move(op));
    return true;
  });
  return out;
}

}  // namespace compat

#endif  // COMPAT_UNARY_OP_HPP_

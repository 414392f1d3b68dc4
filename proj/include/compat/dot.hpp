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

#ifndef COMPAT_DOT_HPP_
#define COMPAT_DOT_HPP_

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "compat/frame.hpp"
#include "compat/lattice.hpp"
#include "compat/unary_op.hpp"

namespace compat::dot {

// Plain digraphs with nodes s0..s{n-1}. Edges come out in (source, target)
// order so the text is byte-stable.

inline std::string node(int i) { return "s" + std::to_string(i); }

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Frame drawn as (X, ▷): an edge y -> x with an empty triangle head for each
/// x ◁ y, x != y. Loops are left out. Accessibility edges are dotted.
inline std::string frame_to_dot(const RelationalFrame& F, const Relation* access = nullptr,
                                const std::vector<std::string>* labels = nullptr) {
  std::ostringstream out;
  const int n = F.size();
  out << "digraph frame {\n";
  for (int i = 0; i < n; ++i) {
    out << "  " << node(i);
    if (labels && i < static_cast<int>(labels->size())) out << " [label=" << quote((*labels)[i]) << "]";
    out << ";\n";
  }
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (x != y && F.compat(x, y)) out << "  " << node(y) << " -> " << node(x) << " [arrowhead=empty];\n";
  if (access) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((*access)(x, y)) out << "  " << node(x) << " -> " << node(y) << " [style=dotted];\n";
  }
  out << "}\n";
  return out.str();
}

/// Hasse diagram, bottom to top. ¬ arrows are dashed (¬0 = 1 and ¬1 = 0 are
/// not drawn); □ arrows are gray vee-headed, fixed points of □ are not drawn.
inline std::string lattice_to_dot(const FiniteLattice& L, const UnaryOpTable* neg = nullptr,
                                  const UnaryOpTable* box = nullptr,
                                  const std::vector<std::string>* labels = nullptr) {
  std::ostringstream out;
  const int n = L.size();
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < n; ++i) {
    out << "  " << node(i);
    if (labels && i < static_cast<int>(labels->size())) out << " [label=" << quote((*labels)[i]) << "]";
    out << ";\n";
  }
  for (int a = 0; a < n; ++a) {
    auto up = L.upper_covers(a);
    std::sort(up.begin(), up.end());
    for (Element b : up) out << "  " << node(a) << " -> " << node(b) << " [arrowhead=none];\n";
  }
  if (neg) {
    for (int a = 0; a < n; ++a) {
      const Element b = (*neg)(a);
      if ((a == L.bottom() && b == L.top()) || (a == L.top() && b == L.bottom())) continue;
      out << "  " << node(a) << " -> " << node(b) << " [style=dashed];\n";
    }
  }
  if (box) {
    for (int a = 0; a < n; ++a) {
      const Element b = (*box)(a);
      if (b == a) continue;
      out << "  " << node(a) << " -> " << node(b) << " [arrowhead=vee,color=gray,penwidth=2];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace compat::dot

#endif  // COMPAT_DOT_HPP_

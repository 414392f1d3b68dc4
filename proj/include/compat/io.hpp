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

#ifndef COMPAT_IO_HPP_
#define COMPAT_IO_HPP_

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "compat/error.hpp"
#include "compat/frame.hpp"
#include "compat/lattice.hpp"
#include "compat/modal.hpp"
#include "compat/representation.hpp"
#include "compat/search.hpp"
#include "compat/unary_op.hpp"

namespace compat::io {

using json = nlohmann::json;

// Shapes are checked by hand against schemas/*.json; any mismatch is a ParseError
// naming the offending key.

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

inline void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; })) {
      fail(where, "unknown key \"" + it.key() + "\"");
    }
  }
}

inline int get_int(const json& j, const std::string& where, int lo, int hi) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) {
    fail(where, std::to_string(v) + " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

inline int get_size(const json& j, const std::string& where) {
  if (!j.contains("size")) fail(where, "missing \"size\"");
  return get_int(j.at("size"), where + ".size", 1, 1 << 16);
}

inline bool get_flag(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) fail(where + "." + key, "expected a boolean");
  return j.at(key).get<bool>();
}

inline std::vector<std::pair<int, int>> get_pairs(const json& j, const char* key, int n,
                                                  const std::string& where) {
  const std::string w = where + "." + key;
  if (!j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  const json& a = j.at(key);
  if (!a.is_array()) fail(w, "expected an array of [i,j] pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string wi = w + "[" + std::to_string(i) + "]";
    if (!a[i].is_array() || a[i].size() != 2) fail(wi, "expected [i,j]");
    out.emplace_back(get_int(a[i][0], wi, 0, n - 1), get_int(a[i][1], wi, 0, n - 1));
  }
  return out;
}

inline std::vector<Element> get_table(const json& a, int n, const std::string& where) {
  if (!a.is_array()) fail(where, "expected an array");
  if (static_cast<int>(a.size()) != n) {
    fail(where, "has " + std::to_string(a.size()) + " entries, expected " + std::to_string(n));
  }
  std::vector<Element> t;
  for (std::size_t i = 0; i < a.size(); ++i)
    t.push_back(get_int(a[i], where + "[" + std::to_string(i) + "]", 0, n - 1));
  return t;
}

inline json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  json a = json::array();
  for (auto [x, y] : ps) a.push_back({x, y});
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Text and files

inline json parse_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, source + ": " + e.what());
  }
}

/// Reads a whole file, or stdin for "" and "-".
inline std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::string& path) {
  return parse_text(read_text(path), path.empty() || path == "-" ? "<stdin>" : path);
}

// ---------------------------------------------------------------------------
// Lattices: {"size", "leq", "closure"?, "box"?, "neg"?}

struct LatticeDoc {
  FiniteLattice lattice;
  std::optional<UnaryOpTable> box;
  std::optional<UnaryOpTable> neg;
};

inline LatticeDoc parse_lattice(const json& j) {
  const std::string w = "lattice";
  detail::only_keys(j, w, {"size", "leq", "closure", "box", "neg"});
  const int n = detail::get_size(j, w);
  auto leq = detail::get_pairs(j, "leq", n, w);
  const bool closure = detail::get_flag(j, "closure", w);
  std::vector<OrderPair> ps(leq.begin(), leq.end());
  LatticeDoc doc{closure ? build_lattice(ps, n) : build_lattice_exact(ps, n), {}, {}};
  if (j.contains("box")) doc.box = UnaryOpTable(detail::get_table(j.at("box"), n, w + ".box"));
  if (j.contains("neg")) doc.neg = UnaryOpTable(detail::get_table(j.at("neg"), n, w + ".neg"));
  return doc;
}

/// Strict pairs a < b only; reflexive pairs are implied.
inline json lattice_to_json(const FiniteLattice& L, const UnaryOpTable* box = nullptr,
                            const UnaryOpTable* neg = nullptr) {
  std::vector<std::pair<int, int>> ps;
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (a != b && L.leq(a, b)) ps.emplace_back(a, b);
  json j{{"size", L.size()}, {"leq", detail::pairs_json(ps)}};
  if (box) j["box"] = box->image();
  if (neg) j["neg"] = neg->image();
  return j;
}

// {"op": [...]} for a lattice of size n.
inline UnaryOpTable parse_op(const json& j, int n) {
  detail::only_keys(j, "op", {"op"});
  if (!j.contains("op")) detail::fail("op", "missing \"op\"");
  return UnaryOpTable(detail::get_table(j.at("op"), n, "op.op"));
}

// ---------------------------------------------------------------------------
// Frames: {"size", "compat", "reflexive_implicit"?, "access"?}

struct FrameDoc {
  RelationalFrame frame;
  std::optional<Relation> access;
};

inline FrameDoc parse_frame(const json& j) {
  const std::string w = "frame";
  detail::only_keys(j, w, {"size", "compat", "reflexive_implicit", "access"});
  const int n = detail::get_size(j, w);
  require_state_count(n, "frame");
  auto compat = detail::get_pairs(j, "compat", n, w);
  const bool refl = detail::get_flag(j, "reflexive_implicit", w);
  FrameDoc doc{RelationalFrame::from_pairs(n, compat, refl), {}};
  if (j.contains("access")) doc.access = Relation::from_pairs(n, detail::get_pairs(j, "access", n, w));
  return doc;
}

/// Loops are dropped and reflexive_implicit set when the frame is reflexive.
inline json frame_to_json(const RelationalFrame& F, const Relation* access = nullptr) {
  const bool refl = classify_frame(F).reflexive;
  std::vector<std::pair<int, int>> ps;
  for (auto [x, y] : F.relation().pairs())
    if (!refl || x != y) ps.emplace_back(x, y);
  json j{{"size", F.size()}, {"compat", detail::pairs_json(ps)}, {"reflexive_implicit", refl}};
  if (access) j["access"] = detail::pairs_json(access->pairs());
  return j;
}

// ---------------------------------------------------------------------------
// Reports

inline json verdict_to_json(const Verdict& v) {
  return json{{"embedding", v.embedding},
              {"isomorphism", v.isomorphism},
              {"neg_preserved", v.neg_preserved},
              {"frame_size", v.frame_size},
              {"witness_iso", v.witness_iso}};
}

inline json modal_verdict_to_json(const ModalVerdict& v) {
  json j = verdict_to_json(v.base);
  j["ca_frame"] = v.ca_frame;
  j["box_preserved"] = v.box_preserved;
  return j;
}

inline json sets_json(const std::vector<StateSet>& sets) {
  json a = json::array();
  for (const StateSet s : sets) {
    a.push_back(s.members());
  }
  return a;
}

inline json report_to_json(const ConjectureReport& r) {
  json j{{"id", r.id},
         {"lattice_size", r.lattice_size},
         {"min_cover", r.min_cover},
         {"gallai_ok", r.gallai_ok},
         {"frame_size", r.frame_size},
         {"iso_verified", r.iso_verified},
         {"method", r.method},
         {"holds", conjecture_holds(r)}};
  j["oracle_verified"] = r.oracle_verified ? json(*r.oracle_verified) : json(nullptr);
  j["frame"] = detail::pairs_json(r.frame);
  return j;
}

}  // namespace compat::io

#endif  // COMPAT_IO_HPP_

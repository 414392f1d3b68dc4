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


// compat_cli: fixpoints, represent, check, modal, sweep, export-dot.
// JSON on stdin/stdout when no path is given.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "compat.hpp"

namespace {

using compat::io::json;
using namespace compat;

struct Caps {
  int oracle_cap = static_cast<int>(env_int("COMPAT_ORACLE_CAP", kDefaultOracleCap));
  int sweep_max_n = static_cast<int>(env_int("COMPAT_SWEEP_MAX_N", 6));
  long search_budget = env_int("COMPAT_SEARCH_BUDGET", kDefaultSearchBudget);
};

bool is_frame_doc(const json& j) { return j.is_object() && j.contains("compat"); }

// --neg/--box accept inline JSON ("[1,0]" or {"op":[...]}) or a file path.
std::optional<UnaryOpTable> op_arg(const std::string& arg, int n) {
  if (arg.empty()) return std::nullopt;
  const bool inline_json = arg.front() == '[' || arg.front() == '{';
  json j = inline_json ? io::parse_text(arg, "op argument") : io::read_json(arg);
  if (j.is_array()) j = json{{"op", j}};
  return io::parse_op(j, n);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json classification_json(const RelationalFrame& F) {
  const auto c = classify_frame(F);
  return json{{"reflexive", c.reflexive},
              {"symmetric", c.symmetric},
              {"preorder", c.preorder},
              {"compossible", c.compossible},
              {"compatibility_frame", F.is_compatibility_frame()}};
}

json fixpoints_json(const RelationalFrame& F, bool oracle, int cap) {
  const auto FL = fixpoints(F, oracle ? FixpointMode::oracle : FixpointMode::fast, cap);
  json j;
  j["fixpoints"] = io::sets_json(FL.fixpoints);
  j["lattice"] = io::lattice_to_json(FL.order, nullptr, &FL.neg);
  j["identified"] = named::identify_lattice(FL.order);
  j["classification"] = classification_json(F);
  return j;
}

// ---- fixpoints ----

int cmd_fixpoints(const std::string& path, bool oracle, const Caps& caps) {
  auto doc = io::parse_frame(io::read_json(path));
  emit(fixpoints_json(doc.frame, oracle, caps.oracle_cap));
  return 0;
}

// ---- represent / modal ----

struct RepOut {
  RelationalFrame frame;
  std::optional<Relation> access;
  json verdict;
  bool ok = false;
};

std::optional<ModalMethod> modal_method(const std::string& m) {
  if (m == "join-dense") return ModalMethod::join_dense;
  if (m == "pairs") return ModalMethod::pairs;
  if (m == "pairs-neg") return ModalMethod::pairs_neg;
  return std::nullopt;
}

RepOut represent(const io::LatticeDoc& doc, const std::string& method) {
  const auto& L = doc.lattice;
  if (method == "filter-ideal") {
    if (doc.box) {
      auto m = modal_filter_ideal(L, *doc.box);
      json v{{"ca_frame", m.ca_frame},
             {"fo_condition", m.fo_condition},
             {"box_preserved", m.box_preserved},
             {"embedding", m.embedding},
             {"compact_open_iso", m.compact_open_iso},
             {"frame_size", m.space.frame.size()}};
      return {m.space.frame, m.R, v, m.embedding && m.compact_open_iso && m.ca_frame};
    }
    auto S = filter_ideal_space(L);
    auto co = compact_open_fixpoints(S);
    json v{{"image_is_compact_open_fixpoints", co.image_is_family},
           {"hat_isomorphism", co.hat_isomorphism},
           {"frame_size", S.frame.size()}};
    return {S.frame, std::nullopt, v, co.hat_isomorphism};
  }
  auto mm = modal_method(method);
  if (!mm) throw Error(ErrorKind::InvalidInput, "unknown method " + method);
  if (doc.box) {
    auto rep = modal_represent(L, *doc.box, *mm, doc.neg);
    const auto& v = rep.verdict;
    return {rep.ca.frame, rep.ca.R, io::modal_verdict_to_json(v),
            v.base.isomorphism && v.ca_frame && v.box_preserved};
  }
  switch (*mm) {
    case ModalMethod::join_dense: {
      std::optional<UnaryOpTable> ng = doc.neg;
      if (!ng) {
        auto pc = pseudocomplementation(L);
        ng = pc ? *pc : trivial_protocomplementation(L);
      }
      auto rep = represent_join_dense(L, *ng);
      json v = io::verdict_to_json(rep.verdict);
      v["V"] = rep.V;
      v["suitability"] = json{{"first", rep.suitability.first},
                              {"second", rep.suitability.second},
                              {"third", rep.suitability.third ? json(*rep.suitability.third) : json(nullptr)}};
      return {rep.frame, std::nullopt, v, rep.verdict.isomorphism};
    }
    case ModalMethod::pairs:
    case ModalMethod::pairs_neg: {
      const bool with_neg = *mm == ModalMethod::pairs_neg;
      std::optional<UnaryOpTable> ng = doc.neg;
      if (with_neg && !ng) ng = trivial_protocomplementation(L);
      auto rep = build_pairs(L, with_neg ? PairKind::Pneg : PairKind::P1, ng);
      auto verdict = represent_pairs(rep);
      json v = io::verdict_to_json(verdict);
      json ps = json::array();
      for (auto [a, b] : rep.pairs) ps.push_back({a, b});
      v["pairs"] = ps;
      return {rep.frame, std::nullopt, v, verdict.isomorphism};
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown method " + method);
}

int cmd_represent(const std::string& path, const std::string& method, const std::string& neg_arg,
                  const std::string& box_arg, bool round_trip, const Caps& caps) {
  auto doc = io::parse_lattice(io::read_json(path));
  if (auto n = op_arg(neg_arg, doc.lattice.size())) doc.neg = n;
  if (auto b = op_arg(box_arg, doc.lattice.size())) doc.box = b;
  auto out = represent(doc, method);
  json j{{"method", method},
         {"frame", io::frame_to_json(out.frame, out.access ? &*out.access : nullptr)},
         {"verdict", out.verdict}};
  int rc = 0;
  if (round_trip) {
    // parse the emitted frame back and recompute its fixpoints from scratch
    auto back = io::parse_frame(io::parse_text(j["frame"].dump(), "round trip"));
    bool same;
    if (method == "filter-ideal") {
      auto S = filter_ideal_space(doc.lattice);
      same = back.frame == S.frame &&
             lattices_isomorphic(fixpoints(back.frame).order, fixpoints(S.frame).order).has_value();
    } else {
      auto re = fixpoints_json(back.frame, back.frame.size() <= caps.oracle_cap, caps.oracle_cap);
      same = lattices_isomorphic(io::parse_lattice(re["lattice"]).lattice, doc.lattice).has_value();
    }
    j["round_trip"] = same;
    if (!same) rc = 1;
  }
  emit(j);
  return rc;
}

int cmd_modal(const std::string& path, const std::string& method, const std::string& box_arg) {
  const json in = io::read_json(path);
  if (is_frame_doc(in)) {
    auto doc = io::parse_frame(in);
    if (!doc.access) throw Error(ErrorKind::InvalidInput, "frame has no \"access\" relation");
    const auto& F = doc.frame;
    const auto& R = *doc.access;
    json j{{"ca_frame", is_ca_frame(F, R)}, {"fo_condition", fo_condition(F, R)}};
    if (j["ca_frame"].get<bool>()) {
      const auto FL = fixpoints(F);
      const auto box = box_table(FL, R);
      j["lattice"] = io::lattice_to_json(FL.order, &box, &FL.neg);
      j["fixpoints"] = io::sets_json(FL.fixpoints);
    }
    emit(j);
    return j["ca_frame"].get<bool>() ? 0 : 1;
  }
  auto doc = io::parse_lattice(in);
  if (auto b = op_arg(box_arg, doc.lattice.size())) doc.box = b;
  if (!doc.box) throw Error(ErrorKind::InvalidInput, "lattice has no \"box\" table");
  auto nl = NecessityLattice::make(doc.lattice, *doc.box, doc.neg);
  auto out = represent(io::LatticeDoc{nl.lattice, nl.box, nl.neg}, method);
  emit(json{{"method", method},
            {"frame", io::frame_to_json(out.frame, out.access ? &*out.access : nullptr)},
            {"verdict", out.verdict}});
  return out.ok ? 0 : 1;
}

// ---- check ----

int cmd_check(const std::vector<std::string>& paths, const std::string& suite, const Caps& caps) {
  std::vector<std::string> inputs = paths.empty() ? std::vector<std::string>{"-"} : paths;
  bool all_ok = true;
  for (const auto& p : inputs) {
    const json in = io::read_json(p);
    SuiteResult r;
    if (is_frame_doc(in)) {
      auto doc = io::parse_frame(in);
      if (suite == "frames") {
        r = suite_frames(doc.frame, caps.oracle_cap);
      } else if (suite == "modal") {
        if (!doc.access) throw Error(ErrorKind::InvalidInput, p + ": frame has no \"access\" relation");
        r = suite_modal_frame(doc.frame, *doc.access);
      } else {
        throw Error(ErrorKind::InvalidInput, "suite " + suite + " takes a lattice, got a frame");
      }
    } else {
      auto doc = io::parse_lattice(in);
      if (suite == "core") {
        r = suite_core(doc.lattice, doc.neg, doc.box);
      } else if (suite == "reps") {
        r = suite_reps(doc.lattice, doc.neg);
      } else if (suite == "modal") {
        if (!doc.box) throw Error(ErrorKind::InvalidInput, p + ": lattice has no \"box\" table");
        r = suite_modal_lattice(doc.lattice, *doc.box);
      } else {
        throw Error(ErrorKind::InvalidInput, "suite " + suite + " takes a frame, got a lattice");
      }
    }
    json checks = json::array();
    for (const auto& c : r.checks) {
      json e{{"name", c.name}, {"ok", c.ok}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      checks.push_back(e);
    }
    all_ok = all_ok && r.ok();
    std::cout << json{{"input", p}, {"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}}.dump() << "\n";
  }
  return all_ok ? 0 : 1;
}

// ---- sweep ----

int cmd_sweep(int max_n, int jobs, bool question, bool allow_large, const Caps& caps) {
  const int cap = allow_large ? 16 : kDefaultLatticeCap;
  if (max_n > cap) {
    throw Error(ErrorKind::CapExceeded, "max-n " + std::to_string(max_n) + " above cap " +
                                            std::to_string(cap) + " (see --allow-large)");
  }
  const auto cat = lattice_catalog(max_n, cap);
  bool counterexample = false;
  const std::size_t chunk = static_cast<std::size_t>(std::max(1, jobs)) * 8;
  // chunks keep output flowing on long sweeps without giving up input order
  for (std::size_t lo = 0; lo < cat.size(); lo += chunk) {
    std::vector<CatalogEntry> part(cat.begin() + lo, cat.begin() + std::min(cat.size(), lo + chunk));
    auto lines = parallel_map(part, jobs, [&](const CatalogEntry& e) -> std::optional<json> {
      if (e.lattice.size() < 2) return std::nullopt;
      if (question) {
        auto w = question_search(e.lattice, caps.search_budget);
        json j{{"id", e.id}, {"lattice_size", e.lattice.size()}, {"found", w.has_value()}};
        if (w) {
          j["V"] = w->V;
          j["neg"] = w->neg.image();
          j["stage"] = w->stage;
          j["candidates"] = w->candidates;
          j["via_phi"] = w->via_phi;
        }
        return j;
      }
      return io::report_to_json(*conjecture_instance(e.id, e.lattice));
    });
    for (auto& l : lines) {
      if (!l) continue;
      if (question ? !(*l)["found"].get<bool>() : !(*l)["holds"].get<bool>()) counterexample = true;
      std::cout << l->dump() << "\n";
    }
    std::cout.flush();
  }
  return counterexample ? 1 : 0;
}

// ---- export-dot ----

int cmd_export_dot(const std::string& path) {
  const json in = io::read_json(path);
  if (is_frame_doc(in)) {
    auto doc = io::parse_frame(in);
    std::cout << dot::frame_to_dot(doc.frame, doc.access ? &*doc.access : nullptr);
  } else {
    auto doc = io::parse_lattice(in);
    std::cout << dot::lattice_to_dot(doc.lattice, doc.neg ? &*doc.neg : nullptr,
                                     doc.box ? &*doc.box : nullptr);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatibility frames for finite lattices"};
  app.require_subcommand(1);
  Caps caps;
  app.add_option("--oracle-cap", caps.oracle_cap, "Largest frame for subset-scan oracles")
      ->envname("COMPAT_ORACLE_CAP")
      ->check(CLI::Range(1, 24));
  app.add_option("--budget", caps.search_budget, "Candidate budget for question search")
      ->envname("COMPAT_SEARCH_BUDGET");

  std::string path;
  bool oracle = false;
  auto* fx = app.add_subcommand("fixpoints", "Fixpoint lattice of a frame");
  fx->add_option("file", path, "Frame JSON (stdin if omitted)");
  fx->add_flag("--oracle", oracle, "Enumerate by scanning all subsets");

  std::string method = "join-dense", neg_arg, box_arg;
  bool round_trip = false;
  auto* rp = app.add_subcommand("represent", "Frame representing a lattice");
  rp->add_option("file", path, "Lattice JSON (stdin if omitted)");
  rp->add_option("--method", method)
      ->check(CLI::IsMember({"join-dense", "pairs", "pairs-neg", "filter-ideal"}));
  rp->add_option("--neg", neg_arg, "Negation table, inline JSON or file");
  rp->add_option("--box", box_arg, "Box table, inline JSON or file");
  rp->add_flag("--round-trip", round_trip, "Re-read the emitted frame and compare lattices");

  std::vector<std::string> files;
  std::string suite;
  auto* ck = app.add_subcommand("check", "Run an invariant suite on inputs");
  ck->add_option("files", files, "Lattice or frame JSON files (stdin if omitted)");
  ck->add_option("--suite", suite)->required()->check(CLI::IsMember({"core", "frames", "reps", "modal"}));

  std::string modal_method_name = "pairs";
  auto* md = app.add_subcommand("modal", "CA frame for a lattice with box, or check a frame with access");
  md->add_option("file", path, "Lattice or frame JSON (stdin if omitted)");
  md->add_option("--method", modal_method_name)
      ->check(CLI::IsMember({"join-dense", "pairs", "pairs-neg", "filter-ideal"}));
  md->add_option("--box", box_arg, "Box table, inline JSON or file");

  int max_n = caps.sweep_max_n, jobs = default_jobs();
  bool question = false, allow_large = false;
  auto* sw = app.add_subcommand("sweep", "Small-frame sweep over the lattice catalog (JSONL)");
  sw->add_option("--max-n", max_n)->envname("COMPAT_SWEEP_MAX_N")->check(CLI::Range(1, 16));
  sw->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  sw->add_flag("--question", question, "Search negations instead of small frames");
  sw->add_flag("--allow-large", allow_large, "Raise the size cap from 8 to 16");

  auto* dt = app.add_subcommand("export-dot", "Graphviz text for a frame or lattice");
  dt->add_option("file", path, "Lattice or frame JSON (stdin if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fx) return cmd_fixpoints(path, oracle, caps);
    if (*rp) return cmd_represent(path, method, neg_arg, box_arg, round_trip, caps);
    if (*ck) return cmd_check(files, suite, caps);
    if (*md) return cmd_modal(path, modal_method_name, box_arg);
    if (*sw) return cmd_sweep(max_n, jobs, question, allow_large, caps);
    if (*dt) return cmd_export_dot(path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

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

#include <gtest/gtest.h>

#include "compat/catalog.hpp"
#include "compat/search.hpp"
#include "oracles.hpp"

using namespace compat;
namespace nm = compat::named;

namespace {

void expect_cover_matches_oracle(const FiniteLattice& L, int expected) {
  auto g = irreducible_graph(L);
  auto cover = min_edge_cover(g.graph);
  EXPECT_TRUE(covers_all_vertices(g.graph, cover));
  EXPECT_EQ(static_cast<int>(cover.size()), expected);
  ASSERT_LE(g.graph.edges.size(), 12U);
  EXPECT_EQ(oracle::min_edge_cover_size(g.graph.left, g.graph.right, g.graph.edges), expected);
}

}  // namespace

TEST(EdgeCover, Examples) {
  expect_cover_matches_oracle(nm::m3(), 3);
  expect_cover_matches_oracle(nm::chain(4), 3);
  BipartiteGraph single{1, 1, {{0, 0}}};
  auto c = min_edge_cover(single);
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0], Edge(0, 0));
}

TEST(EdgeCover, CatalogAgreesWithOracle) {
  for (const auto& e : lattice_catalog(7)) {
    if (e.lattice.size() < 2) continue;
    auto g = irreducible_graph(e.lattice);
    auto cover = min_edge_cover(g.graph);
    const int m = static_cast<int>(max_matching(g.graph).size());
    EXPECT_TRUE(covers_all_vertices(g.graph, cover)) << e.id;
    EXPECT_EQ(static_cast<int>(cover.size()), g.graph.left + g.graph.right - m) << e.id;
    if (g.graph.edges.size() <= 12) {
      EXPECT_EQ(static_cast<int>(cover.size()),
                oracle::min_edge_cover_size(g.graph.left, g.graph.right, g.graph.edges))
          << e.id;
    }
  }
}

TEST(EdgeCover, IsolatedVertexIsReported) {
  BipartiteGraph g{2, 1, {{0, 0}}};
  try {
    min_edge_cover(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IsolatedVertex);
  }
}

TEST(Sweep, UpToFive) {
  auto reports = conjecture_sweep(5, 2);
  ASSERT_EQ(reports.size(), 9U);  // 1 + 1 + 2 + 5
  for (const auto& r : reports) {
    EXPECT_TRUE(conjecture_holds(r)) << r.id;
    EXPECT_TRUE(r.gallai_ok) << r.id;
    EXPECT_LT(r.frame_size, r.lattice_size) << r.id;
    EXPECT_EQ(r.oracle_verified, std::optional<bool>(true)) << r.id;
  }
}

TEST(Sweep, DiamondUsesEdgeCover) {
  auto r = conjecture_instance("m3", nm::m3());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->frame_size, 3);
  EXPECT_TRUE(r->iso_verified);
  EXPECT_EQ(r->method, "edge_cover");
}

TEST(Sweep, DegenerateSkippedAndOrderIsStable) {
  EXPECT_FALSE(conjecture_instance("one", nm::chain(1)));
  auto a = conjecture_sweep(5, 1), b = conjecture_sweep(5, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].id, b[i].id);
  EXPECT_THROW(conjecture_sweep(9, 1), Error);
}

TEST(Question, SmallCatalog) {
  for (const auto& e : lattice_catalog(5)) {
    if (e.lattice.size() < 2) continue;
    auto w = question_search(e.lattice);
    ASSERT_TRUE(w) << e.id;
    if (w->via_phi) {
      auto rep = represent_join_dense(e.lattice, w->neg, w->V);
      EXPECT_TRUE(rep.verdict.isomorphism) << e.id;
    }
  }
}

TEST(Question, OrthoSquareFoundEarly) {
  auto w = question_search(nm::mo2());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->V, join_irreducibles(nm::mo2()));
  EXPECT_LE(w->candidates, 10);
  EXPECT_TRUE(represent_join_dense(nm::mo2(), w->neg, w->V).verdict.isomorphism);
}

TEST(Question, N5) {
  auto w = question_search(nm::n5());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->V, join_irreducibles(nm::n5()));
  EXPECT_TRUE(represent_join_dense(nm::n5(), w->neg, w->V).verdict.isomorphism);
  // the no-escape negation is itself a witness
  EXPECT_TRUE(represent_join_dense(nm::n5(), nm::n5_no_escape_neg(), join_irreducibles(nm::n5()))
                  .verdict.isomorphism);
}

TEST(Question, BudgetAndDegenerate) {
  EXPECT_THROW(question_search(nm::chain(1)), Error);
  try {
    question_search(nm::n5(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchBudgetExceeded);
  }
}

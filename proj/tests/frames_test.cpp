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

#include <random>
#include <set>

#include "compat/catalog.hpp"
#include "compat/frame.hpp"
#include "frame_gen.hpp"
#include "oracles.hpp"

using namespace compat;
namespace nm = compat::named;

namespace {

constexpr int X = 0, Y = 1, Z = 2;

StateSet S(std::initializer_list<int> xs) { return StateSet::of(std::vector<int>(xs)); }

std::vector<std::uint64_t> bits_of(const std::vector<StateSet>& f) {
  std::vector<std::uint64_t> out;
  for (auto s : f) out.push_back(s.bits());
  return out;
}

}  // namespace

TEST(Closure, C3Examples) {
  auto F = nm::c3_frame();
  EXPECT_EQ(closure(F, S({Y})), S({Y}));
  EXPECT_EQ(closure(F, S({Y, Z})), S({X, Y, Z}));
  EXPECT_EQ(closure(F, F.states()), F.states());
  EXPECT_EQ(oracle::closure(F, {Y, Z}), (oracle::Set{X, Y, Z}));
}

TEST(Closure, LawsOnAllFramesUpToFour) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      const std::uint64_t full = std::uint64_t{1} << n;
      for (std::uint64_t a = 0; a < full; ++a) {
        const StateSet A(a), cA = closure(F, A);
        ASSERT_TRUE(A.subset_of(cA));
        ASSERT_EQ(closure(F, cA), cA);
        ASSERT_EQ(cA.bits(), oracle::to_bits(oracle::closure(F, oracle::from_bits(a, n))));
        for (std::uint64_t b = a;; b = (b + 1) | a) {  // supersets of a
          ASSERT_TRUE(cA.subset_of(closure(F, StateSet(b))));
          if (b == full - 1) break;
        }
      }
    });
}

TEST(Fixpoints, NamedFrames) {
  auto c3 = fixpoints(nm::c3_frame());
  EXPECT_EQ(c3.fixpoints, (std::vector<StateSet>{S({}), S({X}), S({Y}), S({Z}), S({X, Y, Z})}));
  EXPECT_TRUE(lattices_isomorphic(c3.order, nm::m3()));
  auto n5 = fixpoints(nm::n5_frame());
  EXPECT_EQ(n5.fixpoints, (std::vector<StateSet>{S({}), S({X}), S({Z}), S({Y, Z}), S({X, Y, Z})}));
  EXPECT_TRUE(lattices_isomorphic(n5.order, nm::n5()));
  EXPECT_TRUE(lattices_isomorphic(fixpoints(nm::chain3_frame()).order, nm::chain(4)));
  for (int n = 1; n <= 4; ++n)
    EXPECT_TRUE(lattices_isomorphic(fixpoints(identity_frame(n)).order, nm::boolean(n)));
}

TEST(Fixpoints, SquareAndPathAreOrthoRealizations) {
  auto sq = fixpoints(nm::square_frame());
  EXPECT_TRUE(lattices_isomorphic(sq.order, nm::mo2()));
  EXPECT_TRUE(classify_negation(sq.order, sq.neg).orthocomplementation);
  auto path = fixpoints(nm::path4_frame());
  EXPECT_TRUE(lattices_isomorphic(path.order, nm::o6()));
  EXPECT_TRUE(classify_negation(path.order, path.neg).orthocomplementation);
}

TEST(Fixpoints, FastEqualsOracleOnAllFramesUpToFour) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      auto fast = fixpoint_family(F, FixpointMode::fast);
      ASSERT_EQ(fast, fixpoint_family(F, FixpointMode::oracle));
      ASSERT_EQ(bits_of(fast), oracle::fixpoints(F));
    });
}

TEST(Fixpoints, FastEqualsOracleOnRandomFrames) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> size(5, 12);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int i = 0; i < 200; ++i) {
    auto F = gen::random_reflexive_frame(size(rng), density(rng), rng);
    ASSERT_EQ(fixpoint_family(F, FixpointMode::fast), fixpoint_family(F, FixpointMode::oracle));
  }
}

TEST(Fixpoints, NonReflexiveFramesAgreeToo) {
  for (std::uint64_t m = 0; m < (1u << 9); ++m) {
    Relation r(3);
    for (int i = 0; i < 9; ++i)
      if ((m >> i) & 1U) r.set(i / 3, i % 3);
    RelationalFrame F(r);
    ASSERT_EQ(bits_of(fixpoint_family(F)), oracle::fixpoints(F));
  }
}

TEST(Fixpoints, OracleCap) {
  EXPECT_THROW(fixpoint_family(identity_frame(21), FixpointMode::oracle), Error);
  EXPECT_NO_THROW(fixpoint_family(identity_frame(6), FixpointMode::oracle, 6));
}

TEST(Fixpoints, LatticeTablesAreIntersectionAndClosedUnion) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    auto F = gen::random_reflexive_frame(6, 0.35, rng);
    auto L = fixpoints(F);
    ASSERT_EQ(L.fixpoints.front(), closure(F, StateSet()));
    ASSERT_EQ(L.fixpoints.back(), F.states());
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        ASSERT_EQ(L.order.meet(a, b), oracle::glb(L.order, a, b));
        ASSERT_EQ(L.order.join(a, b), oracle::lub(L.order, a, b));
      }
  }
}

TEST(Neg, Examples) {
  auto c3 = nm::c3_frame();
  EXPECT_EQ(neg(c3, S({Y})), S({Z}));
  EXPECT_EQ(neg(c3, S({})), c3.states());
  EXPECT_EQ(neg(nm::square_frame(), S({0})), S({2}));
}

TEST(Neg, IsFixpointAndProtocomplementation) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        const StateSet nA = neg(F, StateSet(a));
        ASSERT_TRUE(is_fixpoint(F, nA));
        ASSERT_EQ(nA.bits(), oracle::to_bits(oracle::neg(F, oracle::from_bits(a, n))));
      }
      auto L = fixpoints(F);
      ASSERT_TRUE(classify_negation(L.order, L.neg).protocomplementation);
    });
}

TEST(Refinement, IdentityFrame) {
  auto d = refinement(identity_frame(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      EXPECT_EQ(d.pre(x, y), x == y);
      EXPECT_EQ(d.post(x, y), x == y);
    }
}

TEST(Refinement, N5FrameTable) {
  // predecessors: x <- {x, y}, y <- {y, z}, z <- {z}
  auto d = refinement(nm::n5_frame());
  EXPECT_TRUE(d.pre(Z, Y));
  EXPECT_FALSE(d.pre(Y, Z));
  EXPECT_FALSE(d.pre(Y, X));
  EXPECT_FALSE(d.pre(X, Y));
  EXPECT_FALSE(d.pre(Z, X));
}

TEST(Refinement, PreordersAndSymmetricCoincidence) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      auto d = refinement(F);
      for (int x = 0; x < n; ++x) {
        ASSERT_TRUE(d.pre(x, x) && d.post(x, x));
        for (int y = 0; y < n; ++y) {
          ASSERT_EQ(d.ref(x, y), d.pre(x, y) && d.post(x, y));
          for (int z = 0; z < n; ++z) {
            if (d.pre(x, y) && d.pre(y, z)) {
              ASSERT_TRUE(d.pre(x, z));
            }
            if (d.post(x, y) && d.post(y, z)) {
              ASSERT_TRUE(d.post(x, z));
            }
          }
        }
      }
      if (classify_frame(F).symmetric) {
        ASSERT_EQ(d.pre, d.post);
      }
    });
}

TEST(ClassifyFrame, Examples) {
  auto sq = classify_frame(nm::square_frame());
  EXPECT_TRUE(sq.symmetric);
  EXPECT_FALSE(sq.compossible);
  auto ch = classify_frame(nm::chain3_frame());
  EXPECT_TRUE(ch.preorder);
  EXPECT_TRUE(ch.compossible);
  EXPECT_EQ(classify_frame(identity_frame(3)), (FrameClass{true, true, true, true}));
}

TEST(HeytingArrow, ChainFrameExample) {
  auto F = nm::chain3_frame();
  EXPECT_EQ(heyting_arrow_on_fixpoints(F, S({Y, Z}), S({Z})), S({Z}));
  auto L = fixpoints(F);
  auto h = heyting_arrow(L.order);
  ASSERT_TRUE(h);
  const int a = *L.index_of(S({Y, Z})), b = *L.index_of(S({Z}));
  EXPECT_EQ(L.fixpoints[(*h)(a, b)], S({Z}));
  EXPECT_EQ(heyting_arrow_on_fixpoints(F, S({}), S({Z})), F.states());
  EXPECT_EQ(heyting_arrow_on_fixpoints(F, S({Y, Z}), S({Y, Z})), F.states());
}

TEST(HeytingArrow, RequiresCompossibleFrame) {
  try {
    heyting_arrow_on_fixpoints(nm::square_frame(), S({0}), S({}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCompossible);
  }
}

TEST(Theorems, SymmetricFramesAreOrtho) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      if (!classify_frame(F).symmetric) return;
      auto L = fixpoints(F);
      ASSERT_TRUE(classify_negation(L.order, L.neg).orthocomplementation);
    });
}

TEST(Theorems, CompossibleFramesAreHeyting) {
  int seen = 0;
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      const auto cls = classify_frame(F);
      if (!cls.compossible) return;
      ++seen;
      auto d = refinement(F);
      auto L = fixpoints(F);
      ASSERT_TRUE(is_distributive(L.order));
      for (int a = 0; a < L.size(); ++a) {
        const StateSet A = L.fixpoints[a];
        ASSERT_EQ(heyting_arrow_on_fixpoints(F, d, A, StateSet()), neg(F, A));
        for (int b = 0; b < L.size(); ++b) {
          const StateSet B = L.fixpoints[b], AB = heyting_arrow_on_fixpoints(F, d, A, B);
          ASSERT_TRUE(is_fixpoint(F, AB));
          for (const StateSet C : L.fixpoints)
            ASSERT_EQ((C & A).subset_of(B), C.subset_of(AB));
        }
      }
      if (cls.symmetric) {
        auto P = Preorder::from_table(n, d.ref.table());
        auto ro = regular_open_downsets(P);
        ASSERT_EQ(ro, L.fixpoints);
        ASSERT_TRUE(classify_negation(L.order, L.neg).complementation);
      }
    });
  EXPECT_GT(seen, 100);
}

TEST(Theorems, FixpointsArePreRefinementDownsets) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      auto d = refinement(F);
      for (const StateSet A : fixpoint_family(F))
        for (int x : A.members())
          for (int y = 0; y < n; ++y)
            if (d.pre(y, x)) {
              ASSERT_TRUE(A.contains(y));
            }
    });
}

TEST(Theorems, NucleusInequalityOnCompossibleFrames) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      if (!classify_frame(F).compossible) return;
      auto d = refinement(F);
      auto P = Preorder::from_table(n, d.pre.table());
      for (const StateSet A : downsets(P))
        for (const StateSet B : downsets(P))
          ASSERT_TRUE((A & closure(F, B)).subset_of(closure(F, A & B)));
    });
}

TEST(Theorems, IdentityAndPreorderFrames) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(fixpoints(identity_frame(n)).size(), 1 << n);
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      if (!classify_frame(F).preorder) return;
      auto P = Preorder::from_table(n, F.relation().table());
      ASSERT_EQ(fixpoint_family(F), downsets(P));
    });
}

TEST(Combinators, DualAndDisjointUnion) {
  EXPECT_TRUE(lattices_isomorphic(fixpoints(frame_dual(nm::c3_frame())).order, dual(nm::m3())));
  auto one = identity_frame(1);
  EXPECT_TRUE(lattices_isomorphic(fixpoints(frame_disjoint_union(one, one)).order, nm::boolean(2)));
  for (int n = 1; n <= 3; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      auto LF = fixpoints(F);
      auto LD = fixpoints(frame_dual(F));
      ASSERT_TRUE(lattices_isomorphic(LD.order, dual(LF.order)));
      // the witness map is an order-reversing bijection onto the dual fixpoints
      std::set<std::uint64_t> image;
      for (const StateSet A : LD.fixpoints) {
        ASSERT_TRUE(LF.index_of(dual_witness(F, A)));
        image.insert(dual_witness(F, A).bits());
        for (const StateSet B : LD.fixpoints)
          ASSERT_EQ(A.subset_of(B), dual_witness(F, B).subset_of(dual_witness(F, A)));
      }
      ASSERT_EQ(static_cast<int>(image.size()), LF.size());
      for (std::uint64_t m = 0; m < gen::reflexive_count(2); ++m) {
        auto G = gen::reflexive_frame(2, m);
        auto LU = fixpoints(frame_disjoint_union(F, G));
        ASSERT_TRUE(lattices_isomorphic(LU.order, product(LF.order, fixpoints(G).order)));
      }
    });
}

TEST(Combinators, LinearSumGivesVerticalSum) {
  EXPECT_TRUE(lattices_isomorphic(fixpoints(frame_linear_sum(nm::c3_frame(), identity_frame(1))).order,
                                  vertical_sum(nm::m3(), nm::chain(2))));
  for (int n = 1; n <= 3; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      for (int m = 1; m <= 2; ++m)
        gen::for_each_reflexive_frame(m, [&](const RelationalFrame& G) {
          auto LS = fixpoints(frame_linear_sum(F, G));
          ASSERT_TRUE(lattices_isomorphic(LS.order,
                                          vertical_sum(fixpoints(F).order, fixpoints(G).order)));
        });
    });
}

// Relating the two parts in both directions merges every nonempty fixpoint of
// one part with all of the other, so the vertical sum is lost.
TEST(Combinators, TotalCrossRelationDoesNotGiveVerticalSum) {
  auto F = nm::c3_frame();
  auto G = identity_frame(1);
  Relation r(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (x == 3 || y == 3 || F.compat(x, y)) r.set(x, y);
  auto L = fixpoints(RelationalFrame(r));
  EXPECT_FALSE(lattices_isomorphic(L.order, vertical_sum(nm::m3(), fixpoints(G).order)));
}

TEST(RegOpen, Examples) {
  auto antichain = Preorder::from_pairs(2, std::vector<OrderPair>{});
  EXPECT_EQ(regopen_frame(antichain), identity_frame(2));
  EXPECT_EQ(fixpoints(regopen_frame(antichain)).size(), 4);
  auto chain2 = Preorder::from_pairs(2, std::vector<OrderPair>{{0, 1}});
  EXPECT_EQ(fixpoint_family(regopen_frame(chain2)), (std::vector<StateSet>{S({}), S({0, 1})}));
  auto vee = Preorder::from_pairs(3, std::vector<OrderPair>{{0, 1}, {0, 2}});
  EXPECT_EQ(fixpoint_family(regopen_frame(vee)), (std::vector<StateSet>{S({}), S({0, 1, 2})}));
}

TEST(RegOpen, FixpointsAreRegularOpenDownsets) {
  for (int n = 1; n <= 4; ++n)
    gen::for_each_reflexive_frame(n, [&](const RelationalFrame& F) {
      if (!classify_frame(F).preorder) return;
      auto P = Preorder::from_table(n, F.relation().table());
      ASSERT_EQ(fixpoint_family(regopen_frame(P)), regular_open_downsets(P));
    });
}

TEST(FrameIso, Basics) {
  const std::vector<StatePair> relabeled{{2, 1}, {0, 2}, {1, 0}};
  auto G = RelationalFrame::from_pairs(3, relabeled, true);
  auto iso = frames_isomorphic(nm::c3_frame(), G);
  ASSERT_TRUE(iso);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(nm::c3_frame().compat(x, y), G.compat((*iso)[x], (*iso)[y]));
  EXPECT_FALSE(frames_isomorphic(nm::c3_frame(), nm::n5_frame()));
}

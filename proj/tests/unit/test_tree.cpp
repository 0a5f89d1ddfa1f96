#include <gtest/gtest.h>

#include <random>

#include "selfsim/random_words.hpp"
#include "selfsim/tree.hpp"
#include "selfsim/word_problem.hpp"

using namespace selfsim;

TEST(Decompose, GeneratorsFollowTheRecursion) {
  for (unsigned n = 3; n <= 9; ++n)
    for (unsigned i = 1; i <= n; ++i) {
      const auto d = decompose(GeneratorWord::generator(n, i));
      EXPECT_EQ(d.root, sigma(n, i));
      for (unsigned k = 1; k <= n; ++k) EXPECT_EQ(d.state(k), k == i ? GeneratorWord::generator(n, i) : GeneratorWord(n));
    }
}

TEST(Decompose, ProductOfTwoGenerators) {
  const auto d = decompose(parse_word(4, "a1*a2"));
  EXPECT_EQ(d.state(1), parse_word(4, "a1"));
  EXPECT_TRUE(d.state(2).empty());
  EXPECT_TRUE(d.state(3).empty());
  EXPECT_EQ(d.state(4), parse_word(4, "a2"));
  EXPECT_EQ(d.root, parse_cycles("(2 3 4)(1 3 4)", 4));
}

TEST(Decompose, RootIsAHomomorphism) {
  std::mt19937_64 rng(1);
  for (unsigned n = 3; n <= 8; ++n)
    for (int t = 0; t < 50; ++t) {
      const auto u = random_word(n, t % 9, rng, false), v = random_word(n, (t * 7) % 9, rng, false);
      const auto du = decompose(u), dv = decompose(v), duv = decompose(u * v);
      EXPECT_EQ(duv.root, du.root * dv.root);
      EXPECT_EQ(du.root, root_permutation(u));
      // (uv)_k = u_k v_{k^theta_u}
      for (unsigned k = 1; k <= n; ++k) EXPECT_TRUE(are_equal(duv.state(k), du.state(k) * dv.state(du.root(k))));
    }
}

TEST(Decompose, ContractionBound) {
  std::mt19937_64 rng(2);
  for (unsigned n = 3; n <= 8; ++n)
    for (int t = 0; t < 500; ++t) {
      const auto w = random_word(n, 2 + t % 40, rng);
      for (const auto& s : decompose(w).states) EXPECT_LE(2 * s.length(), w.length() + 1);
    }
}

TEST(Tree, ActionAgreesWithPortraitAndLeafActions) {
  std::mt19937_64 rng(3);
  for (unsigned n = 3; n <= 5; ++n) {
    const unsigned depth = 3;
    const LeafActions leaves(n, depth);
    for (int t = 0; t < 40; ++t) {
      const auto w = random_word(n, t % 12, rng, false);
      const auto p = portrait(w, depth);
      // Three independent routes to the level-3 action.
      const auto by_leaves = leaves(w);
      EXPECT_EQ(p.leaf_action(), by_leaves);
      for (std::size_t i = 0; i < leaves.degree(); ++i) {
        const auto v = vertex_at(i, n, depth);
        EXPECT_EQ(vertex_index(act(w, v), n), by_leaves.image0(static_cast<Point>(i)));
      }
    }
  }
}

TEST(Tree, StateAtFollowsDecompositions) {
  const auto w = parse_word(4, "a1^2*a3*a1");
  const auto d = decompose(w);
  EXPECT_EQ(state_at(w, Vertex{{3}}), d.state(3));
  EXPECT_EQ(state_at(w, Vertex{}), w);
  EXPECT_EQ(state_at(w, Vertex{{1, 1}}), decompose(d.state(1)).state(1));
  EXPECT_THROW(state_at(w, Vertex{{5}}), std::invalid_argument);
}

TEST(Tree, ShiftConjugatesByRelabelling) {
  std::mt19937_64 rng(4);
  for (unsigned n = 3; n <= 7; ++n)
    for (int t = 0; t < 30; ++t) {
      const auto w = random_word(n, t % 10, rng, false);
      const auto d = decompose(w), ds = decompose(shift(w));
      for (unsigned k = 1; k <= n; ++k) {
        const unsigned k1 = k % n + 1;
        EXPECT_EQ(ds.root(k1), d.root(k) % n + 1);
        EXPECT_EQ(ds.state(k1), shift(d.state(k)));
      }
    }
}

TEST(Tree, BlockActionOfStabilizerElements) {
  std::mt19937_64 rng(5);
  for (unsigned n : {4u, 5u}) {
    const LeafActions below(n, 2), top(n, 3);
    int found = 0;
    for (int t = 0; t < 400 && found < 20; ++t) {
      const auto w = random_word(n, 2 + t % 8, rng);
      const auto d = decompose(w);
      if (!d.root.is_identity()) continue;
      ++found;
      EXPECT_EQ(block_action(d.states, below), top(w));
    }
    EXPECT_GT(found, 0);
  }
}

TEST(Tree, ConstantPortraitActsLevelwise) {
  const auto p = constant_portrait(sigma(4, 1), 2);
  EXPECT_EQ(p.act(Vertex{{2, 3}}), (Vertex{{3, 4}}));
  EXPECT_EQ(p.act(Vertex{{1, 1}}), (Vertex{{1, 1}}));
}

TEST(Tree, PortraitOfIdentityIsTrivial) {
  EXPECT_TRUE(portrait(parse_word(4, "a1^3"), 3).is_trivial());
  EXPECT_FALSE(portrait(parse_word(4, "a1"), 1).is_trivial());
  EXPECT_THROW(Portrait(4, 0), std::invalid_argument);
}

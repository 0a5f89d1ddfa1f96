#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "selfsim/random_words.hpp"
#include "selfsim/word_problem.hpp"

using namespace selfsim;

namespace {

// Trivial on levels up to ceil(log2 |w|) + 2 is enough for words of the
// contracting group with a nucleus acting nontrivially on level 1.
bool trivial_on_levels(const GeneratorWord& w) {
  const std::size_t len = std::max<std::size_t>(1, w.canonical().length());
  const auto depth = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(len)))) + 2;
  return leaf_action(w, depth).is_identity();
}

}  // namespace

TEST(WordProblem, Examples) {
  EXPECT_TRUE(is_identity(parse_word(4, "a1^3")));
  EXPECT_FALSE(is_identity(parse_word(4, "a1*a2^-1")));
  EXPECT_TRUE(is_identity(GeneratorWord(5)));
  EXPECT_TRUE(is_identity(parse_word(4, "(a1*a2)^6")));
  EXPECT_FALSE(is_identity(parse_word(4, "(a1*a2)^3")));
}

TEST(WordProblem, AgreesWithLevelActions) {
  std::mt19937_64 rng(8);
  for (unsigned n = 3; n <= 6; ++n)
    for (int t = 0; t < 150; ++t) {
      auto w = random_word(n, 1 + t % 8, rng, false);
      // Mix in known-trivial words so both outcomes occur.
      if (t % 3 == 0) w = commutator(w, w.pow(2)) * GeneratorWord::generator(n, 1 + t % n, n - 1);
      EXPECT_EQ(is_identity(w), trivial_on_levels(w)) << to_string(w);
    }
}

TEST(WordProblem, EqualityIsAnEquivalence) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto u = random_word(5, t % 10, rng, false);
    EXPECT_TRUE(are_equal(u, u.canonical()));
    EXPECT_TRUE(are_equal(u, u * GeneratorWord::generator(5, 2, 4)));
    const auto v = random_word(5, t % 7, rng, false);
    EXPECT_EQ(are_equal(u, v), are_equal(v, u));
    EXPECT_EQ(are_equal(u, v), leaf_action(u, 4) == leaf_action(v, 4));
  }
  EXPECT_THROW(are_equal(parse_word(4, "a1"), parse_word(5, "a1")), std::invalid_argument);
}

TEST(ElementOrder, GeneratorsAndSmallProducts) {
  for (unsigned n = 3; n <= 9; ++n)
    for (unsigned i = 1; i <= n; ++i) EXPECT_EQ(element_order(GeneratorWord::generator(n, i)), n - 1);
  EXPECT_EQ(element_order(parse_word(4, "a1*a2")), 6u);
  EXPECT_EQ(element_order(GeneratorWord(4)), 1u);
  EXPECT_EQ(element_order(parse_word(4, "a1*a2"), 5), std::nullopt);
  EXPECT_THROW(element_order(parse_word(4, "a1"), 0), std::invalid_argument);
}

TEST(ElementOrder, DividesLevelActionOrders) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 60; ++t) {
    const auto w = random_word(4, 1 + t % 5, rng);
    if (const auto o = element_order(w, 200)) {
      for (std::size_t m = 1; m <= 3; ++m) EXPECT_EQ(*o % leaf_action(w, m).order(), 0u);
    }
  }
}

TEST(ElementOrder, OddProductsGrowOnEveryLevel) {
  // The root of a1*a3 is an n-cycle and its level orders keep multiplying by n.
  for (unsigned n : {5u, 7u}) {
    const auto w = parse_word(n, "a1*a3");
    std::uint64_t expected = n;
    for (std::size_t m = 1; m <= 3; ++m, expected *= n) EXPECT_EQ(leaf_action(w, m).order(), expected);
  }
}

#include <gtest/gtest.h>

#include <random>

#include "selfsim/random_words.hpp"
#include "selfsim/word.hpp"

using namespace selfsim;

TEST(Word, ParsesPlainProducts) {
  const auto w = parse_word(4, "a1*a2^-1*a3^2");
  ASSERT_EQ(w.length(), 3u);
  EXPECT_EQ(w.syllables()[0], (Syllable{1, 1}));
  EXPECT_EQ(w.syllables()[1], (Syllable{2, -1}));
  EXPECT_EQ(w.syllables()[2], (Syllable{3, 2}));
  EXPECT_EQ(parse_word(4, "a1 a2"), parse_word(4, "a1*a2"));
}

TEST(Word, ExpandsCommutatorsAndConjugates) {
  EXPECT_EQ(parse_word(4, "[a1,a2]"), parse_word(4, "a1^-1*a2^-1*a1*a2"));
  EXPECT_EQ(parse_word(4, "a1^a2"), parse_word(4, "a2^-1*a1*a2"));
  EXPECT_EQ(parse_word(4, "a1^-a2"), parse_word(4, "a2^-1*a1^-1*a2"));
  EXPECT_EQ(parse_word(4, "(a1*a2)^-2"), parse_word(4, "a2^-1*a1^-1*a2^-1*a1^-1"));
  EXPECT_EQ(parse_word(4, "[a1^a2, a3]"), commutator(conjugate(parse_word(4, "a1"), parse_word(4, "a2")), parse_word(4, "a3")));
  EXPECT_TRUE(parse_word(4, "1").empty());
  EXPECT_TRUE(parse_word(4, "e").empty());
  EXPECT_TRUE(parse_word(4, "a1*a1^-1").empty());
}

TEST(Word, RejectsMalformedInput) {
  EXPECT_THROW(parse_word(4, "a5"), WordParseError);
  EXPECT_THROW(parse_word(4, "a0"), WordParseError);
  EXPECT_THROW(parse_word(4, "a1^"), WordParseError);
  EXPECT_THROW(parse_word(4, "b1"), WordParseError);
  EXPECT_THROW(parse_word(4, "[a1,a2"), WordParseError);
  EXPECT_THROW(parse_word(4, "(a1"), WordParseError);
  EXPECT_THROW(parse_word(4, "a1**a2"), WordParseError);
  EXPECT_TRUE(parse_word(4, "  ").empty());
  EXPECT_THROW(parse_word(2, "a1"), std::invalid_argument);
}

TEST(Word, CanonicalReducesExponents) {
  EXPECT_EQ(parse_word(4, "a1^-1").canonical(), parse_word(4, "a1^2"));
  EXPECT_TRUE(parse_word(4, "a1^3").canonical().empty());
  EXPECT_EQ(parse_word(4, "a1*a2^3*a1").canonical(), parse_word(4, "a1^2"));
  EXPECT_TRUE(parse_word(4, "a1*a2^3*a1^2").canonical().empty());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto w = random_word(5, 1 + t % 15, rng, false, 9);
    const auto c = w.canonical();
    EXPECT_TRUE(c.is_canonical());
    EXPECT_EQ(c.canonical(), c);
    EXPECT_LE(c.length(), w.length());
  }
}

TEST(Word, PrintedWordsReparse) {
  std::mt19937_64 rng(17);
  for (unsigned n = 3; n <= 12; ++n)
    for (int t = 0; t < 50; ++t) {
      const auto w = random_word(n, t % 10, rng, false);
      EXPECT_EQ(parse_word(n, to_string(w)), w);
    }
  EXPECT_EQ(to_string(GeneratorWord(4)), "1");
}

TEST(Word, InverseAndPower) {
  const auto w = parse_word(5, "a1*a2^2*a3^-1");
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(w.pow(3), w * w * w);
  EXPECT_EQ(w.pow(-2), w.inverse() * w.inverse());
  EXPECT_TRUE(w.pow(0).empty());
}

TEST(Word, ExponentSums) {
  const auto w = parse_word(4, "a1^2*a2*a1^-1*a4^3");
  EXPECT_EQ(w.exponent_sum(1), 1);
  EXPECT_EQ(w.exponent_sum(3), 0);
  EXPECT_EQ(w.total_exponent(), 5);
  EXPECT_EQ(beta_word(4), parse_word(4, "a1*a2*a3*a4"));
}

TEST(Word, MixedAlphabetsThrow) {
  auto u = parse_word(4, "a1");
  EXPECT_THROW(u *= parse_word(5, "a1"), std::invalid_argument);
}

TEST(Word, EnumerationCountsWords) {
  std::size_t count = 0;
  for_each_word(4, 3, {1, -1}, [&](const GeneratorWord&) { ++count; });
  // 1 + 8 + 8*6 + 8*6*6
  EXPECT_EQ(count, 1u + 8 + 48 + 288);
}

TEST(Vertex, PrintAndParse) {
  const Vertex v{{1, 10, 3}};
  EXPECT_EQ(to_string(v, 12), "1.10.3");
  EXPECT_EQ(parse_vertex(12, "1.10.3"), v);
  EXPECT_EQ(to_string(Vertex{{1, 2, 1}}, 4), "121");
  EXPECT_EQ(parse_vertex(4, "121"), (Vertex{{1, 2, 1}}));
  EXPECT_THROW(parse_vertex(4, "15"), std::invalid_argument);
  EXPECT_THROW(parse_vertex(12, "1..2"), std::invalid_argument);
}

TEST(Vertex, IndexIsLexicographic) {
  for (unsigned n = 3; n <= 5; ++n)
    for (std::size_t i = 0; i < n * n * n; ++i) {
      const auto v = vertex_at(i, n, 3);
      EXPECT_EQ(vertex_index(v, n), i);
      if (i > 0) {
        EXPECT_LT(vertex_at(i - 1, n, 3), v);
      }
    }
}

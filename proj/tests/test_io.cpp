#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace superrsk;

TEST(TextIo, ParseAndRender) {
  auto t = fx::small_tableau();
  EXPECT_EQ(render(t), "1 2 3\n1 3\n2 4\n4\n");
  EXPECT_EQ(render(fx::small_skew()), ". . . 1 2 3\n. . 1 3\n. .\n. 4\n2\n4\n");
  EXPECT_EQ(render(Tableau(t.alphabet())), "");
  EXPECT_EQ(parse_tableau_text(t.alphabet(), render(t)), t);
  EXPECT_EQ(parse_skew_text(t.alphabet(), render(fx::small_skew())), fx::small_skew());
}

TEST(TextIo, Errors) {
  auto a = fx::six();
  EXPECT_THROW(parse_skew_text(a, "1 . 2"), ShapeError);
  EXPECT_THROW(parse_skew_text(a, "1 2//3"), ShapeError);
  EXPECT_THROW(parse_tableau_text(a, ". 1"), ShapeError);
  EXPECT_THROW(parse_tableau_text(a, "9"), AlphabetError);
  EXPECT_TRUE(parse_tableau_text(a, "").empty());
}

TEST(TextIo, BiwordRender) {
  auto a = SignedAlphabet::standard(1, 2);
  auto w = parse_biword_text(a, a, "-1 1 2", "2 -1 1");
  EXPECT_EQ(render(w), "-1  1 2\n 2 -1 1\n");
  EXPECT_EQ(render(Biword(a, a)), "\n\n");
}

TEST(JsonIo, TableauRoundTrip) {
  auto t = fx::small_skew();
  auto j = to_json(t);
  EXPECT_EQ(j["outer"], json({6, 4, 2, 2, 1, 1}));
  EXPECT_EQ(j["inner"], json({3, 2, 2, 1}));
  EXPECT_EQ(j["rows"][0], json({"1", "2", "3"}));
  EXPECT_EQ(skew_from_json(t.alphabet(), j), t);
  // outer may be left out
  json k = {{"rows", {{"1", "2", "3"}, {"1", "3"}}}, {"inner", {1}}};
  EXPECT_EQ(skew_from_json(t.alphabet(), k).shape().outer(), (Partition{4, 2}));
  EXPECT_EQ(tableau_from_json(t.alphabet(), to_json(fx::small_tableau())), fx::small_tableau());
  EXPECT_THROW(skew_from_json(t.alphabet(), json::array()), ShapeError);
}

TEST(JsonIo, WordAndBiword) {
  auto w = fx::example1();
  auto j = to_json(w);
  EXPECT_EQ(j["top"].size(), 16u);
  EXPECT_EQ(j["bottom"][0], "2");
  EXPECT_EQ(biword_from_json(w.top_alphabet(), w.bottom_alphabet(), j), w);
  EXPECT_THROW(biword_from_json(w.top_alphabet(), w.bottom_alphabet(), json::object()), Error);
  auto word = fx::digits(fx::six(), "2421");
  EXPECT_EQ(word_from_json(fx::six(), to_json(word)), word);
  EXPECT_THROW(word_from_json(fx::six(), json("2421")), Error);
}

TEST(JsonIo, PairPathAndBalls) {
  auto p = to_json(fx::example2_pair());
  EXPECT_EQ(p["insertion"]["rows"][0], json({"1", "1", "2"}));
  EXPECT_EQ(p["recording"]["rows"][3], json({"4"}));

  SlidePath path{{4, 1}, {SlideMove::from_below, SlideMove::from_right}, {5, 2}};
  EXPECT_EQ(to_json(path).dump(), R"({"end":[5,2],"moves":["below","right"],"start":[4,1]})");

  auto b = to_json(build_ball_array(fx::example2()));
  EXPECT_EQ(b["balls"].size(), build_ball_array(fx::example2()).balls.size());
  EXPECT_TRUE(b["balls"][0].contains("generation"));
}

TEST(JsonIo, RandomRoundTrips) {
  std::mt19937_64 rng(67);
  for (int it = 0; it < 500; ++it) {
    auto a = fx::random_alphabet(rng, 4);
    auto t = tableau_of_word(fx::random_word(rng, a, 8));
    EXPECT_EQ(tableau_from_json(a, json::parse(to_json(t).dump())), t);
    EXPECT_EQ(parse_tableau_text(a, render(t)), t);
    auto w = fx::random_biword(rng, 4, 8);
    EXPECT_EQ(biword_from_json(w.top_alphabet(), w.bottom_alphabet(), json::parse(to_json(w).dump())), w);
  }
}

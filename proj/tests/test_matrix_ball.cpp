#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"

using namespace superrsk;

TEST(MatrixBall, PlacementOfFirstExample) {
  auto w = fx::example1();
  auto a = fx::six();
  auto b = number_generation(place_balls(w), 0);
  EXPECT_EQ(b.balls.size(), w.size());
  // 2, 5, 6 odd: one row per occurrence; 1, 3, 4 even: a single row
  EXPECT_EQ(b.row_labels.size(), 3u + 1 + 1 + 3 + 3 + 3 - 2);
  std::vector<std::pair<std::string, int>> col1;
  for (const auto& ball : b.balls)
    if (b.col_labels[ball.col_slot] == a.letter("1"))
      col1.emplace_back(a.name(b.row_labels[ball.row_slot]), ball.number);
  std::sort(col1.begin(), col1.end());
  EXPECT_EQ(col1, (std::vector<std::pair<std::string, int>>{{"2", 1}, {"5", 2}, {"6", 3}}));
}

TEST(MatrixBall, SameCellStacksAlongDiagonal) {
  auto a = SignedAlphabet::numbered({0});
  auto w = parse_biword_text(a, a, "1 1", "1 1");
  auto b = number_generation(place_balls(w), 0);
  ASSERT_EQ(b.balls.size(), 2u);
  EXPECT_EQ(b.balls[0].number, 1);
  EXPECT_EQ(b.balls[1].number, 2);
  EXPECT_EQ(tableaux_of(build_ball_array(w)), rsk(w));
}

TEST(MatrixBall, TrivialCases) {
  auto a = fx::six();
  Biword empty(a, a);
  auto b = build_ball_array(empty);
  EXPECT_TRUE(b.balls.empty());
  EXPECT_EQ(tableaux_of(b), rsk(empty));
  auto one = build_ball_array(parse_biword_text(a, a, "3", "2"));
  ASSERT_EQ(one.balls.size(), 1u);
  EXPECT_EQ(one.balls[0].number, 1);
  EXPECT_FALSE(has_repeated_number(one, 0));
}

TEST(MatrixBall, GoldenExamples) {
  for (const auto& [w, p] : {std::pair{fx::example1(), fx::example1_pair()}, std::pair{fx::example2(), fx::example2_pair()}}) {
    auto b = build_ball_array(w);
    EXPECT_EQ(tableaux_of(b), p);
    EXPECT_EQ(b.generations(), static_cast<int>(p.insertion.height()));
    EXPECT_EQ(tableaux_of(build_ball_array(invert_biword(w))), swap(p));
  }
  EXPECT_EQ(build_ball_array(fx::example1()).generations(), 5);
}

TEST(MatrixBall, TransposeSwapsPair) {
  auto b = build_ball_array(fx::example1());
  EXPECT_EQ(transpose(transpose(b)), b);
  EXPECT_EQ(tableaux_of(transpose(b)), swap(tableaux_of(b)));
}

TEST(MatrixBall, OracleAgreesWithRskRandom) {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 5000; ++it) {
    auto w = fx::random_biword(rng, 4, 8);
    auto b = build_ball_array(w);
    EXPECT_EQ(tableaux_of(b), rsk(w));
    EXPECT_EQ(tableaux_of(build_ball_array(invert_biword(w))), swap(rsk(w)));
    EXPECT_EQ(tableaux_of(transpose(b)), swap(rsk(w)));
  }
}

TEST(MatrixBall, NumberingMatchesFineCoordinates) {
  // 1 + the largest number strictly NW in the refined grid
  std::mt19937_64 rng(61);
  for (int it = 0; it < 2000; ++it) {
    auto b = build_ball_array(fx::random_biword(rng, 4, 8));
    for (int g = 0; g < b.generations(); ++g) {
      auto gen = b.generation(g);
      for (const auto* x : gen) {
        int best = 0;
        for (const auto* y : gen)
          if (y->fine_row < x->fine_row && y->fine_col < x->fine_col) best = std::max(best, y->number);
        EXPECT_EQ(x->number, best + 1);
      }
    }
  }
}

TEST(MatrixBall, Render) {
  auto a = SignedAlphabet::numbered({0});
  auto text = render(build_ball_array(parse_biword_text(a, a, "1 1", "1 1")));
  EXPECT_EQ(text, "        1\n1 1@0,2@0\n");
}

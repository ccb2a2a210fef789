#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace superrsk;

TEST(Partition, ConstructionAndParse) {
  Partition p{3, 3, 1, 0, 0};
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 3, 1}));
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p[5], 0);
  EXPECT_EQ(Partition::parse("3,3,1"), p);
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_TRUE(Partition::parse("0").empty());
  EXPECT_THROW(Partition({1, 2}), ShapeError);
  EXPECT_THROW(Partition({2, -1}), ShapeError);
  EXPECT_THROW(Partition::parse("3,x"), ShapeError);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{4, 3, 1, 1}), (Partition{4, 2, 2, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{2, 2, 1}), (Partition{3, 2}));
}

TEST(Partition, ConjugateIsInvolution) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      if (p.height() > 8 || p.width() > 8) continue;
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(conjugate(p).size(), p.size());
    }
}

TEST(Partition, Generators) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
  auto subs = subpartitions(Partition{2, 1});
  EXPECT_EQ(subs.size(), 5u);  // ∅, 1, 2, 11, 21
  for (const auto& s : subpartitions(Partition{3, 2, 2})) EXPECT_TRUE((Partition{3, 2, 2}).contains(s));
}

TEST(SkewShape, CellsAndContainment) {
  SkewShape s(Partition{3, 2}, Partition{1});
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.cells(), (std::vector<Cell>{{1, 2}, {1, 3}, {2, 1}, {2, 2}}));
  EXPECT_TRUE(s.in_inner({1, 1}));
  EXPECT_THROW(SkewShape(Partition{2}, Partition{3}), ShapeError);
  EXPECT_THROW(SkewShape(Partition{2}, Partition{1, 1}), ShapeError);
  EXPECT_EQ(SkewShape::parse("5,4,3,2/3,3,1"), SkewShape(Partition{5, 4, 3, 2}, Partition{3, 3, 1}));
}

TEST(Tableau, ValidatesExample) {
  auto t = fx::small_tableau();
  EXPECT_EQ(t.shape(), (Partition{3, 2, 2, 1}));
  EXPECT_TRUE(validate(t).ok());
  EXPECT_TRUE(validate(fx::small_skew()).ok());
}

TEST(Tableau, SingleBoxIsValid) {
  auto a = SignedAlphabet::standard(2, 2);
  for (auto x : a.letters()) EXPECT_TRUE(validate(Tableau(a, {{x}})).ok());
}

TEST(Tableau, RowAndColumnRepetitionRules) {
  auto a = SignedAlphabet::standard(1, 1);
  auto odd = a.letter("1"), even = a.letter("-1");
  auto row_odd = validate(Tableau(a, {{odd, odd}}));
  ASSERT_FALSE(row_odd.ok());
  ASSERT_EQ(row_odd.violations.size(), 1u);
  EXPECT_FALSE(row_odd.violations[0].vertical);
  EXPECT_TRUE(validate(Tableau(a, {{even, even}})).ok());
  EXPECT_TRUE(validate(Tableau(a, {{odd}, {odd}})).ok());
  auto col_even = validate(Tableau(a, {{even}, {even}}));
  ASSERT_FALSE(col_even.ok());
  EXPECT_TRUE(col_even.violations[0].vertical);
  // every bad pair is reported
  auto both = validate(Tableau(a, {{odd, odd}, {even}}));
  EXPECT_EQ(both.violations.size(), 2u);
  EXPECT_THROW(require_valid(Tableau(a, {{odd, odd}})), TableauError);
}

TEST(Tableau, StructuralErrorsAreDistinct) {
  auto a = SignedAlphabet::standard(1, 1);
  EXPECT_THROW(Tableau(a, {{Letter{0}}, {Letter{0}, Letter{1}}}), ShapeError);
  EXPECT_THROW(SkewTableau(a, SkewShape(Partition{2}), {{Letter{0}}}), ShapeError);
  EXPECT_THROW(SkewTableau(a, SkewShape(Partition{2}, Partition{1}), {{Letter{0}}, {Letter{1}}}), ShapeError);
  EXPECT_THROW(Tableau(a, {{Letter{7}}}), AlphabetError);
}

TEST(Tableau, ColumnReading) {
  EXPECT_EQ(column_reading(fx::small_tableau()).to_string(), "4 2 1 1 4 3 2 3");
  EXPECT_EQ(column_reading(fx::small_skew()).to_string(), "4 2 4 1 3 1 2 3");
  EXPECT_TRUE(column_reading(Tableau(fx::six())).empty());
  EXPECT_EQ(column_reading(fx::small_tableau()), column_reading(fx::small_tableau().skew()));
}

TEST(Corners, SkewExample) {
  auto cs = corners(fx::small_skew().shape());
  std::vector<Cell> inner, outer;
  for (const auto& c : cs) (c.kind == CornerKind::inner ? inner : outer).push_back(c.cell);
  EXPECT_EQ(inner, (std::vector<Cell>{{1, 3}, {3, 2}, {4, 1}}));
  EXPECT_EQ(outer, (std::vector<Cell>{{1, 6}, {2, 4}, {4, 2}, {6, 1}}));
}

TEST(Corners, StraightAndRow) {
  for (const auto& c : corners(SkewShape(Partition{3, 1}))) EXPECT_EQ(c.kind, CornerKind::outer);
  auto row = corners(SkewShape(Partition{5}));
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row[0].cell, (Cell{1, 5}));
  EXPECT_EQ(row[0].kind, CornerKind::outer);
  // a removable inner cell with nothing after it is both kinds
  auto both = corners(SkewShape(Partition{2, 1}, Partition{2}));
  int at12 = 0;
  for (const auto& c : both) at12 += c.cell == Cell{1, 2};
  EXPECT_EQ(at12, 2);
}

TEST(Enumerate, SmallCounts) {
  auto a22 = SignedAlphabet::standard(2, 2);
  EXPECT_EQ(enumerate_tableaux(SkewShape(Partition{1}), a22).size(), 4u);
  EXPECT_EQ(enumerate_tableaux(SkewShape(Partition{1, 1, 1}), SignedAlphabet::standard(1, 1)).size(), 2u);
  EXPECT_EQ(count_tableaux(SkewShape(Partition{5, 4, 3, 2}, Partition{3, 3, 1}), a22), 960u);
  // a single even letter cannot fill a column of two
  EXPECT_TRUE(enumerate_tableaux(SkewShape(Partition{1, 1}), SignedAlphabet::standard(1, 0)).empty());
  EXPECT_EQ(enumerate_tableaux(SkewShape(), a22).size(), 1u);
}

// Brute force over all fillings as an oracle.
static std::set<Rows> brute_force(const SkewShape& s, const SignedAlphabet& a) {
  std::set<Rows> out;
  auto cells = s.cells();
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= a.size();
  for (std::size_t code = 0; code < total; ++code) {
    Rows rows(s.height());
    std::size_t c = code;
    for (const auto& cell : cells) {
      rows[static_cast<std::size_t>(cell.row) - 1].push_back(Letter{static_cast<std::uint16_t>(c % a.size())});
      c /= a.size();
    }
    SkewTableau t(a, s, rows);
    if (validate(t).ok()) out.insert(rows);
  }
  return out;
}

TEST(Enumerate, MatchesBruteForceAndIsCanonical) {
  std::vector<SignedAlphabet> alphabets = {SignedAlphabet::standard(1, 1), SignedAlphabet::standard(2, 1),
                                           SignedAlphabet::parse("a:1,b:0,c:1,d:0")};
  for (const auto& a : alphabets)
    for (int n = 0; n <= 6; ++n)
      for (const auto& outer : partitions_of(n))
        for (const auto& inner : subpartitions(outer)) {
          SkewShape s(outer, inner);
          if (s.size() > (a.size() == 4 ? 5 : 6)) continue;
          auto got = enumerate_tableaux(s, a);
          std::vector<Rows> rows;
          for (const auto& t : got) {
            EXPECT_TRUE(validate(t).ok());
            rows.push_back(t.rows());
          }
          EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end()));
          std::set<Rows> uniq(rows.begin(), rows.end());
          EXPECT_EQ(uniq.size(), rows.size());
          EXPECT_EQ(uniq, brute_force(s, a)) << s.to_string() << " over " << a.to_string();
        }
}

TEST(Enumerate, EarlyStopAndFirst) {
  auto a = SignedAlphabet::standard(2, 2);
  SkewShape s(Partition{2, 1});
  auto first = first_tableau(s, a);
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(*first, enumerate_tableaux(s, a).front());
  EXPECT_FALSE(first_tableau(SkewShape(Partition{1, 1}), SignedAlphabet::standard(1, 0)).has_value());
}

TEST(Render, StraightAndSkew) {
  EXPECT_EQ(render(fx::small_tableau()), "1 2 3\n1 3\n2 4\n4\n");
  EXPECT_EQ(render(fx::small_skew()), ". . . 1 2 3\n. . 1 3\n. .\n. 4\n2\n4\n");
  EXPECT_EQ(render(Tableau(fx::six())), "");
}

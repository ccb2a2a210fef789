#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/error.hpp"
#include "superrsk/shapes.hpp"

namespace superrsk {

struct InsertionTrace {
  Tableau result;
  Cell new_box;
};

namespace detail {

inline Cell row_insert(Rows& rows, const SignedAlphabet& a, Letter x) {
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(i) + 1, 1};
    }
    auto& row = rows[i];
    // even x bumps the first y > x, odd x the first y >= x
    auto it = a.is_even(x) ? std::upper_bound(row.begin(), row.end(), x) : std::lower_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(i) + 1, static_cast<int>(row.size())};
    }
    std::swap(*it, x);
  }
}

inline void require_outer_corner(const Rows& rows, Cell c) {
  if (c.row < 1 || c.row > static_cast<int>(rows.size()) ||
      c.col != static_cast<int>(rows[c.row - 1].size()) ||
      (c.row < static_cast<int>(rows.size()) && rows[c.row].size() == rows[c.row - 1].size()))
    throw ShapeError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is not an outer corner");
}

inline Letter reverse_row_insert(Rows& rows, const SignedAlphabet& a, Cell c) {
  require_outer_corner(rows, c);
  Letter y = rows[c.row - 1].back();
  rows[c.row - 1].pop_back();
  if (rows[c.row - 1].empty()) rows.pop_back();
  for (int i = c.row - 2; i >= 0; --i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    // rightmost entry < y for even y, <= y for odd y
    auto it = a.is_even(y) ? std::lower_bound(row.begin(), row.end(), y) : std::upper_bound(row.begin(), row.end(), y);
    if (it == row.begin()) throw TableauError("reverse insertion found no entry to bump; tableau is not valid");
    std::swap(*std::prev(it), y);
  }
  return y;
}

inline Cell column_insert(Rows& rows, const SignedAlphabet& a, Letter x) {
  for (std::size_t j = 0;; ++j) {
    std::size_t h = 0;
    while (h < rows.size() && rows[h].size() > j) ++h;
    // append below unless an entry >= x (even x) or > x (odd x) exists
    std::size_t i = 0;
    if (a.is_even(x)) {
      while (i < h && rows[i][j] < x) ++i;
    } else {
      while (i < h && rows[i][j] <= x) ++i;
    }
    if (i == h) {
      if (h == rows.size()) rows.emplace_back();
      rows[h].push_back(x);
      return {static_cast<int>(h) + 1, static_cast<int>(j) + 1};
    }
    std::swap(rows[i][j], x);
  }
}

}  // namespace detail

inline InsertionTrace right_insert(const Tableau& t, Letter x) {
  Rows rows = t.rows();
  Cell c = detail::row_insert(rows, t.alphabet(), x);
  return {Tableau(t.alphabet(), std::move(rows), unchecked), c};
}

// Undo of right_insert from the box it created.
inline std::pair<Tableau, Letter> reverse_right_insert(const Tableau& t, Cell corner) {
  Rows rows = t.rows();
  Letter x = detail::reverse_row_insert(rows, t.alphabet(), corner);
  return {Tableau(t.alphabet(), std::move(rows), unchecked), x};
}

inline InsertionTrace left_insert(Letter x, const Tableau& t) {
  Rows rows = t.rows();
  Cell c = detail::column_insert(rows, t.alphabet(), x);
  return {Tableau(t.alphabet(), std::move(rows), unchecked), c};
}

// t ▷ w
inline Tableau insert_word(const Tableau& t, const Word& w) {
  if (!(t.alphabet() == w.alphabet())) throw AlphabetError("word and tableau over different alphabets");
  Rows rows = t.rows();
  for (Letter x : w) detail::row_insert(rows, t.alphabet(), x);
  return Tableau(t.alphabet(), std::move(rows), unchecked);
}

inline Tableau tableau_of_word(const Word& w) { return insert_word(Tableau(w.alphabet()), w); }

// Left insertion of the letters from right to left.
inline Tableau tableau_of_word_left(const Word& w) {
  Rows rows;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    detail::column_insert(rows, w.alphabet(), *it);
  return Tableau(w.alphabet(), std::move(rows), unchecked);
}

inline bool plactic_equivalent(const Word& w, const Word& v) {
  if (!(w.alphabet() == v.alphabet())) throw AlphabetError("words over different alphabets");
  if (w.size() != v.size()) return false;
  return tableau_of_word(w) == tableau_of_word(v);
}

// Words one super Knuth move away, sorted and without duplicates.
inline std::vector<Word> knuth_neighbors(const Word& w) {
  const auto& a = w.alphabet();
  const auto& l = w.letters();
  std::set<std::vector<Letter>> found;
  for (std::size_t p = 0; p + 2 < l.size(); ++p) {
    // xzy <-> zxy: swap p, p+1 with y = l[p+2]
    {
      Letter lo = std::min(l[p], l[p + 1]), hi = std::max(l[p], l[p + 1]), y = l[p + 2];
      if (lo <= y && y <= hi && (lo != y || a.is_even(y)) && (y != hi || a.is_odd(y)) && lo != hi) {
        auto v = l;
        std::swap(v[p], v[p + 1]);
        found.insert(std::move(v));
      }
    }
    // yxz <-> yzx: swap p+1, p+2 with y = l[p]
    {
      Letter lo = std::min(l[p + 1], l[p + 2]), hi = std::max(l[p + 1], l[p + 2]), y = l[p];
      if (lo <= y && y <= hi && (lo != y || a.is_odd(y)) && (y != hi || a.is_even(y)) && lo != hi) {
        auto v = l;
        std::swap(v[p + 1], v[p + 2]);
        found.insert(std::move(v));
      }
    }
  }
  std::vector<Word> out;
  for (auto& v : found) out.emplace_back(a, v);
  return out;
}

// t ⋆ u = t ▷ R(u)
inline Tableau tableau_product(const Tableau& t, const Tableau& u) { return insert_word(t, column_reading(u)); }

// Deletes the i largest and j smallest letters. Equal letters are ranked
// as in standardization: later occurrences of an even letter count as
// larger, earlier occurrences of an odd letter count as larger.
inline Word strip_extremes(const Word& w, std::size_t i, std::size_t j) {
  if (i + j > w.size()) throw Error("strip_extremes: i + j exceeds the word length");
  const auto& a = w.alphabet();
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    if (w[p] != w[q]) return w[p] < w[q];
    return a.is_even(w[p]) ? p < q : p > q;
  });
  std::vector<bool> drop(w.size(), false);
  for (std::size_t k = 0; k < j; ++k) drop[order[k]] = true;
  for (std::size_t k = 0; k < i; ++k) drop[order[w.size() - 1 - k]] = true;
  std::vector<Letter> out;
  for (std::size_t p = 0; p < w.size(); ++p)
    if (!drop[p]) out.push_back(w[p]);
  return Word(a, std::move(out));
}

}  // namespace superrsk

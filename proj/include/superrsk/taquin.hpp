#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/error.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/shapes.hpp"

namespace superrsk {

enum class SlideMove { from_right, from_below, from_left, from_above };

struct SlidePath {
  Cell start;
  std::vector<SlideMove> moves;
  Cell end;
};

struct SlideResult {
  SkewTableau result;
  SlidePath path;
};

namespace detail {

// Full rows with -1 marking inner cells and the hole.
struct SlideGrid {
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> v;

  explicit SlideGrid(const SkewTableau& s, std::size_t extra_rows = 0) {
    const auto& sh = s.shape();
    std::size_t h = sh.height() + extra_rows;
    outer.resize(h);
    inner.resize(h);
    v.resize(h);
    for (std::size_t i = 0; i < sh.height(); ++i) {
      outer[i] = sh.outer()[i];
      inner[i] = sh.inner()[i];
      v[i].assign(static_cast<std::size_t>(outer[i]), -1);
      for (std::size_t k = 0; k < s.rows()[i].size(); ++k)
        v[i][static_cast<std::size_t>(inner[i]) + k] = s.rows()[i][k].rank;
    }
  }

  // Filled cell value, or -1.
  int at(int r, int c) const {
    if (r < 1 || c < 1 || r > static_cast<int>(v.size()) || c > static_cast<int>(v[r - 1].size())) return -1;
    return v[r - 1][c - 1];
  }
  int& ref(int r, int c) { return v[r - 1][c - 1]; }

  SkewTableau to_skew(const SignedAlphabet& a) const {
    Rows rows(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (int j = inner[i]; j < outer[i]; ++j)
        rows[i].push_back(Letter{static_cast<std::uint16_t>(v[i][static_cast<std::size_t>(j)])});
    std::size_t h = v.size();
    while (h > 0 && outer[h - 1] == 0) --h;
    rows.resize(h);
    return SkewTableau(a, SkewShape(Partition(outer), Partition(inner)), std::move(rows));
  }
};

}  // namespace detail

inline bool is_inner_corner(const SkewShape& s, Cell c) {
  return c.row >= 1 && c.col >= 1 && c.col == s.inner()[c.row - 1] && s.inner()[c.row] < c.col;
}

// Cells that can be added to the outer shape.
inline bool is_addable(const SkewShape& s, Cell c) {
  if (c.row < 1 || c.row > static_cast<int>(s.height()) + 1) return false;
  if (c.col != s.outer()[c.row - 1] + 1) return false;
  return c.row == 1 || s.outer()[c.row - 2] >= c.col;
}

inline SlideResult forward_slide(const SkewTableau& s, Cell c) {
  if (!is_inner_corner(s.shape(), c)) throw ShapeError("forward slide needs an inner corner");
  const auto& a = s.alphabet();
  detail::SlideGrid g(s);
  SlidePath path{c, {}, c};
  Cell h = c;
  for (;;) {
    int r = g.at(h.row, h.col + 1), b = g.at(h.row + 1, h.col);
    bool from_below;
    if (r < 0 && b < 0) break;
    if (r < 0) from_below = true;
    else if (b < 0) from_below = false;
    // below moves up when b <= r, ties only for even letters
    else from_below = b < r || (b == r && a.is_even(Letter{static_cast<std::uint16_t>(b)}));
    Cell next = from_below ? Cell{h.row + 1, h.col} : Cell{h.row, h.col + 1};
    g.ref(h.row, h.col) = from_below ? b : r;
    g.ref(next.row, next.col) = -1;
    path.moves.push_back(from_below ? SlideMove::from_below : SlideMove::from_right);
    h = next;
  }
  path.end = h;
  g.inner[static_cast<std::size_t>(c.row) - 1] -= 1;
  g.outer[static_cast<std::size_t>(h.row) - 1] -= 1;
  g.v[static_cast<std::size_t>(h.row) - 1].pop_back();
  return {g.to_skew(a), std::move(path)};
}

// Moves a hole from an addable outer cell back until it becomes an inner corner.
inline SlideResult reverse_slide(const SkewTableau& s, Cell c) {
  if (!is_addable(s.shape(), c)) throw ShapeError("reverse slide needs an addable outer cell");
  const auto& a = s.alphabet();
  detail::SlideGrid g(s, 1);
  g.outer[static_cast<std::size_t>(c.row) - 1] += 1;
  g.v[static_cast<std::size_t>(c.row) - 1].push_back(-1);
  SlidePath path{c, {}, c};
  Cell h = c;
  for (;;) {
    int u = h.row > 1 && h.col > g.inner[static_cast<std::size_t>(h.row) - 2] ? g.at(h.row - 1, h.col) : -1;
    int l = h.col > 1 && h.col - 1 > g.inner[static_cast<std::size_t>(h.row) - 1] ? g.at(h.row, h.col - 1) : -1;
    bool from_above;
    if (u < 0 && l < 0) break;
    if (l < 0) from_above = true;
    else if (u < 0) from_above = false;
    // above moves down when l <= u, ties only for even letters
    else from_above = l < u || (l == u && a.is_even(Letter{static_cast<std::uint16_t>(l)}));
    Cell next = from_above ? Cell{h.row - 1, h.col} : Cell{h.row, h.col - 1};
    g.ref(h.row, h.col) = from_above ? u : l;
    g.ref(next.row, next.col) = -1;
    path.moves.push_back(from_above ? SlideMove::from_above : SlideMove::from_left);
    h = next;
  }
  path.end = h;
  g.inner[static_cast<std::size_t>(h.row) - 1] += 1;
  return {g.to_skew(a), std::move(path)};
}

// Picks one of the current inner corners (given bottom to top).
using CornerChooser = std::function<std::size_t(const std::vector<Cell>&)>;

// Default policy: the bottom-most inner corner.
inline std::size_t bottom_most_corner(const std::vector<Cell>&) { return 0; }

inline std::vector<Cell> inner_corners_bottom_up(const SkewShape& s) {
  std::vector<Cell> out;
  const auto& in = s.inner();
  for (std::size_t i = in.height(); i-- > 0;)
    if (in[i + 1] < in[i]) out.push_back({static_cast<int>(i) + 1, in[i]});
  return out;
}

inline Tableau rectify(SkewTableau s, const CornerChooser& choose, std::vector<SlidePath>* trace = nullptr) {
  for (;;) {
    auto cs = inner_corners_bottom_up(s.shape());
    if (cs.empty()) break;
    auto k = choose(cs);
    if (k >= cs.size()) throw ShapeError("corner chooser returned an invalid index");
    auto step = forward_slide(s, cs[k]);
    if (trace) trace->push_back(std::move(step.path));
    s = std::move(step.result);
  }
  return straighten(s);
}

inline Tableau rectify(const SkewTableau& s, std::vector<SlidePath>* trace = nullptr) {
  return rectify(s, bottom_most_corner, trace);
}

// [S, S2]: S2 shifted right by the width of S and placed on top of it.
inline SkewTableau concat(const SkewTableau& s, const SkewTableau& s2) {
  if (!(s.alphabet() == s2.alphabet())) throw AlphabetError("concatenating tableaux over different alphabets");
  const int w = s.shape().outer().width();
  const auto& lo = s.shape().outer();
  const auto& li = s.shape().inner();
  const auto& mo = s2.shape().outer();
  const auto& mi = s2.shape().inner();
  std::vector<int> outer, inner;
  Rows rows;
  for (std::size_t i = 0; i < mo.height(); ++i) {
    outer.push_back(mo[i] + w);
    inner.push_back(mi[i] + w);
    rows.push_back(s2.rows()[i]);
  }
  for (std::size_t i = 0; i < lo.height(); ++i) {
    outer.push_back(lo[i]);
    inner.push_back(li[i]);
    rows.push_back(s.rows()[i]);
  }
  return SkewTableau(s.alphabet(), SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

// ∅ ▷ R(S)R(S2)
inline Tableau skew_product(const SkewTableau& s, const SkewTableau& s2) {
  return tableau_of_word(column_reading(s) + column_reading(s2));
}

inline Tableau skew_product_by_taquin(const SkewTableau& s, const SkewTableau& s2,
                                      std::vector<SlidePath>* trace = nullptr) {
  return rectify(concat(s, s2), trace);
}

// Repeatedly removes the top-left entry, slides, and records its opposite
// letter at the vacated cell.
inline Tableau evacuate(const Tableau& t) {
  const auto& a = t.alphabet();
  const auto op = a.opposite();
  Rows out;
  for (const auto& r : t.rows()) out.emplace_back(r.size());
  SkewTableau cur = t.skew();
  while (cur.size() > 0) {
    Letter x = cur.rows()[0][0];
    auto outer = cur.shape().outer();
    Rows rows = cur.rows();
    rows[0].erase(rows[0].begin());
    SkewTableau holed(a, SkewShape(outer, Partition{1}), std::move(rows));
    auto step = forward_slide(holed, {1, 1});
    out[static_cast<std::size_t>(step.path.end.row) - 1][static_cast<std::size_t>(step.path.end.col) - 1] =
        a.opposite_letter(x);
    cur = std::move(step.result);
  }
  return Tableau(op, std::move(out), unchecked);
}

}  // namespace superrsk

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/correspondences.hpp"
#include "superrsk/error.hpp"
#include "superrsk/shapes.hpp"

namespace superrsk {

// Slots are 0-based, rows top to bottom and columns left to right. The fine
// coordinates refine the slot grid so that every ball has its own row and
// column; balls stacked in one cell run NW to SE along them.
struct Ball {
  std::size_t row_slot = 0;
  std::size_t col_slot = 0;
  std::size_t stack_pos = 0;
  int number = 0;
  int generation = 0;
  std::size_t fine_row = 0;
  std::size_t fine_col = 0;
  friend bool operator==(const Ball&, const Ball&) = default;
};

struct BallArray {
  SignedAlphabet row_alphabet;
  SignedAlphabet col_alphabet;
  std::vector<Letter> row_labels;
  std::vector<Letter> col_labels;
  std::vector<Ball> balls;

  BallArray(SignedAlphabet rows, SignedAlphabet cols) : row_alphabet(std::move(rows)), col_alphabet(std::move(cols)) {}

  int generations() const {
    int g = 0;
    for (const auto& b : balls) g = std::max(g, b.generation + 1);
    return g;
  }
  std::vector<const Ball*> generation(int g) const {
    std::vector<const Ball*> out;
    for (const auto& b : balls)
      if (b.generation == g) out.push_back(&b);
    return out;
  }

  friend bool operator==(const BallArray& a, const BallArray& b) {
    return a.row_labels == b.row_labels && a.col_labels == b.col_labels && a.balls == b.balls &&
           a.row_alphabet == b.row_alphabet && a.col_alphabet == b.col_alphabet;
  }
};

namespace detail {

// Odd letters get one slot per occurrence, even letters a single slot.
inline std::vector<Letter> slot_labels(const SignedAlphabet& a, std::vector<Letter> letters) {
  std::sort(letters.begin(), letters.end());
  std::vector<Letter> out;
  for (Letter x : letters)
    if (a.is_odd(x) || out.empty() || out.back() != x) out.push_back(x);
  return out;
}

inline void assign_fine(std::vector<Ball>& balls) {
  std::vector<std::size_t> idx(balls.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) {
    const auto &a = balls[p], &b = balls[q];
    return std::tie(a.row_slot, a.col_slot, a.stack_pos) < std::tie(b.row_slot, b.col_slot, b.stack_pos);
  });
  for (std::size_t k = 0; k < idx.size(); ++k) balls[idx[k]].fine_row = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) {
    const auto &a = balls[p], &b = balls[q];
    return std::tie(a.col_slot, a.row_slot, a.stack_pos) < std::tie(b.col_slot, b.row_slot, b.stack_pos);
  });
  for (std::size_t k = 0; k < idx.size(); ++k) balls[idx[k]].fine_col = k;
}

inline bool northwest_of(const Ball& a, const Ball& b) {
  if (a.row_slot == b.row_slot && a.col_slot == b.col_slot) return a.stack_pos < b.stack_pos;
  return a.row_slot <= b.row_slot && a.col_slot <= b.col_slot;
}

}  // namespace detail

// Generation-0 balls, unnumbered.
inline BallArray place_balls(const Biword& w) {
  const auto& ra = w.top_alphabet();
  const auto& ca = w.bottom_alphabet();
  BallArray b(ra, ca);
  b.row_labels = detail::slot_labels(ra, w.top_word().letters());
  b.col_labels = detail::slot_labels(ca, w.bottom_word().letters());
  std::vector<bool> row_used(b.row_labels.size(), false), col_used(b.col_labels.size(), false);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> stack;

  auto top_free_row = [&](Letter x) {
    auto lo = std::lower_bound(b.row_labels.begin(), b.row_labels.end(), x) - b.row_labels.begin();
    for (auto s = static_cast<std::size_t>(lo); s < b.row_labels.size() && b.row_labels[s] == x; ++s)
      if (!row_used[s]) return s;
    throw Error("matrix-ball: no free row for an odd label");
  };
  auto right_free_col = [&](Letter y) {
    auto hi = std::upper_bound(b.col_labels.begin(), b.col_labels.end(), y) - b.col_labels.begin();
    for (auto s = static_cast<std::size_t>(hi); s-- > 0 && b.col_labels[s] == y;)
      if (!col_used[s]) return s;
    throw Error("matrix-ball: no free column for an odd label");
  };
  auto only_slot = [](const std::vector<Letter>& labels, Letter x) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };

  for (auto c : w.columns()) {
    Ball ball;
    ball.row_slot = ra.is_odd(c.top) ? top_free_row(c.top) : only_slot(b.row_labels, c.top);
    ball.col_slot = ca.is_odd(c.bottom) ? right_free_col(c.bottom) : only_slot(b.col_labels, c.bottom);
    row_used[ball.row_slot] = true;
    col_used[ball.col_slot] = true;
    ball.stack_pos = stack[{ball.row_slot, ball.col_slot}]++;
    b.balls.push_back(ball);
  }
  detail::assign_fine(b.balls);
  return b;
}

// Each generation-g ball gets 1 + the largest number northwest of it
// among generation-g balls.
inline BallArray number_generation(BallArray b, int g) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < b.balls.size(); ++i)
    if (b.balls[i].generation == g) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) {
    const auto &x = b.balls[p], &y = b.balls[q];
    return std::tie(x.row_slot, x.col_slot, x.stack_pos) < std::tie(y.row_slot, y.col_slot, y.stack_pos);
  });
  for (std::size_t k = 0; k < idx.size(); ++k) {
    int best = 0;
    for (std::size_t l = 0; l < k; ++l)
      if (detail::northwest_of(b.balls[idx[l]], b.balls[idx[k]])) best = std::max(best, b.balls[idx[l]].number);
    b.balls[idx[k]].number = best + 1;
  }
  return b;
}

inline bool has_repeated_number(const BallArray& b, int g) {
  std::map<int, int> seen;
  for (const auto* ball : b.generation(g))
    if (++seen[ball->number] > 1) return true;
  return false;
}

// Adds and numbers the next generation; returns false when nothing repeats.
inline bool grow_once(BallArray& b) {
  const int g = b.generations() - 1;
  if (g < 0 || !has_repeated_number(b, g)) return false;
  std::map<int, std::vector<Ball>> strings;
  for (const auto* ball : b.generation(g)) strings[ball->number].push_back(*ball);
  std::vector<Ball> fresh;
  for (auto& [n, s] : strings) {
    std::sort(s.begin(), s.end(), [](const Ball& x, const Ball& y) { return x.fine_row < y.fine_row; });
    for (std::size_t t = 0; t + 1 < s.size(); ++t) {
      // right of the lower ball, under the upper one
      Ball nb;
      nb.row_slot = s[t + 1].row_slot;
      nb.col_slot = s[t].col_slot;
      nb.fine_row = s[t + 1].fine_row;
      nb.fine_col = s[t].fine_col;
      nb.generation = g + 1;
      fresh.push_back(nb);
    }
  }
  std::sort(fresh.begin(), fresh.end(), [](const Ball& x, const Ball& y) { return x.fine_row < y.fine_row; });
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> stack;
  for (auto& nb : fresh) nb.stack_pos = stack[{nb.row_slot, nb.col_slot}]++;
  b.balls.insert(b.balls.end(), fresh.begin(), fresh.end());
  b = number_generation(std::move(b), g + 1);
  return true;
}

inline BallArray grow(BallArray b) {
  while (grow_once(b)) {
  }
  return b;
}

inline BallArray build_ball_array(const Biword& w) { return grow(number_generation(place_balls(w), 0)); }

// Row r of T (resp. Q): for each number i, the label of the leftmost column
// (resp. topmost row) holding a generation r-1 ball numbered i.
inline TableauPair tableaux_of(const BallArray& b) {
  Rows t, q;
  for (int g = 0; g < b.generations(); ++g) {
    auto gen = b.generation(g);
    int top = 0;
    for (const auto* ball : gen) top = std::max(top, ball->number);
    std::vector<std::size_t> col(static_cast<std::size_t>(top), b.col_labels.size());
    std::vector<std::size_t> row(static_cast<std::size_t>(top), b.row_labels.size());
    for (const auto* ball : gen) {
      auto i = static_cast<std::size_t>(ball->number - 1);
      col[i] = std::min(col[i], ball->col_slot);
      row[i] = std::min(row[i], ball->row_slot);
    }
    t.emplace_back();
    q.emplace_back();
    for (std::size_t i = 0; i < col.size(); ++i) {
      t.back().push_back(b.col_labels.at(col[i]));
      q.back().push_back(b.row_labels.at(row[i]));
    }
  }
  return {Tableau(b.col_alphabet, std::move(t)), Tableau(b.row_alphabet, std::move(q))};
}

inline BallArray transpose(const BallArray& b) {
  BallArray out(b.col_alphabet, b.row_alphabet);
  out.row_labels = b.col_labels;
  out.col_labels = b.row_labels;
  for (auto ball : b.balls) {
    std::swap(ball.row_slot, ball.col_slot);
    std::swap(ball.fine_row, ball.fine_col);
    out.balls.push_back(ball);
  }
  return out;
}

// Grid with "n@g" per ball; "." for empty cells.
inline std::string render(const BallArray& b) {
  std::vector<std::vector<std::string>> cell(b.row_labels.size(), std::vector<std::string>(b.col_labels.size()));
  std::vector<const Ball*> sorted;
  for (const auto& ball : b.balls) sorted.push_back(&ball);
  std::sort(sorted.begin(), sorted.end(), [](const Ball* x, const Ball* y) {
    return std::tie(x->generation, x->stack_pos) < std::tie(y->generation, y->stack_pos);
  });
  for (const auto* ball : sorted) {
    auto& s = cell[ball->row_slot][ball->col_slot];
    if (!s.empty()) s += ',';
    s += std::to_string(ball->number) + "@" + std::to_string(ball->generation);
  }
  std::size_t width = 1, label = 1;
  for (const auto& r : cell)
    for (const auto& s : r) width = std::max(width, s.size());
  for (auto x : b.col_labels) width = std::max(width, b.col_alphabet.name(x).size());
  for (auto x : b.row_labels) label = std::max(label, b.row_alphabet.name(x).size());
  auto pad = [](const std::string& s, std::size_t n) { return std::string(n - s.size(), ' ') + s; };
  std::string out = std::string(label, ' ');
  for (auto x : b.col_labels) out += " " + pad(b.col_alphabet.name(x), width);
  out += '\n';
  for (std::size_t i = 0; i < cell.size(); ++i) {
    out += pad(b.row_alphabet.name(b.row_labels[i]), label);
    for (const auto& s : cell[i]) out += " " + pad(s.empty() ? "." : s, width);
    out += '\n';
  }
  return out;
}

}  // namespace superrsk

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/error.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/shapes.hpp"
#include "superrsk/taquin.hpp"

namespace superrsk {

struct BiLetter {
  Letter top;
  Letter bottom;
  friend constexpr auto operator<=>(const BiLetter&, const BiLetter&) = default;
};

// Signed two-rowed array, stored column by column. Columns weakly increase
// in the pair order; a column may repeat only when its total signature is 0.
class Biword {
 public:
  Biword(SignedAlphabet top, SignedAlphabet bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {}

  static Biword validate(SignedAlphabet top, SignedAlphabet bottom, std::vector<BiLetter> columns) {
    Biword w(std::move(top), std::move(bottom));
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& c = columns[i];
      if (!w.top_.contains(c.top) || !w.bottom_.contains(c.bottom))
        throw BiwordError("letter outside alphabet", i + 1);
      if (i == 0) continue;
      auto cmp = w.compare(columns[i - 1], c);
      if (cmp > 0) throw BiwordError("columns not sorted", i + 1);
      if (cmp == 0 && w.signature(c) == 1) throw BiwordError("repeated column of odd signature", i + 1);
    }
    w.columns_ = std::move(columns);
    return w;
  }

  // Same, with rows given as letter names.
  static Biword from_names(const SignedAlphabet& top, const SignedAlphabet& bottom,
                           const std::vector<std::string>& top_row, const std::vector<std::string>& bottom_row) {
    if (top_row.size() != bottom_row.size()) throw BiwordError("rows of different lengths", std::min(top_row.size(), bottom_row.size()) + 1);
    std::vector<BiLetter> cols;
    for (std::size_t i = 0; i < top_row.size(); ++i) cols.push_back({top.letter(top_row[i]), bottom.letter(bottom_row[i])});
    return validate(top, bottom, std::move(cols));
  }

  const SignedAlphabet& top_alphabet() const noexcept { return top_; }
  const SignedAlphabet& bottom_alphabet() const noexcept { return bottom_; }
  const std::vector<BiLetter>& columns() const noexcept { return columns_; }
  std::size_t size() const noexcept { return columns_.size(); }
  bool empty() const noexcept { return columns_.empty(); }

  Word top_word() const {
    std::vector<Letter> out;
    for (auto c : columns_) out.push_back(c.top);
    return Word(top_, std::move(out));
  }
  Word bottom_word() const {
    std::vector<Letter> out;
    for (auto c : columns_) out.push_back(c.bottom);
    return Word(bottom_, std::move(out));
  }

  int signature(BiLetter c) const { return top_.signature(c.top) ^ bottom_.signature(c.bottom); }
  std::strong_ordering compare(BiLetter p, BiLetter q) const {
    return pair_compare(top_, {p.top, p.bottom}, {q.top, q.bottom});
  }

  friend bool operator==(const Biword& a, const Biword& b) {
    return a.columns_ == b.columns_ && a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }

 private:
  SignedAlphabet top_, bottom_;
  std::vector<BiLetter> columns_;
};

inline Biword validate_biword(const SignedAlphabet& top, const SignedAlphabet& bottom, std::vector<BiLetter> columns) {
  return Biword::validate(top, bottom, std::move(columns));
}

inline Biword sort_into_biword(const SignedAlphabet& top, const SignedAlphabet& bottom, std::vector<BiLetter> pairs) {
  Biword probe(top, bottom);
  std::stable_sort(pairs.begin(), pairs.end(), [&](BiLetter p, BiLetter q) { return probe.compare(p, q) < 0; });
  return Biword::validate(top, bottom, std::move(pairs));
}

// T is the insertion tableau, Q the recording tableau.
struct TableauPair {
  Tableau insertion;
  Tableau recording;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

inline TableauPair swap(const TableauPair& p) { return {p.recording, p.insertion}; }

// Letters 1..k, all even; used for standard recording tableaux.
inline SignedAlphabet recording_alphabet(std::size_t k) {
  return SignedAlphabet::numbered(std::vector<int>(std::max<std::size_t>(k, 1), 0));
}

namespace detail {

inline void place(Rows& rows, Cell c, Letter x) {
  if (static_cast<std::size_t>(c.row) > rows.size()) rows.emplace_back();
  rows[static_cast<std::size_t>(c.row) - 1].push_back(x);
}

}  // namespace detail

inline TableauPair rs(const Word& w) {
  const auto& a = w.alphabet();
  auto qa = recording_alphabet(w.size());
  Rows t, q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Cell c = detail::row_insert(t, a, w[i]);
    detail::place(q, c, Letter{static_cast<std::uint16_t>(i)});
  }
  return {Tableau(a, std::move(t), unchecked), Tableau(qa, std::move(q), unchecked)};
}

// Finds the outer corner holding the largest recording entry. Among equal
// even entries the rightmost box is taken, among equal odd ones the leftmost
// (lowest within that column).
inline Cell largest_recording_box(const Tableau& q) {
  const auto& a = q.alphabet();
  const auto& rows = q.rows();
  Letter best{0};
  bool found = false;
  for (const auto& r : rows)
    for (Letter x : r)
      if (!found || best < x) best = x, found = true;
  Cell pick{0, 0};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != best) continue;
      Cell c{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
      // equal odd entries in one column: the lowest is the corner
      if (pick.row == 0 || (a.is_even(best) ? c.col > pick.col : c.col < pick.col || (c.col == pick.col && c.row > pick.row)))
        pick = c;
    }
  return pick;
}

inline Word rs_inverse(const Tableau& t, const Tableau& q) {
  if (t.shape() != q.shape()) throw ShapeError("tableaux of different shapes");
  const std::size_t k = static_cast<std::size_t>(q.size());
  std::vector<Cell> where(k, Cell{0, 0});
  for (std::size_t i = 0; i < q.rows().size(); ++i)
    for (std::size_t j = 0; j < q.rows()[i].size(); ++j) {
      auto r = q.rows()[i][j].rank;
      if (r >= k || where[r].row != 0) throw TableauError("recording tableau is not standard");
      where[r] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    }
  Rows rows = t.rows();
  std::vector<Letter> out(k);
  for (std::size_t i = k; i-- > 0;) {
    try {
      out[i] = detail::reverse_row_insert(rows, t.alphabet(), where[i]);
    } catch (const ShapeError&) {
      throw InconsistentPairError("recording tableau is not standard");
    }
  }
  return Word(t.alphabet(), std::move(out));
}

// Insertion tableau over the bottom alphabet, recording tableau over the top one.
inline TableauPair rsk(const Biword& w) {
  Rows t, q;
  for (auto c : w.columns()) {
    Cell box = detail::row_insert(t, w.bottom_alphabet(), c.bottom);
    detail::place(q, box, c.top);
  }
  return {Tableau(w.bottom_alphabet(), std::move(t), unchecked), Tableau(w.top_alphabet(), std::move(q), unchecked)};
}

// All intermediate pairs, starting with (∅, ∅).
inline std::vector<TableauPair> rsk_steps(const Biword& w) {
  std::vector<TableauPair> out;
  Rows t, q;
  out.push_back({Tableau(w.bottom_alphabet()), Tableau(w.top_alphabet())});
  for (auto c : w.columns()) {
    Cell box = detail::row_insert(t, w.bottom_alphabet(), c.bottom);
    detail::place(q, box, c.top);
    out.push_back({Tableau(w.bottom_alphabet(), t, unchecked), Tableau(w.top_alphabet(), q, unchecked)});
  }
  return out;
}

inline Biword rsk_inverse(const TableauPair& p) {
  const auto& t = p.insertion;
  const auto& q = p.recording;
  if (t.shape() != q.shape()) throw InconsistentPairError("tableaux of different shapes");
  require_valid(t);
  require_valid(q);
  Rows tr = t.rows(), qr = q.rows();
  std::vector<BiLetter> cols(static_cast<std::size_t>(t.size()));
  for (std::size_t i = cols.size(); i-- > 0;) {
    Tableau cur(q.alphabet(), qr, unchecked);
    Cell box = largest_recording_box(cur);
    try {
      detail::require_outer_corner(qr, box);
    } catch (const ShapeError&) {
      throw InconsistentPairError("largest recording entry is not in an outer corner");
    }
    Letter x = qr[static_cast<std::size_t>(box.row) - 1].back();
    qr[static_cast<std::size_t>(box.row) - 1].pop_back();
    if (qr.back().empty()) qr.pop_back();
    Letter y;
    try {
      y = detail::reverse_row_insert(tr, t.alphabet(), box);
    } catch (const Error& e) {
      throw InconsistentPairError(std::string("reverse bumping failed: ") + e.what());
    }
    cols[i] = {x, y};
  }
  try {
    return Biword::validate(q.alphabet(), t.alphabet(), std::move(cols));
  } catch (const BiwordError& e) {
    throw InconsistentPairError(std::string("pair is not the image of a biword: ") + e.what());
  }
}

// Rows exchanged, then re-sorted.
inline Biword invert_biword(const Biword& w) {
  std::vector<BiLetter> cols;
  for (auto c : w.columns()) cols.push_back({c.bottom, c.top});
  return sort_into_biword(w.bottom_alphabet(), w.top_alphabet(), std::move(cols));
}

// Reversed columns over the opposite alphabets.
inline Biword star_biword(const Biword& w) {
  const auto& a = w.top_alphabet();
  const auto& b = w.bottom_alphabet();
  std::vector<BiLetter> cols;
  for (auto it = w.columns().rbegin(); it != w.columns().rend(); ++it)
    cols.push_back({a.opposite_letter(it->top), b.opposite_letter(it->bottom)});
  return Biword::validate(a.opposite(), b.opposite(), std::move(cols));
}

// Right to left: left-insert y_i, reverse-slide the recording tableau from
// the new box, then put x_i in the top-left cell.
inline std::vector<TableauPair> rsk_dual_steps(const Biword& w) {
  std::vector<TableauPair> out;
  Tableau t(w.bottom_alphabet()), q(w.top_alphabet());
  out.push_back({t, q});
  for (auto it = w.columns().rbegin(); it != w.columns().rend(); ++it) {
    auto ins = left_insert(it->bottom, t);
    auto slid = reverse_slide(q.skew(), ins.new_box).result;
    Rows rows = slid.rows();
    rows[0].insert(rows[0].begin(), it->top);
    t = std::move(ins.result);
    q = Tableau(w.top_alphabet(), std::move(rows), unchecked);
    out.push_back({t, q});
  }
  return out;
}

inline TableauPair rsk_dual(const Biword& w) { return rsk_dual_steps(w).back(); }

struct RskIntoResult {
  Tableau insertion;      // t ▷ y_1 … y_k
  SkewTableau recording;  // x_i at the boxes added to the frame of t
};

inline RskIntoResult rsk_into(const Tableau& t, const Biword& w) {
  if (!(t.alphabet() == w.bottom_alphabet())) throw AlphabetError("tableau must be over the bottom alphabet");
  Rows tr = t.rows();
  const auto frame = t.shape();
  Rows added(frame.height());
  for (auto c : w.columns()) {
    Cell box = detail::row_insert(tr, t.alphabet(), c.bottom);
    if (static_cast<std::size_t>(box.row) > added.size()) added.emplace_back();
    added[static_cast<std::size_t>(box.row) - 1].push_back(c.top);
  }
  Tableau result(t.alphabet(), std::move(tr), unchecked);
  return {result, SkewTableau(w.top_alphabet(), SkewShape(result.shape(), frame), std::move(added))};
}

}  // namespace superrsk

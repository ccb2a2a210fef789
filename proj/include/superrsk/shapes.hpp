#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <type_traits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/error.hpp"

namespace superrsk {

// Row contents, top row first. Skew rows are left-trimmed.
using Rows = std::vector<std::vector<Letter>>;

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must weakly decrease");
    }
  }

  // "3,3,1"; "" or "0" is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(cur, &used);
      } catch (const std::exception&) {
        throw ShapeError("bad partition '" + std::string(text) + "'");
      }
      if (used != cur.size()) throw ShapeError("bad partition '" + std::string(text) + "'");
      out.push_back(v);
      cur.clear();
    };
    for (char c : text) {
      if (c == ',' || c == ' ') flush();
      else cur += c;
    }
    flush();
    return Partition(std::move(out));
  }

  // 0 beyond the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t height() const noexcept { return parts_.size(); }
  int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  // other ⊆ *this
  bool contains(const Partition& other) const noexcept {
    if (other.height() > height()) return false;
    for (std::size_t i = 0; i < other.height(); ++i)
      if (other.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.width()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

// Partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// All μ ⊆ λ, sorted.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    out.emplace_back(cur);
    if (i == lambda.height()) return;
    for (int p = 1; p <= std::min(cap, lambda[i]); ++p) {
      cur.push_back(p);
      rec(i + 1, p);
      cur.pop_back();
    }
  };
  rec(0, lambda.width());
  std::sort(out.begin(), out.end());
  return out;
}

// 1-based, row 1 on top.
struct Cell {
  int row = 1;
  int col = 1;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw ShapeError("inner partition not contained in outer");
  }

  // "5,4,3,2/3,3,1" or a straight "3,2".
  static SkewShape parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
    return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
  }

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  std::size_t height() const noexcept { return outer_.height(); }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool is_straight() const noexcept { return inner_.empty(); }
  int row_length(int row) const noexcept { return outer_[row - 1] - inner_[row - 1]; }

  bool contains(Cell c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col > inner_[c.row - 1] && c.col <= outer_[c.row - 1];
  }
  bool in_inner(Cell c) const noexcept { return c.row >= 1 && c.col >= 1 && c.col <= inner_[c.row - 1]; }

  // Row-major.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < height(); ++i)
      for (int j = inner_[i] + 1; j <= outer_[i]; ++j) out.push_back({static_cast<int>(i) + 1, j});
    return out;
  }

  std::string to_string() const {
    return inner_.empty() ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
  }

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

enum class CornerKind { inner, outer };

struct Corner {
  Cell cell;
  CornerKind kind;
  friend bool operator==(const Corner&, const Corner&) = default;
};

// Removable cells of the inner and of the outer partition.
inline std::vector<Corner> corners(const SkewShape& s) {
  std::vector<Corner> out;
  const auto& in = s.inner();
  const auto& out_p = s.outer();
  for (std::size_t i = 0; i < in.height(); ++i)
    if (in[i + 1] < in[i]) out.push_back({{static_cast<int>(i) + 1, in[i]}, CornerKind::inner});
  for (std::size_t i = 0; i < out_p.height(); ++i)
    if (out_p[i + 1] < out_p[i]) out.push_back({{static_cast<int>(i) + 1, out_p[i]}, CornerKind::outer});
  return out;
}

inline std::vector<Cell> inner_corners(const SkewShape& s) {
  std::vector<Cell> out;
  for (const auto& c : corners(s))
    if (c.kind == CornerKind::inner) out.push_back(c.cell);
  return out;
}

class SkewTableau {
 public:
  SkewTableau(SignedAlphabet a, SkewShape shape, Rows rows)
      : alphabet_(std::move(a)), shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() < shape_.height()) rows_.resize(shape_.height());
    if (rows_.size() != shape_.height()) throw ShapeError("filling has more rows than the shape");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(rows_[i].size()) != shape_.row_length(static_cast<int>(i) + 1))
        throw ShapeError("row " + std::to_string(i + 1) + " of the filling does not match shape " +
                         shape_.to_string());
      for (Letter x : rows_[i])
        if (!alphabet_.contains(x)) throw AlphabetError("letter rank outside alphabet");
    }
  }

  const SignedAlphabet& alphabet() const noexcept { return alphabet_; }
  const SkewShape& shape() const noexcept { return shape_; }
  const Rows& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.size(); }
  bool is_straight() const noexcept { return shape_.is_straight(); }

  Letter at(Cell c) const {
    if (!shape_.contains(c)) throw ShapeError("cell outside the skew shape");
    return rows_[c.row - 1][c.col - 1 - shape_.inner()[c.row - 1]];
  }

  friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_ && a.alphabet_ == b.alphabet_;
  }
  // Ordering ignores the alphabet; only meaningful within one alphabet.
  friend bool operator<(const SkewTableau& a, const SkewTableau& b) {
    if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
    return a.rows_ < b.rows_;
  }

 private:
  SignedAlphabet alphabet_;
  SkewShape shape_;
  Rows rows_;
};

// Skips structural checks; for rows produced by the algorithms themselves.
struct unchecked_t {};
inline constexpr unchecked_t unchecked{};

class Tableau {
 public:
  explicit Tableau(SignedAlphabet a) : alphabet_(std::move(a)) {}
  Tableau(SignedAlphabet a, Rows rows, unchecked_t) : alphabet_(std::move(a)), rows_(std::move(rows)) {}
  // Row lengths must weakly decrease; trailing empty rows are dropped.
  Tableau(SignedAlphabet a, Rows rows) : alphabet_(std::move(a)), rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].empty() || (i && rows_[i].size() > rows_[i - 1].size()))
        throw ShapeError("tableau row lengths must form a partition");
      for (Letter x : rows_[i])
        if (!alphabet_.contains(x)) throw AlphabetError("letter rank outside alphabet");
    }
  }

  // Rows given by letter names.
  static Tableau from_names(const SignedAlphabet& a, const std::vector<std::vector<std::string>>& names) {
    Rows rows;
    for (const auto& r : names) {
      rows.emplace_back();
      for (const auto& s : r) rows.back().push_back(a.letter(s));
    }
    return Tableau(a, std::move(rows));
  }

  const SignedAlphabet& alphabet() const noexcept { return alphabet_; }
  const Rows& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t height() const noexcept { return rows_.size(); }
  int size() const noexcept {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
  }
  Partition shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
  }
  Letter at(Cell c) const {
    if (c.row < 1 || c.row > static_cast<int>(rows_.size()) || c.col < 1 ||
        c.col > static_cast<int>(rows_[c.row - 1].size()))
      throw ShapeError("cell outside the tableau");
    return rows_[c.row - 1][c.col - 1];
  }

  SkewTableau skew() const { return SkewTableau(alphabet_, SkewShape(shape()), rows_); }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.rows_ == b.rows_ && a.alphabet_ == b.alphabet_;
  }
  friend bool operator<(const Tableau& a, const Tableau& b) {
    auto sa = a.shape(), sb = b.shape();
    if (sa != sb) return sa < sb;
    return a.rows_ < b.rows_;
  }

 private:
  SignedAlphabet alphabet_;
  Rows rows_;
};

// Straight skew tableau to tableau.
inline Tableau straighten(const SkewTableau& s) {
  if (!s.is_straight()) throw ShapeError("skew tableau has a nonempty inner shape");
  return Tableau(s.alphabet(), s.rows());
}

struct Violation {
  Cell first;
  Cell second;
  bool vertical = false;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string describe() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += (v.vertical ? "column pair (" : "row pair (") + std::to_string(v.first.row) + "," +
             std::to_string(v.first.col) + ")-(" + std::to_string(v.second.row) + "," +
             std::to_string(v.second.col) + ")";
    }
    return out;
  }
};

// Equal neighbours: even letters may repeat in a row, odd letters in a column.
inline bool row_ok(const SignedAlphabet& a, Letter left, Letter right) {
  return left < right || (left == right && a.is_even(left));
}
inline bool column_ok(const SignedAlphabet& a, Letter up, Letter down) {
  return up < down || (up == down && a.is_odd(up));
}

inline ValidationReport validate(const SkewTableau& t) {
  ValidationReport rep;
  const auto& s = t.shape();
  const auto& a = t.alphabet();
  for (const Cell c : s.cells()) {
    Cell r{c.row, c.col + 1}, d{c.row + 1, c.col};
    if (s.contains(r) && !row_ok(a, t.at(c), t.at(r))) rep.violations.push_back({c, r, false});
    if (s.contains(d) && !column_ok(a, t.at(c), t.at(d))) rep.violations.push_back({c, d, true});
  }
  return rep;
}
inline ValidationReport validate(const Tableau& t) { return validate(t.skew()); }

inline void require_valid(const SkewTableau& t) {
  auto rep = validate(t);
  if (!rep.ok()) throw TableauError("not a super tableau: " + rep.describe());
}
inline void require_valid(const Tableau& t) { require_valid(t.skew()); }

// Columns bottom to top, left to right.
inline Word column_reading(const SkewTableau& t) {
  std::vector<Letter> out;
  const auto& s = t.shape();
  for (int j = 1; j <= s.outer().width(); ++j)
    for (int i = static_cast<int>(s.height()); i >= 1; --i)
      if (s.contains({i, j})) out.push_back(t.at({i, j}));
  return Word(t.alphabet(), std::move(out));
}
inline Word column_reading(const Tableau& t) {
  std::vector<Letter> out;
  const auto& rows = t.rows();
  for (std::size_t j = 0; !rows.empty() && j < rows[0].size(); ++j)
    for (std::size_t i = rows.size(); i-- > 0;)
      if (j < rows[i].size()) out.push_back(rows[i][j]);
  return Word(t.alphabet(), std::move(out));
}

namespace detail {

template <class Visit>
class FillingSearch {
 public:
  FillingSearch(const SkewShape& s, const SignedAlphabet& a, const std::vector<int>* caps, Visit& visit)
      : shape_(s), alphabet_(a), caps_(caps), visit_(visit), cells_(s.cells()) {
    rows_.resize(s.height());
    for (std::size_t i = 0; i < s.height(); ++i)
      rows_[i].resize(static_cast<std::size_t>(s.row_length(static_cast<int>(i) + 1)));
    if (caps_) left_ = *caps_;
  }

  void run() { step(0); }
  bool stopped() const noexcept { return stop_; }

 private:
  Letter& at(Cell c) { return rows_[c.row - 1][c.col - 1 - shape_.inner()[c.row - 1]]; }

  void step(std::size_t k) {
    if (stop_) return;
    if (k == cells_.size()) {
      // a visitor returning bool may stop the search with false
      if constexpr (std::is_same_v<decltype(visit_(static_cast<const Rows&>(rows_))), bool>) {
        if (!visit_(static_cast<const Rows&>(rows_))) stop_ = true;
      } else {
        visit_(static_cast<const Rows&>(rows_));
      }
      return;
    }
    const Cell c = cells_[k];
    int lo = 0;
    if (Cell l{c.row, c.col - 1}; shape_.contains(l)) {
      Letter x = at(l);
      lo = std::max(lo, x.rank + (alphabet_.is_even(x) ? 0 : 1));
    }
    if (Cell u{c.row - 1, c.col}; shape_.contains(u)) {
      Letter x = at(u);
      lo = std::max(lo, x.rank + (alphabet_.is_odd(x) ? 0 : 1));
    }
    for (int r = lo; r < static_cast<int>(alphabet_.size()); ++r) {
      if (caps_ && left_[static_cast<std::size_t>(r)] == 0) continue;
      at(c) = Letter{static_cast<std::uint16_t>(r)};
      if (caps_) --left_[static_cast<std::size_t>(r)];
      step(k + 1);
      if (caps_) ++left_[static_cast<std::size_t>(r)];
    }
  }

  const SkewShape& shape_;
  const SignedAlphabet& alphabet_;
  const std::vector<int>* caps_;
  Visit& visit_;
  std::vector<Cell> cells_;
  Rows rows_;
  std::vector<int> left_;
  bool stop_ = false;
};

}  // namespace detail

// Calls visit(const Rows&) for every valid filling, lexicographic in row-major order.
template <class Visit>
void for_each_filling(const SkewShape& s, const SignedAlphabet& a, Visit&& visit) {
  detail::FillingSearch<std::remove_reference_t<Visit>> search(s, a, nullptr, visit);
  search.run();
}

// Same, restricted to fillings whose letter counts never exceed caps.
template <class Visit>
void for_each_filling_capped(const SkewShape& s, const SignedAlphabet& a, const std::vector<int>& caps,
                             Visit&& visit) {
  if (caps.size() != a.size()) throw AlphabetError("one cap per letter required");
  detail::FillingSearch<std::remove_reference_t<Visit>> search(s, a, &caps, visit);
  search.run();
}

inline std::vector<SkewTableau> enumerate_tableaux(const SkewShape& s, const SignedAlphabet& a) {
  std::vector<SkewTableau> out;
  for_each_filling(s, a, [&](const Rows& r) { out.emplace_back(a, s, r); });
  return out;
}

inline std::vector<Tableau> enumerate_straight(const Partition& p, const SignedAlphabet& a) {
  std::vector<Tableau> out;
  for_each_filling(SkewShape(p), a, [&](const Rows& r) { out.emplace_back(a, r); });
  return out;
}

// Lexicographically least filling, if any.
inline std::optional<SkewTableau> first_tableau(const SkewShape& s, const SignedAlphabet& a) {
  std::optional<SkewTableau> out;
  for_each_filling(s, a, [&](const Rows& r) {
    out.emplace(a, s, r);
    return false;
  });
  return out;
}

inline std::size_t count_tableaux(const SkewShape& s, const SignedAlphabet& a) {
  std::size_t n = 0;
  for_each_filling(s, a, [&](const Rows&) { ++n; });
  return n;
}

// One row per line, "." for inner cells.
inline std::string render(const SkewTableau& t) {
  std::string out;
  const auto& s = t.shape();
  for (std::size_t i = 0; i < s.height(); ++i) {
    std::string line;
    for (int j = 1; j <= s.outer()[i]; ++j) {
      if (j > 1) line += ' ';
      line += j <= s.inner()[i] ? std::string(".") : t.alphabet().name(t.rows()[i][j - 1 - s.inner()[i]]);
    }
    out += line + '\n';
  }
  return out;
}
inline std::string render(const Tableau& t) { return render(t.skew()); }

}  // namespace superrsk

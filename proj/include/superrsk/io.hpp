#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "superrsk/alphabet.hpp"
#include "superrsk/correspondences.hpp"
#include "superrsk/error.hpp"
#include "superrsk/matrix_ball.hpp"
#include "superrsk/shapes.hpp"
#include "superrsk/taquin.hpp"

namespace superrsk {

using json = nlohmann::json;

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> split_rows(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == '/' || s[i] == '\n') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  while (!out.empty() && split_ws(out.back()).empty()) out.pop_back();
  return out;
}

}  // namespace detail

// Rows separated by newlines or "/", cells by spaces, "." for inner cells.
inline SkewTableau parse_skew_text(const SignedAlphabet& a, std::string_view text) {
  std::vector<int> outer, inner;
  Rows rows;
  for (auto line : detail::split_rows(text)) {
    auto cells = detail::split_ws(line);
    int dots = 0;
    rows.emplace_back();
    for (const auto& c : cells) {
      if (c == ".") {
        if (!rows.back().empty()) throw ShapeError("'.' after a filled cell");
        ++dots;
      } else {
        rows.back().push_back(a.letter(c));
      }
    }
    if (cells.empty()) throw ShapeError("empty row in tableau text");
    outer.push_back(static_cast<int>(cells.size()));
    inner.push_back(dots);
  }
  return SkewTableau(a, SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

inline Tableau parse_tableau_text(const SignedAlphabet& a, std::string_view text) {
  return straighten(parse_skew_text(a, text));
}

inline json to_json(const Word& w) {
  json out = json::array();
  for (Letter x : w) out.push_back(w.alphabet().name(x));
  return out;
}

inline Word word_from_json(const SignedAlphabet& a, const json& j) {
  if (!j.is_array()) throw Error("word must be a JSON array of letters");
  std::vector<Letter> out;
  for (const auto& x : j) out.push_back(a.letter(x.get<std::string>()));
  return Word(a, std::move(out));
}

inline json to_json(const SkewTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) {
    json row = json::array();
    for (Letter x : r) row.push_back(t.alphabet().name(x));
    rows.push_back(row);
  }
  return {{"outer", t.shape().outer().parts()}, {"inner", t.shape().inner().parts()}, {"rows", rows}};
}
inline json to_json(const Tableau& t) { return to_json(t.skew()); }

inline SkewTableau skew_from_json(const SignedAlphabet& a, const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw ShapeError("tableau JSON needs a \"rows\" field");
  Rows rows;
  for (const auto& r : j.at("rows")) {
    rows.emplace_back();
    for (const auto& x : r) rows.back().push_back(a.letter(x.get<std::string>()));
  }
  std::vector<int> inner = j.value("inner", std::vector<int>{});
  std::vector<int> outer;
  if (j.contains("outer")) {
    outer = j.at("outer").get<std::vector<int>>();
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i)
      outer.push_back(static_cast<int>(rows[i].size()) + (i < inner.size() ? inner[i] : 0));
  }
  return SkewTableau(a, SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

inline Tableau tableau_from_json(const SignedAlphabet& a, const json& j) { return straighten(skew_from_json(a, j)); }

inline json to_json(const Biword& w) {
  return {{"top", to_json(w.top_word())}, {"bottom", to_json(w.bottom_word())}};
}

inline Biword biword_from_json(const SignedAlphabet& top, const SignedAlphabet& bottom, const json& j) {
  if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
    throw Error("biword JSON needs \"top\" and \"bottom\"");
  return Biword::from_names(top, bottom, j.at("top").get<std::vector<std::string>>(),
                            j.at("bottom").get<std::vector<std::string>>());
}

// Two aligned rows.
inline std::string render(const Biword& w) {
  std::string top, bottom;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto a = w.top_alphabet().name(w.columns()[i].top);
    auto b = w.bottom_alphabet().name(w.columns()[i].bottom);
    std::size_t n = std::max(a.size(), b.size());
    if (i) top += ' ', bottom += ' ';
    top += std::string(n - a.size(), ' ') + a;
    bottom += std::string(n - b.size(), ' ') + b;
  }
  return top + '\n' + bottom + '\n';
}

inline Biword parse_biword_text(const SignedAlphabet& top, const SignedAlphabet& bottom, std::string_view top_row,
                                std::string_view bottom_row) {
  return Biword::from_names(top, bottom, detail::split_ws(top_row), detail::split_ws(bottom_row));
}

inline json to_json(const TableauPair& p) {
  return {{"insertion", to_json(p.insertion)}, {"recording", to_json(p.recording)}};
}

inline json to_json(const SlidePath& p) {
  json moves = json::array();
  for (auto m : p.moves) {
    switch (m) {
      case SlideMove::from_right: moves.push_back("right"); break;
      case SlideMove::from_below: moves.push_back("below"); break;
      case SlideMove::from_left: moves.push_back("left"); break;
      case SlideMove::from_above: moves.push_back("above"); break;
    }
  }
  return {{"start", {p.start.row, p.start.col}}, {"moves", moves}, {"end", {p.end.row, p.end.col}}};
}

inline json to_json(const BallArray& b) {
  json rows = json::array(), cols = json::array(), balls = json::array();
  for (auto x : b.row_labels) rows.push_back(b.row_alphabet.name(x));
  for (auto x : b.col_labels) cols.push_back(b.col_alphabet.name(x));
  for (const auto& ball : b.balls)
    balls.push_back({{"row", ball.row_slot},
                     {"col", ball.col_slot},
                     {"stack", ball.stack_pos},
                     {"number", ball.number},
                     {"generation", ball.generation}});
  return {{"row_labels", rows}, {"col_labels", cols}, {"balls", balls}};
}

}  // namespace superrsk

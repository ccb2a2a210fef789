#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superrsk/error.hpp"

namespace superrsk {

// A letter is its rank inside the owning alphabet.
struct Letter {
  std::uint16_t rank = 0;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

class SignedAlphabet {
 public:
  // m barred even letters below n plain odd letters.
  static SignedAlphabet standard(int m, int n) {
    if (m < 0 || n < 0) throw AlphabetError("standard alphabet needs m, n >= 0");
    if (m + n == 0) throw AlphabetError("empty alphabet");
    std::vector<std::string> names;
    std::vector<int> sig;
    for (int k = m; k >= 1; --k) {
      names.push_back("-" + std::to_string(k));
      sig.push_back(0);
    }
    for (int k = 1; k <= n; ++k) {
      names.push_back(std::to_string(k));
      sig.push_back(1);
    }
    return SignedAlphabet(std::move(names), std::move(sig));
  }

  // Letters given in ascending order together with their signature bits.
  static SignedAlphabet custom(std::vector<std::string> names, std::vector<int> signatures) {
    return SignedAlphabet(std::move(names), std::move(signatures));
  }

  // Letters named 1..k in order.
  static SignedAlphabet numbered(const std::vector<int>& signatures) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= signatures.size(); ++i) names.push_back(std::to_string(i));
    return SignedAlphabet(std::move(names), signatures);
  }

  // "std:m,n" or "a:0,b:1,..."
  static SignedAlphabet parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    auto to_int = [&](std::string_view s) {
      s = trim(s);
      int v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size())
        throw AlphabetError("bad integer '" + std::string(s) + "' in alphabet spec");
      return v;
    };
    text = trim(text);
    if (text.starts_with("std:")) {
      auto body = text.substr(4);
      auto comma = body.find(',');
      if (comma == std::string_view::npos) throw AlphabetError("expected std:m,n");
      return standard(to_int(body.substr(0, comma)), to_int(body.substr(comma + 1)));
    }
    std::vector<std::string> names;
    std::vector<int> sig;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto item = trim(text.substr(pos, next - pos));
      auto colon = item.rfind(':');
      if (colon == std::string_view::npos || colon == 0)
        throw AlphabetError("expected name:bit in alphabet spec, got '" + std::string(item) + "'");
      names.emplace_back(trim(item.substr(0, colon)));
      sig.push_back(to_int(item.substr(colon + 1)));
      pos = next + 1;
    }
    return custom(std::move(names), std::move(sig));
  }

  std::size_t size() const noexcept { return data_->names.size(); }
  int signature(Letter x) const { return data_->sig.at(x.rank); }
  bool is_even(Letter x) const { return signature(x) == 0; }
  bool is_odd(Letter x) const { return signature(x) == 1; }
  const std::string& name(Letter x) const { return data_->names.at(x.rank); }
  bool contains(Letter x) const noexcept { return x.rank < size(); }

  Letter letter(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end())
      throw AlphabetError("letter '" + std::string(name) + "' not in alphabet " + to_string());
    return Letter{it->second};
  }
  Letter letter_at(std::size_t rank) const {
    if (rank >= size()) throw AlphabetError("rank out of range");
    return Letter{static_cast<std::uint16_t>(rank)};
  }
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(Letter{static_cast<std::uint16_t>(i)});
    return out;
  }
  std::size_t even_count() const {
    return static_cast<std::size_t>(std::count(data_->sig.begin(), data_->sig.end(), 0));
  }

  // (m, n) when the alphabet is literally std:m,n.
  std::optional<std::pair<int, int>> standard_shape() const { return data_->standard; }
  bool is_standard() const { return data_->standard.has_value(); }

  // Same names, order reversed, signatures carried along.
  SignedAlphabet opposite() const {
    std::vector<std::string> names(data_->names.rbegin(), data_->names.rend());
    std::vector<int> sig(data_->sig.rbegin(), data_->sig.rend());
    return SignedAlphabet(std::move(names), std::move(sig));
  }
  // x* in the opposite alphabet.
  Letter opposite_letter(Letter x) const {
    return Letter{static_cast<std::uint16_t>(size() - 1 - x.rank)};
  }

  std::string to_string() const {
    if (auto s = data_->standard) return "std:" + std::to_string(s->first) + "," + std::to_string(s->second);
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += data_->names[i] + ":" + std::to_string(data_->sig[i]);
    }
    return out;
  }

  friend bool operator==(const SignedAlphabet& a, const SignedAlphabet& b) {
    return a.data_ == b.data_ || (a.data_->names == b.data_->names && a.data_->sig == b.data_->sig);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<int> sig;
    std::unordered_map<std::string, std::uint16_t> index;
    std::optional<std::pair<int, int>> standard;
  };

  SignedAlphabet(std::vector<std::string> names, std::vector<int> sig) {
    if (names.empty()) throw AlphabetError("empty alphabet");
    if (names.size() != sig.size()) throw AlphabetError("one signature bit per letter required");
    if (names.size() > 0xffff) throw AlphabetError("alphabet too large");
    auto d = std::make_shared<Data>();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (sig[i] != 0 && sig[i] != 1) throw AlphabetError("signature bits must be 0 or 1");
      if (names[i].empty()) throw AlphabetError("empty letter name");
      for (char c : names[i])
        if (c == ' ' || c == ',' || c == ':' || c == '/' || c == '.' || c == '\t' || c == '\n')
          throw AlphabetError("letter name '" + names[i] + "' contains a reserved character");
      if (!d->index.emplace(names[i], static_cast<std::uint16_t>(i)).second)
        throw AlphabetError("duplicate letter '" + names[i] + "'");
    }
    d->names = std::move(names);
    d->sig = std::move(sig);
    d->standard = detect_standard(d->names, d->sig);
    data_ = std::move(d);
  }

  static std::optional<std::pair<int, int>> detect_standard(const std::vector<std::string>& names,
                                                          const std::vector<int>& sig) {
    int m = 0;
    while (m < static_cast<int>(names.size()) && sig[m] == 0) ++m;
    int n = static_cast<int>(names.size()) - m;
    for (int i = 0; i < m; ++i)
      if (sig[i] != 0 || names[i] != "-" + std::to_string(m - i)) return std::nullopt;
    for (int j = 0; j < n; ++j)
      if (sig[m + j] != 1 || names[m + j] != std::to_string(j + 1)) return std::nullopt;
    return std::pair{m, n};
  }

  std::shared_ptr<const Data> data_;
};

class Word {
 public:
  explicit Word(SignedAlphabet a, std::vector<Letter> letters = {})
      : alphabet_(std::move(a)), letters_(std::move(letters)) {
    for (Letter x : letters_)
      if (!alphabet_.contains(x)) throw AlphabetError("letter rank outside alphabet");
  }

  // Whitespace-separated letter names.
  static Word parse(const SignedAlphabet& a, std::string_view text) {
    std::vector<Letter> out;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) out.push_back(a.letter(text.substr(i, j - i)));
      i = j;
    }
    return Word(a, std::move(out));
  }

  const SignedAlphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Z2-degree.
  int degree() const {
    int d = 0;
    for (Letter x : letters_) d ^= alphabet_.signature(x);
    return d;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += alphabet_.name(letters_[i]);
    }
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
  }
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

  friend Word operator+(const Word& a, const Word& b) {
    if (!(a.alphabet_ == b.alphabet_)) throw AlphabetError("concatenating words over different alphabets");
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(a.alphabet_, std::move(out));
  }

 private:
  SignedAlphabet alphabet_;
  std::vector<Letter> letters_;
};

struct WeightVector {
  std::vector<int> counts;  // (|w|_m̄ .. |w|_1̄, |w|_1 .. |w|_n)
  int distinct_odd = 0;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Occurrence count per letter in alphabet order; works for any alphabet.
inline std::vector<int> content(const Word& w) {
  std::vector<int> c(w.alphabet().size(), 0);
  for (Letter x : w) ++c[x.rank];
  return c;
}

inline WeightVector weight(const Word& w) {
  if (!w.alphabet().is_standard()) throw UnsupportedError("weight is defined for standard alphabets only");
  WeightVector out{content(w), 0};
  for (std::size_t i = 0; i < out.counts.size(); ++i)
    if (w.alphabet().is_odd(Letter{static_cast<std::uint16_t>(i)}) && out.counts[i] > 0) ++out.distinct_odd;
  return out;
}

inline SignedAlphabet opposite(const SignedAlphabet& a) { return a.opposite(); }

inline Word opposite_word(const Word& w) {
  const auto& a = w.alphabet();
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(a.opposite_letter(*it));
  return Word(a.opposite(), std::move(out));
}

// Order on Σ×Σ′: ties in the first letter are broken by the second,
// ascending when the first is even and descending when it is odd.
inline std::strong_ordering pair_compare(const SignedAlphabet& top, std::pair<Letter, Letter> p,
                                         std::pair<Letter, Letter> q) {
  if (auto c = p.first <=> q.first; c != 0) return c;
  if (top.is_even(p.first)) return p.second <=> q.second;
  return q.second <=> p.second;
}

}  // namespace superrsk

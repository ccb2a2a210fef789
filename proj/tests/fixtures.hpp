#pragma once

#include <random>
#include <string>
#include <vector>

#include "superrsk/superrsk.hpp"

namespace fx {

using namespace superrsk;

// Letters 1..n; evens_are_even picks which parity has signature 0.
inline SignedAlphabet parity(int n, bool evens_are_even) {
  std::vector<int> sig;
  for (int i = 1; i <= n; ++i) sig.push_back((i % 2 == 0) == evens_are_even ? 0 : 1);
  return SignedAlphabet::numbered(sig);
}

// [6] with even letters {1, 3, 4}.
inline SignedAlphabet six() { return SignedAlphabet::numbered({0, 1, 0, 0, 1, 1}); }

inline Tableau tab(const SignedAlphabet& a, const std::string& text) { return parse_tableau_text(a, text); }
inline SkewTableau skew(const SignedAlphabet& a, const std::string& text) { return parse_skew_text(a, text); }
inline Word word(const SignedAlphabet& a, const std::string& text) { return Word::parse(a, text); }

// Digits as letters, for the single-character examples.
inline Word digits(const SignedAlphabet& a, const std::string& s) {
  std::string spaced;
  for (char c : s) spaced += std::string(1, c) + " ";
  return Word::parse(a, spaced);
}

inline Biword example1() {
  auto a = six();
  return parse_biword_text(a, a, "1 2 2 2 3 3 3 4 4 4 5 5 5 6 6 6", "2 4 2 1 4 5 6 3 5 6 4 3 1 5 4 1");
}
inline TableauPair example1_pair() {
  auto a = six();
  return {tab(a, "1 1 1 4 4/2 3 3 5/2 4 4/5 6/5 6"), tab(a, "1 2 3 3 3/2 4 4 4/2 5 6/5 6/5 6")};
}
inline Biword example1_inverse() {
  auto a = six();
  return parse_biword_text(a, a, "1 1 1 2 2 3 3 4 4 4 4 5 5 5 6 6", "2 5 6 2 1 4 5 2 3 5 6 6 4 3 4 3");
}

// Top letters: evens are even. Bottom letters: odds are even.
inline Biword example2() {
  return parse_biword_text(parity(4, true), parity(4, false), "1 1 2 2 3 3 4 4", "3 2 1 2 4 3 1 2");
}
inline TableauPair example2_pair() {
  return {tab(parity(4, false), "1 1 2/2 3/2 4/3"), tab(parity(4, true), "1 2 3/1 3/2 4/4")};
}
inline Biword example2_inverse() {
  return parse_biword_text(parity(4, false), parity(4, true), "1 1 2 2 2 3 3 4", "2 4 4 2 1 1 3 3");
}

// The shape (3,2,2,1) tableau and the skew tableau rectifying to it.
inline Tableau small_tableau() { return tab(parity(4, true), "1 2 3/1 3/2 4/4"); }
inline SkewTableau small_skew() {
  return skew(parity(4, true), ". . . 1 2 3/. . 1 3/. ./. 4/2/4");
}

// Random alphabet with 1..max_size letters.
inline SignedAlphabet random_alphabet(std::mt19937_64& rng, int max_size) {
  int n = std::uniform_int_distribution<int>(1, max_size)(rng);
  std::vector<int> sig;
  for (int i = 0; i < n; ++i) sig.push_back(static_cast<int>(rng() & 1));
  return SignedAlphabet::numbered(sig);
}

inline Word random_word(std::mt19937_64& rng, const SignedAlphabet& a, int max_len) {
  int n = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::vector<Letter> l;
  for (int i = 0; i < n; ++i)
    l.push_back(Letter{static_cast<std::uint16_t>(std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng))});
  return Word(a, l);
}

// Random multiset of pairs with repeated odd pairs dropped, then sorted.
inline Biword random_biword(std::mt19937_64& rng, const SignedAlphabet& top, const SignedAlphabet& bottom,
                            int max_len) {
  int n = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::vector<BiLetter> pairs;
  Biword probe(top, bottom);
  for (int i = 0; i < n; ++i) {
    BiLetter c{Letter{static_cast<std::uint16_t>(std::uniform_int_distribution<std::size_t>(0, top.size() - 1)(rng))},
               Letter{static_cast<std::uint16_t>(std::uniform_int_distribution<std::size_t>(0, bottom.size() - 1)(rng))}};
    bool dup = false;
    for (auto p : pairs) dup |= (p == c && probe.signature(c) == 1);
    if (!dup) pairs.push_back(c);
  }
  return sort_into_biword(top, bottom, pairs);
}

inline Biword random_biword(std::mt19937_64& rng, int max_alphabet, int max_len) {
  auto top = random_alphabet(rng, max_alphabet);
  auto bottom = random_alphabet(rng, max_alphabet);
  return random_biword(rng, top, bottom, max_len);
}

// All words of length exactly n.
inline std::vector<Word> all_words(const SignedAlphabet& a, int n) {
  std::vector<Word> out;
  std::vector<Letter> cur(static_cast<std::size_t>(n));
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= a.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      cur[static_cast<std::size_t>(i)] = Letter{static_cast<std::uint16_t>(c % a.size())};
      c /= a.size();
    }
    out.emplace_back(a, cur);
  }
  return out;
}

}  // namespace fx

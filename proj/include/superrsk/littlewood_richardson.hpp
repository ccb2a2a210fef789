#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/error.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/shapes.hpp"
#include "superrsk/taquin.hpp"

namespace superrsk {

inline std::pair<int, int> require_standard(const SignedAlphabet& a) {
  auto s = a.standard_shape();
  if (!s) throw UnsupportedError("operation needs a standard alphabet std:m,n, got " + a.to_string());
  return *s;
}

// Every suffix: |m̄| >= ... >= |1̄| >= number of distinct odd letters.
// Every prefix: |1| >= ... >= |n|. With m = 0 the suffix chain is empty.
inline bool is_super_yamanouchi(const Word& w) {
  auto [m, n] = require_standard(w.alphabet());
  const auto mm = static_cast<std::size_t>(m), nn = static_cast<std::size_t>(n);
  std::vector<int> c(mm + nn, 0);
  int distinct = 0;
  for (std::size_t p = w.size(); p-- > 0;) {
    auto r = w[p].rank;
    if (r >= mm && c[r] == 0) ++distinct;
    ++c[r];
    if (m == 0) continue;
    for (std::size_t i = 0; i + 1 < mm; ++i)
      if (c[i] < c[i + 1]) return false;
    if (c[mm - 1] < distinct) return false;
  }
  std::fill(c.begin(), c.end(), 0);
  for (Letter x : w) {
    ++c[x.rank];
    if (x.rank < mm) continue;
    if (x.rank > mm && c[x.rank] > c[x.rank - 1u]) return false;
  }
  return true;
}

// (first m parts, conjugate of the rest padded to n)
inline WeightVector mu_check(const Partition& mu, int m, int n) {
  WeightVector out;
  for (int i = 0; i < m; ++i) out.counts.push_back(mu[static_cast<std::size_t>(i)]);
  std::vector<int> rest;
  for (std::size_t i = static_cast<std::size_t>(m); i < mu.height(); ++i) rest.push_back(mu[i]);
  auto tail = conjugate(Partition(rest));
  if (static_cast<int>(tail.height()) > n)
    throw AlphabetError("partition " + mu.to_string() + " does not fit the (" + std::to_string(m) + "," +
                        std::to_string(n) + ") hook");
  for (int j = 0; j < n; ++j) out.counts.push_back(tail[static_cast<std::size_t>(j)]);
  out.distinct_odd = static_cast<int>(tail.height());
  return out;
}

inline bool fits_hook(const Partition& mu, int m, int n) { return mu[static_cast<std::size_t>(m)] <= n; }

// Row r <= m holds the barred letter m-r+1; below row m column j holds j.
inline Tableau canonical_tableau(const Partition& mu, const SignedAlphabet& a) {
  auto [m, n] = require_standard(a);
  if (!fits_hook(mu, m, n))
    throw NoCanonicalTableauError("no canonical tableau of shape " + mu.to_string() + " over " + a.to_string());
  Rows rows;
  for (std::size_t r = 0; r < mu.height(); ++r) {
    rows.emplace_back();
    for (int j = 0; j < mu[r]; ++j)
      rows.back().push_back(r < static_cast<std::size_t>(m) ? Letter{static_cast<std::uint16_t>(r)}
                                                            : Letter{static_cast<std::uint16_t>(m + j)});
  }
  return Tableau(a, std::move(rows), unchecked);
}

struct LRQuery {
  Partition lambda;
  Partition mu;
  Partition nu;
  SignedAlphabet alphabet;
};

enum class LRMethod { product, skew_rect, yamanouchi };

inline const char* method_name(LRMethod m) {
  switch (m) {
    case LRMethod::product: return "product";
    case LRMethod::skew_rect: return "skew";
    case LRMethod::yamanouchi: return "yamanouchi";
  }
  return "?";
}

struct LRResult {
  long long coefficient = 0;
  LRMethod method = LRMethod::product;
  std::optional<Tableau> witness;  // the fixed t (product) or T (skew)
  std::vector<std::pair<Tableau, Tableau>> factor_pairs;
  std::vector<SkewTableau> skew_tableaux;
};

// Canonical tableau when there is one, else the least filling.
inline std::optional<Tableau> default_witness(const Partition& shape, const SignedAlphabet& a) {
  if (auto s = a.standard_shape(); s && fits_hook(shape, s->first, s->second)) return canonical_tableau(shape, a);
  if (auto t = first_tableau(SkewShape(shape), a)) return straighten(*t);
  return std::nullopt;
}

namespace detail {

inline bool sizes_match(const LRQuery& q) { return q.lambda.size() + q.mu.size() == q.nu.size(); }

inline std::vector<int> content_of(const Rows& rows, std::size_t n) {
  std::vector<int> c(n, 0);
  for (const auto& r : rows)
    for (Letter x : r) ++c[x.rank];
  return c;
}

}  // namespace detail

// Pairs (t', t'') of shapes (λ, μ) with t' ⋆ t'' = t.
inline LRResult lr_product(const LRQuery& q, const Tableau& t, bool collect = false) {
  LRResult res;
  res.method = LRMethod::product;
  res.witness = t;
  if (t.shape() != q.nu) throw ShapeError("witness tableau must have shape nu");
  if (!detail::sizes_match(q)) return res;
  const auto& a = q.alphabet;
  const auto target = detail::content_of(t.rows(), a.size());
  auto lefts = enumerate_straight(q.lambda, a);
  auto rights = enumerate_straight(q.mu, a);
  std::vector<std::vector<int>> rc;
  std::vector<Word> readings;
  for (const auto& u : rights) {
    rc.push_back(detail::content_of(u.rows(), a.size()));
    readings.push_back(column_reading(u));
  }
  for (const auto& l : lefts) {
    auto lc = detail::content_of(l.rows(), a.size());
    for (std::size_t k = 0; k < rights.size(); ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < lc.size() && ok; ++i) ok = lc[i] + rc[k][i] == target[i];
      if (!ok) continue;
      Tableau p = insert_word(l, readings[k]);
      if (p.rows() != t.rows()) continue;
      ++res.coefficient;
      if (collect) res.factor_pairs.emplace_back(l, rights[k]);
    }
  }
  return res;
}

inline LRResult lr_product(const LRQuery& q, bool collect = false) {
  if (auto t = default_witness(q.nu, q.alphabet)) return lr_product(q, *t, collect);
  return LRResult{0, LRMethod::product, std::nullopt, {}, {}};
}

// Skew tableaux of shape ν/λ rectifying to T.
inline LRResult lr_skew_rect(const LRQuery& q, const Tableau& target, bool collect = false) {
  LRResult res;
  res.method = LRMethod::skew_rect;
  res.witness = target;
  if (target.shape() != q.mu) throw ShapeError("witness tableau must have shape mu");
  if (!detail::sizes_match(q) || !q.nu.contains(q.lambda)) return res;
  const auto& a = q.alphabet;
  const SkewShape shape(q.nu, q.lambda);
  const auto want = detail::content_of(target.rows(), a.size());
  for_each_filling_capped(shape, a, want, [&](const Rows& rows) {
    SkewTableau s(a, shape, rows);
    if (rectify(s).rows() != target.rows()) return;
    ++res.coefficient;
    if (collect) res.skew_tableaux.push_back(std::move(s));
  });
  return res;
}

inline LRResult lr_skew_rect(const LRQuery& q, bool collect = false) {
  if (auto t = default_witness(q.mu, q.alphabet)) return lr_skew_rect(q, *t, collect);
  return LRResult{0, LRMethod::skew_rect, std::nullopt, {}, {}};
}

// Skew tableaux of shape ν/λ with super Yamanouchi reading and weight μ̌.
inline LRResult lr_yamanouchi(const LRQuery& q, bool collect = false) {
  auto [m, n] = require_standard(q.alphabet);
  LRResult res;
  res.method = LRMethod::yamanouchi;
  auto check = mu_check(q.mu, m, n);
  if (!detail::sizes_match(q) || !q.nu.contains(q.lambda)) return res;
  const auto& a = q.alphabet;
  const SkewShape shape(q.nu, q.lambda);
  for_each_filling_capped(shape, a, check.counts, [&](const Rows& rows) {
    SkewTableau s(a, shape, rows);
    if (!is_super_yamanouchi(column_reading(s))) return;
    ++res.coefficient;
    if (collect) res.skew_tableaux.push_back(std::move(s));
  });
  return res;
}

// Count of each t' ⋆ t'' over all pairs of shapes (λ, μ).
inline std::map<Tableau, long long> product_histogram(const Partition& lambda, const Partition& mu,
                                                      const SignedAlphabet& a) {
  std::map<Tableau, long long> out;
  auto lefts = enumerate_straight(lambda, a);
  auto rights = enumerate_straight(mu, a);
  for (const auto& l : lefts)
    for (const auto& r : rights) ++out[tableau_product(l, r)];
  return out;
}

// Count of each rectification over all fillings of a skew shape.
inline std::map<Tableau, long long> rectification_histogram(const SkewShape& s, const SignedAlphabet& a) {
  std::map<Tableau, long long> out;
  for_each_filling(s, a, [&](const Rows& rows) { ++out[rectify(SkewTableau(a, s, rows))]; });
  return out;
}

class FormalTableauSum {
 public:
  void add(const SkewTableau& t, long long k = 1) {
    if (k == 0) return;
    auto& v = terms_[t];
    v += k;
    if (v == 0) terms_.erase(t);
  }
  long long multiplicity(const SkewTableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
  }
  long long total() const {
    long long n = 0;
    for (const auto& [t, k] : terms_) n += k;
    return n;
  }
  std::size_t distinct() const noexcept { return terms_.size(); }
  const std::map<SkewTableau, long long>& terms() const noexcept { return terms_; }
  friend bool operator==(const FormalTableauSum&, const FormalTableauSum&) = default;

 private:
  std::map<SkewTableau, long long> terms_;
};

inline FormalTableauSum schur_sum(const SkewShape& s, const SignedAlphabet& a) {
  FormalTableauSum out;
  for_each_filling(s, a, [&](const Rows& rows) { out.add(SkewTableau(a, s, rows)); });
  return out;
}

struct Monomial {
  std::vector<int> exponents;  // one per letter
  int degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }
  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    if (x.exponents.size() != y.exponents.size()) throw AlphabetError("monomials over different alphabets");
    Monomial out = x;
    for (std::size_t i = 0; i < y.exponents.size(); ++i) out.exponents[i] += y.exponents[i];
    return out;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial monomial(const SkewTableau& t) { return {detail::content_of(t.rows(), t.alphabet().size())}; }
inline Monomial monomial(const Tableau& t) { return {detail::content_of(t.rows(), t.alphabet().size())}; }

inline std::map<Monomial, long long> polynomial(const FormalTableauSum& s) {
  std::map<Monomial, long long> out;
  for (const auto& [t, k] : s.terms()) out[monomial(t)] += k;
  return out;
}

// "x1^3 x2^2 ..." using the letter names.
inline std::string to_string(const Monomial& x, const SignedAlphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < x.exponents.size(); ++i) {
    if (x.exponents[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + a.name(Letter{static_cast<std::uint16_t>(i)});
    if (x.exponents[i] > 1) out += "^" + std::to_string(x.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

struct SchurExpansion {
  std::map<Partition, long long> coefficients;  // nonzero terms only
  long long fillings = 0;
  bool consistent = true;  // every shape-μ tableau occurs equally often
  std::string problem;
};

// S_{ν/λ} as a combination of S_μ, read off the rectification counts.
inline SchurExpansion schur_expand(const SkewShape& s, const SignedAlphabet& a) {
  SchurExpansion out;
  auto hist = rectification_histogram(s, a);
  for (const auto& [t, k] : hist) out.fillings += k;
  for (const auto& mu : partitions_of(s.size())) {
    auto all = enumerate_straight(mu, a);
    if (all.empty()) continue;
    std::optional<long long> c;
    for (const auto& t : all) {
      auto it = hist.find(t);
      long long k = it == hist.end() ? 0 : it->second;
      if (!c) c = k;
      else if (*c != k && out.consistent) {
        out.consistent = false;
        out.problem = "shape " + mu.to_string() + " tableaux occur " + std::to_string(*c) + " and " +
                      std::to_string(k) + " times";
      }
    }
    if (*c) out.coefficients[mu] = *c;
  }
  return out;
}

struct LRIdentityReport {
  bool product_identity = true;
  bool skew_identity = true;
  std::string first_discrepancy;
  std::map<Partition, long long> coefficients;  // c^ν_{λμ}, nonzero only
  int skew_shapes_checked = 0;
  int skew_shapes_skipped = 0;
  bool holds() const noexcept { return product_identity && skew_identity; }
};

namespace detail {

// c^ν_{λμ} by the product method, or by Yamanouchi fillings when ν has no tableau.
inline std::optional<long long> coefficient_for_skew_check(const LRQuery& q) {
  if (auto t = default_witness(q.nu, q.alphabet)) return lr_product(q, *t).coefficient;
  if (auto s = q.alphabet.standard_shape(); s && fits_hook(q.mu, s->first, s->second))
    return lr_yamanouchi(q).coefficient;
  return std::nullopt;
}

}  // namespace detail

// S_λ S_μ = Σ c S_ν as multisets of tableaux, with c from skew rectification;
// then S_{ν/λ} = Σ c S_μ' for every ν, with c from the product method.
inline LRIdentityReport verify_lr_identity(const Partition& lambda, const Partition& mu, const SignedAlphabet& a) {
  LRIdentityReport rep;
  auto note = [&](const std::string& s) {
    if (rep.first_discrepancy.empty()) rep.first_discrepancy = s;
  };
  const int total = lambda.size() + mu.size();
  auto hist = product_histogram(lambda, mu, a);
  long long seen = 0;
  for (const auto& nu : partitions_of(total)) {
    LRQuery q{lambda, mu, nu, a};
    long long c = lr_skew_rect(q).coefficient;
    if (c) rep.coefficients[nu] = c;
    for (const auto& t : enumerate_straight(nu, a)) {
      auto it = hist.find(t);
      long long k = it == hist.end() ? 0 : it->second;
      seen += k;
      if (k != c) {
        rep.product_identity = false;
        note("product side has " + std::to_string(k) + " copies of a shape " + nu.to_string() +
             " tableau, expected " + std::to_string(c));
      }
    }
  }
  long long all = 0;
  for (const auto& [t, k] : hist) all += k;
  if (all != seen) {
    rep.product_identity = false;
    note("product side has tableaux outside the expected shapes");
  }

  for (const auto& nu : partitions_of(total)) {
    if (!nu.contains(lambda)) continue;
    const SkewShape shape(nu, lambda);
    std::map<Partition, long long> expect;
    bool skip = false;
    for (const auto& m2 : partitions_of(mu.size())) {
      auto c = detail::coefficient_for_skew_check({lambda, m2, nu, a});
      if (!c) {
        if (!enumerate_straight(m2, a).empty()) skip = true;
        continue;
      }
      if (*c) expect[m2] = *c;
    }
    if (skip) {
      ++rep.skew_shapes_skipped;
      continue;
    }
    ++rep.skew_shapes_checked;
    auto rect = rectification_histogram(shape, a);
    long long covered = 0, rect_total = 0;
    for (const auto& [t, k] : rect) rect_total += k;
    for (const auto& m2 : partitions_of(mu.size())) {
      long long c = expect.count(m2) ? expect[m2] : 0;
      for (const auto& t : enumerate_straight(m2, a)) {
        auto it = rect.find(t);
        long long k = it == rect.end() ? 0 : it->second;
        covered += k;
        if (k != c) {
          rep.skew_identity = false;
          note("skew shape " + shape.to_string() + " rectifies " + std::to_string(k) + " times onto a shape " +
               m2.to_string() + " tableau, expected " + std::to_string(c));
        }
      }
    }
    if (covered != rect_total) {
      rep.skew_identity = false;
      note("skew shape " + shape.to_string() + " rectifies outside the expected shapes");
    }
  }
  return rep;
}

struct DecompositionCheck {
  bool holds = true;
  long long fillings = 0;          // |S_{ν/λ}|
  long long claimed_fillings = 0;  // Σ c |S_μ| over the claim
  std::string first_discrepancy;
};

// Compares a claimed decomposition S_{ν/λ} = Σ c_μ S_μ with the rectifications.
inline DecompositionCheck verify_skew_decomposition(const SkewShape& s, const SignedAlphabet& a,
                                                    const std::map<Partition, long long>& claim) {
  DecompositionCheck out;
  auto exp = schur_expand(s, a);
  out.fillings = exp.fillings;
  for (const auto& [mu, c] : claim) out.claimed_fillings += c * static_cast<long long>(count_tableaux(SkewShape(mu), a));
  if (!exp.consistent) {
    out.holds = false;
    out.first_discrepancy = exp.problem;
    return out;
  }
  std::map<Partition, long long> nonzero;
  for (const auto& [mu, c] : claim)
    if (c && count_tableaux(SkewShape(mu), a) > 0) nonzero[mu] = c;
  for (const auto& mu : partitions_of(s.size())) {
    long long want = nonzero.count(mu) ? nonzero[mu] : 0;
    long long got = exp.coefficients.count(mu) ? exp.coefficients.at(mu) : 0;
    if (want != got) {
      out.holds = false;
      if (out.first_discrepancy.empty())
        out.first_discrepancy = "coefficient of S_(" + mu.to_string() + ") is " + std::to_string(got) +
                                ", claimed " + std::to_string(want);
    }
  }
  return out;
}

}  // namespace superrsk

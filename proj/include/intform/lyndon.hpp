// Lyndon words, their standard bracketings, and free Lie elements stored in
// the Lyndon basis. Conversion from associative elements uses the
// triangularity of the bracket expansion: the expansion of a Lyndon word is
// the word itself plus lexicographically larger words of the same length.
#pragma once

#include <mutex>
#include <stdexcept>

#include "intform/free_algebra.hpp"
#include "intform/permutation.hpp"

namespace intform {

// strictly smaller than all of its proper suffixes
inline bool is_lyndon(const GenWord& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i), w.end()))
      return false;
  return true;
}

// Duval's generation, returned sorted by (length, lex)
inline std::vector<GenWord> lyndon_words(int alphabet, int max_len) {
  assert(alphabet >= 1 && max_len >= 1);
  std::vector<GenWord> out;
  GenWord w{0};
  for (;;) {
    out.push_back(w);
    size_t m = w.size();
    while (static_cast<int>(w.size()) < max_len) w.push_back(w[w.size() % m]);
    while (!w.empty() && w.back() == alphabet - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  std::sort(out.begin(), out.end(), [](const GenWord& a, const GenWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// w = uv with v the lexicographically least proper suffix; both parts Lyndon
inline std::pair<GenWord, GenWord> lyndon_standard_factorization(const GenWord& w) {
  assert(w.size() >= 2);
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (std::lexicographical_compare(w.begin() + static_cast<long>(i), w.end(),
                                     w.begin() + static_cast<long>(best), w.end()))
      best = i;
  return {GenWord(w.begin(), w.begin() + static_cast<long>(best)), GenWord(w.begin() + static_cast<long>(best), w.end())};
}

// associative expansion of the standard bracketing of a Lyndon word
inline FreeSeries<Rational> lyndon_bracket_expansion(const GenWord& w, int cap) {
  static std::map<GenWord, std::map<GenWord, Rational>> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(w);
    if (it != memo.end()) {
      FreeSeries<Rational> out(cap);
      for (const auto& [word, c] : it->second) out.add_term(word, c);
      return out;
    }
  }
  FreeSeries<Rational> result(static_cast<int>(w.size()));
  if (w.size() == 1) {
    result = FreeSeries<Rational>::generator(w[0], 1);
  } else {
    auto [u, v] = lyndon_standard_factorization(w);
    result = commutator(lyndon_bracket_expansion(u, static_cast<int>(w.size())),
                        lyndon_bracket_expansion(v, static_cast<int>(w.size())));
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(w, result.terms());
  }
  FreeSeries<Rational> out(cap);
  for (const auto& [word, c] : result.terms()) out.add_term(word, c);
  return out;
}

// descent-weighted projection onto the free Lie algebra inside the word
// algebra; fixes Lie elements and kills shuffles
inline FreeSeries<Rational> eulerian_projection(const FreeSeries<Rational>& a);

class FreeLieElement {
 public:
  explicit FreeLieElement(int cap) : cap_(cap) {}

  int cap() const { return cap_; }
  const std::map<GenWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const GenWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(GenWord lyndon_word, Rational c) {
    assert(is_lyndon(lyndon_word));
    if (static_cast<int>(lyndon_word.size()) > cap_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(lyndon_word), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FreeSeries<Rational> to_associative() const {
    FreeSeries<Rational> out(cap_);
    for (const auto& [w, c] : terms_) out += lyndon_bracket_expansion(w, cap_) * c;
    return out;
  }

  // triangular extraction; throws if the element is not Lie
  static FreeLieElement from_associative(const FreeSeries<Rational>& a) {
    FreeLieElement out(a.cap());
    std::map<GenWord, Rational> work(a.terms());
    if (work.count(GenWord{})) throw std::domain_error("free Lie extraction: unit component present");
    for (int len = 1; len <= a.cap(); ++len) {
      for (;;) {
        const GenWord* first = nullptr;
        for (const auto& [w, c] : work)
          if (static_cast<int>(w.size()) == len) {
            first = &w;
            break;
          }
        if (!first) break;
        GenWord w = *first;
        if (!is_lyndon(w))
          throw std::domain_error("free Lie extraction: non-Lie residual at word of length " +
                                  std::to_string(len));
        Rational c = work.at(w);
        out.add_term(w, c);
        const FreeSeries<Rational> expansion = lyndon_bracket_expansion(w, len);
        for (const auto& [ew, ec] : expansion.terms()) {
          auto it = work.find(ew);
          Rational nv = (it == work.end() ? Rational(0) : it->second) - c * ec;
          if (nv == 0) {
            if (it != work.end()) work.erase(it);
          } else if (it == work.end()) {
            work.emplace(ew, std::move(nv));
          } else {
            it->second = std::move(nv);
          }
        }
      }
    }
    return out;
  }

  FreeLieElement& operator+=(const FreeLieElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement& b) { return a += b; }
  friend FreeLieElement operator-(const FreeLieElement& a, const FreeLieElement& b) {
    FreeLieElement out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
  }
  friend FreeLieElement operator*(FreeLieElement a, const Rational& s) {
    if (s == 0) return FreeLieElement(a.cap_);
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
  }
  bool operator==(const FreeLieElement& o) const { return cap_ == o.cap_ && terms_ == o.terms_; }

 private:
  int cap_;
  std::map<GenWord, Rational> terms_;
};

inline FreeSeries<Rational> eulerian_projection(const FreeSeries<Rational>& a) {
  FreeSeries<Rational> out(a.cap());
  for (const auto& [w, c] : a.terms()) {
    const int n = static_cast<int>(w.size());
    if (n == 0) continue;
    Permutation::for_each(n, [&](const Permutation& sigma) {
      Rational weight(Integer((sigma.descent_number() & 1) ? -1 : 1),
                      Integer(n) * binomial(n - 1, sigma.descent_number()));
      GenWord nw(w.size());
      for (int k = 1; k <= n; ++k) nw[static_cast<size_t>(k - 1)] = w[static_cast<size_t>(sigma(k) - 1)];
      out.add_term(std::move(nw), c * weight);
    });
  }
  return out;
}

}  // namespace intform

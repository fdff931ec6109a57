// Formal linear combinations of tensor words over a graded alphabet, the
// Koszul-signed permutation action, and the shuffle product.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "intform/permutation.hpp"
#include "intform/rational.hpp"

namespace intform {

// Letters carry the degree of the suspended element they stand for, so the
// parity used in Koszul signs is the stored degree mod 2.
struct GradedLetter {
  std::string id;
  int degree = 0;

  bool operator==(const GradedLetter&) const = default;
  auto operator<=>(const GradedLetter&) const = default;
};

using Word = std::vector<GradedLetter>;

// new_word[k] = word[tau(k)]; the sign collects (-1)^{|x||y|} for every pair
// transposed by the rearrangement.
inline std::pair<Word, int> apply_permutation(const Word& word, const Permutation& tau) {
  const int n = static_cast<int>(word.size());
  assert(tau.size() == n);
  Word out;
  out.reserve(word.size());
  int sign = 1;
  for (int k = 1; k <= n; ++k) out.push_back(word[static_cast<size_t>(tau(k) - 1)]);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      if (tau(k) > tau(l) && (word[static_cast<size_t>(tau(k) - 1)].degree & 1) &&
          (word[static_cast<size_t>(tau(l) - 1)].degree & 1))
        sign = -sign;
  return {std::move(out), sign};
}

class TensorElement {
 public:
  TensorElement() = default;

  static TensorElement from_word(Word w, Rational coeff = Rational(1)) {
    TensorElement e;
    e.add_term(std::move(w), std::move(coeff));
    return e;
  }
  static TensorElement from_letter(GradedLetter l, Rational coeff = Rational(1)) {
    return from_word(Word{std::move(l)}, std::move(coeff));
  }

  void add_term(Word w, Rational coeff) {
    assert(!w.empty());  // reduced tensor algebra: words of length >= 1
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  TensorElement& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Rational& s) { return a *= s; }
  friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }

  // concatenation (tensor) product
  friend TensorElement concat(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(std::move(w), ca * cb);
      }
    return out;
  }

  bool operator==(const TensorElement&) const = default;

 private:
  std::map<Word, Rational> terms_;  // canonical word order, no zero coefficients
};

inline int word_degree(const Word& w) {
  int d = 0;
  for (const auto& l : w) d += l.degree;
  return d;
}

inline TensorElement shuffle_words(const Word& a, const Word& b) {
  Word joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  TensorElement out;
  const std::vector<int> blocks{p, q};
  Permutation::for_each(p + q, [&](const Permutation& sigma) {
    if (!sigma.is_unshuffle(blocks)) return;
    auto [w, sign] = apply_permutation(joined, sigma.inverse());
    out.add_term(std::move(w), Rational(sign));
  });
  return out;
}

inline TensorElement shuffle(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out += shuffle_words(wa, wb) * (ca * cb);
  return out;
}

// scalar product making the word basis orthonormal
inline Rational pairing(const TensorElement& a, const TensorElement& b) {
  Rational s = 0;
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  for (const auto& [w, c] : small.terms()) s += c * large.coefficient(w);
  return s;
}

}  // namespace intform

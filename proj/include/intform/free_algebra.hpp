// Truncated free associative series over named generators, with rational or
// piecewise-polynomial coefficients. Words longer than the nilpotency cap are
// dropped, which makes every series finite.
#pragma once

#include <map>
#include <type_traits>
#include <vector>

#include "intform/piecewise.hpp"

namespace intform {

using GenWord = std::vector<int>;

namespace detail {

inline bool coef_is_zero(const Rational& c) { return c == 0; }
inline bool coef_is_zero(const PiecewisePoly& c) { return c.is_zero(); }

template <class Coef>
Coef coef_one() {
  if constexpr (std::is_same_v<Coef, Rational>)
    return Rational(1);
  else
    return PiecewisePoly::one();
}

}  // namespace detail

template <class Coef>
class FreeSeries {
 public:
  explicit FreeSeries(int cap) : cap_(cap) { assert(cap >= 0); }

  static FreeSeries unit(int cap) {
    FreeSeries s(cap);
    s.add_term({}, detail::coef_one<Coef>());
    return s;
  }
  static FreeSeries generator(int g, int cap) {
    FreeSeries s(cap);
    s.add_term({g}, detail::coef_one<Coef>());
    return s;
  }

  int cap() const { return cap_; }
  const std::map<GenWord, Coef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coef coefficient(const GenWord& w) const {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if constexpr (std::is_same_v<Coef, Rational>)
        return Rational(0);
      else
        return PiecewisePoly();
    }
    return it->second;
  }

  void add_term(GenWord w, Coef c) {
    if (static_cast<int>(w.size()) > cap_) return;
    if (detail::coef_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (detail::coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  // no component on the empty word
  bool in_augmentation_ideal() const { return terms_.find(GenWord{}) == terms_.end(); }

  FreeSeries& operator+=(const FreeSeries& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FreeSeries& operator-=(const FreeSeries& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c * Rational(-1));
    return *this;
  }
  FreeSeries& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend FreeSeries operator+(FreeSeries a, const FreeSeries& b) { return a += b; }
  friend FreeSeries operator-(FreeSeries a, const FreeSeries& b) { return a -= b; }
  friend FreeSeries operator*(FreeSeries a, const Rational& s) { return a *= s; }
  friend FreeSeries operator*(const Rational& s, FreeSeries a) { return a *= s; }

  friend FreeSeries operator*(const FreeSeries& a, const FreeSeries& b) {
    FreeSeries out(std::min(a.cap_, b.cap_));
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        if (static_cast<int>(wa.size() + wb.size()) > out.cap_) continue;
        GenWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(std::move(w), ca * cb);
      }
    return out;
  }

  bool operator==(const FreeSeries& o) const { return terms_ == o.terms_; }

 private:
  int cap_;
  std::map<GenWord, Coef> terms_;
};

template <class Coef>
FreeSeries<Coef> commutator(const FreeSeries<Coef>& a, const FreeSeries<Coef>& b) {
  return a * b - b * a;
}

// exp of an augmentation-ideal element: 1 + x + x^2/2! + ...
template <class Coef>
FreeSeries<Coef> formal_exp(const FreeSeries<Coef>& x) {
  assert(x.in_augmentation_ideal());
  FreeSeries<Coef> out = FreeSeries<Coef>::unit(x.cap());
  FreeSeries<Coef> power = FreeSeries<Coef>::unit(x.cap());
  for (int k = 1; k <= x.cap(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    out += power * Rational(Integer(1), factorial(k));
  }
  return out;
}

// log of 1 + (augmentation-ideal part)
template <class Coef>
FreeSeries<Coef> formal_log(const FreeSeries<Coef>& u) {
  FreeSeries<Coef> x = u;
  x -= FreeSeries<Coef>::unit(u.cap());
  assert(x.in_augmentation_ideal());
  FreeSeries<Coef> out(u.cap());
  FreeSeries<Coef> power = FreeSeries<Coef>::unit(u.cap());
  for (int k = 1; k <= u.cap(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    out += power * Rational((k & 1) ? 1 : -1, k);
  }
  return out;
}

inline FreeSeries<PiecewisePoly> derivative(const FreeSeries<PiecewisePoly>& s) {
  FreeSeries<PiecewisePoly> out(s.cap());
  for (const auto& [w, c] : s.terms()) out.add_term(w, c.derivative());
  return out;
}

inline FreeSeries<PiecewisePoly> integrate_from_zero(const FreeSeries<PiecewisePoly>& s) {
  FreeSeries<PiecewisePoly> out(s.cap());
  for (const auto& [w, c] : s.terms()) out.add_term(w, c.integrate_from_zero());
  return out;
}

inline FreeSeries<Rational> evaluate(const FreeSeries<PiecewisePoly>& s, const Rational& t) {
  FreeSeries<Rational> out(s.cap());
  for (const auto& [w, c] : s.terms()) out.add_term(w, c(t));
  return out;
}

}  // namespace intform

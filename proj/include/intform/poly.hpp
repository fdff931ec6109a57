// Univariate polynomials over exact rationals.
#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "intform/rational.hpp"

namespace intform {

class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c) : c_{std::move(c)} { normalize(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly monomial(int k, Rational c = Rational(1)) {
    assert(k >= 0);
    if (c == 0) return Poly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  static Poly t() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }

  // degree of the zero polynomial is "none"
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  Rational coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<int>(k);
    return Poly(std::move(d));
  }

  // antiderivative vanishing at 0
  Poly antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rational> a(c_.size() + 1);
    for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<int>(k + 1);
    return Poly(std::move(a));
  }

  // p(alpha*t + beta)
  Poly compose_affine(const Rational& alpha, const Rational& beta) const {
    Poly lin(std::vector<Rational>{beta, alpha});
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r = r * lin;
      r += Poly(*it);
    }
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) p[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(p));
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  bool operator==(const Poly&) const = default;
  auto operator<=>(const Poly&) const = default;

 private:
  std::vector<Rational> c_;  // c_[k] is the coefficient of t^k; no trailing zeros

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

// binomial polynomial t(t-1)...(t-k+1)/k! in the variable alpha*t+beta
inline Poly falling_binomial(int k, const Rational& alpha, const Rational& beta) {
  Poly r(Rational(1));
  Poly lin(std::vector<Rational>{beta, alpha});
  for (int i = 0; i < k; ++i) {
    r = r * (lin - Poly(Rational(i)));
  }
  return r * Rational(1, factorial(k));
}

}  // namespace intform

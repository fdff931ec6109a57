// Polynomial differential forms on [0,1], the Whitney subcomplex, Dupont's
// contraction, iterated simplex integrals, and the simplicial cup product.
#pragma once

#include <span>
#include <vector>

#include "intform/piecewise.hpp"

namespace intform {

// f0(t) + f1(t) dt with piecewise-polynomial parts
struct PolyForm {
  PiecewisePoly f0;
  PiecewisePoly f1;

  PolyForm() = default;
  PolyForm(PiecewisePoly zero_part, PiecewisePoly one_part)
      : f0(std::move(zero_part)), f1(std::move(one_part)) {}

  static PolyForm zero_form(PiecewisePoly f) { return PolyForm(std::move(f), PiecewisePoly()); }
  static PolyForm one_form(PiecewisePoly a) { return PolyForm(PiecewisePoly(), std::move(a)); }
  static PolyForm unit() { return zero_form(PiecewisePoly::one()); }

  bool is_zero() const { return f0.is_zero() && f1.is_zero(); }

  PolyForm& operator+=(const PolyForm& o) {
    f0 += o.f0;
    f1 += o.f1;
    return *this;
  }
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(const PolyForm& a, const PolyForm& b) { return {a.f0 - b.f0, a.f1 - b.f1}; }
  friend PolyForm operator*(const PolyForm& a, const Rational& s) { return {a.f0 * s, a.f1 * s}; }
  friend PolyForm operator*(const Rational& s, const PolyForm& a) { return a * s; }
  bool operator==(const PolyForm&) const = default;
};

// v1*t + v0*(1-t) + e*dt, the simplicial cochains of the 1-simplex
struct WhitneyCochain {
  Rational v0, v1, e;

  WhitneyCochain() : v0(0), v1(0), e(0) {}
  WhitneyCochain(Rational value_at_0, Rational value_at_1, Rational edge)
      : v0(std::move(value_at_0)), v1(std::move(value_at_1)), e(std::move(edge)) {}

  static WhitneyCochain unit() { return {Rational(1), Rational(1), Rational(0)}; }
  static WhitneyCochain vertex_t() { return {Rational(0), Rational(1), Rational(0)}; }
  static WhitneyCochain edge(Rational c) { return {Rational(0), Rational(0), std::move(c)}; }

  bool is_zero() const { return v0 == 0 && v1 == 0 && e == 0; }

  WhitneyCochain& operator+=(const WhitneyCochain& o) {
    v0 += o.v0;
    v1 += o.v1;
    e += o.e;
    return *this;
  }
  friend WhitneyCochain operator+(WhitneyCochain a, const WhitneyCochain& b) { return a += b; }
  friend WhitneyCochain operator-(const WhitneyCochain& a, const WhitneyCochain& b) {
    return {a.v0 - b.v0, a.v1 - b.v1, a.e - b.e};
  }
  friend WhitneyCochain operator*(const WhitneyCochain& a, const Rational& s) {
    return {a.v0 * s, a.v1 * s, a.e * s};
  }
  friend WhitneyCochain operator*(const Rational& s, const WhitneyCochain& a) { return a * s; }
  bool operator==(const WhitneyCochain&) const = default;
};

inline PolyForm de_rham_d(const PolyForm& w) { return PolyForm::one_form(w.f0.derivative()); }

inline PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  // (1-form) ^ (1-form) = 0
  return PolyForm(a.f0 * b.f0, a.f0 * b.f1 + a.f1 * b.f0);
}

inline PolyForm dupont_iota(const WhitneyCochain& c) {
  Poly lin(std::vector<Rational>{c.v0, c.v1 - c.v0});  // v1*t + v0*(1-t)
  return PolyForm(PiecewisePoly(std::move(lin)), PiecewisePoly::constant(c.e));
}

inline WhitneyCochain dupont_pi(const PolyForm& w) {
  return WhitneyCochain(w.f0(Rational(0)), w.f0(Rational(1)), w.f1.integral());
}

// a(t)dt -> t*int_0^1 a - int_0^t a; zero on 0-forms
inline PolyForm dupont_h(const PolyForm& w) {
  PiecewisePoly primitive = w.f1.integrate_from_zero();
  PiecewisePoly result = PiecewisePoly(Poly::t()) * primitive(Rational(1)) - primitive;
  return PolyForm::zero_form(std::move(result));
}

inline WhitneyCochain cochain_d(const WhitneyCochain& c) { return WhitneyCochain::edge(c.v1 - c.v0); }

// Determined by unitality and t u t = t, t u dt = 0, dt u t = dt: the 0-parts
// multiply pointwise at the vertices and the edge part is v0(a)*e(b) + e(a)*v1(b).
inline WhitneyCochain cup(const WhitneyCochain& a, const WhitneyCochain& b) {
  return WhitneyCochain(a.v0 * b.v0, a.v1 * b.v1, a.v0 * b.e + a.e * b.v1);
}

// int_{0 <= t_1 <= ... <= t_n <= s} a_1(t_1) ... a_n(t_n), as a function of s
inline PiecewisePoly simplex_iterated_antiderivative(std::span<const PiecewisePoly> factors) {
  PiecewisePoly acc = PiecewisePoly::one();
  bool first = true;
  for (const auto& a : factors) {
    acc = (first ? a : a * acc).integrate_from_zero();
    first = false;
  }
  if (first) return PiecewisePoly::one();  // empty product
  return acc;
}

inline Rational simplex_iterated_integral(std::span<const PiecewisePoly> factors, const Rational& s) {
  // monomial inputs on a single piece reduce to a product of partial-sum
  // reciprocals; this path carries most of the verification workload
  Integer den = 1;
  Rational num = 1;
  int exp_sum = 0;
  bool monomial = true;
  for (const auto& a : factors) {
    auto m = a.as_monomial();
    if (!m) {
      monomial = false;
      break;
    }
    if (m->second == 0) return Rational(0);
    num *= m->second;
    exp_sum += m->first + 1;
    den *= exp_sum;
  }
  if (monomial) {
    Rational r = num / Rational(den);
    if (s != 1) {
      Rational p = 1;
      for (int i = 0; i < exp_sum; ++i) p *= s;
      r *= p;
    }
    return r;
  }
  return simplex_iterated_antiderivative(factors)(s);
}

}  // namespace intform

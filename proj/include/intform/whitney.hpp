// The three structures on the interval as truncated coderivations: the wedge
// dg algebra on polynomial forms, the cup dg algebra on cochains, and the
// Bernoulli-coefficient homotopy-commutative structure on cochains.
//
// Coefficients live on the suspension: q1(sx) = -s(dx) and
// q2(sa (x) sb) = (-1)^{|a|} s(a*b), with |a| the form degree.
#pragma once

#include "intform/ainfty.hpp"
#include "intform/bernoulli.hpp"
#include "intform/forms.hpp"

namespace intform {

inline Elt derham_q1(const Elt& x) {
  assert(x.space() == Space::forms);
  if (x.form_degree() == 1) return Elt::zero(Space::forms, 1);
  return Elt::form1(-x.poly().derivative());
}

inline Elt derham_q2(const Elt& a, const Elt& b) {
  if (a.form_degree() == 1 && b.form_degree() == 1) return Elt::zero(Space::forms);
  PiecewisePoly prod = a.poly() * b.poly();
  if (a.form_degree() == 0)
    return b.form_degree() == 0 ? Elt::form0(std::move(prod)) : Elt::form1(std::move(prod));
  return Elt::form1(-prod);
}

inline Elt cup_q1(const Elt& x) {
  assert(x.space() == Space::cochains);
  if (x.form_degree() == 1) return Elt::zero(Space::cochains, 1);
  return Elt::cochain1(x.v0() - x.v1());  // -s(dx), d(x) = (v1 - v0) dt
}

inline Elt cup_q2(const Elt& a, const Elt& b) {
  WhitneyCochain prod = cup(a.to_cochain(), b.to_cochain());
  int deg = a.form_degree() + b.form_degree();
  if (deg >= 2) return Elt::zero(Space::cochains);
  Elt out = Elt::from(prod, deg);
  return a.form_degree() == 0 ? out : out * Rational(-1);
}

inline TruncatedCoderivation derham_structure(int order) {
  TruncatedCoderivation q{Space::forms, order, {}};
  q.coeffs.resize(2);
  q.coeffs[0] = [](std::span<const Elt> w) { return derham_q1(w[0]); };
  q.coeffs[1] = [](std::span<const Elt> w) { return derham_q2(w[0], w[1]); };
  return q;
}

inline TruncatedCoderivation cup_structure(int order) {
  TruncatedCoderivation q{Space::cochains, order, {}};
  q.coeffs.resize(2);
  q.coeffs[0] = [](std::span<const Elt> w) { return cup_q1(w[0]); };
  q.coeffs[1] = [](std::span<const Elt> w) { return cup_q2(w[0], w[1]); };
  return q;
}

// closed-form slot coefficient: arity i+j+1 on (s dt)^i (x) st (x) (s dt)^j
// equals (-1)^{i+1} C(i+j,i) B_{i+j}/(i+j)! times s dt
inline Rational cinfty_slot_value(int dt_before, int dt_after) {
  int m = dt_before + dt_after;
  Rational v = Rational(binomial(m, dt_before)) * bernoulli_number(m) / Rational(factorial(m));
  return (dt_before & 1) ? v : -v;
}

// the homotopy-commutative coefficients m_n; unital, and for n >= 3 supported
// on words with exactly one 0-form slot
inline Elt cinfty_m(int n, std::span<const Elt> word) {
  if (n == 1) return cup_q1(word[0]);
  if (n == 2) {
    const Elt &a = word[0], &b = word[1];
    // split f = v0*1 + (v1-v0)*t, bilinearly
    if (a.form_degree() == 0 && b.form_degree() == 0) {
      // unit acts as identity; m2(st (x) st) = st
      Rational ct_a = a.v1() - a.v0(), ct_b = b.v1() - b.v0();
      Rational u = a.v0() * b.v0();                       // 1*1 -> 1
      Rational t = a.v0() * ct_b + ct_a * b.v0() + ct_a * ct_b;  // 1*t, t*1, t*t -> t
      return Elt::cochain0(u, u + t);
    }
    if (a.form_degree() == 0) {
      // m2(s1 (x) sdt) = sdt, m2(st (x) sdt) = 1/2 sdt
      return Elt::cochain1((a.v0() + (a.v1() - a.v0()) / 2) * b.edge());
    }
    if (b.form_degree() == 0) {
      // m2(sdt (x) s1) = -sdt, m2(sdt (x) st) = -1/2 sdt
      return Elt::cochain1(-(b.v0() + (b.v1() - b.v0()) / 2) * a.edge());
    }
    return Elt::zero(Space::cochains, 1);
  }
  int function_slot = -1;
  for (int k = 0; k < n; ++k) {
    if (word[static_cast<size_t>(k)].form_degree() == 0) {
      if (function_slot >= 0) return Elt::zero(Space::cochains);
      function_slot = k;
    }
  }
  if (function_slot < 0) return Elt::zero(Space::cochains, 1);
  Rational c = word[static_cast<size_t>(function_slot)].v1() - word[static_cast<size_t>(function_slot)].v0();
  if (c == 0) return Elt::zero(Space::cochains, 1);  // the unit part drops
  for (int k = 0; k < n; ++k)
    if (k != function_slot) c *= word[static_cast<size_t>(k)].edge();
  if (c == 0) return Elt::zero(Space::cochains, 1);
  return Elt::cochain1(c * cinfty_slot_value(function_slot, n - 1 - function_slot));
}

inline TruncatedCoderivation cinfty_structure(int order) {
  TruncatedCoderivation q{Space::cochains, order, {}};
  q.coeffs.resize(static_cast<size_t>(order));
  for (int n = 1; n <= order; ++n)
    q.coeffs[static_cast<size_t>(n - 1)] = [n](std::span<const Elt> w) { return cinfty_m(n, w); };
  return q;
}

// Dupont's contraction, lifted to the suspended complexes; the homotopy slot
// carries the suspension sign so that q1 K + K q1 = include o project - id.
inline Contraction dupont_contraction() {
  Contraction c;
  c.small_space = Space::cochains;
  c.big_space = Space::forms;
  c.include = [](const Elt& x) {
    if (x.form_degree() == 0) {
      Poly lin(std::vector<Rational>{x.v0(), x.v1() - x.v0()});
      return Elt::form0(PiecewisePoly(std::move(lin)));
    }
    return Elt::form1(PiecewisePoly::constant(x.edge()));
  };
  c.project = [](const Elt& x) {
    if (x.form_degree() == 0) {
      const auto& f = x.poly();
      return Elt::cochain0(f(Rational(0)), f(Rational(1)));
    }
    return Elt::cochain1(x.poly().integral());
  };
  c.homotopy = [](const Elt& x) {
    if (x.form_degree() == 0) return Elt::zero(Space::forms, 0);
    PiecewisePoly primitive = x.poly().integrate_from_zero();
    return Elt::form0(primitive - PiecewisePoly(Poly::t()) * primitive(Rational(1)));
  };
  return c;
}

}  // namespace intform

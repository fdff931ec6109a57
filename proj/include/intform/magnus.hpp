// Scalar extension by nilpotent free algebras: the time-ordered exponential,
// three Magnus constructions, the Hausdorff differential identity, and BCH
// extraction from a piecewise-constant path.
#pragma once

#include "intform/bernoulli.hpp"
#include "intform/eulerian.hpp"
#include "intform/forms.hpp"
#include "intform/lyndon.hpp"

namespace intform {

// a(t) = sum_g x_g p_g(t): a one-form coefficient path with values in the
// degree-one part of the free algebra
class CoefficientPath {
 public:
  explicit CoefficientPath(std::vector<PiecewisePoly> components) : comps_(std::move(components)) {}

  int num_generators() const { return static_cast<int>(comps_.size()); }
  const PiecewisePoly& component(int g) const { return comps_[static_cast<size_t>(g)]; }
  const std::vector<PiecewisePoly>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  // t -> -a(1-t); the time-ordered exponential of this path inverts that of a
  CoefficientPath time_reversed_negated() const {
    std::vector<PiecewisePoly> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.reflect() * Rational(-1));
    return CoefficientPath(std::move(out));
  }

  FreeSeries<PiecewisePoly> as_series(int cap) const {
    FreeSeries<PiecewisePoly> s(cap);
    for (int g = 0; g < num_generators(); ++g) s.add_term({g}, comps_[static_cast<size_t>(g)]);
    return s;
  }

  std::vector<int> active_generators() const {
    std::vector<int> out;
    for (int g = 0; g < num_generators(); ++g)
      if (!comps_[static_cast<size_t>(g)].is_zero()) out.push_back(g);
    return out;
  }

 private:
  std::vector<PiecewisePoly> comps_;
};

namespace detail {

template <class Fn>
void for_each_gen_word(const std::vector<int>& gens, int n, Fn&& fn) {
  GenWord w(static_cast<size_t>(n), gens.empty() ? 0 : gens[0]);
  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  if (gens.empty()) return;
  for (;;) {
    fn(static_cast<const GenWord&>(w));
    size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < gens.size()) {
        w[pos] = gens[idx[pos]];
        break;
      }
      idx[pos] = 0;
      w[pos] = gens[0];
      if (pos == 0) return;
    }
  }
}

// expansion of [s_{o_1}, [ ... [s_{o_{n-1}}, s_{o_n}] ... ]] into sequences of
// the slot symbols with signs
inline std::vector<std::pair<std::vector<int>, int>> nested_bracket_words(const std::vector<int>& order) {
  std::vector<std::pair<std::vector<int>, int>> acc{{{order.back()}, 1}};
  for (size_t i = order.size() - 1; i-- > 0;) {
    std::vector<std::pair<std::vector<int>, int>> next;
    next.reserve(acc.size() * 2);
    for (const auto& [w, s] : acc) {
      std::vector<int> left{order[i]};
      left.insert(left.end(), w.begin(), w.end());
      next.emplace_back(std::move(left), s);
      std::vector<int> right = w;
      right.push_back(order[i]);
      next.emplace_back(std::move(right), -s);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

// 1 + sum_n int_{0 <= t_1 <= ... <= t_n <= s} a(t_1)...a(t_n), the solution
// of Y' = Y a with Y(0) = 1, as a series with piecewise coefficients in s
inline FreeSeries<PiecewisePoly> picard_texp_path(const CoefficientPath& a, int cap) {
  if (!a.as_series(cap).in_augmentation_ideal()) throw std::invalid_argument("path has a unit component");
  FreeSeries<PiecewisePoly> out = FreeSeries<PiecewisePoly>::unit(cap);
  const auto gens = a.active_generators();
  std::vector<PiecewisePoly> factors;
  for (int n = 1; n <= cap; ++n) {
    detail::for_each_gen_word(gens, n, [&](const GenWord& w) {
      factors.clear();
      for (int g : w) factors.push_back(a.component(g));
      out.add_term(w, simplex_iterated_antiderivative(factors));
    });
  }
  return out;
}

inline FreeSeries<Rational> picard_texp(const CoefficientPath& a, const Rational& s, int cap) {
  FreeSeries<Rational> out = FreeSeries<Rational>::unit(cap);
  const auto gens = a.active_generators();
  std::vector<PiecewisePoly> factors;
  for (int n = 1; n <= cap; ++n) {
    detail::for_each_gen_word(gens, n, [&](const GenWord& w) {
      factors.clear();
      for (int g : w) factors.push_back(a.component(g));
      out.add_term(w, simplex_iterated_integral(factors, s));
    });
  }
  return out;
}

// the Bernoulli-weighted recursion, solved degree by degree; returns the full
// Lie-series logarithm of the time-ordered exponential as a function of s
inline FreeSeries<PiecewisePoly> magnus_recursion_path(const CoefficientPath& a, int cap) {
  FreeSeries<PiecewisePoly> a_series = a.as_series(cap);
  std::vector<FreeSeries<PiecewisePoly>> w(static_cast<size_t>(cap) + 1, FreeSeries<PiecewisePoly>(cap));
  FreeSeries<PiecewisePoly> total(cap);
  for (int d = 1; d <= cap; ++d) {
    FreeSeries<PiecewisePoly> rhs(cap);
    if (d == 1) {
      rhs = a_series;
    } else {
      for (int k = 1; k <= d - 1; ++k) {
        Rational bk = bernoulli_number(k);
        if (bk == 0) continue;
        bk /= Rational(factorial(k));
        if (k & 1) bk = -bk;
        for (const auto& parts : compositions_into(d - 1, k)) {
          // [W_{i_1}, [ ... [W_{i_k}, a(t)] ... ]]
          FreeSeries<PiecewisePoly> acc = a_series;
          for (int h = k; h-- > 0;) acc = commutator(w[static_cast<size_t>(parts[static_cast<size_t>(h)])], acc);
          rhs += acc * bk;
        }
      }
    }
    w[static_cast<size_t>(d)] = integrate_from_zero(rhs);
    total += w[static_cast<size_t>(d)];
  }
  return total;
}

inline FreeLieElement magnus_recursion(const CoefficientPath& a, const Rational& s, int cap) {
  return FreeLieElement::from_associative(evaluate(magnus_recursion_path(a, cap), s));
}

// descent-weighted nested-bracket integral formula
inline FreeLieElement magnus_mielnik_plebanski(const CoefficientPath& a, const Rational& s, int cap) {
  FreeSeries<Rational> acc(cap);
  const auto gens = a.active_generators();
  std::vector<PiecewisePoly> factors(0);
  for (int n = 1; n <= cap; ++n) {
    Permutation::for_each(n, [&](const Permutation& sigma) {
      Rational weight = eulerian_coefficient(n, sigma.descent_number()) / n;
      std::vector<int> order(static_cast<size_t>(n));
      for (int k = 1; k <= n; ++k) order[static_cast<size_t>(k - 1)] = sigma(k);
      for (const auto& [slots, bsign] : detail::nested_bracket_words(order)) {
        // slots[j] is the time index of the factor at algebra position j
        std::vector<int> pos_of_time(static_cast<size_t>(n) + 1);
        for (int j = 0; j < n; ++j) pos_of_time[static_cast<size_t>(slots[static_cast<size_t>(j)])] = j;
        detail::for_each_gen_word(gens, n, [&](const GenWord& gw) {
          factors.assign(static_cast<size_t>(n), PiecewisePoly());
          for (int k = 1; k <= n; ++k)
            factors[static_cast<size_t>(k - 1)] =
                a.component(gw[static_cast<size_t>(pos_of_time[static_cast<size_t>(k)])]);
          Rational v = simplex_iterated_integral(factors, s);
          if (v != 0) acc.add_term(gw, weight * Rational(bsign) * v);
        });
      }
    });
  }
  return FreeLieElement::from_associative(acc);
}

// descent-weighted permutation formula evaluated in the word algebra; the
// result is checked to be a Lie element by the Lyndon extraction
inline FreeLieElement magnus_via_log_lambda(const CoefficientPath& a, const Rational& s, int cap) {
  FreeSeries<Rational> acc(cap);
  const auto gens = a.active_generators();
  std::vector<PiecewisePoly> factors;
  for (int n = 1; n <= cap; ++n) {
    Permutation::for_each(n, [&](const Permutation& sigma) {
      Rational weight = eulerian_coefficient(n, sigma.descent_number());
      Permutation inv = sigma.inverse();
      detail::for_each_gen_word(gens, n, [&](const GenWord& gw) {
        factors.clear();
        for (int k = 1; k <= n; ++k) factors.push_back(a.component(gw[static_cast<size_t>(inv(k) - 1)]));
        Rational v = simplex_iterated_integral(factors, s);
        if (v != 0) acc.add_term(gw, weight * v);
      });
    });
  }
  return FreeLieElement::from_associative(acc);
}

// logarithm of the time-ordered exponential in the word algebra; the
// independent comparison route for the other three
inline FreeLieElement magnus_picard_log(const CoefficientPath& a, const Rational& s, int cap) {
  return FreeLieElement::from_associative(formal_log(picard_texp(a, s, cap)));
}

// sum_k 1/(k+1)! [ ... [dM/ds, M] ..., M] - a(s); identically zero for the
// Lie-series logarithm M of the time-ordered exponential
inline FreeSeries<PiecewisePoly> hausdorff_residual(const CoefficientPath& a, int cap) {
  FreeSeries<PiecewisePoly> m = magnus_recursion_path(a, cap);
  FreeSeries<PiecewisePoly> term = derivative(m);
  FreeSeries<PiecewisePoly> res = term;
  for (int k = 1; k <= cap - 1; ++k) {
    term = commutator(term, m);
    if (term.is_zero()) break;
    res += term * Rational(Integer(1), factorial(k + 1));
  }
  res -= a.as_series(cap);
  return res;
}

// d/ds T(s) - T(s) a(s) for the time-ordered exponential T
inline FreeSeries<PiecewisePoly> picard_ode_residual(const CoefficientPath& a, int cap) {
  FreeSeries<PiecewisePoly> t = picard_texp_path(a, cap);
  return derivative(t) - t * a.as_series(cap);
}

// log(e^{xw*x} e^{yw*y}) via the piecewise-constant path 2*xw*x on [0,1/2],
// 2*yw*y on [1/2,1]
inline CoefficientPath bch_path(const Rational& x_weight, const Rational& y_weight) {
  std::vector<Rational> breaks{Rational(0), Rational(1, 2), Rational(1)};
  PiecewisePoly px(breaks, {Poly(x_weight * 2), Poly()});
  PiecewisePoly py(breaks, {Poly(), Poly(y_weight * 2)});
  return CoefficientPath({px, py});
}

inline FreeLieElement bch(const Rational& x_weight, const Rational& y_weight, int cap) {
  return magnus_recursion(bch_path(x_weight, y_weight), Rational(1), cap);
}

}  // namespace intform

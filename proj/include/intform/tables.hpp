// Coefficient tables behind the CLI and the verification suites.
#pragma once

#include "intform/bernoulli.hpp"
#include "intform/eulerian.hpp"
#include "intform/whitney.hpp"

namespace intform {

// rows n = 1..n_max of C_{n,d}, d = 0..n-1
inline std::vector<std::vector<Rational>> eulerian_table(int n_max) {
  std::vector<std::vector<Rational>> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Rational> row;
    for (int d = 0; d < n; ++d) row.push_back(eulerian_coefficient(n, d));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<Rational> bernoulli_table(int n_max) {
  std::vector<Rational> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(bernoulli_number(n));
  return out;
}

// slot values of the arity-n coefficient on edge words with one vertex slot
inline std::vector<Rational> cinfty_slot_table(int n) {
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(cinfty_slot_value(i, n - 1 - i));
  return out;
}

// edge-word coefficients of the comparison isomorphisms, n = 1..n_max
inline std::vector<Rational> exp_table(int n_max) {
  std::vector<Rational> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(Rational(Integer(1), factorial(n)));
  return out;
}
inline std::vector<Rational> log_table(int n_max) {
  std::vector<Rational> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(Rational((n & 1) ? 1 : -1, n));
  return out;
}

// mu slot polynomials: arity n, vertex slot i among edge slots
inline Poly mu_slot_poly(int n, int i) {
  int m = n - 1;
  Poly b = bernoulli_poly(m + 1);
  b -= Poly(bernoulli_number(m + 1));
  Rational scale = Rational(binomial(m, i)) / Rational(factorial(m + 1));
  if (i & 1) scale = -scale;
  return b * scale;
}

// gamma slot polynomials: arity n, vertex slot i
inline Poly gamma_slot_poly(int n, int i) {
  Poly sum;
  for (int l = 0; l <= i; ++l)
    sum += falling_binomial(l, Rational(-1), Rational(1)) * falling_binomial(n - l, Rational(1), Rational(0));
  return sum;
}

}  // namespace intform

// Bernoulli numbers and polynomials, cached, via the standard recursions.
#pragma once

#include <mutex>
#include <vector>

#include "intform/poly.hpp"

namespace intform {

// B_n with generating function z/(e^z - 1), so B_1 = -1/2.
inline Rational bernoulli_number(int n) {
  assert(n >= 0);
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
    int m = static_cast<int>(cache.size());
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * cache[static_cast<size_t>(k)];
    cache.push_back(-s / Rational(m + 1));
  }
  return cache[static_cast<size_t>(n)];
}

// B_n(t) = sum_k C(n,k) B_k t^{n-k}
inline Poly bernoulli_poly(int n) {
  assert(n >= 0);
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(n - k)] = Rational(binomial(n, k)) * bernoulli_number(k);
  return Poly(std::move(c));
}

}  // namespace intform

// The descent-weighted coefficients C_{n,d}, the Eulerian projector E and its
// adjoint E*, and the Dynkin map, all acting on tensor words.
#pragma once

#include <map>
#include <mutex>
#include <stdexcept>

#include "intform/tensor_word.hpp"

namespace intform {

// C_{n,d} = (-1)^d / (n * C(n-1,d)) for 0 <= d < n
inline Rational eulerian_coefficient(int n, int d) {
  if (n < 1 || d < 0 || d >= n) throw std::out_of_range("eulerian_coefficient: need 0 <= d < n");
  Rational r(1, Integer(n) * binomial(n - 1, d));
  return (d & 1) ? -r : r;
}

// sum of (-1)^{m+1}/m over ordered partitions i_1+...+i_m = n for which sigma
// is an (i_1,...,i_m)-unshuffle
inline Rational lemma_partition_sum(const Permutation& sigma) {
  Rational s = 0;
  for (const auto& parts : compositions(sigma.size())) {
    if (!sigma.is_unshuffle(parts)) continue;
    int m = static_cast<int>(parts.size());
    s += Rational((m & 1) ? 1 : -1, m);
  }
  return s;
}

namespace detail {

template <bool UseInverse>
TensorElement descent_weighted_sum(const TensorElement& a) {
  TensorElement out;
  for (const auto& [w, c] : a.terms()) {
    const int n = static_cast<int>(w.size());
    Permutation::for_each(n, [&](const Permutation& sigma) {
      Rational coeff = c * eulerian_coefficient(n, sigma.descent_number());
      auto [nw, sign] = apply_permutation(w, UseInverse ? sigma.inverse() : sigma);
      out.add_term(std::move(nw), coeff * sign);
    });
  }
  return out;
}

}  // namespace detail

// E: v_1 x ... x v_n -> sum_sigma C_{n,d_sigma} v_{sigma(1)} x ... x v_{sigma(n)}
inline TensorElement eulerian_projector(const TensorElement& a) { return detail::descent_weighted_sum<false>(a); }

// adjoint of E for the word-orthonormal pairing; vanishes on shuffles
inline TensorElement eulerian_adjoint(const TensorElement& a) { return detail::descent_weighted_sum<true>(a); }

// The adjoint projector as a permutation sum, assembled from its
// alternating-shuffle expansion
//   id + sum_{k>=2} (-1)^{k+1}/k sum_{i_1+...+i_k=n} (block_1 (*) ... (*) block_k),
// where a k-fold shuffle contributes the rearrangements w -> w o sigma^{-1}
// over the (i_1,...,i_k)-unshuffles sigma. Cached per arity; this is the
// construction route that does not presuppose the descent closed form.
inline const std::vector<std::pair<Permutation, Rational>>& eulerian_adjoint_shuffle_expansion(int n) {
  static std::map<int, std::vector<std::pair<Permutation, Rational>>> cache;  // node-stable
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& entry = cache[n];
  if (!entry.empty()) return entry;
  std::map<std::vector<int>, Rational> acc;
  acc[Permutation::identity(n).images()] = 1;
  for (int k = 2; k <= n; ++k) {
    Rational weight((k & 1) ? 1 : -1, k);
    for (const auto& parts : compositions_into(n, k)) {
      Permutation::for_each(n, [&](const Permutation& sigma) {
        if (!sigma.is_unshuffle(parts)) return;
        acc[sigma.inverse().images()] += weight;
      });
    }
  }
  for (auto& [images, c] : acc)
    if (c != 0) entry.emplace_back(Permutation(images), c);
  return entry;
}

// v_1 x ... x v_n -> (1/n) [v_1, [... [v_{n-1}, v_n] ...]], expanded back into
// tensor words via the graded commutator
inline TensorElement dynkin(const TensorElement& a) {
  TensorElement out;
  for (const auto& [w, c] : a.terms()) {
    const int n = static_cast<int>(w.size());
    TensorElement bracket = TensorElement::from_letter(w.back());
    int right_degree = w.back().degree;
    for (int i = n - 2; i >= 0; --i) {
      const GradedLetter& x = w[static_cast<size_t>(i)];
      TensorElement left = TensorElement::from_letter(x);
      // [x, B] = x (x) B - (-1)^{|x||B|} B (x) x
      bool flip = (x.degree & 1) && (right_degree & 1);
      bracket = concat(left, bracket) - concat(bracket, left) * Rational(flip ? -1 : 1);
      right_degree += x.degree;
    }
    out += bracket * (c * Rational(1, n));
  }
  return out;
}

}  // namespace intform

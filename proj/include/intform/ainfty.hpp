// Truncated tensor-coalgebra machinery: coderivations and coalgebra morphisms
// via Taylor coefficients, composition, relation residuals, shuffle checks,
// symmetrization, and homological-perturbation transfer.
#pragma once

#include <functional>
#include <memory>
#include <array>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "intform/element.hpp"
#include "intform/permutation.hpp"

namespace intform {

using TaylorMap = std::function<Elt(std::span<const Elt>)>;

struct TruncatedCoderivation {
  Space space = Space::forms;
  int order = 0;
  std::vector<TaylorMap> coeffs;  // coeffs[i] is the arity-(i+1) coefficient; absent means zero

  Elt apply(int arity, std::span<const Elt> word) const {
    assert(arity >= 1 && static_cast<int>(word.size()) == arity);
    assert(arity <= order);
    if (arity > static_cast<int>(coeffs.size()) || !coeffs[static_cast<size_t>(arity - 1)])
      return Elt::zero(space);
    return coeffs[static_cast<size_t>(arity - 1)](word);
  }
};

struct TruncatedMorphism {
  Space source = Space::forms;
  Space target = Space::forms;
  int order = 0;
  std::vector<TaylorMap> coeffs;

  Elt apply(int arity, std::span<const Elt> word) const {
    assert(arity >= 1 && static_cast<int>(word.size()) == arity);
    assert(arity <= order);
    if (arity > static_cast<int>(coeffs.size()) || !coeffs[static_cast<size_t>(arity - 1)])
      return Elt::zero(target);
    return coeffs[static_cast<size_t>(arity - 1)](word);
  }
};

inline TruncatedMorphism identity_morphism(Space sp, int order) {
  TruncatedMorphism m{sp, sp, order, {}};
  m.coeffs.resize(static_cast<size_t>(order));
  m.coeffs[0] = [](std::span<const Elt> w) { return w[0]; };
  return m;
}

namespace detail {

// fixed-size storage keeps references stable for concurrent callers
inline const std::vector<std::vector<int>>& cached_compositions_into(int n, int k) {
  constexpr int kMax = 16;
  static std::array<std::array<std::vector<std::vector<int>>, kMax + 1>, kMax + 1> cache;
  static std::mutex mu;
  if (n > kMax || k > kMax) {
    static thread_local std::vector<std::vector<int>> scratch;
    scratch = compositions_into(n, k);
    return scratch;
  }
  auto& cell = cache[static_cast<size_t>(n)][static_cast<size_t>(k)];
  std::lock_guard<std::mutex> lock(mu);
  if (cell.empty() && k >= 1 && n >= k) cell = compositions_into(n, k);
  return cell;
}

}  // namespace detail

struct SignedWord {
  int sign;
  EltWord word;
};

// terms of the corestriction T^n -> T^j of the coderivation extension of q:
// one coefficient of arity n-j+1 is applied at every position, with the
// Koszul sign of moving an odd map past the prefix
inline std::vector<SignedWord> coderivation_terms(const TruncatedCoderivation& q, int j,
                                                  std::span<const Elt> word) {
  const int n = static_cast<int>(word.size());
  const int i = n - j + 1;
  std::vector<SignedWord> out;
  if (i < 1 || i > q.order) return out;
  int prefix_sign = 1;
  for (int k = 0; k + i <= n; ++k) {
    Elt inner = q.apply(i, word.subspan(static_cast<size_t>(k), static_cast<size_t>(i)));
    if (!inner.is_zero()) {
      EltWord w;
      w.reserve(static_cast<size_t>(j));
      w.insert(w.end(), word.begin(), word.begin() + k);
      w.push_back(std::move(inner));
      w.insert(w.end(), word.begin() + k + i, word.end());
      out.push_back({prefix_sign, std::move(w)});
    }
    if (word[static_cast<size_t>(k)].odd()) prefix_sign = -prefix_sign;
  }
  return out;
}

// arity-n Taylor coefficient of Q o Q
inline Elt coderivation_square_residual(const TruncatedCoderivation& q, int n,
                                        std::span<const Elt> word) {
  Elt acc = Elt::zero(q.space);
  for (int j = 1; j <= n; ++j)
    for (const auto& term : coderivation_terms(q, j, word))
      acc += q.apply(j, term.word) * Rational(term.sign);
  return acc;
}

// sum over compositions of n into blocks, applying F blockwise and then fn to
// the resulting tensor; zero blocks kill their term. Blocks are contiguous
// subwords shared across compositions, so their images are cached per call.
template <class Fn>
void for_each_block_image(const TruncatedMorphism& f, int n, std::span<const Elt> word, int min_blocks,
                          Fn&& fn) {
  std::vector<std::optional<Elt>> cache(static_cast<size_t>(n * n + n));
  auto block = [&](int pos, int len) -> const Elt& {
    auto& slot = cache[static_cast<size_t>(pos * n + len - 1)];
    if (!slot) slot = f.apply(len, word.subspan(static_cast<size_t>(pos), static_cast<size_t>(len)));
    return *slot;
  };
  for (int i = min_blocks; i <= n; ++i) {
    for (const auto& parts : detail::cached_compositions_into(n, i)) {
      EltWord tensor;
      tensor.reserve(static_cast<size_t>(i));
      int pos = 0;
      bool dead = false;
      for (int j : parts) {
        const Elt& v = block(pos, j);
        pos += j;
        if (v.is_zero()) {
          dead = true;
          break;
        }
        tensor.push_back(v);
      }
      if (!dead) fn(i, static_cast<const EltWord&>(tensor));
    }
  }
}

// sum_i R_i F^i_n - sum_j F_j Q^j_n evaluated on word; zero iff the morphism
// relation holds there
inline Elt morphism_relation_residual(const TruncatedMorphism& f, const TruncatedCoderivation& q_source,
                                      const TruncatedCoderivation& r_target, int n,
                                      std::span<const Elt> word) {
  assert(f.source == q_source.space && f.target == r_target.space);
  Elt acc = Elt::zero(f.target);
  for_each_block_image(f, n, word, 1,
                       [&](int i, const EltWord& tensor) { acc += r_target.apply(i, tensor); });
  for (int j = 1; j <= n; ++j)
    for (const auto& term : coderivation_terms(q_source, j, word))
      acc += f.apply(j, term.word) * Rational(-term.sign);
  return acc;
}

// (g o f)_n = sum_i g_i f^i_n
inline TruncatedMorphism compose(const TruncatedMorphism& g, const TruncatedMorphism& f) {
  assert(f.target == g.source);
  assert(f.order == g.order);
  TruncatedMorphism out{f.source, g.target, f.order, {}};
  auto shared = std::make_shared<std::pair<TruncatedMorphism, TruncatedMorphism>>(g, f);
  out.coeffs.resize(static_cast<size_t>(out.order));
  for (int n = 1; n <= out.order; ++n) {
    out.coeffs[static_cast<size_t>(n - 1)] = [shared, n](std::span<const Elt> word) {
      Elt acc = Elt::zero(shared->first.target);
      for_each_block_image(shared->second, n, word, 1,
                           [&](int i, const EltWord& tensor) { acc += shared->first.apply(i, tensor); });
      return acc;
    };
  }
  return out;
}

// new_word[k] = word[tau(k)] with the Koszul sign of the rearrangement
inline std::pair<EltWord, int> permute_word(std::span<const Elt> word, const Permutation& tau) {
  const int n = static_cast<int>(word.size());
  EltWord out;
  out.reserve(word.size());
  int sign = 1;
  for (int k = 1; k <= n; ++k) out.push_back(word[static_cast<size_t>(tau(k) - 1)]);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      if (tau(k) > tau(l) && word[static_cast<size_t>(tau(k) - 1)].odd() &&
          word[static_cast<size_t>(tau(l) - 1)].odd())
        sign = -sign;
  return {std::move(out), sign};
}

// F_n o sym_n, the coefficients of the symmetrized (L-infinity) morphism
inline TruncatedMorphism symmetrize(const TruncatedMorphism& f) {
  TruncatedMorphism out{f.source, f.target, f.order, {}};
  auto shared = std::make_shared<TruncatedMorphism>(f);
  out.coeffs.resize(static_cast<size_t>(out.order));
  for (int n = 1; n <= out.order; ++n) {
    out.coeffs[static_cast<size_t>(n - 1)] = [shared, n](std::span<const Elt> word) {
      Elt acc = Elt::zero(shared->target);
      Permutation::for_each(n, [&](const Permutation& sigma) {
        auto [w, sign] = permute_word(word, sigma);
        acc += shared->apply(n, w) * Rational(sign);
      });
      return acc;
    };
  }
  return out;
}

// contraction data between the suspended complexes; homotopy is odd and
// carries the suspension sign, so that q1 h + h q1 = include o project - id
struct Contraction {
  Space small_space, big_space;
  std::function<Elt(const Elt&)> include;   // small -> big
  std::function<Elt(const Elt&)> project;   // big -> small
  std::function<Elt(const Elt&)> homotopy;  // big -> big
};

struct TransferResult {
  TruncatedCoderivation structure;   // on the small space
  TruncatedMorphism embedding;       // small -> big quasi-isomorphism
};

// perturbation recursion R_n = G1 Q_i F^i_n, F_n = K Q_i F^i_n (i >= 2)
inline TransferResult homotopy_transfer(const TruncatedCoderivation& q, const Contraction& c,
                                        int order) {
  auto f = std::make_shared<TruncatedMorphism>();
  f->source = c.small_space;
  f->target = c.big_space;
  f->order = order;
  f->coeffs.resize(static_cast<size_t>(order));
  f->coeffs[0] = [c](std::span<const Elt> w) { return c.include(w[0]); };
  auto inner = [f, q](int n, std::span<const Elt> word) {
    Elt acc = Elt::zero(q.space);
    for_each_block_image(*f, n, word, 2, [&](int i, const EltWord& tensor) { acc += q.apply(i, tensor); });
    return acc;
  };
  for (int n = 2; n <= order; ++n)
    f->coeffs[static_cast<size_t>(n - 1)] = [c, inner, n](std::span<const Elt> word) {
      return c.homotopy(inner(n, word));
    };

  TruncatedCoderivation r;
  r.space = c.small_space;
  r.order = order;
  r.coeffs.resize(static_cast<size_t>(order));
  r.coeffs[0] = [c, q](std::span<const Elt> w) {
    EltWord lifted{c.include(w[0])};
    return c.project(q.apply(1, lifted));
  };
  for (int n = 2; n <= order; ++n)
    r.coeffs[static_cast<size_t>(n - 1)] = [c, inner, n](std::span<const Elt> word) {
      return c.project(inner(n, word));
    };
  return {std::move(r), *f};  // keep the shared recursion state alive
}

// reversed-orientation transfer: the big-to-small quasi-isomorphism from the
// perturbation recursion p_n = p_{n-1} Q^{n-1}_n H^n_n, with
// H^n_n = sum_k id^k (x) homotopy (x) (include o project)^{n-k-1}
inline TruncatedMorphism transfer_projection(const TruncatedCoderivation& q, const Contraction& c,
                                             int order) {
  auto p = std::make_shared<TruncatedMorphism>();
  p->source = c.big_space;
  p->target = c.small_space;
  p->order = order;
  p->coeffs.resize(static_cast<size_t>(order));
  p->coeffs[0] = [c](std::span<const Elt> w) { return c.project(w[0]); };
  for (int n = 2; n <= order; ++n) {
    p->coeffs[static_cast<size_t>(n - 1)] = [p, c, q, n](std::span<const Elt> word) {
      Elt acc = Elt::zero(c.small_space);
      int prefix_sign = 1;
      for (int k = 0; k < n; ++k) {
        Elt hk = c.homotopy(word[static_cast<size_t>(k)]);
        bool dead = hk.is_zero();
        EltWord w1;
        if (!dead) {
          w1.reserve(static_cast<size_t>(n));
          w1.insert(w1.end(), word.begin(), word.begin() + k);
          w1.push_back(std::move(hk));
          for (int l = k + 1; l < n; ++l) {
            Elt retracted = c.include(c.project(word[static_cast<size_t>(l)]));
            if (retracted.is_zero()) {
              dead = true;
              break;
            }
            w1.push_back(std::move(retracted));
          }
        }
        if (!dead)
          for (const auto& term : coderivation_terms(q, n - 1, w1))
            acc += p->apply(n - 1, term.word) * Rational(prefix_sign * term.sign);
        if (word[static_cast<size_t>(k)].odd()) prefix_sign = -prefix_sign;
      }
      return acc;
    };
  }
  return *p;
}

// Rebuilds the arity-n coefficient of a morphism whose higher coefficients
// vanish on words containing a 0-form, from the coefficients below n, by
// lifting the first slot through Q_1. This inverts the inductive step of the
// uniqueness argument for such morphisms.
inline Elt reconstruct_vanishing_coefficient(const TruncatedMorphism& f,
                                             const TruncatedCoderivation& q_source,
                                             const TruncatedCoderivation& r_target, int n,
                                             const std::function<Elt(const Elt&)>& q1_preimage,
                                             std::span<const Elt> word) {
  for (const auto& x : word)
    if (x.form_degree() == 0) return Elt::zero(f.target);
  EltWord wx(word.begin(), word.end());
  wx[0] = q1_preimage(word[0]);

  Elt acc = Elt::zero(f.target);
  // the single-block term would use the unknown coefficient, but it vanishes
  // on wx, so only i >= 2 contributes
  for_each_block_image(f, n, wx, 2, [&](int i, const EltWord& tensor) { acc += r_target.apply(i, tensor); });
  for (int j = 1; j <= n - 1; ++j)
    for (const auto& term : coderivation_terms(q_source, j, wx))
      acc += f.apply(j, term.word) * Rational(-term.sign);
  // the arity-n source term contributes F_n(word) from the first slot and
  // vanishing words from the others
  return acc;
}

}  // namespace intform

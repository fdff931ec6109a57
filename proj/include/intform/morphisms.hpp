// Taylor coefficients of the quasi-isomorphisms between polynomial forms,
// cup cochains, and the Bernoulli-coefficient structure on Whitney forms:
// the iterated-integral morphism lambda, its one-sided inverses gamma and phi,
// the comparison pair exp/log, the embedding mu, the scaled family phi_s, and
// automorphism lifting.
#pragma once

#include <stdexcept>

#include "intform/eulerian.hpp"
#include "intform/whitney.hpp"

namespace intform {

namespace detail {

// collect the coefficient functions of an all-one-form word; false when some
// slot is a 0-form
inline bool one_form_coefficients(std::span<const Elt> word, std::vector<PiecewisePoly>& out) {
  out.clear();
  out.reserve(word.size());
  for (const auto& x : word) {
    if (x.form_degree() != 1) return false;
    out.push_back(x.poly());
  }
  return true;
}

// exponents-plus-one and coefficient product of an all-monomial one-form word;
// the basis sweeps spend nearly all their time here
struct MonomialWord {
  std::vector<int> lengths;  // exponent + 1 per slot
  Rational coeff;            // product of the monomial coefficients
};

inline bool as_monomial_word(std::span<const Elt> word, MonomialWord& out) {
  if (word.size() > 8) return false;  // keep partial-sum products inside long long
  out.lengths.clear();
  out.lengths.reserve(word.size());
  out.coeff = 1;
  int total = 0;
  for (const auto& x : word) {
    if (x.form_degree() != 1) return false;
    auto m = x.poly().as_monomial();
    if (!m) return false;
    out.coeff *= m->second;
    out.lengths.push_back(m->first + 1);
    total += m->first + 1;
  }
  return total <= 100;
}

// ordered simplex integral of the monomial word over [0,1]
inline Rational monomial_simplex_integral(const std::vector<int>& lengths, size_t begin, size_t end) {
  long long den = 1, sum = 0;
  for (size_t i = begin; i < end; ++i) {
    sum += lengths[i];
    den *= sum;
  }
  return Rational(1, den);
}

inline Rational edge_product(std::span<const Elt> word) {
  Rational p = 1;
  for (const auto& x : word) p *= x.edge();
  return p;
}

}  // namespace detail

// lambda_1 = endpoint/integral projection; higher coefficients vanish on words
// with a 0-form factor and integrate over the ordered simplex otherwise
inline Elt lambda_coeff(int n, std::span<const Elt> word) {
  if (n == 1) {
    const Elt& x = word[0];
    if (auto m = x.poly().as_monomial()) {
      if (x.form_degree() == 0)
        return Elt::cochain0(m->first == 0 ? m->second : Rational(0), m->second);
      return Elt::cochain1(m->second / (m->first + 1));
    }
    if (x.form_degree() == 0) {
      const auto& f = x.poly();
      return Elt::cochain0(f(Rational(0)), f(Rational(1)));
    }
    return Elt::cochain1(x.poly().integral());
  }
  for (const auto& x : word)
    if (x.form_degree() != 1) return Elt::zero(Space::cochains);
  thread_local detail::MonomialWord mono;
  if (detail::as_monomial_word(word, mono)) {
    if (mono.coeff == 0) return Elt::cochain1(Rational(0));
    return Elt::cochain1(mono.coeff * detail::monomial_simplex_integral(mono.lengths, 0, mono.lengths.size()));
  }
  std::vector<PiecewisePoly> a;
  detail::one_form_coefficients(word, a);
  return Elt::cochain1(simplex_iterated_integral(a, Rational(1)));
}

// mu_1 is the inclusion; higher coefficients are supported on words with
// exactly one 0-form slot and carry shifted Bernoulli polynomials
inline Elt mu_coeff(int n, std::span<const Elt> word) {
  if (n == 1) {
    const Elt& x = word[0];
    if (x.form_degree() == 0)
      return Elt::form0(PiecewisePoly(Poly(std::vector<Rational>{x.v0(), x.v1() - x.v0()})));
    return Elt::form1(PiecewisePoly::constant(x.edge()));
  }
  int function_slot = -1;
  for (int k = 0; k < n; ++k) {
    if (word[static_cast<size_t>(k)].form_degree() == 0) {
      if (function_slot >= 0) return Elt::zero(Space::forms);
      function_slot = k;
    }
  }
  if (function_slot < 0) return Elt::zero(Space::forms, 1);
  Rational c = word[static_cast<size_t>(function_slot)].v1() - word[static_cast<size_t>(function_slot)].v0();
  for (int k = 0; k < n; ++k)
    if (k != function_slot) c *= word[static_cast<size_t>(k)].edge();
  if (c == 0) return Elt::zero(Space::forms, 0);
  int m = n - 1, i = function_slot;
  Poly b = bernoulli_poly(m + 1);
  b -= Poly(bernoulli_number(m + 1));
  Rational scale = Rational(binomial(m, i)) / Rational(factorial(m + 1));
  if (i & 1) scale = -scale;
  return Elt::form0(PiecewisePoly(b) * (c * scale));
}

// exp_n and log_n: identity linear part, vanish on words with a 0-form
// factor, and on pure edge words take the series coefficients of e^x - 1 and
// log(1+x)
inline Elt exp_coeff(int n, std::span<const Elt> word) {
  if (n == 1) return word[0];
  for (const auto& x : word)
    if (x.form_degree() == 0) return Elt::zero(Space::cochains);
  return Elt::cochain1(detail::edge_product(word) / Rational(factorial(n)));
}

inline Elt log_coeff(int n, std::span<const Elt> word) {
  if (n == 1) return word[0];
  for (const auto& x : word)
    if (x.form_degree() == 0) return Elt::zero(Space::cochains);
  return Elt::cochain1(detail::edge_product(word) * Rational((n & 1) ? 1 : -1, n));
}

// gamma_1 is the inclusion; the edge-only value is the log series and the
// one-function values are generalized binomial polynomials
inline Elt gamma_coeff(int n, std::span<const Elt> word) {
  if (n == 1) return mu_coeff(1, word);
  int function_slot = -1;
  for (int k = 0; k < n; ++k) {
    if (word[static_cast<size_t>(k)].form_degree() == 0) {
      if (function_slot >= 0) return Elt::zero(Space::forms);
      function_slot = k;
    }
  }
  if (function_slot < 0)
    return Elt::form1(PiecewisePoly::constant(detail::edge_product(word) * Rational((n & 1) ? 1 : -1, n)));
  Rational c = word[static_cast<size_t>(function_slot)].v1() - word[static_cast<size_t>(function_slot)].v0();
  for (int k = 0; k < n; ++k)
    if (k != function_slot) c *= word[static_cast<size_t>(k)].edge();
  if (c == 0) return Elt::zero(Space::forms, 0);
  int i = function_slot;
  Poly sum;
  for (int l = 0; l <= i; ++l)
    sum += falling_binomial(l, Rational(-1), Rational(1)) * falling_binomial(n - l, Rational(1), Rational(0));
  return Elt::form0(PiecewisePoly(std::move(sum)) * c);
}

enum class PhiRoute { compose_log_lambda, eulerian_integral, estar_pullback };

// the discretization morphism: corestriction of log o lambda; all three
// routes agree and are exposed for cross-checking
inline Elt phi_coeff(int n, std::span<const Elt> word, PhiRoute route = PhiRoute::compose_log_lambda) {
  if (n == 1) return lambda_coeff(1, word);
  for (const auto& x : word)
    if (x.form_degree() != 1) return Elt::zero(Space::cochains);
  if (route == PhiRoute::compose_log_lambda) {
    thread_local detail::MonomialWord mono;
    if (detail::as_monomial_word(word, mono)) {
      if (mono.coeff == 0) return Elt::cochain1(Rational(0));
      // each block of the iterated integral is a product of partial-sum
      // reciprocals, restarting at block boundaries
      Rational value = 0;
      for (int m = 1; m <= n; ++m) {
        Rational msum = 0;
        for (const auto& parts : detail::cached_compositions_into(n, m)) {
          long long den = 1;
          size_t pos = 0;
          for (int j : parts) {
            long long sum = 0;
            for (int l = 0; l < j; ++l) {
              sum += mono.lengths[pos++];
              den *= sum;
            }
          }
          msum += Rational(1, den);
        }
        value += msum * Rational((m & 1) ? 1 : -1, m);
      }
      return Elt::cochain1(mono.coeff * value);
    }
  }
  std::vector<PiecewisePoly> a;
  detail::one_form_coefficients(word, a);
  Rational value = 0;
  switch (route) {
    case PhiRoute::compose_log_lambda: {
      // sum over compositions of the log coefficient times ordered blocks of
      // iterated integrals
      for (int m = 1; m <= n; ++m) {
        Rational block_sum = 0;
        for (const auto& parts : detail::cached_compositions_into(n, m)) {
          Rational prod = 1;
          int pos = 0;
          for (int j : parts) {
            prod *= simplex_iterated_integral(
                std::span<const PiecewisePoly>(a.data() + pos, static_cast<size_t>(j)), Rational(1));
            pos += j;
          }
          block_sum += prod;
        }
        value += block_sum * Rational((m & 1) ? 1 : -1, m);
      }
      break;
    }
    case PhiRoute::eulerian_integral: {
      // descent-weighted permutation sum, each permuted product rewritten as
      // an ordered product and integrated by nesting
      std::vector<PiecewisePoly> q(a.size());
      Permutation::for_each(n, [&](const Permutation& sigma) {
        Permutation inv = sigma.inverse();
        for (int k = 1; k <= n; ++k) q[static_cast<size_t>(k - 1)] = a[static_cast<size_t>(inv(k) - 1)];
        value += eulerian_coefficient(n, sigma.descent_number()) * simplex_iterated_integral(q, Rational(1));
      });
      break;
    }
    case PhiRoute::estar_pullback: {
      // lambda_n after the alternating-shuffle expansion of the adjoint
      // projector, reduced once per arity to a permutation table
      std::vector<PiecewisePoly> q(a.size());
      for (const auto& [tau, coeff] : eulerian_adjoint_shuffle_expansion(n)) {
        for (int l = 1; l <= n; ++l) q[static_cast<size_t>(l - 1)] = a[static_cast<size_t>(tau(l) - 1)];
        value += coeff * simplex_iterated_integral(q, Rational(1));
      }
      break;
    }
  }
  return Elt::cochain1(value);
}

// the ordered Bernoulli-weighted recursion; returns the value as a function
// of the upper integration limit
inline PiecewisePoly magnus_taylor(std::span<const PiecewisePoly> args) {
  const int n = static_cast<int>(args.size());
  if (n == 1) return args[0].integrate_from_zero();
  PiecewisePoly total;
  for (int k = 1; k <= n - 1; ++k) {
    Rational bk = bernoulli_number(k);
    if (bk == 0) continue;
    bk /= Rational(factorial(k));
    for (const auto& parts : detail::cached_compositions_into(n - 1, k)) {
      for (int j = 0; j <= k; ++j) {
        // blocks 1..j, then the bare argument, then blocks j+1..k
        PiecewisePoly prod = PiecewisePoly::one();
        int pos = 0;
        for (int h = 0; h < j; ++h) {
          prod = prod * magnus_taylor(args.subspan(static_cast<size_t>(pos), static_cast<size_t>(parts[static_cast<size_t>(h)])));
          pos += parts[static_cast<size_t>(h)];
        }
        prod = prod * args[static_cast<size_t>(pos)];
        pos += 1;
        for (int h = j; h < k; ++h) {
          prod = prod * magnus_taylor(args.subspan(static_cast<size_t>(pos), static_cast<size_t>(parts[static_cast<size_t>(h)])));
          pos += parts[static_cast<size_t>(h)];
        }
        Rational w = bk * Rational(binomial(k, j));
        if (j & 1) w = -w;
        total += prod.integrate_from_zero() * w;
      }
    }
  }
  return total;
}

enum class PhiSRoute { scaled, recursion };

// pullback of a homogeneous element along t -> s*t
inline Elt scale_element(const Elt& x, const Rational& s) {
  assert(x.space() == Space::forms);
  if (auto m = x.poly().as_monomial()) {
    Rational c = m->second;
    for (int i = 0; i < m->first; ++i) c *= s;
    if (x.form_degree() == 0) return Elt::form0(Poly::monomial(m->first, c));
    return Elt::form1(Poly::monomial(m->first, c * s));
  }
  if (x.form_degree() == 0) return Elt::form0(x.poly().scale_time(s));
  return Elt::form1(x.poly().scale_time(s) * s);
}

inline Elt phi_s_coeff(int n, std::span<const Elt> word, const Rational& s,
                       PhiSRoute route = PhiSRoute::scaled) {
  if (route == PhiSRoute::scaled) {
    EltWord scaled;
    scaled.reserve(word.size());
    for (const auto& x : word) scaled.push_back(scale_element(x, s));
    return phi_coeff(n, scaled);
  }
  if (n == 1) {
    const Elt& x = word[0];
    if (x.form_degree() == 0) {
      const auto& f = x.poly();
      return Elt::cochain0(f(Rational(0)), f(s));
    }
    return Elt::cochain1(x.poly().integrate_from_zero()(s));
  }
  std::vector<PiecewisePoly> a;
  if (!detail::one_form_coefficients(word, a)) return Elt::zero(Space::cochains);
  return Elt::cochain1(magnus_taylor(a)(s));
}

enum class Corruption { none, m3, phi2 };

struct CatalogConfig {
  int order = 6;        // truncation order N
  int poly_degree = 12; // polynomial degree cap D for basis enumeration
  Corruption corruption = Corruption::none;  // verification negative controls
};

class MorphismCatalog {
 public:
  explicit MorphismCatalog(CatalogConfig cfg = {}) : cfg_(cfg) {
    const int N = cfg_.order;
    derham_ = derham_structure(N);
    cup_ = cup_structure(N);
    cinfty_ = cinfty_structure(N);
    if (cfg_.corruption == Corruption::m3 && N >= 3) {
      TaylorMap base = cinfty_.coeffs[2];
      cinfty_.coeffs[2] = [base](std::span<const Elt> w) {
        Elt v = base(w);
        // shift the slot-1 table entry: breaks both the square-zero and the
        // transfer comparison
        if (w[0].form_degree() == 1 && w[1].form_degree() == 0 && w[2].form_degree() == 1) {
          Rational c = (w[1].v1() - w[1].v0()) * w[0].edge() * w[2].edge();
          v += Elt::cochain1(c * Rational(1, 7));
        }
        return v;
      };
    }
    lambda_ = make_morphism(Space::forms, Space::cochains,
                            [](int n, std::span<const Elt> w) { return lambda_coeff(n, w); });
    mu_ = make_morphism(Space::cochains, Space::forms,
                        [](int n, std::span<const Elt> w) { return mu_coeff(n, w); });
    exp_ = make_morphism(Space::cochains, Space::cochains,
                         [](int n, std::span<const Elt> w) { return exp_coeff(n, w); });
    log_ = make_morphism(Space::cochains, Space::cochains,
                         [](int n, std::span<const Elt> w) { return log_coeff(n, w); });
    gamma_ = make_morphism(Space::cochains, Space::forms,
                           [](int n, std::span<const Elt> w) { return gamma_coeff(n, w); });
    phi_ = phi(PhiRoute::compose_log_lambda);
  }

  const CatalogConfig& config() const { return cfg_; }
  const TruncatedCoderivation& derham() const { return derham_; }
  const TruncatedCoderivation& cup_algebra() const { return cup_; }
  const TruncatedCoderivation& cinfty() const { return cinfty_; }
  const TruncatedMorphism& lambda() const { return lambda_; }
  const TruncatedMorphism& mu() const { return mu_; }
  const TruncatedMorphism& exp() const { return exp_; }
  const TruncatedMorphism& log() const { return log_; }
  const TruncatedMorphism& gamma() const { return gamma_; }
  const TruncatedMorphism& phi() const { return phi_; }

  TruncatedMorphism phi(PhiRoute route) const {
    bool corrupt = cfg_.corruption == Corruption::phi2;
    return make_morphism(Space::forms, Space::cochains, [route, corrupt](int n, std::span<const Elt> w) {
      Elt v = phi_coeff(n, w, route);
      if (corrupt && n == 2 && w[0].form_degree() == 1 && w[1].form_degree() == 1)
        v += Elt::cochain1(w[0].poly().integral() * w[1].poly().integral() * Rational(1, 5));
      return v;
    });
  }

  TruncatedMorphism phi_s(const Rational& s, PhiSRoute route = PhiSRoute::scaled) const {
    return make_morphism(Space::forms, Space::cochains, [s, route](int n, std::span<const Elt> w) {
      return phi_s_coeff(n, w, s, route);
    });
  }

  // strict endomorphism of polynomial forms generated by t -> alpha*t + beta;
  // defined on single-piece (globally polynomial) inputs
  TruncatedMorphism affine_substitution(const Rational& alpha, const Rational& beta) const {
    TruncatedMorphism m{Space::forms, Space::forms, cfg_.order, {}};
    m.coeffs.resize(static_cast<size_t>(cfg_.order));
    m.coeffs[0] = [alpha, beta](std::span<const Elt> w) {
      const Poly* p = w[0].poly().as_single_poly();
      if (!p) throw std::invalid_argument("affine substitution needs a global polynomial");
      Poly image = p->compose_affine(alpha, beta);
      if (w[0].form_degree() == 0) return Elt::form0(PiecewisePoly(std::move(image)));
      return Elt::form1(PiecewisePoly(image * alpha));
    };
    return m;
  }

  // unital automorphism of the Whitney structure with linear part t -> alpha*t + beta
  TruncatedMorphism lift_linear_automorphism(const Rational& alpha, const Rational& beta) const {
    if (alpha == 0) throw std::invalid_argument("lift_linear_automorphism: alpha must be nonzero");
    return compose(phi_, compose(affine_substitution(alpha, beta), mu_));
  }

 private:
  template <class Fn>
  TruncatedMorphism make_morphism(Space src, Space dst, Fn&& fn) const {
    TruncatedMorphism m{src, dst, cfg_.order, {}};
    m.coeffs.resize(static_cast<size_t>(cfg_.order));
    for (int n = 1; n <= cfg_.order; ++n)
      m.coeffs[static_cast<size_t>(n - 1)] = [fn, n](std::span<const Elt> w) { return fn(n, w); };
    return m;
  }

  CatalogConfig cfg_;
  TruncatedCoderivation derham_, cup_, cinfty_;
  TruncatedMorphism lambda_, mu_, exp_, log_, gamma_, phi_;
};

}  // namespace intform

// Named verification suites. Every suite evaluates a battery of exact
// identities and reports each violating instance; passing means zero
// violations. Scopes (arity and degree caps) are fixed here so that the
// acceptance run is reproducible.
#pragma once

#include <random>
#include <sstream>
#include <thread>

#include "intform/magnus.hpp"
#include "intform/morphisms.hpp"
#include "intform/tables.hpp"

namespace intform {

struct CheckFailure {
  std::string relation;
  int arity = 0;
  std::string instance;
  std::string residual;
};

struct SuiteReport {
  std::string suite;
  long checks = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  int order = 6;            // truncation order N
  int poly_degree = 12;     // degree cap D for contraction sweeps
  int relation_degree = 8;  // degree cap for morphism-relation sweeps
  int lie_degree = 4;       // nilpotency cap for the Magnus suites
  Corruption corruption = Corruption::none;
  unsigned seed = 20240811;
};

namespace detail {

inline std::string describe(const Elt& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  if (x.space() == Space::forms) {
    const auto& p = x.poly();
    if (p.is_single_piece()) {
      os << "poly[";
      bool first = true;
      for (const auto& c : p.pieces()[0].coeffs()) {
        if (!first) os << ",";
        os << to_string(c);
        first = false;
      }
      os << "]";
    } else {
      os << "piecewise(" << p.pieces().size() << " pieces)";
    }
    os << (x.form_degree() == 1 ? " dt" : "");
  } else {
    if (x.form_degree() == 0)
      os << "cochain(v0=" << to_string(x.v0()) << ",v1=" << to_string(x.v1()) << ")";
    else
      os << to_string(x.edge()) << " dt";
  }
  return os.str();
}

inline std::string describe(std::span<const Elt> word) {
  std::string s;
  for (const auto& x : word) {
    if (!s.empty()) s += " (x) ";
    s += describe(x);
  }
  return s;
}

inline void record(SuiteReport& rep, const std::string& relation, int arity, const std::string& instance,
                   const std::string& residual) {
  if (rep.failures.size() < 200)  // keep reports bounded
    rep.failures.push_back({relation, arity, instance, residual});
}

inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : std::min(n, 8u);
}

// Exhaustive residual sweep over basis words. Large sweeps are sharded by the
// first slot across workers; everything evaluated is pure, and shard reports
// are merged in shard order so output stays deterministic.
template <class Fn>
void sweep(SuiteReport& rep, const std::string& relation, std::span<const Elt> basis, int arity,
           Fn&& residual_fn) {
  const unsigned workers = worker_count();
  if (arity < 3 || workers <= 1 || basis.size() < workers) {
    for_each_word(basis, arity, [&](const EltWord& w) {
      ++rep.checks;
      Elt r = residual_fn(w);
      if (!r.is_zero()) record(rep, relation, arity, describe(w), describe(r));
    });
    return;
  }
  std::vector<SuiteReport> parts(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      SuiteReport& part = parts[t];
      EltWord word(static_cast<size_t>(arity));
      for (size_t first = t; first < basis.size(); first += workers) {
        word[0] = basis[first];
        for_each_word(basis, arity - 1, [&](const EltWord& rest) {
          for (int i = 1; i < arity; ++i) word[static_cast<size_t>(i)] = rest[static_cast<size_t>(i - 1)];
          ++part.checks;
          Elt r = residual_fn(static_cast<const EltWord&>(word));
          if (!r.is_zero()) record(part, relation, arity, describe(word), describe(r));
        });
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& part : parts) {
    rep.checks += part.checks;
    for (auto& f : part.failures) record(rep, f.relation, f.arity, f.instance, f.residual);
  }
}

inline std::string describe_word(const Word& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ".";
    s += l.id;
    if (l.degree != 0) s += "(" + std::to_string(l.degree) + ")";
  }
  return s;
}

inline bool same_letter_multiset(const Word& a, const Word& b) {
  Word x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace detail

// C_{n,d} table against its frozen values and recurrences, the partition-sum
// lemma, and the projector identities on tensor words
inline SuiteReport suite_idempotents(const VerifyOptions& opts) {
  SuiteReport rep{"idempotents"};
  // frozen triangle, rows 1..6
  static const char* kTriangle[6][6] = {
      {"1"},
      {"1/2", "-1/2"},
      {"1/3", "-1/6", "1/3"},
      {"1/4", "-1/12", "1/12", "-1/4"},
      {"1/5", "-1/20", "1/30", "-1/20", "1/5"},
      {"1/6", "-1/30", "1/60", "-1/60", "1/30", "-1/6"},
  };
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d < n; ++d) {
      ++rep.checks;
      Rational expected = rational_from_string(kTriangle[n - 1][d]);
      if (eulerian_coefficient(n, d) != expected)
        detail::record(rep, "eulerian-table", n, "C(" + std::to_string(n) + "," + std::to_string(d) + ")",
                       to_string(eulerian_coefficient(n, d)));
    }
  // recurrences for n <= 8
  for (int n = 2; n <= 8; ++n)
    for (int d = 0; d < n; ++d) {
      ++rep.checks;
      if (d <= n - 2 &&
          eulerian_coefficient(n, d) != eulerian_coefficient(n - 1, d) + eulerian_coefficient(n, d + 1))
        detail::record(rep, "pascal-recurrence", n, "C(" + std::to_string(n) + "," + std::to_string(d) + ")", "");
      Rational mirror = eulerian_coefficient(n, n - 1 - d);
      if (n % 2 == 0) mirror = -mirror;
      if (eulerian_coefficient(n, d) != mirror)
        detail::record(rep, "mirror-symmetry", n, "C(" + std::to_string(n) + "," + std::to_string(d) + ")", "");
    }
  // ordered-partition sum equals the closed form, n <= 6
  for (int n = 1; n <= 6; ++n)
    Permutation::for_each(n, [&](const Permutation& s) {
      ++rep.checks;
      if (lemma_partition_sum(s) != eulerian_coefficient(n, s.descent_number()))
        detail::record(rep, "partition-sum", n, "sigma descents=" + std::to_string(s.descent_number()), "");
    });

  // projector identities over all words of length <= 5 in 5 degree-0 letters
  const std::vector<GradedLetter> letters{{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}};
  std::vector<Word> words;
  {
    std::vector<Word> frontier{{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<Word> next;
      for (const auto& w : frontier)
        for (const auto& l : letters) {
          Word nw = w;
          nw.push_back(l);
          next.push_back(std::move(nw));
        }
      frontier = next;
      words.insert(words.end(), next.begin(), next.end());
    }
  }
  std::map<Word, TensorElement> e_memo, estar_memo;
  auto memo_get = [](std::map<Word, TensorElement>& memo, const Word& w, auto&& fn) -> const TensorElement& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, fn(TensorElement::from_word(w))).first;
    return it->second;
  };
  for (const auto& w : words) {
    const TensorElement& ew = memo_get(e_memo, w, [](const TensorElement& x) { return eulerian_projector(x); });
    const TensorElement& esw = memo_get(estar_memo, w, [](const TensorElement& x) { return eulerian_adjoint(x); });
    // supports stay inside the anagram class, which settles the pairing
    // against non-anagram words
    ++rep.checks;
    for (const auto& [tw, c] : ew.terms())
      if (!detail::same_letter_multiset(tw, w))
        detail::record(rep, "eulerian-support", static_cast<int>(w.size()), detail::describe_word(w), "");
    // E^2 = E via the memoized expansion
    TensorElement e2;
    for (const auto& [tw, c] : ew.terms())
      e2 += memo_get(e_memo, tw, [](const TensorElement& x) { return eulerian_projector(x); }) * c;
    ++rep.checks;
    if (!(e2 == ew)) detail::record(rep, "E.E=E", static_cast<int>(w.size()), detail::describe_word(w), "");
    TensorElement es2;
    for (const auto& [tw, c] : esw.terms())
      es2 += memo_get(estar_memo, tw, [](const TensorElement& x) { return eulerian_adjoint(x); }) * c;
    ++rep.checks;
    if (!(es2 == esw)) detail::record(rep, "E*.E*=E*", static_cast<int>(w.size()), detail::describe_word(w), "");
    ++rep.checks;
    if (!(dynkin(ew) == ew))
      detail::record(rep, "dynkin.E=E", static_cast<int>(w.size()), detail::describe_word(w), "");
    // adjointness against every word in the anagram class
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Word> anagrams;
    do {
      anagrams.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    for (const auto& b : anagrams) {
      ++rep.checks;
      const TensorElement& esb = memo_get(estar_memo, b, [](const TensorElement& x) { return eulerian_adjoint(x); });
      if (ew.coefficient(b) != esb.coefficient(w))
        detail::record(rep, "adjointness", static_cast<int>(w.size()),
                       detail::describe_word(w) + " | " + detail::describe_word(b), "");
    }
  }
  // E* annihilates shuffles, total length <= 5
  for (const auto& a : words)
    for (const auto& b : words) {
      if (a.size() + b.size() > 5) continue;
      ++rep.checks;
      if (!eulerian_adjoint(shuffle_words(a, b)).is_zero())
        detail::record(rep, "E*.shuffle=0", static_cast<int>(a.size() + b.size()),
                       detail::describe_word(a) + " | " + detail::describe_word(b), "");
    }
  // graded sanity: idempotency, shuffle commutativity/associativity on random
  // graded words
  std::mt19937 rng(opts.seed);
  const std::vector<GradedLetter> graded{{"a", 0}, {"b", 1}, {"c", -1}, {"d", 2}, {"e", 3}};
  auto random_word = [&](int max_len) {
    std::uniform_int_distribution<int> len_d(1, max_len), let_d(0, 4);
    Word w(static_cast<size_t>(len_d(rng)));
    for (auto& l : w) l = graded[static_cast<size_t>(let_d(rng))];
    return w;
  };
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_word(4);
    TensorElement x = TensorElement::from_word(w);
    TensorElement ex = eulerian_projector(x), esx = eulerian_adjoint(x);
    rep.checks += 3;
    if (!(eulerian_projector(ex) == ex)) detail::record(rep, "E.E=E(graded)", static_cast<int>(w.size()), detail::describe_word(w), "");
    if (!(eulerian_adjoint(esx) == esx)) detail::record(rep, "E*.E*=E*(graded)", static_cast<int>(w.size()), detail::describe_word(w), "");
    if (!(dynkin(ex) == ex)) detail::record(rep, "dynkin.E=E(graded)", static_cast<int>(w.size()), detail::describe_word(w), "");
    Word wa = random_word(3), wb = random_word(3), wc = random_word(2);
    TensorElement a = TensorElement::from_word(wa), b = TensorElement::from_word(wb), c = TensorElement::from_word(wc);
    rep.checks += 2;
    int sign = (word_degree(wa) & 1) && (word_degree(wb) & 1) ? -1 : 1;
    if (!(shuffle(a, b) == shuffle(b, a) * Rational(sign)))
      detail::record(rep, "shuffle-commutative", 0, detail::describe_word(wa) + " | " + detail::describe_word(wb), "");
    if (!(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))))
      detail::record(rep, "shuffle-associative", 0, detail::describe_word(wa) + " | " + detail::describe_word(wb) + " | " + detail::describe_word(wc), "");
    ++rep.checks;
    if (!eulerian_adjoint(shuffle(a, b)).is_zero())
      detail::record(rep, "E*.shuffle=0(graded)", 0, detail::describe_word(wa) + " | " + detail::describe_word(wb), "");
    ++rep.checks;
    if (pairing(ex, b) != pairing(x, eulerian_adjoint(b)))
      detail::record(rep, "adjointness(graded)", 0, detail::describe_word(w) + " | " + detail::describe_word(wb), "");
  }
  return rep;
}

// Dupont contraction identities on forms of degree <= D
inline SuiteReport suite_contraction(const VerifyOptions& opts) {
  SuiteReport rep{"contraction"};
  std::vector<PolyForm> basis;
  for (int k = 0; k <= opts.poly_degree; ++k) {
    basis.push_back(PolyForm::zero_form(Poly::monomial(k)));
    basis.push_back(PolyForm::one_form(Poly::monomial(k)));
  }
  // pi o iota = id on the cochain side
  std::vector<WhitneyCochain> cbasis{WhitneyCochain::unit(), WhitneyCochain::vertex_t(),
                                     WhitneyCochain::edge(Rational(1))};
  for (const auto& c : cbasis) {
    ++rep.checks;
    if (!(dupont_pi(dupont_iota(c)) == c)) detail::record(rep, "pi.iota=id", 1, "cochain basis", "");
  }
  for (const auto& w : basis) {
    ++rep.checks;
    PolyForm lhs = de_rham_d(dupont_h(w)) + dupont_h(de_rham_d(w));
    PolyForm rhs = dupont_iota(dupont_pi(w)) - w;
    if (!(lhs == rhs)) detail::record(rep, "dh+hd=iota.pi-id", 1, detail::describe(Elt::from(w, w.f1.is_zero() ? 0 : 1)), "");
    ++rep.checks;
    if (!dupont_h(dupont_h(w)).is_zero()) detail::record(rep, "h.h=0", 1, "", "");
    ++rep.checks;
    if (!dupont_pi(dupont_h(w)).is_zero() && !dupont_h(w).f0.is_zero()) {
      WhitneyCochain ph = dupont_pi(dupont_h(w));
      if (!(ph == WhitneyCochain()))
        detail::record(rep, "pi.h=0", 1, "", to_string(ph.v0) + "," + to_string(ph.v1));
    }
  }
  for (const auto& c : cbasis) {
    ++rep.checks;
    if (!dupont_h(dupont_iota(c)).is_zero()) detail::record(rep, "h.iota=0", 1, "", "");
  }
  // d squares to zero and is a graded derivation, on random homogeneous pairs
  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<int> deg_d(0, opts.poly_degree / 2), coef_d(-4, 4), fdeg_d(0, 1);
  auto random_homogeneous = [&] {
    Poly p = Poly::monomial(deg_d(rng), Rational(coef_d(rng))) + Poly(Rational(coef_d(rng)));
    int fdeg = fdeg_d(rng);
    return std::make_pair(fdeg, fdeg == 0 ? PolyForm::zero_form(p) : PolyForm::one_form(p));
  };
  for (int trial = 0; trial < 60; ++trial) {
    auto [da, a] = random_homogeneous();
    auto [db, b] = random_homogeneous();
    ++rep.checks;
    if (!de_rham_d(de_rham_d(a)).is_zero()) detail::record(rep, "d.d=0", 1, "", "");
    ++rep.checks;
    PolyForm lhs = de_rham_d(wedge(a, b));
    PolyForm rhs = wedge(de_rham_d(a), b) + wedge(a, de_rham_d(b)) * Rational(da == 0 ? 1 : -1);
    if (!(lhs == rhs)) detail::record(rep, "leibniz", 2, "", "");
  }
  return rep;
}

// transferred structure equals the Bernoulli closed form; the assembled
// coderivation squares to zero; the coefficients kill shuffles
inline SuiteReport suite_structures(const VerifyOptions& opts) {
  SuiteReport rep{"structures"};
  MorphismCatalog cat({opts.order, opts.poly_degree, opts.corruption});
  const int top = std::min(opts.order, 6);
  auto transfer = homotopy_transfer(cat.derham(), dupont_contraction(), top);
  auto cb = cochain_basis();
  for (int n = 1; n <= top; ++n) {
    detail::sweep(rep, "transfer=cinfty", cb, n, [&](const EltWord& w) {
      return transfer.structure.apply(n, w) - cat.cinfty().apply(n, w);
    });
    detail::sweep(rep, "transfer-embedding=mu", cb, n, [&](const EltWord& w) {
      return transfer.embedding.apply(n, w) - cat.mu().apply(n, w);
    });
    detail::sweep(rep, "cinfty-square", cb, n, [&](const EltWord& w) {
      return coderivation_square_residual(cat.cinfty(), n, w);
    });
  }
  // shuffle vanishing of the structure coefficients, total length <= 5
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p + q <= 5; ++q) {
      const int n = p + q;
      const std::vector<int> blocks{p, q};
      for_each_word(cb, p, [&](const EltWord& wa) {
        for_each_word(cb, q, [&](const EltWord& wb) {
          EltWord joined = wa;
          joined.insert(joined.end(), wb.begin(), wb.end());
          Elt acc = Elt::zero(Space::cochains);
          Permutation::for_each(n, [&](const Permutation& sigma) {
            if (!sigma.is_unshuffle(blocks)) return;
            auto [w, sign] = permute_word(joined, sigma.inverse());
            acc += cat.cinfty().apply(n, w) * Rational(sign);
          });
          ++rep.checks;
          if (!acc.is_zero())
            detail::record(rep, "cinfty-shuffle-vanishing", n, detail::describe(joined), detail::describe(acc));
        });
      });
    }
  return rep;
}

namespace detail {

struct NamedMorphism {
  std::string name;
  const TruncatedMorphism* morphism;
  const TruncatedCoderivation* source;
  const TruncatedCoderivation* target;
};

}  // namespace detail

// residuals of every cataloged arrow on the full basis
inline SuiteReport suite_morphism_relations(const VerifyOptions& opts) {
  SuiteReport rep{"morphism-relations"};
  MorphismCatalog cat({opts.order, opts.poly_degree, opts.corruption});
  const int top = std::min(opts.order, 5);
  auto fb = form_basis(opts.relation_degree);
  auto cb = cochain_basis();
  TruncatedMorphism phi_half = cat.phi_s(Rational(1, 2));
  TruncatedMorphism phi_third = cat.phi_s(Rational(1, 3));
  TruncatedMorphism phi_one = cat.phi_s(Rational(1));
  std::vector<detail::NamedMorphism> form_side{
      {"lambda", &cat.lambda(), &cat.derham(), &cat.cup_algebra()},
      {"phi", &cat.phi(), &cat.derham(), &cat.cinfty()},
      {"phi_s(1/2)", &phi_half, &cat.derham(), &cat.cinfty()},
  };
  std::vector<detail::NamedMorphism> form_side_small{
      {"phi_s(1/3)", &phi_third, &cat.derham(), &cat.cinfty()},
      {"phi_s(1)", &phi_one, &cat.derham(), &cat.cinfty()},
  };
  std::vector<detail::NamedMorphism> cochain_side{
      {"mu", &cat.mu(), &cat.cinfty(), &cat.derham()},
      {"exp", &cat.exp(), &cat.cinfty(), &cat.cup_algebra()},
      {"log", &cat.log(), &cat.cup_algebra(), &cat.cinfty()},
      {"gamma", &cat.gamma(), &cat.cup_algebra(), &cat.derham()},
  };
  for (const auto& m : form_side)
    for (int n = 1; n <= top; ++n)
      detail::sweep(rep, m.name + "-relation", fb, n, [&](const EltWord& w) {
        return morphism_relation_residual(*m.morphism, *m.source, *m.target, n, w);
      });
  for (const auto& m : form_side_small)
    for (int n = 1; n <= std::min(top, 3); ++n)
      detail::sweep(rep, m.name + "-relation", fb, n, [&](const EltWord& w) {
        return morphism_relation_residual(*m.morphism, *m.source, *m.target, n, w);
      });
  for (const auto& m : cochain_side)
    for (int n = 1; n <= top; ++n)
      detail::sweep(rep, m.name + "-relation", cb, n, [&](const EltWord& w) {
        return morphism_relation_residual(*m.morphism, *m.source, *m.target, n, w);
      });
  return rep;
}

// exp o log = log o exp = id, lambda o gamma = id, phi o mu = id,
// lambda o mu = exp, log o lambda = phi
inline SuiteReport suite_diagram_identities(const VerifyOptions& opts) {
  SuiteReport rep{"diagram-identities"};
  MorphismCatalog cat({opts.order, opts.poly_degree, opts.corruption});
  const int top = std::min(opts.order, 5);
  auto cb = cochain_basis();
  auto fb = form_basis(opts.relation_degree);
  auto id = identity_morphism(Space::cochains, opts.order);
  struct Pair {
    std::string name;
    TruncatedMorphism composite;
    const TruncatedMorphism* expected;
  };
  auto explog = compose(cat.exp(), cat.log());
  auto logexp = compose(cat.log(), cat.exp());
  auto lambdagamma = compose(cat.lambda(), cat.gamma());
  auto phimu = compose(cat.phi(), cat.mu());
  auto lambdamu = compose(cat.lambda(), cat.mu());
  std::vector<Pair> on_cochains;
  on_cochains.push_back({"exp.log=id", explog, &id});
  on_cochains.push_back({"log.exp=id", logexp, &id});
  on_cochains.push_back({"lambda.gamma=id", lambdagamma, &id});
  on_cochains.push_back({"phi.mu=id", phimu, &id});
  on_cochains.push_back({"lambda.mu=exp", lambdamu, &cat.exp()});
  for (const auto& p : on_cochains)
    for (int n = 1; n <= top; ++n)
      detail::sweep(rep, p.name, cb, n, [&](const EltWord& w) {
        return p.composite.apply(n, w) - p.expected->apply(n, w);
      });
  auto loglambda = compose(cat.log(), cat.lambda());
  for (int n = 1; n <= top; ++n)
    detail::sweep(rep, "log.lambda=phi", fb, n, [&](const EltWord& w) {
      return loglambda.apply(n, w) - cat.phi().apply(n, w);
    });
  return rep;
}

// the three constructions of phi agree, phi kills shuffles, and the scaled
// family matches its recursive presentation
inline SuiteReport suite_phi_routes(const VerifyOptions& opts) {
  SuiteReport rep{"phi-routes"};
  MorphismCatalog cat({opts.order, opts.poly_degree, opts.corruption});
  const int top = std::min(opts.order, 5);
  auto phi_a = cat.phi(PhiRoute::compose_log_lambda);
  auto phi_b = cat.phi(PhiRoute::eulerian_integral);
  auto phi_c = cat.phi(PhiRoute::estar_pullback);
  auto fb1 = form_basis(opts.relation_degree, false, true);  // one-form monomials
  for (int n = 1; n <= top; ++n) {
    detail::sweep(rep, "phi:eulerian=compose", fb1, n,
                  [&](const EltWord& w) { return phi_b.apply(n, w) - phi_a.apply(n, w); });
    detail::sweep(rep, "phi:estar=compose", fb1, n,
                  [&](const EltWord& w) { return phi_c.apply(n, w) - phi_a.apply(n, w); });
  }
  // all routes vanish identically on words with a 0-form factor
  auto fb_mixed = form_basis(3);
  for (int n = 2; n <= std::min(top, 3); ++n)
    detail::sweep(rep, "phi:vanishing-agreement", fb_mixed, n, [&](const EltWord& w) {
      bool has_function = false;
      for (const auto& x : w) has_function |= x.form_degree() == 0;
      if (!has_function) return Elt::zero(Space::cochains);
      Elt a = phi_a.apply(n, w), b = phi_b.apply(n, w), c = phi_c.apply(n, w);
      return a + b + c;  // each must be zero
    });
  // scaled family: affine route equals the ordered recursion, and s=1 is phi
  for (const Rational& s : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
    auto scaled = cat.phi_s(s, PhiSRoute::scaled);
    auto recursive = cat.phi_s(s, PhiSRoute::recursion);
    auto fb_small = form_basis(std::min(opts.relation_degree, 6));
    for (int n = 1; n <= std::min(top, 4); ++n)
      detail::sweep(rep, "phi_s(" + to_string(s) + "):recursion=scaled", fb_small, n,
                    [&](const EltWord& w) { return recursive.apply(n, w) - scaled.apply(n, w); });
    auto fb_tiny = form_basis(2, false, true);
    if (top >= 5)
      detail::sweep(rep, "phi_s(" + to_string(s) + "):recursion=scaled", fb_tiny, 5,
                    [&](const EltWord& w) { return recursive.apply(5, w) - scaled.apply(5, w); });
  }
  {
    auto at_one = cat.phi_s(Rational(1), PhiSRoute::recursion);
    for (int n = 1; n <= std::min(top, 4); ++n)
      detail::sweep(rep, "phi_s(1)=phi", fb1, n,
                    [&](const EltWord& w) { return at_one.apply(n, w) - cat.phi().apply(n, w); });
  }
  // phi vanishes on shuffles (the homotopy-commutativity of the morphism)
  auto fb_sh = form_basis(4, false, true);
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p + q <= 5; ++q) {
      const int n = p + q;
      const std::vector<int> blocks{p, q};
      for_each_word(fb_sh, p, [&](const EltWord& wa) {
        for_each_word(fb_sh, q, [&](const EltWord& wb) {
          EltWord joined = wa;
          joined.insert(joined.end(), wb.begin(), wb.end());
          Elt acc = Elt::zero(Space::cochains);
          Permutation::for_each(n, [&](const Permutation& sigma) {
            if (!sigma.is_unshuffle(blocks)) return;
            auto [w, sign] = permute_word(joined, sigma.inverse());
            acc += cat.phi().apply(n, w) * Rational(sign);
          });
          ++rep.checks;
          if (!acc.is_zero())
            detail::record(rep, "phi-shuffle-vanishing", n, detail::describe(joined), detail::describe(acc));
        });
      });
    }
  // pure-edge corestriction of lambda is a shuffle-to-product morphism
  {
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> deg_d(0, 4), len_d(1, 3);
    auto rand_word = [&](int len) {
      EltWord w;
      for (int i = 0; i < len; ++i) w.push_back(Elt::form1(Poly::monomial(deg_d(rng))));
      return w;
    };
    for (int trial = 0; trial < 40; ++trial) {
      EltWord wa = rand_word(len_d(rng)), wb = rand_word(len_d(rng));
      int p = static_cast<int>(wa.size()), q = static_cast<int>(wb.size());
      if (p + q > opts.order) continue;
      EltWord joined = wa;
      joined.insert(joined.end(), wb.begin(), wb.end());
      Elt shuffled = Elt::zero(Space::cochains);
      const std::vector<int> blocks{p, q};
      Permutation::for_each(p + q, [&](const Permutation& sigma) {
        if (!sigma.is_unshuffle(blocks)) return;
        auto [w, sign] = permute_word(joined, sigma.inverse());
        shuffled += cat.lambda().apply(p + q, w) * Rational(sign);
      });
      Rational product = cat.lambda().apply(p, wa).edge() * cat.lambda().apply(q, wb).edge();
      ++rep.checks;
      if (shuffled.edge() != product)
        detail::record(rep, "lambda-shuffle-product", p + q, detail::describe(joined), "");
    }
  }
  return rep;
}

// phi equals the morphism produced by the perturbation recursion
inline SuiteReport suite_transfer_equality(const VerifyOptions& opts) {
  SuiteReport rep{"transfer-equality"};
  MorphismCatalog cat({opts.order, opts.poly_degree, opts.corruption});
  const int top = std::min(opts.order, 5);
  auto proj = transfer_projection(cat.derham(), dupont_contraction(), opts.order);
  // degree caps per arity keep the recursive evaluation affordable
  const int caps[6] = {0, 8, 8, 8, 6, 3};
  for (int n = 1; n <= top; ++n) {
    auto fb = form_basis(std::min(opts.relation_degree, caps[n]));
    detail::sweep(rep, "transfer-morphism=phi", fb, n,
                  [&](const EltWord& w) { return proj.apply(n, w) - cat.phi().apply(n, w); });
  }
  return rep;
}

// arity-by-arity reconstruction from the vanishing property returns the
// cataloged coefficients
inline SuiteReport suite_uniqueness(const VerifyOptions& opts) {
  SuiteReport rep{"uniqueness"};
  MorphismCatalog cat({opts.order, opts.poly_degree, opts.corruption});
  auto preimage = [](const Elt& y) {
    // q1(s x) = s(a dt) requires x = -int_0^t a
    return Elt::form0(y.poly().integrate_from_zero() * Rational(-1));
  };
  auto fb = form_basis(opts.relation_degree);
  for (int n = 2; n <= std::min(opts.order, 4); ++n)
    detail::sweep(rep, "phi-reconstruction", fb, n, [&](const EltWord& w) {
      Elt rec = reconstruct_vanishing_coefficient(cat.phi(), cat.derham(), cat.cinfty(), n, preimage, w);
      return rec - cat.phi().apply(n, w);
    });
  // same mechanism pins lambda and exp
  for (int n = 2; n <= std::min(opts.order, 4); ++n)
    detail::sweep(rep, "lambda-reconstruction", fb, n, [&](const EltWord& w) {
      Elt rec = reconstruct_vanishing_coefficient(cat.lambda(), cat.derham(), cat.cup_algebra(), n, preimage, w);
      return rec - cat.lambda().apply(n, w);
    });
  return rep;
}

namespace detail {

inline std::vector<CoefficientPath> path_battery(unsigned seed, int polynomial_count, int piecewise_count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef_d(-3, 3), deg_d(0, 3);
  std::vector<CoefficientPath> out;
  for (int i = 0; i < polynomial_count; ++i) {
    std::vector<PiecewisePoly> comps;
    for (int g = 0; g < 2; ++g) {
      Poly p;
      int deg = deg_d(rng);
      for (int k = 0; k <= deg; ++k) p += Poly::monomial(k, Rational(coef_d(rng)));
      comps.push_back(PiecewisePoly(std::move(p)));
    }
    out.push_back(CoefficientPath(std::move(comps)));
  }
  std::uniform_int_distribution<int> cut_d(1, 3);
  for (int i = 0; i < piecewise_count; ++i) {
    // 2 or 3 pieces with affine entries and rational breakpoints
    std::vector<Rational> breaks{Rational(0)};
    int cuts = 1 + (i % 2);
    if (cuts == 1)
      breaks.push_back(Rational(cut_d(rng), 4));
    else {
      breaks.push_back(Rational(1, 3));
      breaks.push_back(Rational(3, 4));
    }
    breaks.push_back(Rational(1));
    std::vector<PiecewisePoly> comps;
    for (int g = 0; g < 2; ++g) {
      std::vector<Poly> pieces;
      for (size_t j = 0; j + 1 < breaks.size(); ++j)
        pieces.push_back(Poly(std::vector<Rational>{Rational(coef_d(rng)), Rational(coef_d(rng))}));
      comps.push_back(PiecewisePoly(breaks, std::move(pieces)));
    }
    out.push_back(CoefficientPath(std::move(comps)));
  }
  return out;
}

inline std::string gen_word_debug(const GenWord& w, const std::vector<std::string>& names) {
  std::string s;
  for (int g : w) s += names[static_cast<size_t>(g)];
  return s;
}

}  // namespace detail

// the three Magnus constructions agree, exponentiate to the time-ordered
// exponential, and solve the Hausdorff identity
inline SuiteReport suite_magnus(const VerifyOptions& opts) {
  SuiteReport rep{"magnus"};
  auto battery = detail::path_battery(opts.seed, 10, 5);
  const int cap = opts.lie_degree;
  int index = 0;
  for (const auto& a : battery) {
    std::string label = "path#" + std::to_string(index++);
    FreeLieElement m1 = magnus_recursion(a, Rational(1), cap);
    FreeLieElement m2 = magnus_mielnik_plebanski(a, Rational(1), cap);
    FreeLieElement m3 = magnus_via_log_lambda(a, Rational(1), cap);
    FreeLieElement m4 = magnus_picard_log(a, Rational(1), cap);
    ++rep.checks;
    if (!(m1 == m2)) detail::record(rep, "recursion=mielnik-plebanski", cap, label, "");
    ++rep.checks;
    if (!(m1 == m3)) detail::record(rep, "recursion=loglambda", cap, label, "");
    ++rep.checks;
    if (!(m1 == m4)) detail::record(rep, "recursion=picard-log", cap, label, "");
    ++rep.checks;
    if (!(formal_exp(m1.to_associative()) == picard_texp(a, Rational(1), cap)))
      detail::record(rep, "exp(magnus)=texp", cap, label, "");
    ++rep.checks;
    if (!hausdorff_residual(a, cap).is_zero()) detail::record(rep, "hausdorff-residual", cap, label, "");
    ++rep.checks;
    {
      auto rev = a.time_reversed_negated();
      auto prod = picard_texp(a, Rational(1), cap) * picard_texp(rev, Rational(1), cap);
      if (!(prod == FreeSeries<Rational>::unit(cap))) detail::record(rep, "texp-reversal-inverse", cap, label, "");
    }
    ++rep.checks;
    {
      auto assoc = m3.to_associative();
      if (!(eulerian_projection(assoc) == assoc)) detail::record(rep, "eulerian-fixed-point", cap, label, "");
    }
    // mid-interval agreement between the two integral routes
    ++rep.checks;
    if (!(magnus_recursion(a, Rational(1, 2), cap) == magnus_mielnik_plebanski(a, Rational(1, 2), cap)))
      detail::record(rep, "recursion=mielnik-plebanski(s=1/2)", cap, label, "");
  }
  return rep;
}

// bch against the independent series oracle log(e^x e^y)
inline SuiteReport suite_bch(const VerifyOptions& opts) {
  SuiteReport rep{"bch"};
  const int cap = opts.lie_degree;
  FreeSeries<Rational> x = FreeSeries<Rational>::generator(0, cap);
  FreeSeries<Rational> y = FreeSeries<Rational>::generator(1, cap);
  FreeSeries<Rational> oracle_series = formal_log(formal_exp(x) * formal_exp(y));
  FreeLieElement oracle = FreeLieElement::from_associative(oracle_series);
  FreeLieElement computed = bch(Rational(1), Rational(1), cap);
  for (const auto& [w, c] : oracle.terms()) {
    ++rep.checks;
    if (computed.coefficient(w) != c)
      detail::record(rep, "bch=log-product-oracle", static_cast<int>(w.size()),
                     detail::gen_word_debug(w, {"x", "y"}),
                     to_string(computed.coefficient(w)) + " vs " + to_string(c));
  }
  ++rep.checks;
  if (!(computed == oracle)) detail::record(rep, "bch=log-product-oracle", cap, "support mismatch", "");
  // weighted variants
  ++rep.checks;
  if (!(bch(Rational(1), Rational(0), cap) == FreeLieElement::from_associative(formal_log(formal_exp(x)))))
    detail::record(rep, "bch(1,0)=x", cap, "", "");
  FreeSeries<Rational> oracle2 = formal_log(formal_exp(x * Rational(1, 2)) * formal_exp(y * Rational(-2)));
  ++rep.checks;
  if (!(bch(Rational(1, 2), Rational(-2), cap) == FreeLieElement::from_associative(oracle2)))
    detail::record(rep, "bch(1/2,-2)=oracle", cap, "", "");
  return rep;
}

// d/ds T(a,s) = T(a,s) a(s) as an identity of piecewise-coefficient series
inline SuiteReport suite_ode(const VerifyOptions& opts) {
  SuiteReport rep{"ode"};
  auto battery = detail::path_battery(opts.seed, 10, 5);
  int index = 0;
  for (const auto& a : battery) {
    std::string label = "path#" + std::to_string(index++);
    ++rep.checks;
    if (!picard_ode_residual(a, opts.lie_degree).is_zero())
      detail::record(rep, "texp-ode-residual", opts.lie_degree, label, "");
  }
  return rep;
}

inline std::vector<std::string> verify_suite_names() {
  return {"idempotents",       "contraction", "structures", "morphism-relations",
          "diagram-identities", "phi-routes",  "transfer-equality", "uniqueness",
          "magnus",            "bch",         "ode"};
}

inline SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "idempotents") return suite_idempotents(opts);
  if (name == "contraction") return suite_contraction(opts);
  if (name == "structures") return suite_structures(opts);
  if (name == "morphism-relations") return suite_morphism_relations(opts);
  if (name == "diagram-identities") return suite_diagram_identities(opts);
  if (name == "phi-routes") return suite_phi_routes(opts);
  if (name == "transfer-equality") return suite_transfer_equality(opts);
  if (name == "uniqueness") return suite_uniqueness(opts);
  if (name == "magnus") return suite_magnus(opts);
  if (name == "bch") return suite_bch(opts);
  if (name == "ode") return suite_ode(opts);
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace intform

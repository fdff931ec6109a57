// Homogeneous elements of the two suspended complexes the framework works
// over: polynomial forms and Whitney cochains. Degrees are stored after
// suspension, so a 0-form component has (odd) degree -1 and a 1-form
// component has (even) degree 0.
#pragma once

#include <cassert>
#include <memory>
#include <span>
#include <vector>

#include "intform/forms.hpp"

namespace intform {

enum class Space { forms, cochains };

class Elt {
 public:
  Elt() = default;

  static Elt form0(PiecewisePoly f) { return Elt(Space::forms, 0, std::move(f)); }
  static Elt form1(PiecewisePoly a) { return Elt(Space::forms, 1, std::move(a)); }
  static Elt cochain0(Rational v0, Rational v1) {
    Elt e;
    e.space_ = Space::cochains;
    e.fdeg_ = 0;
    e.v0_ = std::move(v0);
    e.v1_ = std::move(v1);
    return e;
  }
  static Elt cochain1(Rational edge) {
    Elt e;
    e.space_ = Space::cochains;
    e.fdeg_ = 1;
    e.e_ = std::move(edge);
    return e;
  }
  static Elt zero(Space sp, int fdeg = 0) {
    Elt e;
    e.space_ = sp;
    e.fdeg_ = fdeg;
    return e;
  }
  static Elt unit(Space sp) {
    return sp == Space::forms ? form0(PiecewisePoly::one()) : cochain0(Rational(1), Rational(1));
  }

  static Elt from(const PolyForm& w, int fdeg) {
    return fdeg == 0 ? form0(w.f0) : form1(w.f1);
  }
  static Elt from(const WhitneyCochain& c, int fdeg) {
    return fdeg == 0 ? cochain0(c.v0, c.v1) : cochain1(c.e);
  }

  Space space() const { return space_; }
  int form_degree() const { return fdeg_; }
  int suspended_degree() const { return fdeg_ - 1; }
  bool odd() const { return fdeg_ == 0; }  // parity after suspension

  bool is_zero() const {
    if (space_ == Space::forms) return !poly_ || poly_->is_zero();
    return v0_ == 0 && v1_ == 0 && e_ == 0;
  }
  bool is_unit() const {
    if (fdeg_ != 0) return false;
    if (space_ == Space::forms) return poly_ && *poly_ == PiecewisePoly::one();
    return v0_ == 1 && v1_ == 1;
  }

  // forms payload
  const PiecewisePoly& poly() const {
    assert(space_ == Space::forms);
    static const PiecewisePoly zero_poly;
    return poly_ ? *poly_ : zero_poly;
  }
  // cochain payload
  const Rational& v0() const { return v0_; }
  const Rational& v1() const { return v1_; }
  const Rational& edge() const { return e_; }

  PolyForm to_form() const {
    assert(space_ == Space::forms);
    return fdeg_ == 0 ? PolyForm::zero_form(poly()) : PolyForm::one_form(poly());
  }
  WhitneyCochain to_cochain() const {
    assert(space_ == Space::cochains);
    return fdeg_ == 0 ? WhitneyCochain(v0_, v1_, Rational(0)) : WhitneyCochain::edge(e_);
  }

  Elt& operator+=(const Elt& o) {
    assert(space_ == o.space_);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    assert(fdeg_ == o.fdeg_);  // sums stay homogeneous
    if (space_ == Space::forms) {
      poly_ = std::make_shared<const PiecewisePoly>(*poly_ + *o.poly_);
    } else {
      v0_ += o.v0_;
      v1_ += o.v1_;
      e_ += o.e_;
    }
    return *this;
  }
  Elt& operator*=(const Rational& s) {
    if (space_ == Space::forms) {
      if (poly_) poly_ = std::make_shared<const PiecewisePoly>(*poly_ * s);
    } else {
      v0_ *= s;
      v1_ *= s;
      e_ *= s;
    }
    return *this;
  }
  friend Elt operator+(Elt a, const Elt& b) { return a += b; }
  friend Elt operator-(const Elt& a, const Elt& b) { return a + b * Rational(-1); }
  friend Elt operator*(Elt a, const Rational& s) { return a *= s; }
  friend Elt operator*(const Rational& s, Elt a) { return a *= s; }

  bool operator==(const Elt& o) const {
    if (space_ != o.space_) return false;
    if (is_zero() && o.is_zero()) return true;
    if (fdeg_ != o.fdeg_) return false;
    if (space_ == Space::forms) return poly_ == o.poly_ || poly() == o.poly();
    return v0_ == o.v0_ && v1_ == o.v1_ && e_ == o.e_;
  }

 private:
  Elt(Space sp, int fdeg, PiecewisePoly p)
      : space_(sp), fdeg_(fdeg), poly_(std::make_shared<const PiecewisePoly>(std::move(p))) {
    assert(fdeg_ == 0 || fdeg_ == 1);
  }

  Space space_ = Space::forms;
  int fdeg_ = 0;
  std::shared_ptr<const PiecewisePoly> poly_;  // forms payload; null means zero
  Rational v0_{0}, v1_{0}, e_{0};              // cochain payload
};

using EltWord = std::vector<Elt>;

// monomial basis s(t^k), s(t^k dt) for k <= max_degree
inline std::vector<Elt> form_basis(int max_degree, bool zero_forms = true, bool one_forms = true) {
  std::vector<Elt> out;
  if (zero_forms)
    for (int k = 0; k <= max_degree; ++k) out.push_back(Elt::form0(Poly::monomial(k)));
  if (one_forms)
    for (int k = 0; k <= max_degree; ++k) out.push_back(Elt::form1(Poly::monomial(k)));
  return out;
}

// s1, st, sdt
inline std::vector<Elt> cochain_basis(bool zero_forms = true, bool one_forms = true) {
  std::vector<Elt> out;
  if (zero_forms) {
    out.push_back(Elt::cochain0(Rational(1), Rational(1)));
    out.push_back(Elt::cochain0(Rational(0), Rational(1)));
  }
  if (one_forms) out.push_back(Elt::cochain1(Rational(1)));
  return out;
}

template <class Fn>
void for_each_word(std::span<const Elt> basis, int arity, Fn&& fn) {
  std::vector<size_t> idx(static_cast<size_t>(arity), 0);
  EltWord word(static_cast<size_t>(arity));
  for (;;) {
    for (size_t i = 0; i < idx.size(); ++i) word[i] = basis[idx[i]];
    fn(static_cast<const EltWord&>(word));
    size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < basis.size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace intform

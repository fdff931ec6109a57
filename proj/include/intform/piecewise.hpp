// Piecewise polynomials on [0,1] with rational breakpoints.
//
// Evaluation at an interior breakpoint uses the piece to its right; t=1 uses
// the last piece. Integration is breakpoint-insensitive, so the convention
// only shows up in displayed values.
#pragma once

#include <cassert>
#include <vector>

#include "intform/poly.hpp"

namespace intform {

class PiecewisePoly {
 public:
  PiecewisePoly() : breaks_{Rational(0), Rational(1)}, pieces_{Poly()} {}
  /*implicit*/ PiecewisePoly(Poly p) : breaks_{Rational(0), Rational(1)}, pieces_{std::move(p)} {}
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces)
      : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    assert(breaks_.size() >= 2);
    assert(pieces_.size() + 1 == breaks_.size());
    assert(breaks_.front() == 0 && breaks_.back() == 1);
    for (size_t i = 0; i + 1 < breaks_.size(); ++i) assert(breaks_[i] < breaks_[i + 1]);
    normalize();
  }

  static PiecewisePoly constant(Rational c) { return PiecewisePoly(Poly(std::move(c))); }
  static PiecewisePoly one() { return constant(Rational(1)); }

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }

  bool is_zero() const {
    for (const auto& p : pieces_)
      if (!p.is_zero()) return false;
    return true;
  }
  bool is_single_piece() const { return pieces_.size() == 1; }
  const Poly* as_single_poly() const { return pieces_.size() == 1 ? &pieces_[0] : nullptr; }

  // (exponent, coefficient) when this is c*t^k on a single piece
  std::optional<std::pair<int, Rational>> as_monomial() const {
    if (pieces_.size() != 1) return std::nullopt;
    const Poly& p = pieces_[0];
    if (p.is_zero()) return std::make_pair(0, Rational(0));
    int d = *p.degree();
    for (int k = 0; k < d; ++k)
      if (p.coeff(k) != 0) return std::nullopt;
    return std::make_pair(d, p.coeff(d));
  }

  Rational operator()(const Rational& t) const { return pieces_[piece_index(t)](t); }

  PiecewisePoly derivative() const {
    std::vector<Poly> d;
    d.reserve(pieces_.size());
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return PiecewisePoly(breaks_, std::move(d));
  }

  // antiderivative vanishing at 0, continuous across breakpoints
  PiecewisePoly integrate_from_zero() const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    Rational left_value = 0;
    for (size_t i = 0; i < pieces_.size(); ++i) {
      Poly g = pieces_[i].antiderivative();
      Poly f = g + Poly(left_value - g(breaks_[i]));
      left_value = f(breaks_[i + 1]);
      out.push_back(std::move(f));
    }
    return PiecewisePoly(breaks_, std::move(out));
  }

  Rational integral() const { return integrate_from_zero()(Rational(1)); }

  // t -> f(s*t) for 0 <= s <= 1
  PiecewisePoly scale_time(const Rational& s) const {
    assert(s >= 0 && s <= 1);
    if (s == 0) return constant(pieces_[0](Rational(0)));
    if (s == 1) return *this;
    std::vector<Rational> nb{Rational(0)};
    std::vector<Poly> np;
    for (size_t i = 0; i < pieces_.size(); ++i) {
      if (breaks_[i] >= s) break;
      Rational right = breaks_[i + 1] / s;
      if (right > 1) right = 1;
      nb.push_back(right);
      np.push_back(pieces_[i].compose_affine(s, Rational(0)));
      if (right == 1) break;
    }
    return PiecewisePoly(std::move(nb), std::move(np));
  }

  // t -> f(1-t)
  PiecewisePoly reflect() const {
    std::vector<Rational> nb;
    std::vector<Poly> np;
    nb.reserve(breaks_.size());
    np.reserve(pieces_.size());
    for (auto it = breaks_.rbegin(); it != breaks_.rend(); ++it) nb.push_back(Rational(1) - *it);
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it)
      np.push_back(it->compose_affine(Rational(-1), Rational(1)));
    return PiecewisePoly(std::move(nb), std::move(np));
  }

  PiecewisePoly& operator+=(const PiecewisePoly& o) { return *this = zip(*this, o, [](const Poly& a, const Poly& b) { return a + b; }); }
  PiecewisePoly& operator-=(const PiecewisePoly& o) { return *this = zip(*this, o, [](const Poly& a, const Poly& b) { return a - b; }); }
  PiecewisePoly& operator*=(const Rational& s) {
    for (auto& p : pieces_) p *= s;
    normalize();
    return *this;
  }

  friend PiecewisePoly operator+(PiecewisePoly a, const PiecewisePoly& b) { return a += b; }
  friend PiecewisePoly operator-(PiecewisePoly a, const PiecewisePoly& b) { return a -= b; }
  friend PiecewisePoly operator-(const PiecewisePoly& a) { return a * Rational(-1); }
  friend PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b) {
    if (a.pieces_.size() == 1 && b.pieces_.size() == 1) return PiecewisePoly(a.pieces_[0] * b.pieces_[0]);
    return zip(a, b, [](const Poly& x, const Poly& y) { return x * y; });
  }
  friend PiecewisePoly operator*(PiecewisePoly a, const Rational& s) { return a *= s; }
  friend PiecewisePoly operator*(const Rational& s, PiecewisePoly a) { return a *= s; }

  bool operator==(const PiecewisePoly&) const = default;

 private:
  std::vector<Rational> breaks_;
  std::vector<Poly> pieces_;

  size_t piece_index(const Rational& t) const {
    assert(t >= 0 && t <= 1);
    size_t i = 0;
    while (i + 1 < pieces_.size() && t >= breaks_[i + 1]) ++i;
    return i;
  }

  void normalize() {
    for (size_t i = pieces_.size(); i-- > 1;) {
      if (pieces_[i] == pieces_[i - 1]) {
        pieces_.erase(pieces_.begin() + static_cast<long>(i));
        breaks_.erase(breaks_.begin() + static_cast<long>(i));
      }
    }
  }

  template <class F>
  static PiecewisePoly zip(const PiecewisePoly& a, const PiecewisePoly& b, F&& op) {
    std::vector<Rational> nb;
    nb.reserve(a.breaks_.size() + b.breaks_.size());
    std::merge(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(), b.breaks_.end(), std::back_inserter(nb));
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    std::vector<Poly> np;
    np.reserve(nb.size() - 1);
    for (size_t i = 0; i + 1 < nb.size(); ++i)
      np.push_back(op(a.pieces_[a.piece_index(nb[i])], b.pieces_[b.piece_index(nb[i])]));
    return PiecewisePoly(std::move(nb), std::move(np));
  }
};

}  // namespace intform

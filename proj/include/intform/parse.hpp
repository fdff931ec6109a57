// Text syntax for form, cochain, and coefficient-path literals.
//
//   poly     := sum of products of factors; factors are rational literals,
//               "t", parenthesized sums, piecewise blocks, and "^" powers
//   form     := poly terms, optionally multiplied by "dt" (e.g. "t^2 - 1/2 + (1-t) dt")
//   piecewise:= "{[0,1/2]: 1; [1/2,1]: 0}"
//   path     := form-like terms where each term names exactly one generator
//               (e.g. "x + t y", "{[0,1/2]: 2; [1/2,1]: 0} x")
#pragma once

#include <optional>
#include <stdexcept>

#include "intform/forms.hpp"
#include "intform/magnus.hpp"

namespace intform {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const std::vector<std::string>* generators)
      : text_(text), generators_(generators) {}

  struct Term {
    PiecewisePoly value;
    int dt_power = 0;
    int generator = -1;
  };

  std::vector<Term> parse_terms() {
    std::vector<Term> terms;
    skip_ws();
    bool negate = consume('-');
    for (;;) {
      Term t = parse_term();
      if (negate) t.value *= Rational(-1);
      terms.push_back(std::move(t));
      skip_ws();
      if (consume('+')) {
        negate = false;
      } else if (consume('-')) {
        negate = true;
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return terms;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  const std::vector<std::string>* generators_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // a product of factors; '*' is optional between factors
  Term parse_term() {
    Term t{PiecewisePoly::one(), 0, -1};
    bool first = true;
    for (;;) {
      skip_ws();
      char c = peek();
      bool starts_factor = std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
                           c == '(' || c == '{';
      if (!starts_factor) {
        if (first) fail("expected a factor");
        return t;
      }
      apply_factor(t, parse_factor());
      first = false;
      consume('*');
    }
  }

  struct Factor {
    PiecewisePoly value;
    int dt_power = 0;
    int generator = -1;
  };

  void apply_factor(Term& t, const Factor& f) {
    t.value = t.value * f.value;
    t.dt_power += f.dt_power;
    if (f.generator >= 0) {
      if (t.generator >= 0) fail("more than one generator in a term");
      t.generator = f.generator;
    }
  }

  Factor parse_factor() {
    Factor base = parse_atom();
    skip_ws();
    if (consume('^')) {
      int e = parse_nat();
      if (base.dt_power != 0 || base.generator >= 0) fail("exponent on dt or generator");
      PiecewisePoly p = PiecewisePoly::one();
      for (int i = 0; i < e; ++i) p = p * base.value;
      base.value = std::move(p);
    }
    return base;
  }

  int parse_nat() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_rational() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    long long num = std::stoll(std::string(text_.substr(start, pos_ - start)));
    if (consume('/')) {
      skip_ws();
      size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected a denominator");
      long long den = std::stoll(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Factor parse_atom() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return {PiecewisePoly(Poly(parse_rational())), 0, -1};
    if (c == '(') {
      expect('(');
      Factor f{parse_subexpression(')'), 0, -1};
      return f;
    }
    if (c == '{') return {parse_piecewise(), 0, -1};
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "dt") return {PiecewisePoly::one(), 1, -1};
      if (name == "t") return {PiecewisePoly(Poly::t()), 0, -1};
      if (generators_) {
        for (size_t g = 0; g < generators_->size(); ++g)
          if ((*generators_)[g] == name) return {PiecewisePoly::one(), 0, static_cast<int>(g)};
      }
      fail("unknown symbol '" + name + "'");
    }
    fail("expected a factor");
  }

  // scalar-valued subexpression, up to the closing delimiter
  PiecewisePoly parse_subexpression(char closing) {
    PiecewisePoly acc;
    bool negate = consume('-');
    for (;;) {
      Term t = parse_term();
      if (t.dt_power != 0 || t.generator >= 0) fail("dt or generator inside a coefficient");
      acc += negate ? t.value * Rational(-1) : t.value;
      if (consume('+')) {
        negate = false;
      } else if (consume('-')) {
        negate = true;
      } else {
        break;
      }
    }
    expect(closing);
    return acc;
  }

  PiecewisePoly parse_piecewise() {
    expect('{');
    std::vector<Rational> breaks;
    std::vector<Poly> pieces;
    for (;;) {
      expect('[');
      Rational lo = parse_rational();
      expect(',');
      Rational hi = parse_rational();
      expect(']');
      expect(':');
      PiecewisePoly piece = parse_subexpression_until(";}");
      const Poly* p = piece.as_single_poly();
      if (!p) fail("nested piecewise blocks are not supported");
      if (breaks.empty()) {
        if (lo != 0) fail("piecewise domain must start at 0");
        breaks.push_back(lo);
      } else if (lo != breaks.back()) {
        fail("piecewise intervals must be contiguous");
      }
      if (hi <= lo) fail("piecewise interval bounds out of order");
      breaks.push_back(hi);
      pieces.push_back(*p);
      if (consume(';')) continue;
      expect('}');
      break;
    }
    if (breaks.back() != 1) fail("piecewise domain must end at 1");
    return PiecewisePoly(std::move(breaks), std::move(pieces));
  }

  PiecewisePoly parse_subexpression_until(std::string_view stoppers) {
    PiecewisePoly acc;
    bool negate = consume('-');
    for (;;) {
      Term t = parse_term();
      if (t.dt_power != 0 || t.generator >= 0) fail("dt or generator inside a coefficient");
      acc += negate ? t.value * Rational(-1) : t.value;
      if (consume('+')) {
        negate = false;
      } else if (consume('-')) {
        negate = true;
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ >= text_.size() || stoppers.find(text_[pos_]) == std::string_view::npos)
      fail("expected one of \"" + std::string(stoppers) + "\"");
    return acc;
  }
};

}  // namespace detail

inline PolyForm parse_form(std::string_view text) {
  detail::LiteralParser p(text, nullptr);
  PolyForm out;
  for (const auto& t : p.parse_terms()) {
    if (t.dt_power > 1) throw ParseError("dt appears more than once in a term");
    if (t.dt_power == 1)
      out.f1 += t.value;
    else
      out.f0 += t.value;
  }
  return out;
}

inline WhitneyCochain parse_cochain(std::string_view text) {
  PolyForm w = parse_form(text);
  auto d0 = w.f0.is_zero() ? std::optional<int>(0) : w.f0.as_single_poly() ? w.f0.as_single_poly()->degree() : std::nullopt;
  if (!w.f0.is_zero() && (!d0 || *d0 > 1)) throw ParseError("cochain 0-part must be affine");
  auto m = w.f1.as_monomial();
  if (!m || (m->first != 0 && m->second != 0)) throw ParseError("cochain 1-part must be a constant multiple of dt");
  return WhitneyCochain(w.f0(Rational(0)), w.f0(Rational(1)), m->second);
}

inline CoefficientPath parse_path(std::string_view text, const std::vector<std::string>& generators) {
  detail::LiteralParser p(text, &generators);
  std::vector<PiecewisePoly> comps(generators.size());
  for (const auto& t : p.parse_terms()) {
    if (t.dt_power != 0) throw ParseError("paths are written without dt");
    if (t.generator < 0) throw ParseError("every path term must name a generator");
    comps[static_cast<size_t>(t.generator)] += t.value;
  }
  return CoefficientPath(std::move(comps));
}

}  // namespace intform

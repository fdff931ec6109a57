// JSON encoding of the value types. Rationals are "num/den" strings,
// polynomials are coefficient arrays lowest exponent first, and all maps are
// emitted in canonical key order so output is deterministic and round-trips
// bit-exactly.
#pragma once

#include <nlohmann/json.hpp>

#include "intform/forms.hpp"
#include "intform/lyndon.hpp"
#include "intform/magnus.hpp"

namespace intform {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }
inline Rational rational_from_json(const Json& j) { return rational_from_string(j.get<std::string>()); }

inline Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}
inline Poly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Poly(std::move(c));
}

inline Json to_json(const PiecewisePoly& p) {
  Json j;
  j["breakpoints"] = Json::array();
  for (const auto& b : p.breakpoints()) j["breakpoints"].push_back(to_string(b));
  j["pieces"] = Json::array();
  for (const auto& q : p.pieces()) j["pieces"].push_back(to_json(q));
  return j;
}
inline PiecewisePoly piecewise_from_json(const Json& j) {
  std::vector<Rational> breaks;
  for (const auto& b : j.at("breakpoints")) breaks.push_back(rational_from_json(b));
  std::vector<Poly> pieces;
  for (const auto& p : j.at("pieces")) pieces.push_back(poly_from_json(p));
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

inline Json to_json(const PolyForm& w) {
  Json j;
  j["f0"] = to_json(w.f0);
  j["f1"] = to_json(w.f1);
  return j;
}
inline PolyForm form_from_json(const Json& j) {
  return PolyForm(piecewise_from_json(j.at("f0")), piecewise_from_json(j.at("f1")));
}

inline Json to_json(const WhitneyCochain& c) {
  Json j;
  j["v0"] = to_string(c.v0);
  j["v1"] = to_string(c.v1);
  j["e"] = to_string(c.e);
  return j;
}
inline WhitneyCochain cochain_from_json(const Json& j) {
  return WhitneyCochain(rational_from_json(j.at("v0")), rational_from_json(j.at("v1")),
                        rational_from_json(j.at("e")));
}

inline std::string gen_word_string(const GenWord& w, const std::vector<std::string>& names) {
  std::string s;
  for (int g : w) {
    if (!s.empty()) s += ".";
    s += names[static_cast<size_t>(g)];
  }
  return s;
}

inline std::string lyndon_bracket_string(const GenWord& w, const std::vector<std::string>& names) {
  if (w.size() == 1) return names[static_cast<size_t>(w[0])];
  auto [u, v] = lyndon_standard_factorization(w);
  return "[" + lyndon_bracket_string(u, names) + "," + lyndon_bracket_string(v, names) + "]";
}

inline Json to_json(const FreeLieElement& x, const std::vector<std::string>& names) {
  Json terms = Json::array();
  std::vector<std::pair<GenWord, Rational>> sorted(x.terms().begin(), x.terms().end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  for (const auto& [w, c] : sorted) {
    Json t;
    t["word"] = gen_word_string(w, names);
    t["bracket"] = lyndon_bracket_string(w, names);
    t["coefficient"] = to_string(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["basis"] = "lyndon";
  j["terms"] = std::move(terms);
  return j;
}

inline Json to_json(const FreeSeries<Rational>& x, const std::vector<std::string>& names) {
  Json terms = Json::array();
  std::vector<std::pair<GenWord, Rational>> sorted(x.terms().begin(), x.terms().end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  for (const auto& [w, c] : sorted) {
    Json t;
    t["word"] = w.empty() ? "1" : gen_word_string(w, names);
    t["coefficient"] = to_string(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["basis"] = "words";
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace intform

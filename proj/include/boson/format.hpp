#pragma once

// Deterministic text, LaTeX and JSON renderings. The text form parses back
// to the same polynomial.

#include "boson/identities.hpp"
#include "boson/multipoly.hpp"
#include "boson/operators.hpp"

#include "json.hpp"

#include <string>

namespace boson {

enum class Style { Text, Latex, Json };

inline constexpr const char* kJsonSchema = "boson-order/1";

namespace detail {

inline std::string text_monomial(OrderedMonomial m) {
  std::string out;
  auto part = [&](const char* name, unsigned k) {
    if (k == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (k > 1) out += "^" + std::to_string(k);
  };
  part("ad", m.dag);
  part("a", m.ann);
  return out;
}

inline std::string text_wrapper_open(const OrderingParam& p) {
  if (p.is_normal()) return "N[";
  if (p.is_anti_normal()) return "A[";
  if (p.is_concrete() && p.value() == 0) return "W[";
  return "S[" + p.to_string() + "; ";
}

inline std::string latex_rational(const Rational& r) {
  if (is_integer(r)) return to_string(r);
  return std::string(r < 0 ? "-" : "") + "\\frac{" + numerator_of(abs(r)).str() + "}{" + denominator_of(r).str() + "}";
}

inline std::string latex_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (const auto& [s, k] : m.powers()) {
      if (!mono.empty()) mono += " ";
      mono += s;
      if (k > 1) mono += "^{" + std::to_string(k) + "}";
    }
    if (mono.empty()) {
      out += latex_rational(mag);
    } else {
      if (mag != 1) out += latex_rational(mag) + " ";
      out += mono;
    }
  }
  return out;
}

inline std::string latex_monomial(OrderedMonomial m, bool annihilators_first) {
  auto pw = [](const char* base, unsigned k, bool dagger) -> std::string {
    if (k == 0) return {};
    std::string sup = dagger ? "\\dagger" : "";
    if (k > 1) sup += (dagger ? " " : "") + std::to_string(k);
    return sup.empty() ? std::string(base) : std::string(base) + "^{" + sup + "}";
  };
  const std::string cre = pw("a", m.dag, true), ann = pw("a", m.ann, false);
  const std::string& first = annihilators_first ? ann : cre;
  const std::string& second = annihilators_first ? cre : ann;
  if (first.empty()) return second;
  if (second.empty()) return first;
  return first + " " + second;
}

inline std::string latex_wrap(const std::string& body, const OrderingParam& p) {
  if (p.is_normal()) return ":" + body + ":";
  if (p.is_anti_normal()) return "\\vdots " + body + " \\vdots";
  return "\\{" + body + "\\}_{" + (p.is_concrete() ? latex_rational(p.value()) : p.to_string()) + "}";
}

inline nlohmann::ordered_json json_ordering(const OrderingParam& p) {
  if (p.is_concrete() && is_integer(p.value())) return numerator_of(p.value()).convert_to<int>();
  return p.to_string();
}

inline std::string text_series(const FormalSeries& s) { return s.to_string("lambda"); }

inline std::string latex_series(const FormalSeries& s) {
  std::string out;
  for (unsigned n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    const std::string c = latex_poly(s[n]);
    std::string term;
    if (n == 0) {
      term = c;
    } else {
      const std::string pw = n == 1 ? "\\lambda" : "\\lambda^{" + std::to_string(n) + "}";
      if (c == "1" || c == "-1") {
        term = c == "1" ? pw : "-" + pw;
      } else {
        term = (s[n].is_constant() ? c : "\\left(" + c + "\\right)") + " " + pw;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term.starts_with("-")) {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(\\lambda^{" + std::to_string(s.order() + 1) + "})";
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const OrderedPolynomial& p) {
  nlohmann::ordered_json j;
  j["schema"] = kJsonSchema;
  j["ordering"] = detail::json_ordering(p.ordering());
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms())
    j["terms"].push_back({{"m", m.dag}, {"n", m.ann}, {"coeff", c.to_string()}});
  return j;
}

inline nlohmann::ordered_json to_json(const OperatorSeries& s) {
  nlohmann::ordered_json j;
  j["schema"] = kJsonSchema;
  j["ordering"] = detail::json_ordering(s.ordering());
  j["order"] = s.order();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, series] : s.terms()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : series.coefficients()) coeffs.push_back(c.to_string());
    j["terms"].push_back({{"m", m.dag}, {"n", m.ann}, {"series", coeffs}});
  }
  return j;
}

/// Text: "N[ad^2 a^2 + (2*s + (-1)) ad a]"-style; LaTeX: colon, vdots or brace
/// ordering symbols around each monomial; JSON: one-line "boson-order/1".
inline std::string format(const OrderedPolynomial& p, Style style = Style::Text) {
  if (style == Style::Json) return to_json(p).dump();
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (style == Style::Text) {
      if (!out.empty()) out += " + ";
      const std::string mono = detail::text_monomial(m);
      if (c == MultiPoly(1)) {
        out += mono.empty() ? "1" : mono;
      } else if (c.is_constant() && c.constant_term() > 0 && is_integer(c.constant_term())) {
        out += c.to_string() + (mono.empty() ? "" : " " + mono);
      } else {
        out += "(" + c.to_string() + ")" + (mono.empty() ? "" : " " + mono);
      }
    } else {
      std::string coeff = detail::latex_poly(c);
      const bool neg_unit = coeff == "-1";
      if (!c.is_constant()) coeff = "\\left(" + coeff + "\\right)";
      std::string term;
      if (m.degree() == 0) {
        term = detail::latex_poly(c);
      } else {
        const std::string body =
            detail::latex_wrap(detail::latex_monomial(m, p.ordering().is_anti_normal()), p.ordering());
        term = c == MultiPoly(1) ? body : (neg_unit ? "-" + body : coeff + " " + body);
      }
      if (out.empty()) {
        out = term;
      } else if (term.starts_with("-")) {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
  }
  if (style == Style::Text) return detail::text_wrapper_open(p.ordering()) + out + "]";
  return out;
}

inline std::string format(const OperatorSeries& s, Style style = Style::Text) {
  if (style == Style::Json) return to_json(s).dump();
  std::string out;
  for (const auto& [m, series] : s.terms()) {
    if (style == Style::Text) {
      if (!out.empty()) out += " + ";
      const std::string mono = detail::text_monomial(m);
      out += "(" + detail::text_series(series) + ")" + (mono.empty() ? "" : " " + mono);
    } else {
      if (!out.empty()) out += " + ";
      const std::string body = "\\left(" + detail::latex_series(series) + "\\right)";
      out += m.degree() == 0
                 ? body
                 : body + " " +
                       detail::latex_wrap(detail::latex_monomial(m, s.ordering().is_anti_normal()),
                                          s.ordering());
    }
  }
  if (out.empty()) out = "0";
  if (style == Style::Text) return detail::text_wrapper_open(s.ordering()) + out + "]";
  return out;
}

}  // namespace boson

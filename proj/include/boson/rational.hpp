#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boson {

// Expression templates are off so arithmetic results are plain values and
// convert implicitly into MultiPoly.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
  std::string s = numerator_of(r).str();
  if (!is_integer(r)) s += "/" + denominator_of(r).str();
  return s;
}

/// Accepts an optional sign, digits, and an optional "/digits" denominator.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](Integer& out) {
    std::size_t start = i;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    if (i == start) fail();
  };
  Integer num, den = 1;
  digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    digits(den);
    if (den == 0) fail();
  }
  if (i != text.size()) fail();
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// n (n-1) ... (n-k+1): injections of a k-set into an n-set.
inline Integer falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

inline Rational sign_power(unsigned k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace boson

#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Values are GMP objects; rationals are always kept in canonical reduced form.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace younggraph {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a", "-a" or "a/b". Whitespace around the value is ignored.
inline BigRat parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw std::invalid_argument("empty rational");
  std::string s(text.substr(first, last - first + 1));
  auto slash = s.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) k = 1;
    if (k == part.size()) throw std::invalid_argument("malformed rational '" + s + "'");
    for (; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9')
        throw std::invalid_argument("malformed rational '" + s + "'");
  };
  BigRat q;
  if (slash == std::string::npos) {
    check_digits(s, true);
    q = BigRat(BigInt(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator '" + s + "'");
    q = BigRat(BigInt(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
  }
  return q;
}

/// Comma-separated list of rationals; the empty string is the empty list.
inline std::vector<BigRat> parse_rational_list(std::string_view text) {
  std::vector<BigRat> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Always "num/den", including integers ("2/1"), so every serialized
/// rational has the same shape.
inline std::string to_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline double to_double(const BigRat& q) { return q.get_d(); }

inline BigRat abs(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

inline BigRat pow(const BigRat& base, unsigned exponent) {
  BigRat result(1);
  BigRat b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline int sign(const BigRat& q) { return sgn(q); }

}  // namespace younggraph

#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational helpers on top of GMP.
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hpflat {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p/q" or "p" into a canonical rational; throws on zero denominator
/// or malformed input.
inline Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// √q as an exact rational when the reduced numerator and denominator are
/// both perfect squares; nullopt otherwise (or when q < 0).
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer num = q.get_num(), den = q.get_den();  // canonical: den > 0, reduced
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hpflat

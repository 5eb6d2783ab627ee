#pragma once

#include <stdexcept>

#include "weylkit/rational.hpp"

namespace weylkit {

/// C(n, k) with the out-of-range convention C(n, k) = 0 for k < 0 or k > n.
/// Truncated sums rely on vanishing binomials to terminate.
inline Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative n");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace weylkit

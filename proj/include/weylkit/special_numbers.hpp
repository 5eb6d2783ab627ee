#pragma once

#include <vector>

#include "weylkit/rational.hpp"

namespace weylkit {

/// Euler polynomial E_l(x) with exact coefficients; coeffs[j] multiplies x^j.
struct EulerPolynomial {
  unsigned degree = 0;
  std::vector<Rational> coeffs;

  Rational eval(const Rational& x) const;
};

/// B_n in the B_1 = -1/2 convention, by the defining recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0 with B_0 = 1. Memoized, thread-safe.
Rational bernoulli(unsigned n);

/// B_n from the Hessenberg determinant route: n! times the exact
/// (n+1)x(n+1) determinant with subdiagonal entries 1/(i-j+1)! and a
/// unit vector as last column. Independent of the recurrence.
Rational bernoulli_determinant(unsigned n);

/// E_l(0) by the pair recurrence E_k(0) = -1/2 sum_{l<k} C(k,l) E_l(0),
/// E_0(0) = 1. Memoized, thread-safe.
Rational euler_zero(unsigned k);

/// E_l(0) by literal evaluation of the explicit double sum
/// 2^{-l} sum_{j=1}^{l} (-1)^{j+l+1} j^l sum_{p=0}^{l-j} C(l+1,p).
Rational euler_zero_explicit(unsigned l);

/// E_k(0) = -2 (2^{k+1} - 1) B_{k+1} / (k+1).
Rational euler_zero_bernoulli(unsigned k);

/// E_l(x) = sum_k C(l,k) E_k(0) x^{l-k}; monic of degree l.
EulerPolynomial euler_polynomial(unsigned l);

}  // namespace weylkit

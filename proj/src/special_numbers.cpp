#include "weylkit/special_numbers.hpp"

#include <mutex>

#include "weylkit/binomial.hpp"

namespace weylkit {

Rational EulerPolynomial::eval(const Rational& x) const {
  Rational out(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * x + *it;
  return out;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

std::mutex g_euler_zero_mutex;
std::vector<Rational> g_euler_zero{Rational(1)};

}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard lock(g_bernoulli_mutex);
  while (g_bernoulli.size() <= n) {
    unsigned m = static_cast<unsigned>(g_bernoulli.size());
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k)
      acc += Rational(binomial(m + 1, k)) * g_bernoulli[k];
    g_bernoulli.push_back(-acc / Rational(Int(m + 1)));
  }
  return g_bernoulli[n];
}

Rational bernoulli_determinant(unsigned n) {
  const unsigned dim = n + 1;
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim, Rational(0)));
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = 0; j < dim; ++j) {
      if (j + 1 == dim)
        a[i][j] = (i == 0) ? Rational(1) : Rational(0);
      else if (i >= j)
        a[i][j] = Rational(Int(1), factorial(static_cast<long>(i - j + 1)));
    }
  }

  // exact Gaussian elimination with column pivoting
  Rational det(1);
  for (unsigned col = 0; col < dim; ++col) {
    unsigned pivot = col;
    while (pivot < dim && a[pivot][col].is_zero()) ++pivot;
    if (pivot == dim) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (unsigned row = col + 1; row < dim; ++row) {
      if (a[row][col].is_zero()) continue;
      Rational f = a[row][col] / a[col][col];
      for (unsigned j = col; j < dim; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return Rational(factorial(static_cast<long>(n))) * det;
}

Rational euler_zero(unsigned k) {
  std::lock_guard lock(g_euler_zero_mutex);
  while (g_euler_zero.size() <= k) {
    unsigned m = static_cast<unsigned>(g_euler_zero.size());
    Rational acc(0);
    for (unsigned l = 0; l < m; ++l)
      acc += Rational(binomial(m, l)) * g_euler_zero[l];
    g_euler_zero.push_back(-acc / Rational(2));
  }
  return g_euler_zero[k];
}

Rational euler_zero_explicit(unsigned l) {
  if (l == 0) return Rational(1);
  Rational acc(0);
  for (unsigned j = 1; j <= l; ++j) {
    Int inner(0);
    for (unsigned p = 0; p + j <= l; ++p) inner += binomial(l + 1, p);
    Int jl = int_pow(Int(static_cast<long>(j)), l);
    Int term = jl * inner;
    if ((j + l + 1) % 2 != 0) term = -term;
    acc += Rational(term);
  }
  return acc / Rational(int_pow(Int(2), l));
}

Rational euler_zero_bernoulli(unsigned k) {
  Rational b = bernoulli(k + 1);
  Rational factor(Int(2) * (int_pow(Int(2), k + 1) - 1), Int(static_cast<long>(k) + 1));
  return -factor * b;
}

EulerPolynomial euler_polynomial(unsigned l) {
  EulerPolynomial p;
  p.degree = l;
  p.coeffs.assign(l + 1, Rational(0));
  for (unsigned k = 0; k <= l; ++k)
    p.coeffs[l - k] = Rational(binomial(l, k)) * euler_zero(k);
  return p;
}

}  // namespace weylkit

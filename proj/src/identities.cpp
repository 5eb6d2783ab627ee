#include "weylkit/identities.hpp"

#include <stdexcept>

#include "weylkit/binomial.hpp"
#include "weylkit/ordering.hpp"

namespace weylkit {

IdentityReport make_report(std::string name, std::vector<long> params, NormalForm lhs,
                           NormalForm rhs) {
  IdentityReport r;
  r.identity_name = std::move(name);
  r.params = std::move(params);
  r.discrepancy = lhs - rhs;
  r.equal = r.discrepancy.is_zero();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

bool VSystem::rows_satisfied() const {
  for (int k = 1; k <= size; ++k) {
    Rational acc(0);
    for (int l = 1; l <= k; ++l) acc += matrix[k - 1][l - 1] * solution[l - 1];
    if (acc != rhs[k - 1]) return false;
  }
  return true;
}

VSystem v_system_solve(int size) {
  if (size < 1) throw std::invalid_argument("v_system_solve: size must be >= 1");
  VSystem sys;
  sys.size = size;
  sys.rhs.assign(size, Rational(1));
  sys.matrix.resize(size);
  for (int k = 1; k <= size; ++k) {
    auto& row = sys.matrix[k - 1];
    row.resize(k);
    for (int l = 1; l < k; ++l) row[l - 1] = Rational(binomial(k, l));
    row[k - 1] = Rational(2);  // 1 + C(k,k)
  }
  // forward substitution
  sys.solution.resize(size);
  for (int k = 1; k <= size; ++k) {
    Rational acc(1);
    for (int l = 1; l < k; ++l) acc -= sys.matrix[k - 1][l - 1] * sys.solution[l - 1];
    sys.solution[k - 1] = acc / sys.matrix[k - 1][k - 1];
  }
  return sys;
}

namespace {

void check_positive(int n, int m, const char* who) {
  if (n < 1 || m < 1) throw std::invalid_argument(std::string(who) + ": n, m must be >= 1");
}

PolyCoeff c_power(int k) { return PolyCoeff::symbol(Symbol::c, static_cast<unsigned>(k)); }

}  // namespace

NormalForm commutator_xy_form(int n, int m) {
  check_positive(n, m, "commutator_xy_form");
  NormalForm out;
  for (int k = 1; k <= std::min(n, m); ++k) {
    Rational w(factorial(k) * binomial(n, k) * binomial(m, k));
    PolyCoeff coeff = PolyCoeff(w) * c_power(k);
    if (k % 2 == 0) coeff = -coeff;  // -(-c)^k
    out += coeff * (x_power(n - k) * y_power(m - k));
  }
  return out;
}

NormalForm commutator_yx_form(int n, int m) {
  check_positive(n, m, "commutator_yx_form");
  NormalForm out;
  for (int k = 1; k <= std::min(n, m); ++k) {
    Rational w(factorial(k) * binomial(n, k) * binomial(m, k));
    out += (PolyCoeff(w) * c_power(k)) * NormalForm::monomial(m - k, n - k);
  }
  return out;
}

NormalForm poly_commutator(const std::vector<PolyCoeff>& f_coeffs,
                           const std::vector<PolyCoeff>& g_coeffs) {
  NormalForm out;
  for (std::size_t i = 1; i < f_coeffs.size(); ++i) {
    if (f_coeffs[i].is_zero()) continue;
    for (std::size_t j = 1; j < g_coeffs.size(); ++j) {
      if (g_coeffs[j].is_zero()) continue;
      out += (f_coeffs[i] * g_coeffs[j]) *
             commutator_yx_form(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

NormalForm commutator_anti_euler(int n, int m) {
  check_positive(n, m, "commutator_anti_euler");
  NormalForm out;
  for (int k = 1; k <= std::min(n, m); ++k) {
    Rational ek0 = euler_zero(k);
    if (ek0.is_zero()) continue;
    Rational w = Rational(factorial(k) * binomial(n, k) * binomial(m, k)) * ek0;
    NormalForm brace = anticommutator(x_power(n - k), y_power(m - k));
    out -= (PolyCoeff(w) * c_power(k)) * brace;
  }
  return out;
}

NormalForm commutator_anti_bernoulli(int n, int m) {
  check_positive(n, m, "commutator_anti_bernoulli");
  NormalForm out;
  for (int k = 1; k <= std::min(n, m); ++k) {
    Rational bk1 = bernoulli(k + 1);
    if (bk1.is_zero()) continue;
    Rational w = Rational(Int(2) * factorial(k) * binomial(n, k) * binomial(m, k)) *
                 Rational(int_pow(Int(2), k + 1) - 1, Int(k + 1)) * bk1;
    NormalForm brace = anticommutator(x_power(n - k), y_power(m - k));
    out += (PolyCoeff(w) * c_power(k)) * brace;
  }
  return out;
}

namespace {

const PolyCoeff& c_as_i() {
  static const PolyCoeff v = PolyCoeff::imaginary_unit();
  return v;
}

NormalForm weyl_T_i(int m, int n) { return weyl_T(m, n).substitute_c(c_as_i()); }

}  // namespace

NormalForm bd_product(int m, int n, int r, int s) {
  if (m < 0 || n < 0 || r < 0 || s < 0)
    throw std::invalid_argument("bd_product: negative index");
  NormalForm out;
  int jmax = std::min(m, s) + std::min(n, r);
  for (int j = 0; j <= jmax; ++j) {
    GaussianRational pref = GaussianRational::i().pow(static_cast<unsigned>(j)) *
                            GaussianRational(Rational(Int(1), int_pow(Int(2), j) * factorial(j)));
    NormalForm inner;
    for (int k = 0; k <= j; ++k) {
      Int w = factorial(k) * factorial(k) * factorial(j - k) * factorial(j - k) *
              binomial(j, k) * binomial(m, j - k) * binomial(n, k) * binomial(r, k) *
              binomial(s, j - k);
      if (w == 0) continue;
      if ((j - k) % 2 != 0) w = -w;
      inner += PolyCoeff(Rational(w)) * weyl_T_i(m + r - j, n + s - j);
    }
    out += PolyCoeff(pref) * inner;
  }
  return out;
}

NormalForm bd_product_part(int m, int n, int r, int s, bool odd) {
  if (m < 0 || n < 0 || r < 0 || s < 0)
    throw std::invalid_argument("bd_product_part: negative index");
  NormalForm out;
  int jmax = std::min(m, s) + std::min(n, r);
  for (int j = odd ? 1 : 0; j <= jmax; j += 2) {
    GaussianRational pref = GaussianRational::i().pow(static_cast<unsigned>(j)) *
                            GaussianRational(Rational(Int(2), int_pow(Int(2), j) * factorial(j)));
    NormalForm inner;
    for (int k = 0; k <= j; ++k) {
      Int w = factorial(k) * factorial(k) * factorial(j - k) * factorial(j - k) *
              binomial(j, k) * binomial(m, j - k) * binomial(n, k) * binomial(r, k) *
              binomial(s, j - k);
      if (w == 0) continue;
      if ((j - k) % 2 != 0) w = -w;
      inner += PolyCoeff(Rational(w)) * weyl_T_i(m + r - j, n + s - j);
    }
    out += PolyCoeff(pref) * inner;
  }
  return out;
}

namespace {

// shared body of the two printed parity sums: index pairing
// C(m,k) C(n,jj-k) C(r,jj-k) C(s,k) with sign (-1)^k
NormalForm bd_parity_printed(int m, int n, int r, int s, bool odd) {
  NormalForm out;
  int jmax = std::min(m, s) + std::min(n, r);
  for (int jj = odd ? 1 : 0; jj <= jmax; jj += 2) {
    GaussianRational pref = GaussianRational::i().pow(static_cast<unsigned>(jj)) *
                            GaussianRational(Rational(Int(2), int_pow(Int(2), jj) * factorial(jj)));
    NormalForm inner;
    for (int k = 0; k <= jj; ++k) {
      Int w = factorial(k) * factorial(k) * factorial(jj - k) * factorial(jj - k) *
              binomial(jj, k) * binomial(m, k) * binomial(n, jj - k) * binomial(r, jj - k) *
              binomial(s, k);
      if (w == 0) continue;
      if (k % 2 != 0) w = -w;
      inner += PolyCoeff(Rational(w)) * weyl_T_i(m + r - jj, n + s - jj);
    }
    out += PolyCoeff(pref) * inner;
  }
  return out;
}

}  // namespace

NormalForm bd_commutator(int m, int n, int r, int s) {
  if (m < 0 || n < 0 || r < 0 || s < 0)
    throw std::invalid_argument("bd_commutator: negative index");
  return bd_parity_printed(m, n, r, s, /*odd=*/true);
}

NormalForm bd_anticommutator(int m, int n, int r, int s) {
  if (m < 0 || n < 0 || r < 0 || s < 0)
    throw std::invalid_argument("bd_anticommutator: negative index");
  return bd_parity_printed(m, n, r, s, /*odd=*/false);
}

IdentityReport bd_shift(int m, int k, ShiftSide side) {
  if (m < 0 || k < 0) throw std::invalid_argument("bd_shift: negative index");
  Rational coeff(factorial(2 * m + k) * factorial(m),
                 Int(2) * factorial(2 * m) * factorial(m + k));
  NormalForm tmm = weyl_T_i(m, m);
  NormalForm lhs, brace;
  if (side == ShiftSide::x) {
    lhs = weyl_T_i(m, m + k);
    brace = anticommutator(tmm, x_power(k));
  } else {
    lhs = weyl_T_i(m + k, m);
    brace = anticommutator(tmm, y_power(k));
  }
  NormalForm rhs = (PolyCoeff(coeff) * brace).substitute_c(c_as_i());
  return make_report(side == ShiftSide::x ? "bd-shift-x" : "bd-shift-y", {m, k},
                     std::move(lhs), std::move(rhs));
}

IdentityReport bd_shift_one_step(int m, int n, ShiftSide side) {
  if (m < 0 || n < 0) throw std::invalid_argument("bd_shift_one_step: negative index");
  NormalForm lhs, rhs;
  if (side == ShiftSide::x) {
    lhs = anticommutator(NormalForm::generator_x(), weyl_T(m, n));
    rhs = PolyCoeff(2) * weyl_T(m, n + 1);
  } else {
    lhs = anticommutator(NormalForm::generator_y(), weyl_T(m, n));
    rhs = PolyCoeff(2) * weyl_T(m + 1, n);
  }
  return make_report(side == ShiftSide::x ? "bd-shift-one-step-x" : "bd-shift-one-step-y",
                     {m, n}, std::move(lhs), std::move(rhs));
}

NormalForm moment_bracket(int n, int k, int l) {
  if (n < 1 || k < 1 || l < 1)
    throw std::invalid_argument("moment_bracket: n, k, l must be >= 1");
  NormalForm out = commutator(x_power(n + l), y_power(k));
  out -= x_power(l) * commutator(x_power(n), y_power(k));
  out += x_power(n) * commutator(x_power(l), y_power(k));
  return out;
}

namespace {

// sum_j c^j j! C(a,j) C(b,j) ((2^{j+1}-1)/(j+1)) B_{j+1} {X^{a-j}, Y^{b-j}}
NormalForm bernoulli_anti_sum(int a, int b) {
  NormalForm out;
  for (int j = 1; j <= std::min(a, b); ++j) {
    Rational bj1 = bernoulli(j + 1);
    if (bj1.is_zero()) continue;
    Rational w = Rational(factorial(j) * binomial(a, j) * binomial(b, j)) *
                 Rational(int_pow(Int(2), j + 1) - 1, Int(j + 1)) * bj1;
    out += (PolyCoeff(w) * c_power(j)) * anticommutator(x_power(a - j), y_power(b - j));
  }
  return out;
}

}  // namespace

NormalForm moment_bracket_anti(int n, int k, int l) {
  if (n < 1 || k < 1 || l < 1)
    throw std::invalid_argument("moment_bracket_anti: n, k, l must be >= 1");
  NormalForm out = bernoulli_anti_sum(n + l, k);
  out -= x_power(l) * bernoulli_anti_sum(n, k);
  out += x_power(n) * bernoulli_anti_sum(l, k);
  return PolyCoeff(2) * out;
}

}  // namespace weylkit

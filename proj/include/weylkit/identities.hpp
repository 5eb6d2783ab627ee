#pragma once

#include <string>
#include <vector>

#include "weylkit/normal_form.hpp"
#include "weylkit/special_numbers.hpp"

namespace weylkit {

/// Outcome of one identity check: both sides in normal form plus their
/// difference; equal holds iff the discrepancy vanishes.
struct IdentityReport {
  std::string identity_name;
  std::vector<long> params;
  NormalForm lhs;
  NormalForm rhs;
  NormalForm discrepancy;
  bool equal = false;
};

IdentityReport make_report(std::string name, std::vector<long> params, NormalForm lhs,
                           NormalForm rhs);

/// The lower-triangular system v_k + sum_{l<=k} C(k,l) v_l = 1 in rows
/// k = 1..K; every diagonal entry is 2, which certifies uniqueness.
struct VSystem {
  int size = 0;
  std::vector<std::vector<Rational>> matrix;  // row k-1 holds columns 1..k
  std::vector<Rational> rhs;                  // all ones
  std::vector<Rational> solution;             // solution[k-1] = v_k

  /// Exact residual check of every row.
  bool rows_satisfied() const;
};

VSystem v_system_solve(int size);

/// -sum_k (-c)^k k! C(n,k) C(m,k) X^{n-k} Y^{m-k}, re-ordered by the engine.
NormalForm commutator_xy_form(int n, int m);

/// sum_k c^k k! C(n,k) C(m,k) Y^{m-k} X^{n-k}.
NormalForm commutator_yx_form(int n, int m);

/// [f(X), g(Y)] for polynomial f, g given by coefficient lists (f_coeffs[i]
/// multiplies X^i); expanded by bilinearity over commutator_yx_form.
NormalForm poly_commutator(const std::vector<PolyCoeff>& f_coeffs,
                           const std::vector<PolyCoeff>& g_coeffs);

/// -sum_k c^k k! C(n,k) C(m,k) E_k(0) {X^{n-k}, Y^{m-k}}.
NormalForm commutator_anti_euler(int n, int m);

/// 2 sum_k c^k k! C(n,k) C(m,k) ((2^{k+1}-1)/(k+1)) B_{k+1} {X^{n-k}, Y^{m-k}}.
NormalForm commutator_anti_bernoulli(int n, int m);

/// Bender-Dunne product expansion of T_{m,n} T_{r,s} with c = i.
NormalForm bd_product(int m, int n, int r, int s);

/// The odd-j (resp. even-j) part of the product expansion, times 2:
/// the structure-constant route to [T,T'] and {T,T'}.
NormalForm bd_product_part(int m, int n, int r, int s, bool odd);

/// Literal printed commutator / anti-commutator sums (diagnostic).
NormalForm bd_commutator(int m, int n, int r, int s);
NormalForm bd_anticommutator(int m, int n, int r, int s);

enum class ShiftSide { x, y };

/// Checks the printed shift relation
///   T_{m,m+k} = (2m+k)! m! / (2 (2m)! (m+k)!) {T_{m,m}, X^k}
/// (and the Y-side analogue) in the engine at c = i and reports the
/// comparison. The printed coefficient fails for min(m,k) >= 1; see the
/// bd-shift diagnostic suite.
IdentityReport bd_shift(int m, int k, ShiftSide side);

/// Engine-verified one-step shift {X, T_{m,n}} = 2 T_{m,n+1} (or the
/// Y-side {Y, T_{m,n}} = 2 T_{m+1,n}), symbolic c.
IdentityReport bd_shift_one_step(int m, int n, ShiftSide side);

/// [X^{n+l}, Y^k] - X^l [X^n, Y^k] + X^n [X^l, Y^k]; equals
/// [X^l, {X^n, Y^k}] (the i/hbar prefactor of the equation of motion is
/// stripped).
NormalForm moment_bracket(int n, int k, int l);

/// Twice the three Bernoulli-weighted anti-commutator sums
/// S(n+l,k) - X^l S(n,k) + X^n S(l,k); same normalization as
/// moment_bracket, so the two agree exactly.
NormalForm moment_bracket_anti(int n, int k, int l);

}  // namespace weylkit

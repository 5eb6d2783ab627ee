#pragma once

#include <map>
#include <vector>

#include "weylkit/normal_form.hpp"

namespace weylkit {

/// Bender-Dunne polynomial T_{m,n} = (1/2^n) sum_k C(n,k) X^k Y^m X^{n-k},
/// the Weyl-ordered form of y^m x^n. Symbolic c; results are cached.
NormalForm weyl_T(int m, int n);

/// Average over all distinct arrangements of m Y factors and n X factors,
/// normalized by C(m+n, m). Independent route to weyl_T; m + n <= 12.
NormalForm weyl_symmetrization_oracle(int m, int n);

/// Born-Jordan ordering (1/(m+1)) sum_{k=0}^{m} Y^{m-k} X^n Y^k
/// (Y momentum-like, X position-like).
NormalForm born_jordan(int m, int n);

/// One s-ordered monomial :Y^dag_exp X^ann_exp:_(order_param) in the boson
/// convention c = 1. order_param is a polynomial in {s, t} (or a number).
struct SOrderedMonomial {
  int dag_exp = 0;
  int ann_exp = 0;
  PolyCoeff order_param;

  /// Expansion onto normal order (the order parameter 1 anchor):
  /// sum_k k! C(n,k) C(m,k) ((1-p)/2)^k Y^{n-k} X^{m-k}.
  NormalForm to_normal_form() const;
};

/// :Y^n X^m:_(s) with the symbol s left symbolic.
NormalForm s_ordered_ground(int n, int m);

struct SConvertTerm {
  PolyCoeff coeff;
  int dag_exp = 0;
  int ann_exp = 0;
};

/// Intertwining expansion of a from-ordered monomial onto to-ordered
/// monomials: coefficient k! C(n,k) C(m,k) ((to-from)/2)^k on the
/// (n-k, m-k) monomial.
std::vector<SConvertTerm> s_convert(int n, int m, const PolyCoeff& from, const PolyCoeff& to);

/// Truncated bivariate series in the commuting formal variables
/// (alpha, alpha-bar) with operator coefficients; the expansion home of
/// the s-ordered displacement operator.
class BivarOperatorSeries {
 public:
  using Key = std::pair<int, int>;  // (alpha_exp, abar_exp)
  using TermMap = std::map<Key, NormalForm>;

  explicit BivarOperatorSeries(int cutoff);

  static BivarOperatorSeries scalar(int cutoff, NormalForm value);

  int cutoff() const { return cutoff_; }
  const TermMap& terms() const { return terms_; }
  NormalForm coefficient(int alpha_exp, int abar_exp) const;

  BivarOperatorSeries& operator+=(const BivarOperatorSeries& o);
  friend BivarOperatorSeries operator*(const BivarOperatorSeries& a, const BivarOperatorSeries& b);

  void add_term(int alpha_exp, int abar_exp, const NormalForm& value);

 private:
  int cutoff_;
  TermMap terms_;
};

/// Independent series oracle for the s-ordered products: expands
/// D(alpha, s) = e^{alpha Y} e^{-abar X} e^{(s-1) alpha abar / 2} with
/// c = 1 and returns n! m! times the coefficient of alpha^n (-abar)^m.
/// Guard: n + m <= 8.
NormalForm displacement_series_oracle(int n, int m, const PolyCoeff& s_value);

}  // namespace weylkit

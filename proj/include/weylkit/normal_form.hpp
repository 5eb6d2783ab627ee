#pragma once

#include <map>
#include <string>

#include "weylkit/poly.hpp"

namespace weylkit {

/// Exponent pair of a canonical basis monomial Y^y X^x.
struct OpKey {
  int y = 0;
  int x = 0;
  friend bool operator==(const OpKey& a, const OpKey& b) { return a.y == b.y && a.x == b.x; }
};

/// Storage (and render) order: descending (y, x).
struct OpKeyDescLess {
  bool operator()(const OpKey& a, const OpKey& b) const {
    if (a.y != b.y) return a.y > b.y;
    return a.x > b.x;
  }
};

/// Element of the Weyl algebra X Y - Y X = c in the canonical basis
/// Y^a X^b (all Y factors left). Zero coefficients are pruned eagerly,
/// so structural equality is mathematical equality.
class NormalForm {
 public:
  /// Degrees well beyond anything the identity sweeps need; exponent
  /// arithmetic is overflow-checked against this bound.
  static constexpr int kMaxExponent = 4096;

  using TermMap = std::map<OpKey, PolyCoeff, OpKeyDescLess>;

  NormalForm() = default;  // zero

  static NormalForm identity();
  static NormalForm monomial(int y_exp, int x_exp, PolyCoeff coeff = PolyCoeff(1));
  static NormalForm generator_x() { return monomial(0, 1); }
  static NormalForm generator_y() { return monomial(1, 0); }
  /// A scalar multiple of the identity operator.
  static NormalForm scalar(PolyCoeff coeff) { return monomial(0, 0, std::move(coeff)); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  PolyCoeff coefficient(int y_exp, int x_exp) const;
  int max_total_degree() const;

  NormalForm operator-() const;
  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
  NormalForm& operator*=(const NormalForm& o);
  friend NormalForm operator*(const PolyCoeff& scale, const NormalForm& a);
  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

  NormalForm pow(unsigned e) const;

  /// Coefficient-wise substitution c := value; value must be free of c.
  NormalForm substitute_c(const PolyCoeff& value) const;

  /// Coefficient-wise substitution of any ring symbol.
  NormalForm substitute_symbol(Symbol sym, const PolyCoeff& value) const;

  /// Image under the algebra automorphism X -> Y, Y -> X, c -> -c,
  /// re-normal-ordered.
  NormalForm swap_xy() const;

  bool is_canonical() const;

  std::string str() const;

 private:
  void add_term(const OpKey& key, const PolyCoeff& coeff);

  TermMap terms_;
};

NormalForm commutator(const NormalForm& a, const NormalForm& b);
NormalForm anticommutator(const NormalForm& a, const NormalForm& b);

/// X^n as a normal form (similarly y_power).
NormalForm x_power(int n);
NormalForm y_power(int n);

}  // namespace weylkit

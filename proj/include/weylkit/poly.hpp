#pragma once

#include <array>
#include <map>
#include <string>

#include "weylkit/rational.hpp"

namespace weylkit {

/// The three commuting symbols of the coefficient ring.
enum class Symbol : int { c = 0, s = 1, t = 2 };

const char* symbol_name(Symbol sym);

/// Exponent triple (e_c, e_s, e_t) of one coefficient monomial.
struct PolyExp {
  std::array<unsigned, 3> e{0, 0, 0};

  unsigned total() const { return e[0] + e[1] + e[2]; }
  unsigned operator[](Symbol sym) const { return e[static_cast<int>(sym)]; }
  friend bool operator==(const PolyExp& a, const PolyExp& b) { return a.e == b.e; }
};

/// Canonical term order: graded lexicographic on (e_c, e_s, e_t).
struct GradedLexLess {
  bool operator()(const PolyExp& a, const PolyExp& b) const {
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.e < b.e;
  }
};

/// Sparse polynomial in {c, s, t} over Q(i). Zero terms are never stored,
/// so structural equality coincides with mathematical equality.
class PolyCoeff {
 public:
  using TermMap = std::map<PolyExp, GaussianRational, GradedLexLess>;

  PolyCoeff() = default;  // zero
  PolyCoeff(long n);       // NOLINT
  PolyCoeff(Rational v);   // NOLINT
  PolyCoeff(GaussianRational v);  // NOLINT

  static PolyCoeff symbol(Symbol sym, unsigned exp = 1);
  static PolyCoeff imaginary_unit() { return PolyCoeff(GaussianRational::i()); }
  static PolyCoeff monomial(PolyExp exp, GaussianRational coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  /// Constant term; requires is_scalar().
  GaussianRational scalar_value() const;
  bool contains(Symbol sym) const;
  unsigned total_degree() const;

  const TermMap& terms() const { return terms_; }
  GaussianRational coefficient(const PolyExp& exp) const;

  PolyCoeff operator-() const;
  PolyCoeff& operator+=(const PolyCoeff& o);
  PolyCoeff& operator-=(const PolyCoeff& o);
  PolyCoeff& operator*=(const PolyCoeff& o);
  friend PolyCoeff operator+(PolyCoeff a, const PolyCoeff& b) { return a += b; }
  friend PolyCoeff operator-(PolyCoeff a, const PolyCoeff& b) { return a -= b; }
  friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b);
  friend bool operator==(const PolyCoeff& a, const PolyCoeff& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyCoeff& a, const PolyCoeff& b) { return !(a == b); }

  PolyCoeff pow(unsigned e) const;

  /// Exact substitution sym := value. Rejects self-referential values.
  PolyCoeff substitute(Symbol sym, const PolyCoeff& value) const;

  /// The ring map sym -> -sym (used for the X<->Y swap, where c -> -c).
  PolyCoeff negate_symbol(Symbol sym) const;

  bool is_canonical() const;

  std::string str() const;

 private:
  void add_term(const PolyExp& exp, const GaussianRational& v);

  TermMap terms_;
};

}  // namespace weylkit

#include "weylkit/normal_form.hpp"

#include <stdexcept>

#include "weylkit/binomial.hpp"

namespace weylkit {

namespace {

void check_exponent(long v) {
  if (v < 0) throw std::invalid_argument("NormalForm: negative exponent");
  if (v > NormalForm::kMaxExponent)
    throw std::overflow_error("NormalForm: exponent exceeds supported degree");
}

}  // namespace

NormalForm NormalForm::identity() { return monomial(0, 0); }

NormalForm NormalForm::monomial(int y_exp, int x_exp, PolyCoeff coeff) {
  check_exponent(y_exp);
  check_exponent(x_exp);
  NormalForm out;
  if (!coeff.is_zero()) out.terms_.emplace(OpKey{y_exp, x_exp}, std::move(coeff));
  return out;
}

PolyCoeff NormalForm::coefficient(int y_exp, int x_exp) const {
  auto it = terms_.find(OpKey{y_exp, x_exp});
  return it == terms_.end() ? PolyCoeff() : it->second;
}

int NormalForm::max_total_degree() const {
  int deg = 0;
  for (const auto& [key, coeff] : terms_) deg = std::max(deg, key.y + key.x);
  return deg;
}

void NormalForm::add_term(const OpKey& key, const PolyCoeff& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalForm NormalForm::operator-() const {
  NormalForm out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
  return *this;
}

// (Y^a1 X^b1)(Y^a2 X^b2) = sum_l c^l l! C(b1,l) C(a2,l) Y^{a1+a2-l} X^{b1+b2-l};
// the closed-form cross-term expansion of the rewrite X Y -> Y X + c.
NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [ka, pa] : a.terms_) {
    for (const auto& [kb, pb] : b.terms_) {
      check_exponent(static_cast<long>(ka.y) + kb.y);
      check_exponent(static_cast<long>(ka.x) + kb.x);
      PolyCoeff base = pa * pb;
      int lmax = std::min(ka.x, kb.y);
      for (int l = 0; l <= lmax; ++l) {
        Int weight = factorial(l) * binomial(ka.x, l) * binomial(kb.y, l);
        PolyCoeff coeff = base * PolyCoeff(Rational(weight));
        if (l > 0) coeff *= PolyCoeff::symbol(Symbol::c, static_cast<unsigned>(l));
        out.add_term(OpKey{ka.y + kb.y - l, ka.x + kb.x - l}, coeff);
      }
    }
  }
  return out;
}

NormalForm& NormalForm::operator*=(const NormalForm& o) {
  *this = *this * o;
  return *this;
}

NormalForm operator*(const PolyCoeff& scale, const NormalForm& a) {
  NormalForm out;
  for (const auto& [key, coeff] : a.terms_) out.add_term(key, scale * coeff);
  return out;
}

NormalForm NormalForm::pow(unsigned e) const {
  NormalForm out = identity();
  for (unsigned k = 0; k < e; ++k) out *= *this;
  return out;
}

NormalForm NormalForm::substitute_c(const PolyCoeff& value) const {
  return substitute_symbol(Symbol::c, value);
}

NormalForm NormalForm::substitute_symbol(Symbol sym, const PolyCoeff& value) const {
  if (value.contains(sym))
    throw std::invalid_argument(std::string("NormalForm: substitution value refers to '") +
                                symbol_name(sym) + "'");
  NormalForm out;
  for (const auto& [key, coeff] : terms_)
    out.add_term(key, coeff.substitute(sym, value));
  return out;
}

NormalForm NormalForm::swap_xy() const {
  NormalForm out;
  for (const auto& [key, coeff] : terms_) {
    // Y^a X^b maps to the word X^a Y^b, re-ordered in the same algebra.
    NormalForm image = monomial(0, key.y) * monomial(key.x, 0);
    out += coeff.negate_symbol(Symbol::c) * image;
  }
  return out;
}

bool NormalForm::is_canonical() const {
  for (const auto& [key, coeff] : terms_) {
    if (key.y < 0 || key.x < 0) return false;
    if (coeff.is_zero() || !coeff.is_canonical()) return false;
  }
  return true;
}

std::string NormalForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    std::string piece = coeff.str();
    if (piece.find(' ') != std::string::npos) piece = "(" + piece + ")";
    std::string ops;
    if (key.y > 0) ops += key.y == 1 ? "Y" : "Y^" + std::to_string(key.y);
    if (key.x > 0) {
      if (!ops.empty()) ops += "*";
      ops += key.x == 1 ? "X" : "X^" + std::to_string(key.x);
    }
    if (!ops.empty()) {
      if (piece == "1")
        piece = ops;
      else if (piece == "-1")
        piece = "-" + ops;
      else
        piece += "*" + ops;
    }
    if (out.empty())
      out = piece;
    else
      out += piece.front() == '-' ? " - " + piece.substr(1) : " + " + piece;
  }
  return out;
}

NormalForm commutator(const NormalForm& a, const NormalForm& b) { return a * b - b * a; }

NormalForm anticommutator(const NormalForm& a, const NormalForm& b) { return a * b + b * a; }

NormalForm x_power(int n) { return NormalForm::monomial(0, n); }

NormalForm y_power(int n) { return NormalForm::monomial(n, 0); }

}  // namespace weylkit

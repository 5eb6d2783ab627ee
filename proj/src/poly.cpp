#include "weylkit/poly.hpp"

#include <stdexcept>

namespace weylkit {

const char* symbol_name(Symbol sym) {
  switch (sym) {
    case Symbol::c: return "c";
    case Symbol::s: return "s";
    case Symbol::t: return "t";
  }
  return "?";
}

PolyCoeff::PolyCoeff(long n) {
  if (n != 0) terms_.emplace(PolyExp{}, GaussianRational(n));
}

PolyCoeff::PolyCoeff(Rational v) {
  if (!v.is_zero()) terms_.emplace(PolyExp{}, GaussianRational(std::move(v)));
}

PolyCoeff::PolyCoeff(GaussianRational v) {
  if (!v.is_zero()) terms_.emplace(PolyExp{}, std::move(v));
}

PolyCoeff PolyCoeff::symbol(Symbol sym, unsigned exp) {
  PolyCoeff p;
  PolyExp m;
  m.e[static_cast<int>(sym)] = exp;
  p.terms_.emplace(m, GaussianRational(1));
  return p;
}

PolyCoeff PolyCoeff::monomial(PolyExp exp, GaussianRational coeff) {
  PolyCoeff p;
  if (!coeff.is_zero()) p.terms_.emplace(exp, std::move(coeff));
  return p;
}

bool PolyCoeff::is_scalar() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == PolyExp{};
}

GaussianRational PolyCoeff::scalar_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_scalar()) throw std::logic_error("PolyCoeff: not a scalar: " + str());
  return terms_.begin()->second;
}

bool PolyCoeff::contains(Symbol sym) const {
  for (const auto& [exp, v] : terms_)
    if (exp[sym] > 0) return true;
  return false;
}

unsigned PolyCoeff::total_degree() const {
  unsigned deg = 0;
  for (const auto& [exp, v] : terms_) deg = std::max(deg, exp.total());
  return deg;
}

GaussianRational PolyCoeff::coefficient(const PolyExp& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void PolyCoeff::add_term(const PolyExp& exp, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyCoeff PolyCoeff::operator-() const {
  PolyCoeff out;
  for (const auto& [exp, v] : terms_) out.terms_.emplace(exp, -v);
  return out;
}

PolyCoeff& PolyCoeff::operator+=(const PolyCoeff& o) {
  for (const auto& [exp, v] : o.terms_) add_term(exp, v);
  return *this;
}

PolyCoeff& PolyCoeff::operator-=(const PolyCoeff& o) {
  for (const auto& [exp, v] : o.terms_) add_term(exp, -v);
  return *this;
}

PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) {
  PolyCoeff out;
  for (const auto& [ea, va] : a.terms_) {
    for (const auto& [eb, vb] : b.terms_) {
      PolyExp e;
      for (int k = 0; k < 3; ++k) e.e[k] = ea.e[k] + eb.e[k];
      out.add_term(e, va * vb);
    }
  }
  return out;
}

PolyCoeff& PolyCoeff::operator*=(const PolyCoeff& o) {
  *this = *this * o;
  return *this;
}

PolyCoeff PolyCoeff::pow(unsigned e) const {
  PolyCoeff out(1);
  for (unsigned k = 0; k < e; ++k) out *= *this;
  return out;
}

PolyCoeff PolyCoeff::substitute(Symbol sym, const PolyCoeff& value) const {
  if (value.contains(sym))
    throw std::invalid_argument(std::string("PolyCoeff::substitute: value for '") +
                                symbol_name(sym) + "' refers to itself");
  PolyCoeff out;
  for (const auto& [exp, v] : terms_) {
    PolyExp rest = exp;
    unsigned deg = rest.e[static_cast<int>(sym)];
    rest.e[static_cast<int>(sym)] = 0;
    out += PolyCoeff::monomial(rest, v) * value.pow(deg);
  }
  return out;
}

PolyCoeff PolyCoeff::negate_symbol(Symbol sym) const {
  PolyCoeff out;
  for (const auto& [exp, v] : terms_)
    out.terms_.emplace(exp, (exp[sym] % 2 == 0) ? v : -v);
  return out;
}

bool PolyCoeff::is_canonical() const {
  for (const auto& [exp, v] : terms_) {
    if (v.is_zero()) return false;
    if (!v.is_canonical()) return false;
  }
  return true;
}

std::string PolyCoeff::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, v] : terms_) {
    std::string piece = v.str();
    if (piece.find(' ') != std::string::npos) piece = "(" + piece + ")";
    for (int k = 0; k < 3; ++k) {
      if (exp.e[k] == 0) continue;
      std::string f = symbol_name(static_cast<Symbol>(k));
      if (exp.e[k] > 1) f += "^" + std::to_string(exp.e[k]);
      if (piece == "1")
        piece = f;
      else if (piece == "-1")
        piece = "-" + f;
      else
        piece += "*" + f;
    }
    if (!first) out += piece.front() == '-' ? " - " + piece.substr(1) : " + " + piece;
    else out = piece;
    first = false;
  }
  return out;
}

}  // namespace weylkit

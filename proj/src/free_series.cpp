#include "weylkit/free_series.hpp"

#include <stdexcept>

#include "weylkit/binomial.hpp"
#include "weylkit/special_numbers.hpp"

namespace weylkit {

FreeSeries::FreeSeries(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 1 || cutoff > kMaxCutoff)
    throw std::invalid_argument("FreeSeries: cutoff must be in [1, " +
                                std::to_string(kMaxCutoff) + "]");
}

FreeSeries FreeSeries::scalar(int cutoff, GaussianRational v) {
  FreeSeries out(cutoff);
  out.add_term("", v);
  return out;
}

FreeSeries FreeSeries::word(int cutoff, const std::string& w, GaussianRational coeff) {
  for (char ch : w)
    if (ch != 'X' && ch != 'Y') throw std::invalid_argument("FreeSeries: bad word letter");
  FreeSeries out(cutoff);
  if (static_cast<int>(w.size()) <= cutoff) out.add_term(w, coeff);
  return out;
}

GaussianRational FreeSeries::coefficient(const std::string& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void FreeSeries::add_term(const std::string& w, const GaussianRational& v) {
  if (v.is_zero() || static_cast<int>(w.size()) > cutoff_) return;
  auto [it, inserted] = terms_.emplace(w, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeSeries FreeSeries::operator-() const {
  FreeSeries out(cutoff_);
  for (const auto& [w, v] : terms_) out.terms_.emplace(w, -v);
  return out;
}

namespace {

void check_cutoffs(const FreeSeries& a, const FreeSeries& b) {
  if (a.cutoff() != b.cutoff())
    throw std::invalid_argument("FreeSeries: cutoff mismatch (" +
                                std::to_string(a.cutoff()) + " vs " +
                                std::to_string(b.cutoff()) + ")");
}

}  // namespace

FreeSeries& FreeSeries::operator+=(const FreeSeries& o) {
  check_cutoffs(*this, o);
  for (const auto& [w, v] : o.terms_) add_term(w, v);
  return *this;
}

FreeSeries& FreeSeries::operator-=(const FreeSeries& o) {
  check_cutoffs(*this, o);
  for (const auto& [w, v] : o.terms_) add_term(w, -v);
  return *this;
}

FreeSeries operator*(const FreeSeries& a, const FreeSeries& b) {
  check_cutoffs(a, b);
  FreeSeries out(a.cutoff_);
  for (const auto& [wa, va] : a.terms_) {
    for (const auto& [wb, vb] : b.terms_) {
      if (static_cast<int>(wa.size() + wb.size()) > a.cutoff_) continue;
      out.add_term(wa + wb, va * vb);
    }
  }
  return out;
}

FreeSeries& FreeSeries::operator*=(const FreeSeries& o) {
  *this = *this * o;
  return *this;
}

FreeSeries operator*(const GaussianRational& scale, const FreeSeries& a) {
  FreeSeries out(a.cutoff_);
  for (const auto& [w, v] : a.terms_) out.add_term(w, scale * v);
  return out;
}

FreeSeries FreeSeries::pow(unsigned e) const {
  FreeSeries out = scalar(cutoff_, GaussianRational(1));
  for (unsigned k = 0; k < e; ++k) out *= *this;
  return out;
}

FreeSeries FreeSeries::exp() const {
  if (!coefficient("").is_zero())
    throw std::invalid_argument("FreeSeries::exp: nonzero constant term");
  FreeSeries out = scalar(cutoff_, GaussianRational(1));
  FreeSeries power = out;
  for (int k = 1; k <= cutoff_; ++k) {
    power *= *this;
    if (power.is_zero()) break;
    out += GaussianRational(Rational(Int(1), factorial(k))) * power;
  }
  return out;
}

FreeSeries FreeSeries::log() const {
  if (coefficient("") != GaussianRational(1))
    throw std::invalid_argument("FreeSeries::log: constant term must be 1");
  FreeSeries base = *this - scalar(cutoff_, GaussianRational(1));
  FreeSeries out(cutoff_);
  FreeSeries power = scalar(cutoff_, GaussianRational(1));
  for (int k = 1; k <= cutoff_; ++k) {
    power *= base;
    if (power.is_zero()) break;
    Rational coeff(Int(k % 2 == 1 ? 1 : -1), Int(k));
    out += GaussianRational(coeff) * power;
  }
  return out;
}

FreeSeries FreeSeries::linear_in_y() const {
  FreeSeries out(cutoff_);
  for (const auto& [w, v] : terms_) {
    int ys = 0;
    for (char ch : w) ys += ch == 'Y';
    if (ys == 1) out.add_term(w, v);
  }
  return out;
}

FreeSeries FreeSeries::truncated(int cutoff) const {
  FreeSeries out(cutoff);
  for (const auto& [w, v] : terms_) out.add_term(w, v);
  return out;
}

std::string FreeSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, v] : terms_) {
    std::string val = v.str();
    if (val.find(' ') != std::string::npos) val = "(" + val + ")";
    std::string piece;
    if (w.empty())
      piece = val;
    else if (val == "1")
      piece = w;
    else if (val == "-1")
      piece = "-" + w;
    else
      piece = val + "*" + w;
    if (out.empty())
      out = piece;
    else
      out += piece.front() == '-' ? " - " + piece.substr(1) : " + " + piece;
  }
  return out;
}

FreeSeries commutator(const FreeSeries& a, const FreeSeries& b) { return a * b - b * a; }

FreeSeries anticommutator(const FreeSeries& a, const FreeSeries& b) { return a * b + b * a; }

namespace {

/// sum_{n=0}^{depth} weight(n) * nest^n(Y) where nest is one bracket step.
template <typename Nest, typename Weight>
FreeSeries nested_bracket_series(int depth, int cutoff, Nest nest, Weight weight) {
  FreeSeries x = FreeSeries::generator_x(cutoff);
  FreeSeries term = FreeSeries::generator_y(cutoff);
  FreeSeries out(cutoff);
  for (int n = 0; n <= depth; ++n) {
    if (n > 0) term = nest(x, term);
    GaussianRational w = weight(n);
    if (!w.is_zero()) out += w * term;
  }
  return out;
}

}  // namespace

FreeSeries lie_series_rhs(int depth) {
  return nested_bracket_series(
      depth, depth + 1, [](const FreeSeries& x, const FreeSeries& t) { return commutator(x, t); },
      [](int n) { return GaussianRational(Rational(Int(1), factorial(n))); });
}

FreeSeries mendas_rhs(int depth) {
  return nested_bracket_series(
      depth, depth + 1,
      [](const FreeSeries& x, const FreeSeries& t) { return anticommutator(x, t); },
      [](int n) { return GaussianRational(Rational(Int(1), factorial(n))); });
}

FreeSeries bch_z1_commutator_form(int depth) {
  return nested_bracket_series(
      depth, depth + 1, [](const FreeSeries& x, const FreeSeries& t) { return commutator(x, t); },
      [](int n) {
        Rational w = bernoulli(n) / Rational(factorial(n));
        return GaussianRational(n % 2 == 0 ? w : -w);
      });
}

FreeSeries bch_z1_anticommutator_form(int depth) {
  int cutoff = depth + 1;
  FreeSeries out(cutoff);
  FreeSeries y = FreeSeries::generator_y(cutoff);
  for (int n = 0; n <= depth; ++n) {
    Rational w = bernoulli(n) / Rational(factorial(n));
    if (w.is_zero()) continue;
    GaussianRational weight(n % 2 == 0 ? w : -w);
    FreeSeries xn = FreeSeries::word(cutoff, std::string(n, 'X'));
    out += weight * anticommutator(xn, y);
  }
  return out;
}

}  // namespace weylkit

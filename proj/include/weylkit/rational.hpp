#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylkit {

using Int = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form
/// (reduced, positive denominator, zero is 0/1).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational from_string(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
      throw std::invalid_argument("Rational: bad literal '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q), raw_tag{});
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_), raw_tag{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(unsigned long e) const {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(n, d);
  }

  /// "3", "-1/2"
  std::string str() const { return v_.get_str(); }
  /// "3/1", "-1/2" (denominator always explicit)
  std::string str_explicit() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Validation hook for tests: reduced form with positive denominator.
  bool is_canonical() const {
    if (v_.get_den() <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return g == 1 || (v_.get_num() == 0 && v_.get_den() == 1);
  }

 private:
  struct raw_tag {};
  // q must already be canonical
  Rational(mpq_class q, raw_tag) : v_(std::move(q)) {}

  mpq_class v_;
};

/// Element of Q(i): exact complex rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conjugate() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    Rational n = o.norm();
    GaussianRational prod = *this;
    prod *= o.conjugate();
    re_ = prod.re_ / n;
    im_ = prod.im_ / n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(unsigned e) const {
    GaussianRational out(1);
    for (unsigned k = 0; k < e; ++k) out *= *this;
    return out;
  }

  bool is_canonical() const { return re_.is_canonical() && im_.is_canonical(); }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string im_part = im_.is_one() ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "*i");
    if (re_.is_zero()) return im_part;
    if (im_part.front() == '-') return re_.str() + " - " + im_part.substr(1);
    return re_.str() + " + " + im_part;
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace weylkit

#pragma once

#include <map>
#include <string>

#include "weylkit/rational.hpp"

namespace weylkit {

/// Word order for deterministic iteration: by length, then lexicographic.
struct WordLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Truncated element of the free associative algebra on {X, Y} over Q(i):
/// a linear combination of words of length <= cutoff. No commutation
/// relation is assumed; this is the brute-force side of the series
/// identities.
class FreeSeries {
 public:
  /// Word counts double with each extra letter; anything much past this
  /// is useless for exact checks.
  static constexpr int kMaxCutoff = 12;

  using TermMap = std::map<std::string, GaussianRational, WordLess>;

  explicit FreeSeries(int cutoff);

  static FreeSeries scalar(int cutoff, GaussianRational v);
  static FreeSeries generator_x(int cutoff) { return word(cutoff, "X"); }
  static FreeSeries generator_y(int cutoff) { return word(cutoff, "Y"); }
  static FreeSeries word(int cutoff, const std::string& w, GaussianRational coeff = GaussianRational(1));

  int cutoff() const { return cutoff_; }
  const TermMap& terms() const { return terms_; }
  GaussianRational coefficient(const std::string& w) const;
  bool is_zero() const { return terms_.empty(); }

  FreeSeries operator-() const;
  FreeSeries& operator+=(const FreeSeries& o);
  FreeSeries& operator-=(const FreeSeries& o);
  friend FreeSeries operator+(FreeSeries a, const FreeSeries& b) { return a += b; }
  friend FreeSeries operator-(FreeSeries a, const FreeSeries& b) { return a -= b; }
  /// Concatenation product; words longer than the cutoff are discarded.
  friend FreeSeries operator*(const FreeSeries& a, const FreeSeries& b);
  FreeSeries& operator*=(const FreeSeries& o);
  friend FreeSeries operator*(const GaussianRational& scale, const FreeSeries& a);
  friend bool operator==(const FreeSeries& a, const FreeSeries& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreeSeries& a, const FreeSeries& b) { return !(a == b); }

  FreeSeries pow(unsigned e) const;

  /// exp(A) = sum A^k / k!; requires zero constant term.
  FreeSeries exp() const;
  /// log(A) = sum (-1)^{k+1} (A-1)^k / k; requires unit constant term.
  FreeSeries log() const;

  /// Sub-series of words containing exactly one Y.
  FreeSeries linear_in_y() const;

  /// Copy truncated to a smaller cutoff.
  FreeSeries truncated(int cutoff) const;

  std::string str() const;

 private:
  void add_term(const std::string& w, const GaussianRational& v);

  int cutoff_;
  TermMap terms_;
};

FreeSeries commutator(const FreeSeries& a, const FreeSeries& b);
FreeSeries anticommutator(const FreeSeries& a, const FreeSeries& b);

/// Y + [X,Y] + (1/2!)[X,[X,Y]] + ... with nesting depth <= depth; the
/// depth-n term has word length n+1, so the series carries cutoff depth+1.
FreeSeries lie_series_rhs(int depth);

/// Y + {X,Y} + (1/2!){X,{X,Y}} + ...: the anti-commutator analogue,
/// equal to exp(X) Y exp(X). Cutoff depth+1.
FreeSeries mendas_rhs(int depth);

/// sum_{n=0}^{depth} (-1)^n (B_n/n!) ad_X^n(Y): the part of
/// log(exp(X) exp(Y)) linear in Y, truncated at total degree depth+1.
FreeSeries bch_z1_commutator_form(int depth);

/// Literal evaluation of sum_{n=0}^{depth} (-1)^n (B_n/n!) {X^n, Y} with
/// {X^n, Y} = X^n Y + Y X^n. Diagnostic form only: it is compared against
/// the brute-force series, never asserted equal to it.
FreeSeries bch_z1_anticommutator_form(int depth);

}  // namespace weylkit

#include "weylkit/ordering.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "weylkit/binomial.hpp"

namespace weylkit {

namespace {

std::mutex g_weyl_cache_mutex;
std::map<std::pair<int, int>, NormalForm> g_weyl_cache;

}  // namespace

NormalForm weyl_T(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("weyl_T: negative index");
  {
    std::lock_guard lock(g_weyl_cache_mutex);
    auto it = g_weyl_cache.find({m, n});
    if (it != g_weyl_cache.end()) return it->second;
  }
  NormalForm out;
  NormalForm ym = y_power(m);
  for (int k = 0; k <= n; ++k) {
    NormalForm term = x_power(k) * ym * x_power(n - k);
    out += PolyCoeff(Rational(binomial(n, k))) * term;
  }
  out = PolyCoeff(Rational(Int(1), int_pow(Int(2), n))) * out;
  std::lock_guard lock(g_weyl_cache_mutex);
  return g_weyl_cache.emplace(std::pair{m, n}, std::move(out)).first->second;
}

NormalForm weyl_symmetrization_oracle(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("weyl_symmetrization_oracle: negative index");
  if (m + n > 12)
    throw std::invalid_argument("weyl_symmetrization_oracle: m + n must be <= 12");
  // arrange m Y factors and n X factors: iterate multiset permutations
  std::string letters = std::string(n, 'X') + std::string(m, 'Y');
  std::sort(letters.begin(), letters.end());
  NormalForm sum;
  long count = 0;
  do {
    NormalForm prod = NormalForm::identity();
    for (char ch : letters) prod *= (ch == 'X') ? NormalForm::generator_x() : NormalForm::generator_y();
    sum += prod;
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return PolyCoeff(Rational(Int(1), Int(count))) * sum;
}

NormalForm born_jordan(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("born_jordan: negative index");
  NormalForm out;
  NormalForm xn = x_power(n);
  for (int k = 0; k <= m; ++k) out += y_power(m - k) * xn * y_power(k);
  return PolyCoeff(Rational(1, m + 1)) * out;
}

NormalForm SOrderedMonomial::to_normal_form() const {
  if (dag_exp < 0 || ann_exp < 0)
    throw std::invalid_argument("SOrderedMonomial: negative exponent");
  if (order_param.contains(Symbol::c))
    throw std::invalid_argument("SOrderedMonomial: order parameter must not involve c");
  PolyCoeff gap = (PolyCoeff(1) - order_param) * PolyCoeff(Rational(1, 2));
  NormalForm out;
  for (int k = 0; k <= std::min(dag_exp, ann_exp); ++k) {
    PolyCoeff w = PolyCoeff(Rational(factorial(k) * binomial(dag_exp, k) * binomial(ann_exp, k)));
    out += (w * gap.pow(k)) * NormalForm::monomial(dag_exp - k, ann_exp - k);
  }
  return out;
}

NormalForm s_ordered_ground(int n, int m) {
  return SOrderedMonomial{n, m, PolyCoeff::symbol(Symbol::s)}.to_normal_form();
}

std::vector<SConvertTerm> s_convert(int n, int m, const PolyCoeff& from, const PolyCoeff& to) {
  if (n < 0 || m < 0) throw std::invalid_argument("s_convert: negative exponent");
  PolyCoeff gap = (to - from) * PolyCoeff(Rational(1, 2));
  std::vector<SConvertTerm> out;
  for (int k = 0; k <= std::min(n, m); ++k) {
    PolyCoeff w = PolyCoeff(Rational(factorial(k) * binomial(n, k) * binomial(m, k))) * gap.pow(k);
    if (w.is_zero()) continue;
    out.push_back(SConvertTerm{std::move(w), n - k, m - k});
  }
  return out;
}

BivarOperatorSeries::BivarOperatorSeries(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("BivarOperatorSeries: negative cutoff");
}

BivarOperatorSeries BivarOperatorSeries::scalar(int cutoff, NormalForm value) {
  BivarOperatorSeries out(cutoff);
  out.add_term(0, 0, value);
  return out;
}

NormalForm BivarOperatorSeries::coefficient(int alpha_exp, int abar_exp) const {
  auto it = terms_.find({alpha_exp, abar_exp});
  return it == terms_.end() ? NormalForm() : it->second;
}

void BivarOperatorSeries::add_term(int alpha_exp, int abar_exp, const NormalForm& value) {
  if (value.is_zero() || alpha_exp + abar_exp > cutoff_) return;
  auto [it, inserted] = terms_.emplace(Key{alpha_exp, abar_exp}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivarOperatorSeries& BivarOperatorSeries::operator+=(const BivarOperatorSeries& o) {
  for (const auto& [key, v] : o.terms_) add_term(key.first, key.second, v);
  return *this;
}

BivarOperatorSeries operator*(const BivarOperatorSeries& a, const BivarOperatorSeries& b) {
  if (a.cutoff_ != b.cutoff_)
    throw std::invalid_argument("BivarOperatorSeries: cutoff mismatch");
  BivarOperatorSeries out(a.cutoff_);
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return out;
}

NormalForm displacement_series_oracle(int n, int m, const PolyCoeff& s_value) {
  if (n < 0 || m < 0) throw std::invalid_argument("displacement_series_oracle: negative index");
  if (n + m > 8) throw std::invalid_argument("displacement_series_oracle: n + m must be <= 8");
  if (s_value.contains(Symbol::c))
    throw std::invalid_argument("displacement_series_oracle: order parameter must not involve c");
  const int cutoff = n + m;

  // e^{alpha Y}
  BivarOperatorSeries left(cutoff);
  for (int a = 0; a <= cutoff; ++a)
    left.add_term(a, 0, PolyCoeff(Rational(Int(1), factorial(a))) * NormalForm::monomial(a, 0));
  // e^{-abar X}
  BivarOperatorSeries right(cutoff);
  for (int b = 0; b <= cutoff; ++b) {
    Rational w(Int(b % 2 == 0 ? 1 : -1), factorial(b));
    right.add_term(0, b, PolyCoeff(w) * NormalForm::monomial(0, b));
  }
  // e^{(s-1) alpha abar / 2}
  PolyCoeff half_gap = (s_value - PolyCoeff(1)) * PolyCoeff(Rational(1, 2));
  BivarOperatorSeries gauss(cutoff);
  for (int k = 0; 2 * k <= cutoff; ++k) {
    PolyCoeff w = half_gap.pow(k) * PolyCoeff(Rational(Int(1), factorial(k)));
    gauss.add_term(k, k, NormalForm::scalar(w));
  }

  BivarOperatorSeries product = left * right * gauss;
  NormalForm coeff = product.coefficient(n, m);
  // n! m! times the coefficient of alpha^n (-abar)^m, with c = 1
  Rational scale(factorial(n) * factorial(m) * Int(m % 2 == 0 ? 1 : -1));
  return (PolyCoeff(scale) * coeff).substitute_c(PolyCoeff(1));
}

}  // namespace weylkit

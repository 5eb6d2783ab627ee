#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "weylkit/free_series.hpp"

using namespace weylkit;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

}  // namespace

TEST_CASE("construction and truncation contract") {
  CHECK_THROWS_AS(FreeSeries(0), std::invalid_argument);
  CHECK_THROWS_AS(FreeSeries(13), std::invalid_argument);
  FreeSeries x = FreeSeries::generator_x(2);
  FreeSeries y = FreeSeries::generator_y(2);
  CHECK((x * y).coefficient("XY") == q(1));
  FreeSeries one = FreeSeries::scalar(2, q(1));
  CHECK((one + x) * (one + y) ==
        one + x + y + FreeSeries::word(2, "XY"));
  // degree-3 word is discarded at cutoff 2
  CHECK((x.pow(2) * y).is_zero());
  CHECK_THROWS_AS(FreeSeries::generator_x(3) * y, std::invalid_argument);
}

TEST_CASE("exp and log") {
  FreeSeries zero(4);
  CHECK(zero.exp() == FreeSeries::scalar(4, q(1)));
  FreeSeries x = FreeSeries::generator_x(3);
  FreeSeries expected = FreeSeries::scalar(3, q(1)) + x +
                        FreeSeries::word(3, "XX", q(1, 2)) + FreeSeries::word(3, "XXX", q(1, 6));
  CHECK(x.exp() == expected);
  CHECK_THROWS_AS(FreeSeries::scalar(3, q(1)).exp(), std::invalid_argument);
  CHECK_THROWS_AS(x.log(), std::invalid_argument);

  FreeSeries y = FreeSeries::generator_y(3);
  CHECK((x + y).exp().log() == x + y);

  testing::Random gen(0x11d);
  for (int k = 0; k < 50; ++k) {
    FreeSeries a(4);
    for (int t = 0; t < 3; ++t) {
      std::string w;
      for (int l = 0, len = static_cast<int>(gen.pick(1, 3)); l < len; ++l)
        w += gen.pick(0, 1) ? 'X' : 'Y';
      a += FreeSeries::word(4, w, gen.gaussian());
    }
    CHECK(a.exp().log() == a);
  }
}

TEST_CASE("lie series oracle") {
  for (int d = 1; d <= 8; ++d) {
    FreeSeries x = FreeSeries::generator_x(d + 1);
    FreeSeries y = FreeSeries::generator_y(d + 1);
    CHECK(x.exp() * y * (-x).exp() == lie_series_rhs(d));
  }
  FreeSeries rhs1 = lie_series_rhs(1);
  CHECK(rhs1.coefficient("Y") == q(1));
  CHECK(rhs1.coefficient("XY") == q(1));
  CHECK(rhs1.coefficient("YX") == q(-1));
}

TEST_CASE("mendas anti-commutator lemma oracle") {
  for (int d = 1; d <= 8; ++d) {
    FreeSeries x = FreeSeries::generator_x(d + 1);
    FreeSeries y = FreeSeries::generator_y(d + 1);
    CHECK(x.exp() * y * x.exp() == mendas_rhs(d));
    // right-multiplying by exp(-2X) recovers the similarity transform
    FreeSeries minus_two_x = q(-2) * x;
    CHECK(mendas_rhs(d) * minus_two_x.exp() == x.exp() * y * (-x).exp());
  }
  FreeSeries rhs1 = mendas_rhs(1);
  CHECK(rhs1.coefficient("XY") == q(1));
  CHECK(rhs1.coefficient("YX") == q(1));
  // depth 2 includes (1/2)(XXY + 2 XYX + YXX)
  FreeSeries rhs2 = mendas_rhs(3);
  CHECK(rhs2.coefficient("XXY") == q(1, 2));
  CHECK(rhs2.coefficient("XYX") == q(1));
  CHECK(rhs2.coefficient("YXX") == q(1, 2));
}

TEST_CASE("bch z1 commutator form equals the brute-force linear part") {
  for (int d = 1; d <= 8; ++d) {
    int cutoff = d + 1;
    FreeSeries x = FreeSeries::generator_x(cutoff);
    FreeSeries y = FreeSeries::generator_y(cutoff);
    FreeSeries oracle = (x.exp() * y.exp()).log().linear_in_y();
    CHECK(bch_z1_commutator_form(d) == oracle);
  }
  FreeSeries form = bch_z1_commutator_form(3);
  CHECK(form.coefficient("Y") == q(1));
  CHECK(form.coefficient("XY") == q(1, 2));
  CHECK(form.coefficient("YX") == q(-1, 2));
  CHECK(form.coefficient("XXY") == q(1, 12));
  CHECK(form.coefficient("XYX") == q(-1, 6));
  CHECK(form.coefficient("YXX") == q(1, 12));
  // B_3 = 0: no length-4 contribution beyond the cutoff-3 words
  CHECK(bch_z1_commutator_form(3).truncated(4).coefficient("XXXY") == q(0));
}

TEST_CASE("literal anti-commutator z1 form is a different series") {
  FreeSeries literal = bch_z1_anticommutator_form(2);
  CHECK(literal.coefficient("Y") == q(2));         // n = 0 term {1, Y} = 2Y
  CHECK(literal.coefficient("XY") == q(1, 2));     // n = 1 term (1/2)(XY + YX)
  CHECK(literal.coefficient("YX") == q(1, 2));
  CHECK(literal.coefficient("XXY") == q(1, 12));   // n = 2 term (1/12)(X^2 Y + Y X^2)
  CHECK(literal.coefficient("YXX") == q(1, 12));
  CHECK(literal.coefficient("XYX") == q(0));
  FreeSeries x = FreeSeries::generator_x(3);
  FreeSeries y = FreeSeries::generator_y(3);
  FreeSeries oracle = (x.exp() * y.exp()).log().linear_in_y();
  CHECK(literal != oracle);
}

TEST_CASE("linear-in-y extraction") {
  FreeSeries a(3);
  a += FreeSeries::word(3, "X");
  a += FreeSeries::word(3, "XY");
  a += FreeSeries::word(3, "YXY");
  CHECK(a.linear_in_y() == FreeSeries::word(3, "XY"));
  CHECK(FreeSeries(3).linear_in_y().is_zero());
}

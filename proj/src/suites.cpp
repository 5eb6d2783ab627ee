#include "weylkit/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "weylkit/binomial.hpp"
#include "weylkit/free_series.hpp"
#include "weylkit/identities.hpp"
#include "weylkit/ordering.hpp"
#include "weylkit/render.hpp"
#include "weylkit/special_numbers.hpp"

namespace weylkit {

namespace {

// ---------------------------------------------------------------------------
// sweep machinery: cases are generated in a fixed order and evaluated (maybe
// in parallel) into slots, so reports do not depend on the job count.

struct Sweep {
  using CaseFn = std::function<std::optional<CaseFailure>()>;

  std::vector<std::pair<std::vector<long>, CaseFn>> cases;

  void add(std::vector<long> params, CaseFn fn) {
    cases.emplace_back(std::move(params), std::move(fn));
  }

  /// Compare two normal forms; register the discrepancy on mismatch.
  void check(std::vector<long> params, std::function<std::pair<NormalForm, NormalForm>()> sides,
             std::string label = {}) {
    auto p = params;
    add(std::move(params), [sides = std::move(sides), p, label = std::move(label)]()
            -> std::optional<CaseFailure> {
      auto [lhs, rhs] = sides();
      NormalForm diff = lhs - rhs;
      if (diff.is_zero()) return std::nullopt;
      return CaseFailure{p, std::move(diff), label};
    });
  }

  void run(int jobs, SuiteResult& out) const {
    std::vector<std::optional<CaseFailure>> slots(cases.size());
    jobs = std::max(1, jobs);
    if (jobs == 1) {
      for (std::size_t k = 0; k < cases.size(); ++k) slots[k] = cases[k].second();
    } else {
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (;;) {
          std::size_t k = next.fetch_add(1);
          if (k >= cases.size()) return;
          slots[k] = cases[k].second();
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    out.cases += static_cast<long>(cases.size());
    for (auto& slot : slots)
      if (slot) out.failures.push_back(std::move(*slot));
  }
};

// deterministic generators for the randomized structural suites
struct RandomAlgebra {
  std::mt19937_64 rng;

  explicit RandomAlgebra(std::uint64_t seed) : rng(seed) {}

  long pick(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  GaussianRational gaussian() {
    Rational re(pick(-3, 3), pick(1, 3));
    Rational im = pick(0, 3) == 0 ? Rational(pick(-2, 2)) : Rational(0);
    return {re, im};
  }

  PolyCoeff poly() {
    PolyCoeff out;
    int terms = static_cast<int>(pick(1, 2));
    for (int k = 0; k < terms; ++k) {
      PolyExp e;
      e.e[0] = static_cast<unsigned>(pick(0, 1));
      e.e[1] = static_cast<unsigned>(pick(0, 1));
      e.e[2] = static_cast<unsigned>(pick(0, 1));
      out += PolyCoeff::monomial(e, gaussian());
    }
    return out;
  }

  NormalForm normal_form(int max_exp = 2) {
    NormalForm out;
    int terms = static_cast<int>(pick(1, 3));
    for (int k = 0; k < terms; ++k)
      out += NormalForm::monomial(static_cast<int>(pick(0, max_exp)),
                                  static_cast<int>(pick(0, max_exp)), poly());
    return out;
  }
};

// ---------------------------------------------------------------------------
// suite bodies

void suite_main_euler(const SuiteOptions& opts, Sweep& sweep) {
  for (int n = 1; n <= opts.max_degree; ++n)
    for (int m = 1; m <= opts.max_degree; ++m)
      sweep.check({n, m}, [n, m] {
        return std::pair{commutator_anti_euler(n, m), commutator(x_power(n), y_power(m))};
      });
}

void suite_main_bernoulli(const SuiteOptions& opts, Sweep& sweep) {
  for (int n = 1; n <= opts.max_degree; ++n)
    for (int m = 1; m <= opts.max_degree; ++m) {
      sweep.check({n, m}, [n, m] {
        return std::pair{commutator_anti_bernoulli(n, m), commutator(x_power(n), y_power(m))};
      }, "vs engine");
      sweep.check({n, m}, [n, m] {
        return std::pair{commutator_anti_bernoulli(n, m), commutator_anti_euler(n, m)};
      }, "vs Euler form");
    }
}

void suite_xy_vs_yx(const SuiteOptions& opts, Sweep& sweep) {
  for (int n = 1; n <= opts.max_degree; ++n)
    for (int m = 1; m <= opts.max_degree; ++m) {
      sweep.check({n, m}, [n, m] {
        return std::pair{commutator_xy_form(n, m), commutator_yx_form(n, m)};
      }, "XY vs YX form");
      sweep.check({n, m}, [n, m] {
        return std::pair{commutator_yx_form(n, m), commutator(x_power(n), y_power(m))};
      }, "YX form vs engine");
    }
}

void suite_v_system(const SuiteOptions& opts, Sweep& sweep) {
  int size = std::max(opts.max_degree, 9);
  sweep.add({0}, [size]() -> std::optional<CaseFailure> {
    VSystem sys = v_system_solve(size);
    if (!sys.rows_satisfied())
      return CaseFailure{{0}, std::nullopt, "solution does not satisfy the system rows"};
    return std::nullopt;
  });
  static const char* printed_table[] = {"1/2", "0", "-1/4", "0", "1/2", "0", "-17/8", "0", "31/2"};
  for (int k = 1; k <= size; ++k) {
    sweep.add({k}, [k, size]() -> std::optional<CaseFailure> {
      VSystem sys = v_system_solve(size);
      const Rational& vk = sys.solution[k - 1];
      if (sys.matrix[k - 1][k - 1] != Rational(2))
        return CaseFailure{{k}, std::nullopt, "diagonal entry is not 2"};
      if (vk != -euler_zero(k))
        return CaseFailure{{k}, std::nullopt, "v_k != -E_k(0) (recurrence route)"};
      if (vk != -euler_zero_explicit(k))
        return CaseFailure{{k}, std::nullopt, "v_k != -E_k(0) (explicit double sum)"};
      if (vk != -euler_zero_bernoulli(k))
        return CaseFailure{{k}, std::nullopt, "v_k != -E_k(0) (Bernoulli route)"};
      if (k <= 9 && vk.str() != printed_table[k - 1])
        return CaseFailure{{k}, std::nullopt, "v_k differs from the printed table"};
      return std::nullopt;
    });
  }
}

void suite_bd_product(const SuiteOptions& opts, Sweep& sweep) {
  int bound = opts.max_degree;
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (int r = 0; r <= bound; ++r)
        for (int s = 0; s <= bound; ++s) {
          const PolyCoeff ci = PolyCoeff::imaginary_unit();
          sweep.check({m, n, r, s}, [m, n, r, s, ci] {
            NormalForm engine = (weyl_T(m, n) * weyl_T(r, s)).substitute_c(ci);
            return std::pair{bd_product(m, n, r, s), std::move(engine)};
          }, "product formula vs engine");
          sweep.check({m, n, r, s}, [m, n, r, s, ci] {
            NormalForm engine =
                commutator(weyl_T(m, n), weyl_T(r, s)).substitute_c(ci);
            return std::pair{bd_product_part(m, n, r, s, true), std::move(engine)};
          }, "odd part vs engine commutator");
          sweep.check({m, n, r, s}, [m, n, r, s, ci] {
            NormalForm engine =
                anticommutator(weyl_T(m, n), weyl_T(r, s)).substitute_c(ci);
            return std::pair{bd_product_part(m, n, r, s, false), std::move(engine)};
          }, "even part vs engine anti-commutator");
        }
}

void suite_bd_parity_printed(const SuiteOptions& opts, Sweep& sweep, bool odd) {
  int bound = opts.max_degree;
  const PolyCoeff ci = PolyCoeff::imaginary_unit();
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (int r = 0; r <= bound; ++r)
        for (int s = 0; s <= bound; ++s)
          sweep.check({m, n, r, s}, [m, n, r, s, ci, odd] {
            NormalForm printed = odd ? bd_commutator(m, n, r, s) : bd_anticommutator(m, n, r, s);
            NormalForm engine = odd ? commutator(weyl_T(m, n), weyl_T(r, s)).substitute_c(ci)
                                    : anticommutator(weyl_T(m, n), weyl_T(r, s)).substitute_c(ci);
            return std::pair{std::move(printed), std::move(engine)};
          }, "printed sum vs engine");
}

void suite_bd_shift(const SuiteOptions& opts, Sweep& sweep) {
  for (int m = 0; m <= opts.max_degree; ++m)
    for (int k = 0; k <= opts.max_degree; ++k)
      for (int side = 0; side < 2; ++side)
        sweep.add({m, k, side}, [m, k, side]() -> std::optional<CaseFailure> {
          IdentityReport r = bd_shift(m, k, side == 0 ? ShiftSide::x : ShiftSide::y);
          if (r.equal) return std::nullopt;
          return CaseFailure{{m, k, side}, r.discrepancy,
                             "printed coefficient (2m+k)!m!/(2(2m)!(m+k)!)"};
        });
  // the one-step shift that the engine does confirm
  for (int m = 0; m <= opts.max_degree; ++m)
    for (int n = 0; n <= opts.max_degree; ++n)
      for (int side = 0; side < 2; ++side)
        sweep.add({m, n, side, 1}, [m, n, side]() -> std::optional<CaseFailure> {
          IdentityReport r = bd_shift_one_step(m, n, side == 0 ? ShiftSide::x : ShiftSide::y);
          if (r.equal) return std::nullopt;
          return CaseFailure{{m, n, side, 1}, r.discrepancy, "one-step shift {X,T} = 2T'"};
        });
}

void suite_jacobi(const SuiteOptions& opts, Sweep& sweep) {
  (void)opts;
  RandomAlgebra gen(0x77e1a5eed);
  for (int k = 0; k < 500; ++k) {
    NormalForm a = gen.normal_form();
    NormalForm b = gen.normal_form();
    NormalForm c = gen.normal_form();
    sweep.check({k}, [a, b, c] {
      NormalForm lhs = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                       commutator(commutator(c, a), b);
      return std::pair{std::move(lhs), NormalForm()};
    });
  }
}

void suite_anti_jacobi_witness(const SuiteOptions&, Sweep& sweep) {
  sweep.add({0}, []() -> std::optional<CaseFailure> {
    NormalForm x = NormalForm::generator_x();
    NormalForm y = NormalForm::generator_y();
    NormalForm witness = anticommutator(anticommutator(x, y), x) +
                         anticommutator(x, anticommutator(y, x)) +
                         anticommutator(y, anticommutator(x, x));
    if (witness.is_zero())
      return CaseFailure{{0}, witness, "witness unexpectedly vanishes"};
    // engine value of 4X^2Y + 4XYX + 4YX^2
    NormalForm expected = PolyCoeff(12) * NormalForm::monomial(1, 2) +
                          (PolyCoeff(12) * PolyCoeff::symbol(Symbol::c)) * NormalForm::monomial(0, 1);
    if (witness != expected)
      return CaseFailure{{0}, witness - expected, "witness differs from frozen value"};
    return std::nullopt;
  });
}

// free-series cases carry no NormalForm discrepancy; report words instead
std::optional<CaseFailure> free_series_case(std::vector<long> params, const FreeSeries& lhs,
                                            const FreeSeries& rhs, const std::string& label) {
  FreeSeries diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  std::string detail = label + ": diff = " + diff.str();
  if (detail.size() > 220) detail = detail.substr(0, 220) + "...";
  return CaseFailure{std::move(params), std::nullopt, std::move(detail)};
}

void suite_lie_series(const SuiteOptions& opts, Sweep& sweep) {
  int top = std::min(opts.free_cutoff, 8);
  for (int d = 1; d <= top; ++d)
    sweep.add({d}, [d]() {
      FreeSeries x = FreeSeries::generator_x(d + 1);
      FreeSeries y = FreeSeries::generator_y(d + 1);
      FreeSeries lhs = x.exp() * y * (-x).exp();
      return free_series_case({d}, lhs, lie_series_rhs(d), "exp(X) Y exp(-X)");
    });
}

void suite_mendas(const SuiteOptions& opts, Sweep& sweep) {
  int top = std::min(opts.free_cutoff, 8);
  for (int d = 1; d <= top; ++d) {
    sweep.add({d, 0}, [d]() {
      FreeSeries x = FreeSeries::generator_x(d + 1);
      FreeSeries y = FreeSeries::generator_y(d + 1);
      FreeSeries lhs = x.exp() * y * x.exp();
      return free_series_case({d, 0}, lhs, mendas_rhs(d), "exp(X) Y exp(X)");
    });
    sweep.add({d, 1}, [d]() {
      FreeSeries x = FreeSeries::generator_x(d + 1);
      FreeSeries y = FreeSeries::generator_y(d + 1);
      FreeSeries two_x = GaussianRational(2) * x;
      FreeSeries lhs = mendas_rhs(d) * (-two_x).exp();
      FreeSeries rhs = x.exp() * y * (-x).exp();
      return free_series_case({d, 1}, lhs, rhs, "right-multiplied exp(-2X) variant");
    });
  }
}

void suite_bch_z1(const SuiteOptions& opts, Sweep& sweep) {
  int top = std::min(opts.free_cutoff, 8);
  for (int d = 1; d <= top; ++d)
    sweep.add({d}, [d]() {
      int cutoff = d + 1;
      FreeSeries x = FreeSeries::generator_x(cutoff);
      FreeSeries y = FreeSeries::generator_y(cutoff);
      FreeSeries oracle = (x.exp() * y.exp()).log().linear_in_y();
      return free_series_case({d}, bch_z1_commutator_form(d), oracle,
                              "Bernoulli nested-commutator form");
    });
}

void suite_bch_z1_anti(const SuiteOptions& opts, Sweep& sweep) {
  int top = std::min(opts.free_cutoff, 8);
  for (int d = 1; d <= top; ++d)
    sweep.add({d}, [d]() {
      int cutoff = d + 1;
      FreeSeries x = FreeSeries::generator_x(cutoff);
      FreeSeries y = FreeSeries::generator_y(cutoff);
      FreeSeries oracle = (x.exp() * y.exp()).log().linear_in_y();
      return free_series_case({d}, bch_z1_anticommutator_form(d), oracle,
                              "literal {X^n,Y} reading");
    });
}

void suite_s_order_ground(const SuiteOptions& opts, Sweep& sweep) {
  int bound = std::min(opts.max_degree, 4);
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m) {
      sweep.check({n, m, 0}, [n, m] {
        return std::pair{s_ordered_ground(n, m),
                         displacement_series_oracle(n, m, PolyCoeff::symbol(Symbol::s))};
      }, "ground expansion vs displacement series");
      sweep.check({n, m, 1}, [n, m] {
        NormalForm at_one = s_ordered_ground(n, m).substitute_symbol(Symbol::s, PolyCoeff(1));
        return std::pair{std::move(at_one), NormalForm::monomial(n, m)};
      }, "s = 1 normal-order anchor");
      sweep.check({n, m, 2}, [n, m] {
        NormalForm weyl = s_ordered_ground(n, m).substitute_symbol(Symbol::s, PolyCoeff(0));
        NormalForm t = weyl_T(n, m).substitute_c(PolyCoeff(1));
        return std::pair{std::move(weyl), std::move(t)};
      }, "s = 0 Weyl anchor");
    }
  int anti_bound = std::min(opts.max_degree, 5);
  for (int n = 0; n <= anti_bound; ++n)
    for (int m = 0; m <= anti_bound; ++m)
      sweep.check({n, m, 3}, [n, m] {
        NormalForm anti = s_ordered_ground(n, m).substitute_symbol(Symbol::s, PolyCoeff(-1));
        NormalForm engine = (x_power(m) * y_power(n)).substitute_c(PolyCoeff(1));
        return std::pair{std::move(anti), std::move(engine)};
      }, "s = -1 anti-normal anchor");
}

void suite_s_order_intertwine(const SuiteOptions& opts, Sweep& sweep) {
  int bound = std::min(opts.max_degree, 4);
  // three symbolic order parameters: s, t and (reusing the spare ring
  // symbol) c
  const PolyCoeff ps = PolyCoeff::symbol(Symbol::s);
  const PolyCoeff pt = PolyCoeff::symbol(Symbol::t);
  const PolyCoeff pu = PolyCoeff::symbol(Symbol::c);
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m) {
      sweep.add({n, m, 0}, [n, m, ps, pt, pu]() -> std::optional<CaseFailure> {
        // s -> t -> u composed
        std::map<std::pair<int, int>, PolyCoeff> composed;
        for (const auto& first : s_convert(n, m, ps, pt))
          for (const auto& second : s_convert(first.dag_exp, first.ann_exp, pt, pu)) {
            auto key = std::pair{second.dag_exp, second.ann_exp};
            auto [it, inserted] = composed.emplace(key, first.coeff * second.coeff);
            if (!inserted) it->second += first.coeff * second.coeff;
          }
        std::erase_if(composed, [](const auto& kv) { return kv.second.is_zero(); });
        std::map<std::pair<int, int>, PolyCoeff> direct;
        for (const auto& term : s_convert(n, m, ps, pu))
          direct.emplace(std::pair{term.dag_exp, term.ann_exp}, term.coeff);
        if (composed == direct) return std::nullopt;
        return CaseFailure{{n, m, 0}, std::nullopt, "s->t->u differs from s->u"};
      });
      sweep.add({n, m, 1}, [n, m, ps]() -> std::optional<CaseFailure> {
        auto terms = s_convert(n, m, ps, ps);
        if (terms.size() == 1 && terms[0].dag_exp == n && terms[0].ann_exp == m &&
            terms[0].coeff == PolyCoeff(1))
          return std::nullopt;
        return CaseFailure{{n, m, 1}, std::nullopt, "s -> s is not the identity"};
      });
    }
}

void suite_weyl_vs_symmetrization(const SuiteOptions& opts, Sweep& sweep) {
  int bound = std::min(2 * opts.max_degree, 12);
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; m + n <= bound; ++n)
      sweep.check({m, n}, [m, n] {
        return std::pair{weyl_T(m, n), weyl_symmetrization_oracle(m, n)};
      });
}

void suite_born_jordan(const SuiteOptions& opts, Sweep& sweep) {
  for (int m = 0; m <= opts.max_degree; ++m)
    for (int n = 0; n <= opts.max_degree; ++n)
      sweep.check({m, n}, [m, n] {
        // distributing over the X factors instead must give the same operator
        NormalForm other;
        NormalForm ym = y_power(m);
        for (int j = 0; j <= n; ++j) other += x_power(n - j) * ym * x_power(j);
        other = PolyCoeff(Rational(1, n + 1)) * other;
        return std::pair{born_jordan(m, n), std::move(other)};
      }, "two-sided Born-Jordan sum");
  sweep.check({1, 1, 1}, [] { return std::pair{born_jordan(1, 1), weyl_T(1, 1)}; },
              "coincides with T_{1,1}");
  sweep.add({2, 2, 1}, []() -> std::optional<CaseFailure> {
    NormalForm diff = born_jordan(2, 2) - weyl_T(2, 2);
    NormalForm expected =
        NormalForm::scalar(PolyCoeff(Rational(1, 6)) * PolyCoeff::symbol(Symbol::c, 2));
    if (diff != expected)
      return CaseFailure{{2, 2, 1}, diff - expected,
                         "BJ(2,2) - T_{2,2} is not the expected c^2/6 multiple"};
    return std::nullopt;
  });
}

void suite_moment_bracket(const SuiteOptions& opts, Sweep& sweep) {
  for (int n = 1; n <= opts.max_degree; ++n)
    for (int k = 1; k <= opts.max_degree; ++k)
      for (int l = 1; l <= opts.max_degree; ++l) {
        sweep.check({n, k, l}, [n, k, l] {
          NormalForm engine =
              commutator(x_power(l), anticommutator(x_power(n), y_power(k)));
          return std::pair{moment_bracket(n, k, l), std::move(engine)};
        }, "combined Heisenberg form vs engine");
        sweep.check({n, k, l}, [n, k, l] {
          return std::pair{moment_bracket_anti(n, k, l), moment_bracket(n, k, l)};
        }, "Bernoulli anti-commutator expansion vs combined form");
      }
}

struct SuiteDef {
  const char* name;
  bool asserted;
  void (*build)(const SuiteOptions&, Sweep&);
  const char* note;  // fixed note attached to every run, may be null
};

void build_bd_commutator(const SuiteOptions& o, Sweep& s) { suite_bd_parity_printed(o, s, true); }
void build_bd_anticommutator(const SuiteOptions& o, Sweep& s) {
  suite_bd_parity_printed(o, s, false);
}

const SuiteDef kSuites[] = {
    {"main-euler", true, suite_main_euler, nullptr},
    {"main-bernoulli", true, suite_main_bernoulli, nullptr},
    {"xy-vs-yx", true, suite_xy_vs_yx, nullptr},
    {"v-system", true, suite_v_system, nullptr},
    {"bd-product", true, suite_bd_product, nullptr},
    {"bd-commutator", false, build_bd_commutator,
     "diagnostic: literal printed odd-j sum compared against the engine"},
    {"bd-anticommutator", false, build_bd_anticommutator,
     "diagnostic: literal printed even-j sum compared against the engine"},
    {"bd-shift", false, suite_bd_shift,
     "diagnostic: the printed coefficient (2m+k)!m!/(2(2m)!(m+k)!) fails for min(m,k) >= 1; "
     "the engine-true one-step shifts {X,T_{m,n}} = 2T_{m,n+1}, {Y,T_{m,n}} = 2T_{m+1,n} are "
     "checked alongside"},
    {"jacobi", true, suite_jacobi, nullptr},
    {"anti-jacobi-witness", true, suite_anti_jacobi_witness, nullptr},
    {"lie-series", true, suite_lie_series, nullptr},
    {"mendas", true, suite_mendas, nullptr},
    {"bch-z1", true, suite_bch_z1, nullptr},
    {"bch-z1-anti-diagnostic", false, suite_bch_z1_anti,
     "diagnostic: the literal sum (-1)^n (B_n/n!) {X^n, Y} is compared against the brute-force "
     "linear-in-Y part of log(e^X e^Y); the two disagree already at degrees 0 and 1 "
     "(2Y vs Y, (1/2)(XY+YX) vs (1/2)(XY-YX))"},
    {"s-order-ground", true, suite_s_order_ground, nullptr},
    {"s-order-intertwine", true, suite_s_order_intertwine, nullptr},
    {"weyl-vs-symmetrization", true, suite_weyl_vs_symmetrization, nullptr},
    {"born-jordan", true, suite_born_jordan, nullptr},
    {"moment-bracket", true, suite_moment_bracket, nullptr},
};

const SuiteDef* find_suite(const std::string& name) {
  for (const auto& def : kSuites)
    if (name == def.name) return &def;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : kSuites) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

bool is_known_suite(const std::string& name) { return find_suite(name) != nullptr; }

bool suite_is_asserted(const std::string& name) {
  const SuiteDef* def = find_suite(name);
  if (!def) throw std::invalid_argument("unknown identity '" + name + "'");
  return def->asserted;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  const SuiteDef* def = find_suite(name);
  if (!def) throw std::invalid_argument("unknown identity '" + name + "'");
  SuiteResult result;
  result.name = def->name;
  result.asserted = def->asserted;
  if (def->note) result.notes.emplace_back(def->note);
  Sweep sweep;
  def->build(opts, sweep);
  auto begin = std::chrono::steady_clock::now();
  sweep.run(opts.jobs, result);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  return result;
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
  std::vector<SuiteResult> out;
  for (const auto& def : kSuites) out.push_back(run_suite(def.name, opts));
  return out;
}

std::string report_json(const std::vector<SuiteResult>& results) {
  std::vector<const SuiteResult*> sorted;
  for (const auto& r : results) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const SuiteResult* a, const SuiteResult* b) { return a->name < b->name; });
  nlohmann::ordered_json root;
  auto suites = nlohmann::ordered_json::array();
  for (const SuiteResult* r : sorted) {
    nlohmann::ordered_json entry;
    entry["name"] = r->name;
    entry["asserted"] = r->asserted;
    entry["cases"] = r->cases;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : r->failures) {
      nlohmann::ordered_json fe;
      fe["params"] = f.params;
      fe["discrepancy"] = f.discrepancy
                              ? nlohmann::ordered_json::parse(render(*f.discrepancy, RenderFormat::json))
                              : nlohmann::ordered_json(nullptr);
      if (!f.detail.empty()) fe["detail"] = f.detail;
      failures.push_back(std::move(fe));
    }
    entry["failures"] = std::move(failures);
    if (!r->notes.empty()) entry["notes"] = r->notes;
    suites.push_back(std::move(entry));
  }
  root["suites"] = std::move(suites);
  return root.dump();
}

std::string bch_report_text(int cutoff) {
  if (cutoff < 1 || cutoff + 1 > FreeSeries::kMaxCutoff)
    throw std::invalid_argument("bch_report_text: cutoff must be in [1, " +
                                std::to_string(FreeSeries::kMaxCutoff - 1) + "]");
  std::ostringstream out;
  FreeSeries x = FreeSeries::generator_x(cutoff + 1);
  FreeSeries y = FreeSeries::generator_y(cutoff + 1);
  FreeSeries oracle = (x.exp() * y.exp()).log().linear_in_y();
  FreeSeries comm_form = bch_z1_commutator_form(cutoff);
  FreeSeries anti_form = bch_z1_anticommutator_form(cutoff);

  out << "Z1 = linear-in-Y part of log(exp(X) exp(Y)), cutoff " << cutoff + 1 << " letters\n\n";
  out << "brute-force series:\n  " << oracle.str() << "\n\n";
  out << "Bernoulli nested-commutator form sum (-1)^n (B_n/n!) ad_X^n(Y):\n  "
      << comm_form.str() << "\n";
  out << "  match: " << ((comm_form - oracle).is_zero() ? "yes" : "NO") << "\n\n";
  out << "literal anti-commutator reading sum (-1)^n (B_n/n!) {X^n, Y}:\n  " << anti_form.str()
      << "\n";
  FreeSeries diff = anti_form - oracle;
  out << "  match: " << (diff.is_zero() ? "yes" : "no (diagnostic)") << "\n";
  if (!diff.is_zero()) out << "  difference: " << diff.str() << "\n";
  return out.str();
}

}  // namespace weylkit

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lambda_lab/ev_periodic.hpp"

using namespace lambda_lab;

namespace {

const FieldSpec* f2() { return FieldSpec::get(2); }
const FieldSpec* f3() { return FieldSpec::get(3); }

EvPeriodic seq(const FieldSpec* k, std::vector<int> pre, std::vector<int> per) {
  std::vector<FieldElem> p, q;
  for (int c : pre) p.push_back(k->element(c));
  for (int c : per) q.push_back(k->element(c));
  return EvPeriodic::make(k, std::move(p), std::move(q));
}

}  // namespace

TEST_CASE("canonical form") {
  // the period is reduced to its primitive block
  EvPeriodic a = seq(f3(), {}, {1, 2, 1, 2});
  CHECK(a.period().size() == 2);
  CHECK(a == seq(f3(), {}, {1, 2}));

  // trailing preperiod entries matching the periodic value are absorbed
  EvPeriodic b = seq(f3(), {1, 2}, {1, 2});
  CHECK(b.preperiod().empty());
  CHECK(b == seq(f3(), {}, {1, 2}));

  // a genuinely needed preperiod survives
  EvPeriodic c = seq(f3(), {0, 2}, {1}));
  CHECK(c.preperiod().size() == 2);
}

TEST_CASE("canonicalization preserves values") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len_pre(0, 6), len_per(1, 8), elem(0, 2);
  for (int t = 0; t < 300; ++t) {
    std::vector<int> pre(len_pre(rng)), per(len_per(rng));
    for (int& c : pre) c = elem(rng);
    for (int& c : per) c = elem(rng);
    EvPeriodic f = seq(f3(), pre, per);
    for (size_t n = 0; n < pre.size() + 3 * per.size() + 2; ++n) {
      int expected = n < pre.size() ? pre[n] : per[(n - pre.size()) % per.size()];
      CHECK(f.at(n).index() == expected);
    }
    // canonicalization is idempotent
    EvPeriodic g = EvPeriodic::make(f3(), f.preperiod(), f.period());
    CHECK(g == f);
  }
}

TEST_CASE("frozen combine examples") {
  EvPeriodic alternating = seq(f3(), {}, {2, 1});
  CHECK(alternating + EvPeriodic::zero(f3()) == alternating);
  CHECK(EvPeriodic::one(f3()) + alternating == seq(f3(), {}, {0, 2}));
  CHECK(seq(f2(), {}, {1, 0}) + seq(f2(), {}, {0, 1}) == EvPeriodic::one(f2()));
}

TEST_CASE("support classification") {
  CHECK(EvPeriodic::zero(f3()).support_class() == SupportClass::finite);
  CHECK(EvPeriodic::delta(f3(), 5).support_class() == SupportClass::finite);
  CHECK(seq(f3(), {}, {2, 1}).support_class() == SupportClass::cofinite);
  CHECK(seq(f3(), {}, {0, 2}).support_class() == SupportClass::neither);
  CHECK(seq(f3(), {0, 0, 0}, {1}).support_class() == SupportClass::cofinite);

  // in-Λ′ membership drives the closure search
  CHECK(seq(f3(), {}, {2, 1}).in_lambda_prime());
  CHECK_FALSE(seq(f3(), {}, {0, 2}).in_lambda_prime());
}

TEST_CASE("pseudo inverse") {
  CHECK(EvPeriodic::one(f3()).pseudo_inverse() == EvPeriodic::one(f3()));
  CHECK(seq(f3(), {}, {2, 1}).pseudo_inverse() == seq(f3(), {}, {2, 1}));

  EvPeriodic g = seq(f3(), {0}, {1});
  CHECK(g.pseudo_inverse() == g);
  EvPeriodic defect = EvPeriodic::one(f3()) - g * g.pseudo_inverse();
  CHECK(defect == EvPeriodic::delta(f3(), 0));
  CHECK(defect.support_class() == SupportClass::finite);
}

TEST_CASE("localization of fractions") {
  // f/1 is the canonical tail of f
  EvPeriodic f = seq(f3(), {0, 0, 1}, {2, 1});
  EvPeriodic psi = localize_fraction(f, EvPeriodic::one(f3()));
  CHECK(psi.preperiod().empty());
  CHECK(mod_finite_equal(psi, f));

  // f/f is the class of 1
  EvPeriodic g = seq(f3(), {}, {2, 1});
  CHECK(mod_finite_equal(localize_fraction(g, g), EvPeriodic::one(f3())));

  // 1/g inverts the period pointwise
  CHECK(localize_fraction(EvPeriodic::one(f3()), g) == seq(f3(), {}, {2, 1}));

  CHECK_THROWS_AS(localize_fraction(f, EvPeriodic::delta(f3(), 1)), std::invalid_argument);
}

TEST_CASE("equality modulo finite support") {
  EvPeriodic f = seq(f3(), {1, 1}, {2, 0, 1});
  CHECK(mod_finite_equal(f, f + EvPeriodic::delta(f3(), 5)));
  CHECK_FALSE(mod_finite_equal(EvPeriodic::one(f3()), EvPeriodic::constant(f3()->element(2))));

  // phase-shifted tails coincide beyond the preperiod
  EvPeriodic a = seq(f3(), {0, 2, 2, 1, 0, 1, 2}, {1, 2});
  EvPeriodic b = seq(f3(), {}, {2, 1});
  CHECK(mod_finite_equal(a, b));
  CHECK(a.canonical_tail() == b);

  // but a pure phase flip is a different class
  CHECK_FALSE(mod_finite_equal(seq(f3(), {}, {1, 2}), seq(f3(), {}, {2, 1})));
}

TEST_CASE("length caps") {
  std::vector<FieldElem> big_per(65, f3()->element(1));
  big_per[3] = f3()->element(2);  // keep it primitive
  CHECK_THROWS_AS(EvPeriodic::make(f3(), {}, big_per), std::overflow_error);

  // an lcm blowup in combine is rejected, not silently truncated
  std::vector<int> p63(63, 1), p62(62, 1);
  p63[0] = 2;
  p62[1] = 2;
  EvPeriodic a = seq(f3(), {}, p63);
  EvPeriodic b = seq(f3(), {}, p62);
  REQUIRE(a.period().size() == 63);
  REQUIRE(b.period().size() == 62);
  CHECK_THROWS_AS(a + b, std::overflow_error);
}

TEST_CASE("lambda prime closure") {
  ClosureReport c2 = lambda_prime_closure_test(f2(), 500, 42);
  CHECK(c2.closed);
  CHECK_FALSE(c2.counterexample.has_value());

  ClosureReport c3 = lambda_prime_closure_test(f3(), 500, 42);
  REQUIRE_FALSE(c3.closed);
  CHECK(c3.counterexample->f == EvPeriodic::one(f3()));
  CHECK(c3.counterexample->g == seq(f3(), {}, {2, 1}));
  CHECK((c3.counterexample->f + c3.counterexample->g).support_class() == SupportClass::neither);

  ClosureReport c5 = lambda_prime_closure_test(FieldSpec::get(5), 500, 42);
  REQUIRE_FALSE(c5.closed);
  EvPeriodic sum = c5.counterexample->f + c5.counterexample->g;
  CHECK(c5.counterexample->f.in_lambda_prime());
  CHECK(c5.counterexample->g.in_lambda_prime());
  CHECK_FALSE(sum.in_lambda_prime());
}

TEST_CASE("parsing and printing") {
  EvPeriodic f = EvPeriodic::parse(f3(), "0;2,1");
  CHECK(f.preperiod().size() == 1);
  CHECK(f.period().size() == 2);
  CHECK(f.to_string() == "0;2,1");
  CHECK(EvPeriodic::parse(f3(), ";1") == EvPeriodic::one(f3()));
  CHECK_THROWS_AS(EvPeriodic::parse(f3(), "1,2"), std::invalid_argument);
  CHECK_THROWS_AS(EvPeriodic::parse(f3(), "0;"), std::invalid_argument);
  CHECK_THROWS_AS(EvPeriodic::parse(f3(), "0;9"), std::invalid_argument);
}

TEST_CASE("mixed field arithmetic is rejected") {
  CHECK_THROWS_WITH_AS(EvPeriodic::one(f2()) + EvPeriodic::one(f3()), "field mismatch",
                       std::invalid_argument);
}

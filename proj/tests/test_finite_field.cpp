#include <doctest.h>

#include <set>
#include <stdexcept>

#include "lambda_lab/finite_field.hpp"

using namespace lambda_lab;

TEST_CASE("spec construction and stock moduli") {
  CHECK(FieldSpec::get(2)->order() == 2);
  CHECK(FieldSpec::get(7)->order() == 7);
  CHECK(FieldSpec::get(2, 2)->modulus() == std::vector<int>{1, 1, 1});
  CHECK(FieldSpec::get(2, 3)->modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(FieldSpec::get(3, 2)->modulus() == std::vector<int>{1, 0, 1});
  CHECK(FieldSpec::get(5, 2)->modulus() == std::vector<int>{2, 0, 1});
  CHECK(FieldSpec::get(3, 3)->modulus() == std::vector<int>{1, 2, 0, 1});
  CHECK(FieldSpec::get(2, 6)->order() == 64);

  // interning: same parameters, same spec
  CHECK(FieldSpec::get(2, 2) == FieldSpec::parse("2^2"));
  CHECK(FieldSpec::get(2, 2, {1, 1, 1}) == FieldSpec::get(2, 2));
  CHECK(FieldSpec::get(3) == FieldSpec::parse("3"));
}

TEST_CASE("parse rejects non prime powers") {
  CHECK_THROWS_WITH_AS(FieldSpec::parse("6"), "6 is not a prime power ≤ 64",
                       std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("2^7"), std::invalid_argument);  // 128 > 64
  CHECK_THROWS_AS(FieldSpec::parse("67"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse(""), std::invalid_argument);
}

TEST_CASE("custom modulus validation") {
  // t^2 + 1 = (t+1)^2 over F_2, reducible
  CHECK_THROWS_AS(FieldSpec::get(2, 2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::get(2, 2, {1, 1, 2}), std::invalid_argument);  // not monic mod 2
  // an alternative irreducible representation of F_9: t^2 + t + 2
  const FieldSpec* f9b = FieldSpec::get(3, 2, {2, 1, 1});
  CHECK(f9b->order() == 9);
  CHECK(f9b != FieldSpec::get(3, 2));
  CHECK(f9b->frobenius_fixed());
}

TEST_CASE("frozen arithmetic examples") {
  const FieldSpec* f2 = FieldSpec::get(2);
  const FieldSpec* f3 = FieldSpec::get(3);
  const FieldSpec* f4 = FieldSpec::get(2, 2);
  const FieldSpec* f5 = FieldSpec::get(5);
  const FieldSpec* f9 = FieldSpec::get(3, 2);
  FieldElem t4 = f4->element({0, 1});
  FieldElem t9 = f9->element({0, 1});

  CHECK(f3->element(2) + f3->element(2) == f3->element(1));
  CHECK(t4 + t4 == f4->zero());
  CHECK(f9->element({1, 1}) + f9->element({2, 2}) == f9->zero());

  CHECK(t4 * t4 == f4->element({1, 1}));  // t^2 reduces to t+1
  CHECK(f5->element(3) * f5->element(2) == f5->one());
  CHECK(t9 * t9 == f9->element(2));  // t^2 = -1 = 2

  CHECK(f5->element(3).inverse() == f5->element(2));
  CHECK(f2->one().inverse() == f2->one());
  CHECK(t4.inverse() == f4->element({1, 1}));

  CHECK_THROWS_WITH_AS(f5->zero().inverse(), "division by zero", std::domain_error);
  CHECK_THROWS_WITH_AS(f2->one() + f3->one(), "field mismatch", std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (const FieldSpec* k :
       {FieldSpec::get(2), FieldSpec::get(3), FieldSpec::get(2, 2), FieldSpec::get(5),
        FieldSpec::get(7), FieldSpec::get(2, 3), FieldSpec::get(3, 2), FieldSpec::get(11),
        FieldSpec::get(13), FieldSpec::get(2, 4)}) {
    int q = k->order();
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        FieldElem fa = k->element(a), fb = k->element(b);
        CHECK(fa + fb == fb + fa);
        CHECK(fa * fb == fb * fa);
        CHECK(fa - fb == fa + (-fb));
        for (int c = 0; c < q; ++c) {
          FieldElem fc = k->element(c);
          CHECK((fa + fb) + fc == fa + (fb + fc));
          CHECK((fa * fb) * fc == fa * (fb * fc));
          CHECK(fa * (fb + fc) == fa * fb + fa * fc);
        }
      }
    int nonzero = 0;
    for (int a = 0; a < q; ++a) {
      FieldElem fa = k->element(a);
      if (!fa.is_zero()) {
        ++nonzero;
        CHECK(fa * fa.inverse() == k->one());
        CHECK(fa.pow(q - 1) == k->one());
      }
    }
    CHECK(nonzero == q - 1);
  }
}

TEST_CASE("frobenius fixed for every constructible spec") {
  std::set<int> orders;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
    for (int k = 1;; ++k) {
      long long q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      if (q > 64) break;
      const FieldSpec* spec = FieldSpec::get(p, k);
      CHECK(spec->frobenius_fixed());
      orders.insert(spec->order());
    }
  CHECK(orders.count(2) == 1);
  CHECK(orders.count(9) == 1);
  CHECK(orders.count(64) == 1);
}

TEST_CASE("element printing") {
  const FieldSpec* f4 = FieldSpec::get(2, 2);
  CHECK(f4->zero().to_string() == "0");
  CHECK(f4->one().to_string() == "1");
  CHECK(f4->element({0, 1}).to_string() == "t");
  CHECK(f4->element({1, 1}).to_string() == "t+1");
  CHECK(FieldSpec::get(3)->element(2).to_string() == "2");
  CHECK(FieldSpec::get(3, 3)->element({1, 0, 2}).to_string() == "2t^2+1");
}

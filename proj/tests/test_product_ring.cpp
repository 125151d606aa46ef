#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "lambda_lab/product_ring.hpp"

using namespace lambda_lab;

namespace {

Ring f3_abc() { return IndexSet::make({{"a", "3"}, {"b", "3"}, {"c", "3"}}); }

ProdElem elem(const Ring& r, std::vector<int> indices) {
  std::vector<FieldElem> coords;
  for (int i = 0; i < r->size(); ++i) coords.push_back(r->field(i)->element(indices.at(i)));
  return ProdElem(r, std::move(coords));
}

}  // namespace

TEST_CASE("index set construction") {
  Ring r = IndexSet::make({{"a", "2"}, {"b", "3"}, {"c", "2^2"}});
  CHECK(r->size() == 3);
  CHECK(r->cardinality() == 24);
  CHECK(r->field(2)->order() == 4);
  CHECK(r->describe() == "a:2 b:3 c:2^2");
  CHECK(r->require_position("b") == 1);
  CHECK_THROWS_WITH_AS(r->require_position("z"), "unknown label z", std::invalid_argument);
  CHECK_THROWS_AS(IndexSet::make({{"a", "2"}, {"a", "3"}}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet::make({}), std::invalid_argument);
}

TEST_CASE("support basics") {
  Ring r = f3_abc();
  CHECK(r->zero().support().empty());
  CHECK(r->one().support().full());
  ProdElem f = elem(r, {1, 0, 2});
  CHECK(f.support() == r->subset_of_labels({"a", "c"}));
  CHECK(r->subset_to_string(f.support()) == "{a,c}");
}

TEST_CASE("support laws under multiplication and addition") {
  Ring r2 = IndexSet::make({{"a", "2"}, {"b", "2"}});
  ProdElem f = elem(r2, {1, 0}), g = elem(r2, {0, 1});
  CHECK((f * g) == r2->zero());
  CHECK((f * g).support().empty());

  // additivity fails: over one F_3 point, (1) + (2) = 0
  Ring r1 = IndexSet::make({{"a", "3"}});
  CHECK((elem(r1, {1}) + elem(r1, {2})) == r1->zero());

  // and lands strictly between the bounds: (1,1) + (1,2) = (2,0)
  Ring r3 = IndexSet::make({{"a", "3"}, {"b", "3"}});
  ProdElem s = elem(r3, {1, 1}) + elem(r3, {1, 2});
  CHECK(s == elem(r3, {2, 0}));
  CHECK(s.support() == Subset(0b01, 2));

  // exhaustive two-sided containment on a mixed ring
  Ring rm = IndexSet::make({{"a", "2"}, {"b", "3"}, {"c", "2^2"}});
  for (std::uint64_t i = 0; i < rm->cardinality(); ++i)
    for (std::uint64_t j = 0; j < rm->cardinality(); ++j) {
      ProdElem x = rm->element_at(i), y = rm->element_at(j);
      CHECK((x * y).support() == (x.support() & y.support()));
      Subset sum = (x + y).support();
      CHECK((x.support() ^ y.support()).subset_of(sum));
      CHECK(sum.subset_of(x.support() | y.support()));
    }
}

TEST_CASE("units") {
  Ring r = IndexSet::make({{"a", "3"}, {"b", "3"}});
  CHECK(r->one().is_unit());
  CHECK_FALSE(r->delta(0).is_unit());
  ProdElem f = elem(r, {2, 1});
  CHECK(f.is_unit());
  CHECK(f.inverse() == elem(r, {2, 1}));
  CHECK(f * f.inverse() == r->one());
  CHECK_THROWS_AS(r->delta(0).inverse(), std::domain_error);

  // is_unit(f) iff some g has fg = 1, exhaustively
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    ProdElem x = r->element_at(i);
    bool has_inverse = false;
    for (std::uint64_t j = 0; j < r->cardinality(); ++j)
      if (x * r->element_at(j) == r->one()) has_inverse = true;
    CHECK(x.is_unit() == has_inverse);
  }
}

TEST_CASE("deltas") {
  Ring r = f3_abc();
  CHECK(r->delta("b") == elem(r, {0, 1, 0}));
  CHECK(r->delta(0) * r->delta(1) == r->zero());
  CHECK(r->delta(2) * r->delta(2) == r->delta(2));
  ProdElem sum = r->zero();
  for (int x = 0; x < r->size(); ++x) sum = sum + r->delta(x);
  CHECK(sum == r->one());
  CHECK_THROWS_AS(r->delta("z"), std::invalid_argument);
}

TEST_CASE("principal ideal matches the multiples oracle") {
  Ring r = IndexSet::make({{"a", "2"}, {"b", "2"}});
  ProdElem f = elem(r, {1, 0});
  SupportIdeal ideal = SupportIdeal::principal(f);
  std::set<std::uint64_t> multiples;
  for (std::uint64_t i = 0; i < r->cardinality(); ++i)
    multiples.insert(r->rank_of(r->element_at(i) * f));
  CHECK(multiples.size() == 2);  // {(0,0), (1,0)}
  for (std::uint64_t i = 0; i < r->cardinality(); ++i)
    CHECK(ideal.contains(r->element_at(i)) == (multiples.count(i) > 0));

  CHECK(SupportIdeal::principal(r->zero()).cardinality() == 1);
  CHECK(SupportIdeal::principal(r->one()).cardinality() == r->cardinality());

  // all rings over |X| <= 2 with mixed small fields
  for (const char* fa : {"2", "3", "2^2"})
    for (const char* fb : {"2", "3", "2^2"}) {
      Ring rm = IndexSet::make({{"a", fa}, {"b", fb}});
      for (std::uint64_t i = 0; i < rm->cardinality(); ++i) {
        ProdElem g = rm->element_at(i);
        SupportIdeal gi = SupportIdeal::principal(g);
        std::set<std::uint64_t> mult;
        for (std::uint64_t j = 0; j < rm->cardinality(); ++j)
          mult.insert(rm->rank_of(rm->element_at(j) * g));
        for (std::uint64_t j = 0; j < rm->cardinality(); ++j)
          CHECK(gi.contains(rm->element_at(j)) == (mult.count(j) > 0));
      }
    }
}

TEST_CASE("division witness") {
  Ring r = IndexSet::make({{"a", "3"}, {"b", "3"}, {"c", "2"}});
  ProdElem f = elem(r, {2, 1, 1});
  ProdElem h = elem(r, {1, 0, 1});
  ProdElem w = division_witness(h, f);
  CHECK(w * f == h);
  CHECK_THROWS_AS(division_witness(f, h), std::invalid_argument);  // Su(f) ⊄ Su(h)
}

TEST_CASE("ideal equality is support equality") {
  Ring r = IndexSet::make({{"a", "3"}, {"b", "3"}});
  ProdElem f = elem(r, {1, 0});
  CHECK(ideal_equal(f, f * f));
  CHECK(ideal_equal(f, elem(r, {2, 0})));
  CHECK_FALSE(ideal_equal(f, elem(r, {0, 1})));
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    ProdElem g = r->element_at(i);
    for (int n = 1; n <= 5; ++n) CHECK(ideal_equal(g, g.pow(n)));
  }
}

TEST_CASE("maximal ideals") {
  Ring r1 = IndexSet::make({{"a", "5"}});
  CHECK(SupportIdeal::maximal(r1, 0).cardinality() == 1);  // Λ is a field

  Ring r2 = IndexSet::make({{"a", "2"}, {"b", "2"}});
  SupportIdeal ma = SupportIdeal::maximal(r2, "a");
  CHECK(ma.cardinality() == 2);
  CHECK(ma.contains(r2->zero()));
  CHECK(ma.contains(elem(r2, {0, 1})));
  CHECK_FALSE(ma.contains(elem(r2, {1, 0})));

  // f = f(1-Δ_x) for members
  Ring r3 = IndexSet::make({{"a", "3"}, {"b", "2"}, {"c", "3"}});
  for (int x = 0; x < r3->size(); ++x) {
    SupportIdeal mx = SupportIdeal::maximal(r3, x);
    ProdElem gen = r3->one() - r3->delta(x);
    for (const ProdElem& f : mx.members()) CHECK(f == f * gen);
  }

  // ⋂_x 𝔪_x = 0 over F_2^3
  Ring r4 = IndexSet::make({{"a", "2"}, {"b", "2"}, {"c", "2"}});
  for (std::uint64_t i = 0; i < r4->cardinality(); ++i) {
    ProdElem f = r4->element_at(i);
    bool in_all = true;
    for (int x = 0; x < r4->size(); ++x) in_all = in_all && SupportIdeal::maximal(r4, x).contains(f);
    CHECK(in_all == (f == r4->zero()));
  }
}

TEST_CASE("quotients") {
  Ring r = f3_abc();
  Projection q1 = quotient_by(r->one());
  CHECK(q1.target->cardinality() == 1);  // the zero ring

  Projection q0 = quotient_by(r->zero());
  CHECK(q0.target->cardinality() == r->cardinality());
  CHECK(q0.apply(elem(r, {1, 2, 0})) == elem(q0.target, {1, 2, 0}));

  ProdElem f = elem(r, {2, 0, 0});  // supported on {a}
  Projection q = quotient_by(f);
  CHECK(q.target->cardinality() == 9);  // |K_b|·|K_c|
  SupportIdeal ideal = SupportIdeal::principal(f);
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    ProdElem h = r->element_at(i);
    CHECK((q.apply(h) == q.target->zero()) == ideal.contains(h));
  }
}

TEST_CASE("disjoint support splitting") {
  Ring r = f3_abc();
  ProdElem f = elem(r, {1, 0, 0});
  ProdElem g = elem(r, {0, 2, 1});
  CHECK_THROWS_WITH_AS(split_disjoint(f, f), "supports overlap", std::invalid_argument);

  SplitWitness w = split_disjoint(f, g);
  CHECK(w.joint->cardinality() == 27);
  CHECK(w.left->cardinality() == 3);
  CHECK(w.right->cardinality() == 9);

  // exhaustive 27-element bijective ring morphism check
  std::set<std::pair<std::uint64_t, std::uint64_t>> images;
  for (std::uint64_t i = 0; i < w.joint->cardinality(); ++i) {
    ProdElem u = w.joint->element_at(i);
    auto [a, b] = w.forward(u);
    images.insert({w.left->rank_of(a), w.right->rank_of(b)});
    CHECK(w.backward(a, b) == u);
    for (std::uint64_t j = 0; j < w.joint->cardinality(); ++j) {
      ProdElem v = w.joint->element_at(j);
      auto [ua, ub] = w.forward(u);
      auto [va, vb] = w.forward(v);
      auto [sa, sb] = w.forward(u + v);
      auto [ma, mb] = w.forward(u * v);
      CHECK(sa == ua + va);
      CHECK(sb == ub + vb);
      CHECK(ma == ua * va);
      CHECK(mb == ub * vb);
    }
  }
  CHECK(images.size() == 27);
  auto [one_l, one_r] = w.forward(w.joint->one());
  CHECK(one_l == w.left->one());
  CHECK(one_r == w.right->one());

  // f = 0: the left factor is the zero ring
  SplitWitness w0 = split_disjoint(r->zero(), g);
  CHECK(w0.left->cardinality() == 1);
  CHECK(w0.joint->cardinality() == w0.right->cardinality());
}

TEST_CASE("element enumeration round trip") {
  Ring r = IndexSet::make({{"a", "2"}, {"b", "5"}, {"c", "2^2"}});
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    CHECK(r->rank_of(r->element_at(i)) == i);
    seen.insert(i);
  }
  CHECK(seen.size() == r->cardinality());

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    ProdElem f = r->random_element(rng);
    CHECK(r->element_at(r->rank_of(f)) == f);
  }
}

TEST_CASE("ring mismatch errors") {
  Ring r1 = IndexSet::make({{"a", "2"}});
  Ring r2 = IndexSet::make({{"b", "2"}});
  CHECK_THROWS_WITH_AS(r1->one() + r2->one(), "ring mismatch", std::invalid_argument);
  // structurally equal rings interoperate even as distinct instances
  Ring r3 = IndexSet::make({{"a", "2"}});
  CHECK(r1->one() + r3->one() == r1->zero());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dexter/monoid.hpp"
#include "dexter/order.hpp"

using namespace dexter;

namespace {

DyckPath P(std::string_view s) { return DyckPath::parse(s); }
PseudoDyckPath Q(std::string_view s) { return PseudoDyckPath::parse(s); }

std::vector<PseudoDyckPath> pseudo_paths_up_to(int n) {
  std::vector<PseudoDyckPath> out;
  for (int m = 1; m <= n; ++m)
    for (const DyckPath& w : all_paths(m)) out.push_back(w.inner());
  return out;
}

std::vector<IntervalRef> intervals_of(int n) {
  const DyckPoset& d = shared_poset(n);
  std::vector<IntervalRef> out;
  for (const DyckPath& u : d.elements())
    for (int v : d.up_set_of(u))
      out.push_back(IntervalRef{u, d.element(v)});
  return out;
}

}  // namespace

TEST_CASE("star basics") {
  CHECK(star(Q("10"), Q("01")) == Q("1001"));
  CHECK(star(Q("0110"), Q("1010")) == Q("01110100"));
  PseudoDyckPath unit;
  for (const PseudoDyckPath& v : pseudo_paths_up_to(5)) {
    CHECK(star(unit, v) == v);
    CHECK(star(v, unit) == v);
  }
}

TEST_CASE("star associativity") {
  auto small = pseudo_paths_up_to(4);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small)
        CHECK(star(star(a, b), c) == star(a, star(b, c)));

  std::mt19937_64 rng(20240614);
  auto big = pseudo_paths_up_to(8);
  std::uniform_int_distribution<size_t> pick(0, big.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& a = big[pick(rng)];
    const auto& b = big[pick(rng)];
    const auto& c = big[pick(rng)];
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
  }
}

TEST_CASE("sharp basics") {
  CHECK(sharp(P("1100"), P("1100")) == P("111000"));
  CHECK_THROWS_AS(sharp(DyckPath(), P("10")), empty_operand);
  for (int n = 1; n <= 6; ++n)
    for (const DyckPath& w : all_paths(n)) {
      CHECK(sharp(P("10"), w) == w);
      CHECK(sharp(w, P("10")) == w);
    }
  SUBCASE("grading") {
    for (const DyckPath& u : all_paths(3))
      for (const DyckPath& v : all_paths(4))
        CHECK(sharp(u, v).size() == 6);
  }
  SUBCASE("concatenation glues through the separator") {
    for (int a = 1; a <= 5; ++a)
      for (const DyckPath& u : all_paths(a))
        for (int b = 1; b + a <= 10; ++b)
          for (const DyckPath& v : all_paths(b))
            CHECK(star(star(u.inner(), Q("01")), v.inner()) ==
                  concat(u, v).inner());
  }
}

TEST_CASE("sharp factorization") {
  CHECK(sharp_factor(P("10")).empty());
  CHECK(sharp_factor(P("1010")) == std::vector<DyckPath>{P("1010")});
  CHECK_THROWS_AS(sharp_factor(DyckPath()), empty_operand);
  for (int n = 1; n <= 9; ++n)
    for (const DyckPath& w : all_paths(n)) {
      auto factors = sharp_factor(w);
      for (const DyckPath& f : factors) CHECK(is_sharp_generator(f));
      CHECK(sharp_product(factors) == w);
    }
}

TEST_CASE("cover compatibility on both sides") {
  for (int a = 1; a <= 5; ++a) {
    for (const DyckPath& u : all_paths(a)) {
      for (int b = 1; b <= 5; ++b) {
        for (const DyckPath& w : all_paths(b)) {
          for (const Cover& c : covers(w)) {
            auto left = covers(sharp(u, w));
            CHECK(std::count_if(left.begin(), left.end(),
                                [&](const Cover& k) {
                                  return k.target == sharp(u, c.target);
                                }) == 1);
            auto right = covers(sharp(w, u));
            CHECK(std::count_if(right.begin(), right.end(),
                                [&](const Cover& k) {
                                  return k.target == sharp(c.target, u);
                                }) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("covers never split sharp factors") {
  for (int n = 1; n <= 7; ++n)
    for (const DyckPath& w : all_paths(n)) {
      size_t factors = sharp_factor(w).size();
      for (const Cover& c : covers(w))
        CHECK(sharp_factor(c.target).size() <= factors);
    }
}

TEST_CASE("interval monoid") {
  IntervalRef unit = interval_unit();
  IntervalRef gen{P("1010"), P("1100")};
  CHECK(interval_product(unit, gen) == gen);
  CHECK(interval_product(gen, unit) == gen);
  CHECK_THROWS_AS(interval_product(IntervalRef{P("1100"), P("1010")}, unit),
                  not_an_interval);

  SUBCASE("products of generator intervals stay valid") {
    std::vector<IntervalRef> generators;
    for (int n = 2; n <= 6; ++n)
      for (const IntervalRef& ref : intervals_of(n))
        if (is_interval_generator(ref)) generators.push_back(ref);
    for (const IntervalRef& a : generators)
      for (const IntervalRef& b : generators) {
        if (a.size() + b.size() - 1 > 7) continue;
        IntervalRef prod = interval_product(a, b);
        CHECK(is_interval(prod));
        CHECK(sharp_factor(prod.top).size() ==
              sharp_factor(a.top).size() + sharp_factor(b.top).size());
      }
  }
}

TEST_CASE("interval factorization roundtrip") {
  for (int n = 1; n <= 6; ++n) {
    for (const IntervalRef& ref : intervals_of(n)) {
      auto factors = interval_factor(ref);
      for (const IntervalRef& f : factors) {
        CHECK(is_interval_generator(f));
        CHECK(is_interval(f));
      }
      CHECK(interval_sharp_product(factors) == ref);
    }
  }
}

TEST_CASE("generator counts match the printed sequence") {
  std::vector<long long> expected{3, 3, 11, 51, 267, 1507};
  for (int n = 2; n <= 7; ++n)
    CHECK(interval_generator_count(n) ==
          expected[static_cast<size_t>(n - 2)]);
  SUBCASE("counts agree with filtering all intervals") {
    for (int n = 2; n <= 6; ++n) {
      long long filtered = 0;
      for (const IntervalRef& ref : intervals_of(n))
        if (is_interval_generator(ref)) ++filtered;
      CHECK(filtered == interval_generator_count(n));
    }
  }
}

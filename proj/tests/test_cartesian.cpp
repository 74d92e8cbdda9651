#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "evalcode/cartesian.hpp"
#include "oracle.hpp"
#include "random_sets.hpp"

using namespace evalcode;

namespace {

DefiningSet one_var(const JAffineFamily& fam, std::initializer_list<std::uint64_t> xs) {
  std::vector<Exponent> v;
  for (auto x : xs) v.push_back({x});
  return {fam, v};
}

JAffineFamily f16_units() { return JAffineFamily(make_field(2, 4), {16}, {0}); }

}  // namespace

TEST_CASE("point sets") {
  auto a = point_set(f16_units());
  CHECK(a.size() == 15);
  std::set<Elem> units;
  for (const auto& p : a) units.insert(p[0]);
  CHECK(units.size() == 15);
  CHECK(!units.count(0));

  JAffineFamily b(make_field(2, 3), {8, 8}, {0, 1});
  auto pb = point_set(b);
  CHECK(pb.size() == 49);
  for (const auto& p : pb) CHECK((p[0] != 0 && p[1] != 0));

  JAffineFamily c(make_field(2, 4), {16, 4, 2}, {});
  CHECK(point_set(c).size() == 128);
  CHECK(c.length() == 128);
  // Z_2 for N = 4 is {0} with the cube roots of unity.
  for (auto x : c.coordinate_points(1)) CHECK(make_field(2, 4)->pow(x, 4) == x);

}

TEST_CASE("family validation") {
  CHECK_NOTHROW(JAffineFamily(make_field(2, 4), {6}, {}));
  CHECK_THROWS(JAffineFamily(make_field(2, 4), {5}, {}));
  CHECK_THROWS(JAffineFamily(make_field(2, 4), {16}, {1}));
  CHECK_THROWS(JAffineFamily(make_field(2, 4), {16, 16}, {0, 0}));
  CHECK_THROWS(JAffineFamily(make_field(2, 4), {1}, {}));
  CHECK_THROWS(DefiningSet(f16_units(), {{15}}));
}

TEST_CASE("evaluation gives dimension |delta|") {
  auto fam = JAffineFamily(make_field(7, 2), {49, 7}, {});
  DefiningSet d(fam, {{0, 0}, {0, 1}, {0, 2}});
  auto c = evaluate(d);
  CHECK(c.length() == 343);
  CHECK(c.dimension() == 3);
  CHECK(subfield_subcode(c, 1).dimension() == 3);
  auto rep = evaluate(DefiningSet(fam, {{0, 0}}));
  CHECK(rep.dimension() == 1);
  CHECK(weight(rep.generator()[0]) == 343);
  auto small = JAffineFamily(make_field(2, 2), {4, 4}, {1});
  CHECK(evaluate(DefiningSet::full(small)).dimension() == 12);
}

TEST_CASE("bar reduction") {
  auto fam = JAffineFamily(make_field(2, 4), {16, 16}, {0});
  CHECK(bar_reduce(fam, {20, 30}) == Exponent{5, 15});
  CHECK(bar_reduce(fam, {0, 0}) == Exponent{0, 0});
  CHECK(bar_reduce(fam, {15, 16}) == Exponent{0, 1});
  // Pointwise agreement with the unreduced monomial.
  const auto& f = *fam.field();
  auto pts = point_set(fam);
  Exponent e{37, 44};
  auto red = bar_reduce(fam, e);
  auto row = evaluation_row(fam, red);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(row[i] == f.mul(f.pow(pts[i][0], e[0]), f.pow(pts[i][1], e[1])));
}

TEST_CASE("minkowski schur examples") {
  auto fam = f16_units();
  auto d1 = one_var(fam, {1, 2, 4, 8});
  CHECK(minkowski_schur(d1, one_var(fam, {0})) == d1);
  CHECK(minkowski_schur(one_var(fam, {0, 1}), one_var(fam, {0, 1})) == one_var(fam, {0, 1, 2}));
  // Re-identify the monomial span of the matrix product.
  auto prod = schur(evaluate(one_var(fam, {0, 1})), evaluate(one_var(fam, {0, 1})));
  CHECK(prod == evaluate(one_var(fam, {0, 1, 2})));
}

TEST_CASE("minkowski schur agrees with the matrix schur product") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 40; ++it) {
    auto fam = testsets::random_family(rng, 200);
    auto a = testsets::random_set(fam, rng);
    auto b = testsets::random_set(fam, rng);
    CAPTURE(fam.describe());
    REQUIRE(evaluate(minkowski_schur(a, b)) == schur(evaluate(a), evaluate(b)));
  }
}

TEST_CASE("combinatorial dual examples") {
  auto fam = f16_units();
  CHECK(delta_dual(one_var(fam, {1, 2, 4, 8})) == one_var(fam, {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}));
  CHECK(delta_dual(one_var(fam, {0})) == one_var(fam, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}));
  auto toric = JAffineFamily(make_field(2, 3), {8, 8}, {0, 1});
  CHECK(delta_dual(DefiningSet::full(toric)).empty());
  CHECK(evaluate(delta_dual(DefiningSet::full(toric))).dimension() == 0);
}

TEST_CASE("combinatorial dual agrees with the matrix dual inside E'") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 40; ++it) {
    auto fam = testsets::random_family(rng, 200, true);
    auto d = testsets::random_set(fam, rng, true);
    CAPTURE(fam.describe());
    CAPTURE(d.to_string());
    auto dd = delta_dual(d);
    CHECK(dd.size() + d.size() == fam.length());
    REQUIRE(dual(evaluate(d)) == evaluate(dd));
  }
}

TEST_CASE("outside E' the combinatorial dual spans a subcode of the dual") {
  std::mt19937_64 rng(23);
  int outside = 0;
  for (int it = 0; it < 60; ++it) {
    auto fam = testsets::random_family(rng, 200, true);
    auto d = testsets::random_set(fam, rng);
    if (std::all_of(d.begin(), d.end(), [&](const Exponent& e) { return fam.in_E_prime(e); })) continue;
    ++outside;
    REQUIRE(contains(dual(evaluate(d)), evaluate(delta_dual(d))));
  }
  CHECK(outside > 10);
  // The opposite inclusion fails already for q = 2, N = 2, delta = {1}.
  auto fam = JAffineFamily(make_field(2, 1), {2}, {});
  auto d = DefiningSet(fam, {{1}});
  CHECK(!contains(evaluate(delta_dual(d)), dual(evaluate(d))));
}

TEST_CASE("footprint bound examples") {
  CHECK(footprint_bound(delta_wrm(2, 7, 5, {1, 2, 2, 2, 2, 2, 2})) == 16);
  CHECK(footprint_bound(delta_hyperbolic(7, 2, 5)) == 5);
  auto fam = JAffineFamily(make_field(2, 4), {16, 4}, {1});
  CHECK(footprint_bound(DefiningSet(fam, {{0, 0}})) == fam.length());
  CHECK_THROWS(footprint_bound(DefiningSet::empty(fam)));
}

TEST_CASE("reed-muller style sets") {
  auto rm = delta_rm(2, 7, 1);
  CHECK(rm.size() == 8);
  CHECK(rm_distance(2, 7, 1) == 64);
  CHECK(footprint_bound(rm) == 64);
  CHECK(delta_wrm(2, 7, 5, {1, 2, 2, 2, 2, 2, 2}).size() == 44);
  auto hyp = evaluate(delta_hyperbolic(7, 2, 5));
  CHECK(hyp.length() == 49);
  CHECK(hyp.dimension() == 41);
  CHECK(delta_hyperbolic_dual(7, 2, 5).size() == 8);
  CHECK(dual(hyp) == evaluate(delta_hyperbolic_dual(7, 2, 5)));
  CHECK_THROWS(delta_wrm(2, 3, 2, {2, 1, 1}));
  for (std::uint64_t q : {2, 3, 4, 5, 7})
    for (std::size_t m : {1, 2, 3})
      for (std::uint64_t s = 0; s <= m * (q - 1); ++s) {
        if (std::pow(double(q), double(m)) > 400) continue;
        REQUIRE(footprint_bound(delta_rm(q, m, s)) == rm_distance(q, m, s));
      }
}

TEST_CASE("decreasing sets") {
  auto fam = affine_space(4, 2);
  CHECK(is_decreasing(delta_rm(4, 2, 3)));
  CHECK(is_decreasing(delta_wrm(4, 2, 4, {1, 2})));
  CHECK(is_decreasing(delta_hyperbolic(4, 2, 5)));
  CHECK(!is_decreasing(DefiningSet(fam, {{1, 0}})));
  CHECK(!is_decreasing(one_var(f16_units(), {1, 2, 4, 8})));
  CHECK(decreasing_core(DefiningSet(fam, {{0, 0}, {1, 0}, {1, 1}, {2, 2}})) == DefiningSet(fam, {{0, 0}, {1, 0}}));
}

TEST_CASE("wrm nesting") {
  CHECK(wrm_nesting(5, 7, {1, 2, 2, 2, 2, 2, 2}) == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(wrm_nesting(3, 5, {1, 1, 1, 1, 1}) == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(wrm_nesting(0, 4, {1, 1, 2, 3}) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK_THROWS(wrm_nesting(3, 2, {2, 1}));
}

TEST_CASE("footprint witness") {
  auto rm = delta_rm(2, 7, 1);
  auto w = footprint_witness(rm);
  CHECK(w.weight == 64);
  CHECK(weight(w.word) == 64);
  CHECK(evaluate(rm).contains_word(w.word));
  auto hyp = delta_hyperbolic(7, 2, 4);
  auto hw = footprint_witness(hyp);
  CHECK(hw.weight == 4);
  CHECK(weight(hw.word) == 4);
  CHECK(evaluate(hyp).contains_word(hw.word));
  auto fam = JAffineFamily(make_field(2, 3), {8, 8}, {0});
  auto rep = footprint_witness(DefiningSet(fam, {{0, 0}}));
  CHECK(weight(rep.word) == fam.length());
  CHECK_THROWS(footprint_witness(DefiningSet(fam, {{1, 0}})));
}

TEST_CASE("bounds never exceed the exact distance") {
  std::mt19937_64 rng(24);
  SearchBudget budget;
  for (int it = 0; it < 60; ++it) {
    auto fam = testsets::random_family(rng, 64);
    auto d = testsets::random_set(fam, rng);
    auto c = evaluate(d);
    if (c.dimension() == 0) continue;
    auto ex = exhaustive_distance(c, budget.enumeration_cap);
    if (!ex) continue;
    CAPTURE(fam.describe());
    CAPTURE(d.to_string());
    CHECK(footprint_bound(d) <= ex->upper);
    CHECK(equivalent_footprint_bound(d) <= ex->upper);
    CHECK(multiplicative_bound(d) <= ex->upper);
    if (is_decreasing(d)) {
      auto w = footprint_witness(d);
      CHECK(weight(w.word) == ex->upper);
      CHECK(c.contains_word(w.word));
    }
    auto cd = dual(c);
    if (cd.dimension() == 0) continue;
    auto exd = exhaustive_distance(cd, budget.enumeration_cap);
    if (!exd) continue;
    CHECK(dual_distance_bound(d) <= exd->upper);
  }
}

TEST_CASE("multiplicative bound on product sets") {
  auto fam = affine_space(4, 2);
  // {0,1} x {0,2}: x^2 is injective on GF(4), so both factors have distance 3.
  DefiningSet d(fam, {{0, 0}, {0, 2}, {1, 0}, {1, 2}});
  CHECK(multiplicative_bound(d) == 9);
  CHECK(exhaustive_distance(evaluate(d), 1u << 20)->upper == 9);
  // {0,1} x {0,3}: 1 - x^3 has weight 1.
  DefiningSet d2(fam, {{0, 0}, {0, 3}, {1, 0}, {1, 3}});
  CHECK(multiplicative_bound(d2) == 3);
  CHECK(exhaustive_distance(evaluate(d2), 1u << 20)->upper == 3);
}

TEST_CASE("dual distance bound on hyperbolic codes") {
  // The dual of Hyp_7(s,2) has distance s on these instances.
  for (std::uint64_t s : {3, 4, 5, 6, 7}) CHECK(dual_distance_bound(delta_hyperbolic_dual(7, 2, s)) == s);
  // One-variable cyclic codes: BCH bound via shifts.
  auto fam = f16_units();
  CHECK(dual_distance_bound(one_var(fam, {1, 2, 3, 4})) == 5);
  // Run {0,1,2} gives 4; support search confirms the dual has distance exactly 4.
  auto d = one_var(fam, {0, 1, 2, 4, 8});
  CHECK(dual_distance_bound(d) == 4);
  auto ss = support_search(dual(evaluate(d)), 4, 100'000'000);
  CHECK(ss.complete);
  CHECK(ss.min_found == 4);
}

TEST_CASE("punctures of a transitive code share parameters") {
  auto c = evaluate(delta_hyperbolic_dual(7, 2, 4));
  REQUIRE(c.dimension() == 5);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < 49; ++i) {
    auto p = puncture(c, {i});
    auto d = exhaustive_distance(p, 1u << 20);
    seen.insert({p.length(), p.dimension(), d->upper});
  }
  CHECK(seen.size() == 1);
  CHECK(std::get<1>(*seen.begin()) == 5);
}

#include "doctest.h"

#include <set>

#include "nccomb/poset.hpp"

using namespace nccomb;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t sign(int n) { return n % 2 == 0 ? 1 : -1; }

// Brute-force Moebius on an explicit list, straight from the definition.
std::int64_t moebius_oracle(const std::vector<Partition>& members, const Partition& lo, const Partition& hi) {
  if (lo == hi) return 1;
  std::int64_t sum = 0;
  for (const auto& z : members) {
    if (z != hi && leq(lo, z) && leq(z, hi)) sum += moebius_oracle(members, lo, z);
  }
  return -sum;
}

bool is_power_of_two(std::int64_t v) {
  if (v < 0) v = -v;
  return v > 0 && (v & (v - 1)) == 0;
}

}  // namespace

TEST_CASE("reverse refinement") {
  CHECK(leq(Partition::zero(4), P("1,3/2,4")));
  CHECK(leq(P("1,2/3"), P("1,2,3")));
  CHECK_FALSE(leq(P("1,3/2"), P("1,2/3")));
  CHECK_THROWS_AS(leq(P("1,2"), P("1,2,3")), std::invalid_argument);
}

TEST_CASE("joins") {
  CHECK(join_in_family(Family::All, P("1,2/3"), P("1/2,3")) == Partition::one(3));
  CHECK(join_in_family(Family::NonCrossing, P("1,3/2/4"), P("1/2,4/3")) == Partition::one(4));
  CHECK(join_in_family(Family::Interval, P("1,2/3/4"), P("1/2/3,4")) == P("1,2/3,4"));
  CHECK_THROWS_AS(join_in_family(Family::Interval, P("1,3/2"), P("1,2,3")), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    for (Family f : kAllFamilies) {
      if (f != Family::AlmostCyclicInterval) CHECK_MESSAGE(family_poset(f, n).order.is_lattice(), family_name(f), n);
    }
  }
  // Almost-cyclic-interval partitions stop being a lattice at n = 6.
  CHECK(family_poset(Family::AlmostCyclicInterval, 5).order.is_lattice());
  CHECK_FALSE(family_poset(Family::AlmostCyclicInterval, 6).order.is_lattice());
  CHECK_THROWS_AS(join_in_family(Family::AlmostCyclicInterval, P("1/2/3/4/5,6"), P("1,4/2,3/5/6")), NotALatticeError);
  const auto& aci = family_poset(Family::AlmostCyclicInterval, 6);
  const auto bounds = aci.order.minimal_upper_bounds(aci.index_of(P("1/2/3/4/5,6")), aci.index_of(P("1,4/2,3/5/6")));
  REQUIRE(bounds.size() == 2);
  CHECK(std::set<Partition>{aci.members[bounds[0]], aci.members[bounds[1]]} ==
        std::set<Partition>{P("1,2,3,4/5,6"), P("1,4,5,6/2,3")});
}

TEST_CASE("moebius closed forms") {
  CHECK(moebius(Family::All, Partition::zero(4), Partition::one(4)) == -6);
  CHECK(moebius(Family::NonCrossing, Partition::zero(5), Partition::one(5)) == 14);
  CHECK(moebius(Family::CyclicInterval, Partition::zero(6), Partition::one(6)) == -5);
  CHECK(moebius(Family::AlmostInterval, Partition::zero(5), Partition::one(5)) == 8);
  for (int n = 1; n <= 7; ++n) {
    CHECK(moebius(Family::All, Partition::zero(n), Partition::one(n)) == sign(n - 1) * factorial(n - 1));
    CHECK(moebius(Family::NonCrossing, Partition::zero(n), Partition::one(n)) ==
          sign(n - 1) * static_cast<std::int64_t>(catalan(n - 1)));
    CHECK(moebius(Family::Interval, Partition::zero(n), Partition::one(n)) == sign(n - 1));
    if (n >= 2) CHECK(moebius(Family::CyclicInterval, Partition::zero(n), Partition::one(n)) == sign(n + 1) * (n - 1));
  }
  std::int64_t previous = moebius(Family::AlmostInterval, Partition::zero(2), Partition::one(2));
  CHECK(previous == -1);
  for (int n = 3; n <= 8; ++n) {
    const auto mu = moebius(Family::AlmostInterval, Partition::zero(n), Partition::one(n));
    CHECK(mu == -2 * previous);
    previous = mu;
  }
  CHECK_THROWS_AS(moebius(Family::All, Partition::one(3), Partition::zero(3)), std::invalid_argument);
}

TEST_CASE("moebius recursion matches the brute-force oracle") {
  for (Family f : kAllFamilies) {
    for (int n = 1; n <= 5; ++n) {
      const auto& poset = family_poset(f, n);
      for (std::size_t a = 0; a < poset.members.size(); ++a) {
        const auto row = poset.order.moebius_from(a);
        for (std::size_t b = 0; b < poset.members.size(); ++b) {
          if (!poset.order.leq(a, b)) {
            CHECK(row[b] == 0);
            continue;
          }
          CHECK(row[b] == moebius_oracle(poset.members, poset.members[a], poset.members[b]));
          CHECK(row[b] == poset.order.moebius_to(b)[a]);
        }
      }
    }
  }
}

TEST_CASE("moebius is multiplicative over a product interval") {
  // [0_5, {1,2,3}{4,5}] is P(3) x P(2) (likewise NC).
  const auto top = P("1,2,3/4,5");
  CHECK(moebius(Family::All, Partition::zero(5), top) == 2 * -1);
  CHECK(moebius(Family::NonCrossing, Partition::zero(5), top) == 2 * -1);
  const auto top2 = P("1,4/2,3/5,6");
  CHECK(moebius(Family::NonCrossing, Partition::zero(6), top2) == -1 * -1 * -1);
}

TEST_CASE("almost-interval moebius values are signed powers of two") {
  for (int n = 1; n <= 6; ++n) {
    const auto& poset = family_poset(Family::AlmostInterval, n);
    for (std::size_t a = 0; a < poset.members.size(); ++a) {
      const auto row = poset.order.moebius_from(a);
      for (std::size_t b = 0; b < poset.members.size(); ++b) {
        if (poset.order.leq(a, b)) CHECK(is_power_of_two(row[b]));
      }
    }
  }
}

TEST_CASE("Weisner sums") {
  for (int n = 2; n <= 7; ++n) {
    auto r = weisner_check(Family::Interval, n, Partition::one(n));
    CHECK(r.holds);
    CHECK(r.contributing.size() == enumerate(Family::Interval, n).size());
    CHECK(weisner_check(Family::CyclicInterval, n, Partition::one(n)).holds);
    std::vector<std::vector<int>> blocks = {{1, 2}};
    for (int i = 3; i <= n; ++i) blocks.push_back({i});
    auto almost = weisner_check(Family::AlmostInterval, n, Partition(n, blocks));
    CHECK(almost.holds);
    if (n >= 3) {
      CHECK(almost.contributing.size() == 3);
      std::set<Partition> expected = {Partition::one(n)};
      std::vector<int> rest, rest2 = {1};
      for (int i = 2; i <= n; ++i) rest.push_back(i);
      for (int i = 3; i <= n; ++i) rest2.push_back(i);
      expected.insert(Partition(n, {{1}, rest}));
      expected.insert(Partition(n, {{2}, rest2}));
      CHECK(std::set<Partition>(almost.contributing.begin(), almost.contributing.end()) == expected);
    }
  }
  CHECK_THROWS(weisner_check(Family::Interval, 3, Partition::zero(3)));
}

TEST_CASE("SI checks for families") {
  for (Family f : {Family::All, Family::NonCrossing, Family::AlmostInterval, Family::AlmostCyclicInterval}) {
    const auto r = si_check_family(f, 6);
    CHECK_MESSAGE(r.holds, family_name(f));
  }
  const auto interval = si_check_family(Family::Interval, 6);
  REQUIRE_FALSE(interval.holds);
  REQUIRE(interval.witness);
  CHECK(interval.witness->n == 2);
  CHECK(interval.witness->position == 2);
  CHECK(interval.witness->image == P("1,3/2"));
  CHECK(witness_is_genuine(interval, Family::Interval, std::nullopt));
  const auto ci = si_check_family(Family::CyclicInterval, 6);
  CHECK_FALSE(ci.holds);
  CHECK(witness_is_genuine(ci, Family::CyclicInterval, std::nullopt));
}

TEST_CASE("SI checks for weights") {
  const auto mono = si_check_weight(Weight::monotone(), 5);
  REQUIRE_FALSE(mono.holds);
  REQUIRE(mono.witness);
  CHECK(mono.witness->image == P("1,3/2"));
  CHECK(*mono.witness->weight_after == Rational(1, 2));
  CHECK(*mono.witness->weight_before == 1);
  CHECK(witness_is_genuine(mono, std::nullopt, Weight::monotone()));
  CHECK(si_check_weight(Weight::modified_monotone(), 6).holds);
  CHECK(si_check_weight(Weight::modified_q_crossing(Rational(1, 3)), 6).holds);
  CHECK(si_check_weight(Weight::singleton(), 6).holds);
  CHECK_FALSE(si_check_weight(Weight::q_crossing(Rational(1, 3)), 6).holds);
}

TEST_CASE("cyclic intervals form the collapsed cube") {
  for (int n = 1; n <= 6; ++n) {
    const auto& ci = family_poset(Family::CyclicInterval, n);
    const auto cube = collapsed_cube(n);
    CHECK(cube.size() == ci.members.size());
    CHECK(find_isomorphism(ci.order, cube).has_value());
  }
  CHECK(cyclic_buttons(P("1,2/3")) == 0b001);
  CHECK(cyclic_buttons(P("1,3/2")) == 0b100);
  CHECK_FALSE(find_isomorphism(family_poset(Family::Interval, 4).order, family_poset(Family::CyclicInterval, 3).order));
}

TEST_CASE("hasse diagram output") {
  const auto dot = hasse_dot(family_poset(Family::CyclicInterval, 3));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("1,2,3") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  CHECK(edges == 6);  // 0_3 below three pairs, each pair below 1_3
}

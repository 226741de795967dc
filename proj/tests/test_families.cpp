#include "doctest.h"

#include <bit>
#include <set>

#include "nccomb/families.hpp"

using namespace nccomb;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// First right neighbour of 1 inside its block, or 0 when {1} is a singleton.
int right_neighbour_of_one(const Partition& p) {
  const auto m = p.mask(p.block_of(1)) & ~Partition::Mask{1};
  return m ? std::countr_zero(m) + 1 : 0;
}

}  // namespace

TEST_CASE("enumeration sizes") {
  CHECK(enumerate(Family::Interval, 4).size() == 8);
  CHECK(enumerate(Family::CyclicInterval, 3).size() == 5);
  CHECK(enumerate(Family::AlmostInterval, 5).size() == 34);
  CHECK(cardinality(Family::All, 4) == 15);
  CHECK(cardinality(Family::NonCrossing, 4) == 14);
  CHECK(cardinality(Family::AlmostInterval, 6) == 89);
  CHECK(cardinality(Family::AlmostInterval, 4) == 13);
  CHECK_THROWS_AS(enumerate(Family::All, 14), SizeCapError);
  CHECK_THROWS_AS(enumerate(Family::All, 0), std::invalid_argument);
}

TEST_CASE("membership examples") {
  CHECK_FALSE(contains(Family::AlmostInterval, P("1,4/2,3")));
  CHECK(contains(Family::AlmostInterval, P("1,3/2")));
  CHECK_FALSE(contains(Family::NonCrossing, P("1,3/2,4")));
  CHECK(contains(Family::AlmostCyclicInterval, P("1,4/2/3")));
  CHECK(contains(Family::AlmostInterval, Partition::zero(5)));
}

TEST_CASE("sequence oracles") {
  const std::uint64_t bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570};
  const std::uint64_t catalans[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
  for (int n = 0; n < 12; ++n) {
    CHECK(bell(n) == bells[n]);
    CHECK(catalan(n) == catalans[n]);
  }
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(11) == 89);
}

TEST_CASE("closed forms, n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(cardinality(Family::All, n) == bell(n));
    CHECK(cardinality(Family::NonCrossing, n) == catalan(n));
    CHECK(cardinality(Family::Interval, n) == (std::uint64_t{1} << (n - 1)));
    CHECK(cardinality(Family::CyclicInterval, n) == (std::uint64_t{1} << n) - n);
    CHECK(cardinality(Family::AlmostInterval, n) == fibonacci(2 * n - 1));
    for (Family f : kAllFamilies) {
      if (auto c = closed_form_cardinality(f, n)) CHECK(*c == cardinality(f, n));
    }
  }
  CHECK_FALSE(closed_form_cardinality(Family::AlmostCyclicInterval, 4).has_value());
}

TEST_CASE("family enumeration equals filtered P(n), each member once") {
  for (int n = 1; n <= 7; ++n) {
    const auto& all = enumerate(Family::All, n);
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    for (Family f : kAllFamilies) {
      std::vector<Partition> filtered;
      for (const auto& p : all) {
        if (contains(f, p)) filtered.push_back(p);
      }
      const auto& members = enumerate(f, n);
      CHECK(std::set<Partition>(members.begin(), members.end()) ==
            std::set<Partition>(filtered.begin(), filtered.end()));
      CHECK(members.size() == filtered.size());
    }
  }
}

TEST_CASE("almost-interval decomposition by the right neighbour of 1") {
  for (int n = 2; n <= 10; ++n) {
    std::vector<std::uint64_t> classes(n + 1, 0);
    for (const auto& p : enumerate(Family::AlmostInterval, n)) ++classes[right_neighbour_of_one(p)];
    CHECK(classes[0] == cardinality(Family::AlmostInterval, n - 1));
    CHECK(classes[1] == 0);
    CHECK(classes[2] == cardinality(Family::AlmostInterval, n - 1));
    for (int r = 3; r <= n; ++r) CHECK(classes[r] == cardinality(Family::AlmostInterval, n - r + 1));
  }
}

TEST_CASE("colored generator keeps blocks monochromatic") {
  const std::vector<int> colors = {0, 1, 0, 1, 0};
  std::size_t count = 0;
  GeneratorOptions options;
  options.colors = colors;
  for_each_partition(5, options, [&](std::span<const Partition::Mask> masks) {
    ++count;
    for (auto m : masks) {
      const int c = colors[std::countr_zero(m)];
      for (auto rest = m; rest; rest &= rest - 1) CHECK(colors[std::countr_zero(rest)] == c);
    }
  });
  CHECK(count == bell(3) * bell(2));
}

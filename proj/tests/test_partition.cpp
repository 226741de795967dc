#include "doctest.h"

#include <random>

#include "nccomb/families.hpp"
#include "nccomb/partition.hpp"
#include "nccomb/rational.hpp"

using namespace nccomb;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// Oracles on the label array, independent of the mask code.
bool crosses_oracle(const Partition& p) {
  const auto l = p.labels();
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (l[a] == l[c] && l[b] == l[d] && l[a] != l[b]) return true;
  return false;
}

bool interval_oracle(const Partition& p) {
  const auto l = p.labels();
  for (std::size_t i = 0; i + 2 <= l.size(); ++i)
    for (std::size_t j = i + 2; j < l.size(); ++j)
      if (l[i] == l[j] && l[i + 1] != l[i]) return false;
  return true;
}

bool cyclic_interval_oracle(const Partition& p) {
  // some rotation makes it an interval partition
  const auto l = p.labels();
  const int n = p.size();
  for (int shift = 0; shift < n; ++shift) {
    std::vector<int> rotated(n);
    for (int i = 0; i < n; ++i) rotated[i] = l[(i + shift) % n];
    if (interval_oracle(Partition::from_labels(rotated))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
  Partition p(4, {{3, 1}, {4, 2}});
  CHECK(p.block_count() == 2);
  CHECK(p.to_string() == "1,3/2,4");
  CHECK(p == P("2,4/1,3"));
  CHECK_THROWS_WITH_AS(Partition(3, {{1, 2}, {2, 3}}), doctest::Contains("2"), PartitionError);
  CHECK_THROWS_WITH_AS(Partition(2, {{1}}), doctest::Contains("2"), PartitionError);
  CHECK_THROWS_AS(Partition(2, {{1, 2}, {}}), PartitionError);
  CHECK_THROWS_AS(Partition(2, {{1, 3}}), PartitionError);
  CHECK_THROWS_AS(Partition::parse("1,2/x"), PartitionError);
  CHECK(Partition::parse("1/2/3") == Partition::zero(3));
  CHECK(Partition::parse("1,2,3") == Partition::one(3));
}

TEST_CASE("crossing, interval and cyclic tests") {
  CHECK_FALSE(is_noncrossing(P("1,3/2,4")));
  CHECK(is_noncrossing(P("1,4/2,3")));
  CHECK(is_noncrossing(P("1,5,6/2,3/4")));
  CHECK(is_interval(P("1,2/3")));
  CHECK_FALSE(is_interval(P("1,3/2")));
  CHECK(is_interval(Partition::one(4)));
  CHECK(is_cyclic_interval(P("1,5,6/2,3/4")));
  CHECK_FALSE(is_interval(P("1,5,6/2,3/4")));
  CHECK_FALSE(is_cyclic_interval(P("1,3/2,4")));
  CHECK(is_cyclic_interval(P("1/2")));
  CHECK(is_cyclic_interval(P("1")));
}

TEST_CASE("predicates agree with label oracles on P(n), n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate(Family::All, n)) {
      const bool crossing = crosses_oracle(p);
      CHECK(is_noncrossing(p) == !crossing);
      CHECK((crossing_count(p) == 0) == !crossing);
      CHECK(is_interval(p) == interval_oracle(p));
      CHECK(is_cyclic_interval(p) == cyclic_interval_oracle(p));
      if (is_interval(p)) CHECK(is_cyclic_interval(p));
      if (is_cyclic_interval(p)) CHECK(is_noncrossing(p));
    }
  }
}

TEST_CASE("singleton removal and insertion") {
  CHECK(remove_singletons(P("1,4/2/3,6/5")) == P("1,3/2,4"));
  CHECK(remove_singletons(P("1,2,3")) == P("1,2,3"));
  CHECK(remove_singletons(Partition::zero(3)).size() == 0);
  CHECK(remove_singletons(Partition::zero(3)).block_count() == 0);
  CHECK(insert_singleton(P("1,3/2,4"), 1) == P("1/2,4/3,5"));
  CHECK(insert_singleton(P("1,3/2,4"), 3) == P("1,4/2,5/3"));
  CHECK(insert_singleton(P("1,3/2,4"), 5) == P("1,3/2,4/5"));
  CHECK_THROWS(insert_singleton(P("1,2"), 0));
  CHECK_THROWS(insert_singleton(P("1,2"), 4));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate(Family::All, n)) {
      for (int r = 1; r <= n + 1; ++r) {
        const auto q = insert_singleton(p, r);
        CHECK(q.has_singleton(r));
        CHECK(remove_singletons(q) == remove_singletons(p));
        CHECK(is_noncrossing(q) == is_noncrossing(p));
        CHECK(crossing_count(q) == crossing_count(p));
      }
    }
  }
}

TEST_CASE("crossing counts") {
  CHECK(crossing_count(P("1,3/2,4")) == 1);
  CHECK(crossing_count(P("1,4/2,3")) == 0);
  CHECK(crossing_count(remove_singletons(P("1,4/2/3,6/5"))) == 1);
  CHECK(crossing_count(P("1,4/2,5/3,6")) == 3);
}

TEST_CASE("nesting forests and tree factorials") {
  auto f = nesting_forest(P("1,4/2,3"));
  CHECK(f.node_count() == 2);
  CHECK(f.roots().size() == 1);
  CHECK(f.parent[1] == 0);
  CHECK(tree_factorial(f) == 2);
  CHECK(nesting_forest(P("1,2/3,4")).roots().size() == 2);
  CHECK(tree_factorial(nesting_forest(P("1,6/2,3/4,5"))) == 3);
  for (int k = 1; k <= 6; ++k) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i, 2 * k + 1 - i});
    const auto chain = nesting_forest(Partition(2 * k, blocks));
    CHECK(chain.roots().size() == 1);
    Integer factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    CHECK(tree_factorial(chain) == factorial);
  }
  CHECK_THROWS_AS(nesting_forest(P("1,3/2,4")), PartitionError);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate(Family::NonCrossing, n)) {
      const auto forest = nesting_forest(p);
      std::size_t total = 0;
      for (auto r : forest.roots()) total += forest.subtree_size[r];
      CHECK(total == p.block_count());
      CHECK((tree_factorial(forest) == 1) == is_interval(p));
    }
  }
}

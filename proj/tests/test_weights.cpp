#include "doctest.h"

#include <functional>

#include "nccomb/poset.hpp"
#include "nccomb/weights.hpp"

using namespace nccomb;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// Monotone weight from the recursive characterisation: remove an inner-most
// block V (an interval) and count the ways its removal order can be chosen.
// Equivalent: 1 / (number of linear extensions ratio) = prod 1/|subtree|,
// computed here as linear extensions of the nesting order / |blocks|!.
Rational monotone_oracle(const Partition& p) {
  if (!is_noncrossing(p)) return 0;
  const auto masks = p.masks();
  const std::size_t k = masks.size();
  // above[i][j]: block j nests block i
  std::vector<std::vector<bool>> above(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const int lo = std::countr_zero(masks[j]);
      const int hi = 63 - std::countl_zero(masks[j]);
      const int x = std::countr_zero(masks[i]);
      if (lo < x && x < hi) above[i][j] = true;
    }
  }
  // Count orderings where every block comes after all blocks nesting it.
  std::vector<std::uint64_t> ways(std::size_t{1} << k, 0);
  ways[0] = 1;
  for (std::uint64_t used = 0; used < ways.size(); ++used) {
    if (!ways[used]) continue;
    for (std::size_t i = 0; i < k; ++i) {
      if (used >> i & 1) continue;
      bool ready = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (above[i][j] && !(used >> j & 1)) ready = false;
      }
      if (ready) ways[used | (std::uint64_t{1} << i)] += ways[used];
    }
  }
  Integer total = 1;
  for (std::size_t i = 2; i <= k; ++i) total *= static_cast<unsigned long>(i);
  Rational out(Integer(ways.back()), total);
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("weight values") {
  CHECK(Weight::monotone()(P("1,3/2")) == Rational(1, 2));
  CHECK(Weight::modified_monotone()(P("1,3/2")) == 1);
  CHECK(Weight::indicator(Family::Interval)(P("1,3/2")) == 0);
  CHECK(Weight::monotone()(P("1,3/2,4")) == 0);
  for (int k = 1; k <= 5; ++k) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i, 2 * k + 1 - i});
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    CHECK(Weight::monotone()(Partition(2 * k, blocks)) == Rational(Integer(1), f));
  }
  CHECK(Weight::monotone()(P("1,6/2,3/4,5")) == Rational(1, 3));
  CHECK(Weight::q_crossing(Rational(1, 2))(P("1,3/2,4")) == Rational(1, 2));
  CHECK(Weight::q_crossing(Rational(1, 2))(P("1,4/2,5/3,6")) == Rational(1, 8));
  CHECK(Weight::q_crossing(Rational(1, 2))(P("1,2,3")) == 0);
  CHECK(Weight::modified_q_crossing(Rational(1, 2))(P("1,4/2/3,6/5")) == Rational(1, 2));
  CHECK(Weight::modified_q_crossing(Rational(1, 2))(Partition::zero(3)) == 1);
  CHECK(Weight::singleton()(Partition::zero(3)) == 1);
  CHECK(Weight::singleton()(P("1,2/3")) == 0);
  for (const auto& name : {"monotone", "modified-monotone", "cyclic-monotone", "modified-cyclic-monotone", "singleton",
                           "ind:nc", "q-crossing:1/2", "modified-q-crossing:-1"}) {
    CHECK(Weight::parse(name).name() == name);
    CHECK(Weight::parse(name)(Partition::one(1)) == 1);
  }
  CHECK(Weight::parse("almost-interval") == Weight::indicator(Family::AlmostInterval));
  CHECK_THROWS(Weight::parse("bogus"));
  CHECK_THROWS(Weight::parse("q-crossing"));
}

TEST_CASE("monotone weight matches the linear-extension oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate(Family::All, n)) CHECK(Weight::monotone()(p) == monotone_oracle(p));
  }
}

TEST_CASE("monotone weight is multiplicative over interval closures") {
  // Split at every point where no block straddles the cut.
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate(Family::NonCrossing, n)) {
      const auto labels = p.labels();
      Rational product = 1;
      int start = 1;
      for (int cut = 1; cut <= n; ++cut) {
        bool closed = true;
        for (auto m : p.masks()) {
          const int lo = std::countr_zero(m) + 1;
          const int hi = 64 - std::countl_zero(m);
          if (lo <= cut && hi > cut) closed = false;
        }
        if (!closed) continue;
        std::vector<int> window(labels.begin() + start - 1, labels.begin() + cut);
        product *= Weight::monotone()(Partition::from_labels(window));
        start = cut + 1;
      }
      CHECK(product == Weight::monotone()(p));
    }
  }
}

TEST_CASE("weight support properties") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate(Family::All, n)) {
      CHECK((sgn(Weight::monotone()(p)) != 0) == is_noncrossing(p));
      CHECK((Weight::modified_monotone()(p) == 1) == contains(Family::AlmostInterval, p));
      if (is_pairing(p)) {
        CHECK(Weight::q_crossing(1)(p) == 1);
        CHECK((Weight::q_crossing(0)(p) == 1) == is_noncrossing(p));
      }
    }
  }
}

TEST_CASE("cyclic monotone weight") {
  const auto w = Weight::cyclic_monotone();
  // Rotation invariance: the circle picture has no distinguished start.
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate(Family::NonCrossing, n)) {
      auto labels = p.labels();
      std::rotate(labels.begin(), labels.begin() + 1, labels.end());
      CHECK(w(p) == w(Partition::from_labels(labels)));
      CHECK(sgn(w(p)) > 0);
    }
  }
  CHECK(w(P("1,4/2,3")) == 1);  // two arcs facing each other
  CHECK(w(P("1,3,5/2/4")) == Rational(1, 3));  // centre block with two children
  CHECK(w(Partition::one(4)) == 1);
  CHECK_FALSE(si_check_weight(w, 5).holds);
  CHECK(si_check_weight(Weight::modified_cyclic_monotone(), 6).holds);
}

TEST_CASE("classification") {
  auto mm = classify(Weight::modified_monotone(), 6);
  CHECK(mm.monic);
  CHECK(mm.invertible);
  REQUIRE(mm.support);
  CHECK(*mm.support == Family::NonCrossing);
  auto single = classify(Weight::singleton(), 6);
  CHECK_FALSE(single.monic);
  CHECK_FALSE(single.invertible);
  CHECK_FALSE(single.support.has_value());
  auto q = classify(Weight::q_crossing(Rational(1, 2)), 6);
  CHECK_FALSE(q.invertible);
  CHECK(q.singular_orders == std::vector<int>{3, 4, 5, 6});
  auto ind = classify(Weight::indicator(Family::AlmostInterval), 6);
  CHECK(ind.monic);
  CHECK(*ind.support == Family::AlmostInterval);
  CHECK(*classify(Weight::monotone(), 6).support == Family::NonCrossing);
}

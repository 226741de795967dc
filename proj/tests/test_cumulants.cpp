#include "doctest.h"

#include <random>

#include "nccomb/constants.hpp"
#include "nccomb/cumulants.hpp"

using namespace nccomb;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

std::vector<Weight> invertible_catalogue() {
  std::vector<Weight> out;
  for (Family f : kAllFamilies) out.push_back(Weight::indicator(f));
  out.push_back(Weight::monotone());
  out.push_back(Weight::modified_monotone());
  out.push_back(Weight::cyclic_monotone());
  out.push_back(Weight::modified_cyclic_monotone());
  return out;
}

Functional<Rational> random_functional(std::uint64_t seed, std::size_t symbols) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  const std::size_t states = 4;
  std::vector<Rational> probs(states, Rational(1, states));
  std::vector<std::vector<Rational>> values(symbols);
  for (auto& row : values) {
    for (std::size_t s = 0; s < states; ++s) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      row.push_back(v);
    }
  }
  return finite_space_functional(Alphabet::letters(symbols), probs, values);
}

Poly var(const char* name) { return Poly::variable(name); }

}  // namespace

TEST_CASE("first and second order cumulants") {
  const auto alphabet = Alphabet::letters(2);
  const auto f = generic_functional(alphabet);
  for (const auto& w : invertible_catalogue()) {
    CumulantSolver<Poly> solver(f, w, 2);
    CHECK(solver.cumulant(alphabet.parse("a")) == var("m_a"));
    // Every catalogued weight gives 0_2 and 1_2 weight 1 at order two.
    CHECK(solver.cumulant(alphabet.parse("ab")) == var("m_ab") - var("m_a") * var("m_b"));
  }
  CumulantSolver<Poly> nc(f, Weight::indicator(Family::NonCrossing), 3);
  CHECK(nc.cumulant(alphabet.parse("aa")) == var("m_aa") - var("m_a") * var("m_a"));
  CHECK_THROWS_AS(nc.cumulant(alphabet.parse("aaaa")), std::out_of_range);
  CHECK_THROWS_AS(CumulantSolver<Poly>(f, Weight::q_crossing(2), 3), NonInvertibleWeightError);
  CHECK_THROWS_AS(CumulantSolver<Poly>(f, Weight::singleton(), 2), NonInvertibleWeightError);
}

TEST_CASE("boolean third cumulant by hand") {
  const auto alphabet = Alphabet::letters(3);
  const auto f = generic_functional(alphabet);
  CumulantSolver<Poly> solver(f, Weight::indicator(Family::Interval), 3);
  const Poly expected = var("m_abc") - var("m_a") * var("m_bc") - var("m_ab") * var("m_c") +
                        var("m_a") * var("m_b") * var("m_c");
  CHECK(solver.cumulant(alphabet.parse("abc")) == expected);
  CHECK(moebius_inversion_cumulant(f, Family::Interval, alphabet.parse("abc")) == expected);
}

TEST_CASE("commutative extension example") {
  const auto alphabet = Alphabet({"x", "y"});
  const auto f = generic_functional(alphabet);
  CumulantSolver<Poly> solver(f, Weight::indicator(Family::NonCrossing), 3);
  const Word w = alphabet.parse("xyx");
  const Poly expected = (var("m_xx") - var("m_x") * var("m_x")) * var("m_y");
  CHECK(solver.commutative_extension(P("1,3/2"), w) == expected);
  CHECK(solver.nested_extension(P("1,3/2"), w, {}) == expected);
  CHECK(solver.commutative_extension(Partition::one(3), w) == solver.cumulant(w));
  CHECK(solver.commutative_extension(Partition::zero(3), w) == var("m_x") * var("m_y") * var("m_x"));
}

TEST_CASE("interval and almost-interval cumulants agree on a centered variable") {
  const Alphabet alphabet({"x"});
  const auto f = Functional<Poly>(alphabet, [](const Word& w) {
    return w.size() == 1 ? Poly() : Poly::variable("m_" + std::to_string(w.size()));
  });
  CumulantSolver<Poly> boolean(f, Weight::indicator(Family::Interval), 6);
  CumulantSolver<Poly> fermi(f, Weight::indicator(Family::AlmostInterval), 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(boolean.cumulant(Word(n, 1)) == fermi.cumulant(Word(n, 1)));
}

TEST_CASE("moments from cumulants: Bernoulli and semicircle") {
  const Alphabet alphabet({"x"});
  CumulantTable<Rational> table{Weight::indicator(Family::Interval), alphabet, 10, {}};
  for (std::size_t n = 1; n <= 10; ++n) table.entries[Word(n, 1)] = n == 2 ? 1 : 0;
  const auto boolean = cumulants_to_moments(table);
  table.weight = Weight::indicator(Family::NonCrossing);
  const auto free = cumulants_to_moments(table);
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(boolean(Word(n, 1)) == (n % 2 == 0 ? 1 : 0));
    CHECK(free(Word(n, 1)) == (n % 2 == 0 ? Rational(static_cast<long>(catalan(static_cast<int>(n / 2)))) : 0));
  }
}

TEST_CASE("round trips for every invertible catalogued weight") {
  const auto f = random_functional(3, 2);
  for (const auto& w : invertible_catalogue()) {
    const auto table = moments_to_cumulants(f, w, 5);
    const auto back = cumulants_to_moments(table);
    for (int n = 1; n <= 5; ++n) {
      for (const auto& word : all_words(2, n)) CHECK_MESSAGE(back(word) == f(word), w.name());
    }
  }
}

TEST_CASE("moebius inversion agrees with the recursive solver") {
  const auto f = random_functional(5, 2);
  for (Family fam : {Family::All, Family::NonCrossing, Family::Interval, Family::AlmostInterval}) {
    CumulantSolver<Rational> solver(f, Weight::indicator(fam), 5);
    for (int n = 1; n <= 5; ++n) {
      for (const auto& word : all_words(2, n)) {
        CHECK_MESSAGE(moebius_inversion_cumulant(f, fam, word) == solver.cumulant(word), family_name(fam));
      }
    }
  }
  // Lower intervals of CI(n) are products of interval lattices, so the
  // inversion only matches the solver while CI(n) = P(n).
  CumulantSolver<Rational> ci(f, Weight::indicator(Family::CyclicInterval), 4);
  for (const auto& word : all_words(2, 3)) CHECK(moebius_inversion_cumulant(f, Family::CyclicInterval, word) == ci.cumulant(word));
  bool differs = false;
  for (const auto& word : all_words(2, 4)) {
    differs = differs || moebius_inversion_cumulant(f, Family::CyclicInterval, word) != ci.cumulant(word);
  }
  CHECK(differs);
  CHECK_THROWS_AS(moebius_inversion_cumulant(f, Family::AlmostCyclicInterval, all_words(2, 6).front()),
                  NotALatticeError);
}

TEST_CASE("nested and commutative extensions agree in a commutative domain") {
  const auto alphabet = Alphabet::letters(3);
  const auto f = generic_functional(alphabet);
  for (const auto& w : {Weight::indicator(Family::NonCrossing), Weight::modified_monotone(), Weight::monotone()}) {
    CumulantSolver<Poly> comm(f, w, 5);
    CumulantSolver<Poly> nested(f, w, 5, Extension::Nested);
    for (const auto& word : all_words(3, 4)) CHECK(comm.cumulant(word) == nested.cumulant(word));
    const Word word = alphabet.parse("abcab");
    for (const auto& p : enumerate(Family::NonCrossing, 5)) {
      const Poly c = comm.commutative_extension(p, word);
      for (auto attach : {NestedOptions::Attach::Right, NestedOptions::Attach::Left}) {
        for (bool last : {false, true}) CHECK(comm.nested_extension(p, word, {attach, last}) == c);
      }
    }
    CHECK_THROWS_AS(comm.nested_extension(P("1,3/2,4/5"), word, {}), PartitionError);
  }
  CHECK_THROWS_AS(CumulantSolver<Poly>(f, Weight::indicator(Family::All), 3, Extension::Nested),
                  std::invalid_argument);
}

TEST_CASE("matrix-domain nested extension is balanced") {
  std::mt19937_64 rng(17);
  OperatorCumulants cumulants(Weight::modified_monotone());
  for (int n = 1; n <= 4; ++n) {
    std::vector<RatMatrix> args;
    for (int i = 0; i < n; ++i) args.push_back(random_matrix(2, rng));
    for (const auto& p : enumerate(Family::NonCrossing, n)) {
      const RatMatrix reference = cumulants.extension(p, args, {});
      for (auto attach : {NestedOptions::Attach::Right, NestedOptions::Attach::Left}) {
        for (bool last : {false, true}) CHECK(cumulants.extension(p, args, {attach, last}) == reference);
      }
    }
  }
  const auto a = random_matrix(2, rng), b = random_matrix(2, rng);
  CHECK(cumulants.cumulant({a, b}) == matrix_moment({a, b}) - matrix_moment({a}) * matrix_moment({b}));
  CHECK_THROWS_AS(OperatorCumulants(Weight::indicator(Family::All)), std::invalid_argument);
}

TEST_CASE("constants drop out at order two for every invertible weight") {
  for (const auto& w : invertible_catalogue()) CHECK_MESSAGE(constants_check_poly(w, 2, 2).holds(), w.name());
}

TEST_CASE("constants: SI weights pass, non-SI weights give witnesses") {
  for (const auto& w : {Weight::indicator(Family::AlmostInterval), Weight::modified_monotone(),
                        Weight::indicator(Family::NonCrossing), Weight::indicator(Family::All),
                        Weight::modified_cyclic_monotone(), Weight::indicator(Family::AlmostCyclicInterval)}) {
    const auto report = constants_check_poly(w, 2, 5);
    CHECK_MESSAGE(report.holds(), w.name());
    CHECK(report.words_checked == 3 + 7 + 15 + 31);
  }
  const auto interval = constants_check_poly(Weight::indicator(Family::Interval), 3, 3);
  CHECK_FALSE(interval.holds());
  bool found = false;
  for (const auto& wit : interval.witnesses) found = found || wit.word == "a1b";
  CHECK(found);
  CHECK_FALSE(constants_check_poly(Weight::monotone(), 3, 3).holds());
  const auto matrix = constants_check_matrix(Weight::indicator(Family::AlmostInterval), 2, 4, 2, {1, 2});
  CHECK(matrix.holds());
  CHECK_FALSE(constants_check_matrix(Weight::indicator(Family::Interval), 3, 3, 2, {1}).holds());
}

TEST_CASE("cancellation bookkeeping") {
  const auto good = constants_bookkeeping(Weight::modified_monotone(), 5);
  CHECK(good.holds());
  CHECK(good.paired > 0);
  CHECK(good.vanishing > 0);
  CHECK(constants_bookkeeping(Weight::indicator(Family::AlmostInterval), 5).holds());
  CHECK(constants_bookkeeping(Weight::indicator(Family::All), 5).holds());
  const auto bad = constants_bookkeeping(Weight::monotone(), 4);
  CHECK_FALSE(bad.holds());
  CHECK_FALSE(bad.messages.empty());
}

#include "doctest.h"

#include <random>

#include "nccomb/matrix.hpp"
#include "nccomb/poly.hpp"
#include "nccomb/rational.hpp"

using namespace nccomb;

TEST_CASE("rationals") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  Rational r(6, -4), s(4, 2);
  r.canonicalize();
  s.canonicalize();
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(s) == "2");
  CHECK(parse_rational(" -3/6 ") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(pow(Rational(5), 0) == 1);
  // Beyond 64 bits.
  CHECK(to_string(pow(Rational(2), 100)) == "1267650600228229401496703205376");
}

TEST_CASE("polynomials") {
  const Poly x = Poly::variable("m_a");
  const Poly y = Poly::variable("m_b");
  CHECK(x * y == y * x);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x - x).is_zero());
  CHECK(Poly(Rational(3, 2)).is_constant());
  CHECK(Poly(Rational(3, 2)).constant_term() == Rational(3, 2));
  CHECK((x * Rational(0)).is_zero());
  CHECK((x + 1).term_count() == 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_poly = [&]() {
    Poly p;
    for (int i = 0; i < 4; ++i) {
      Poly t(coef(rng));
      if (coef(rng) > 0) t *= x;
      if (coef(rng) > 0) t *= y;
      p += t;
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = random_poly(), q = random_poly(), r = random_poly();
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
  }
  CHECK((x * x * y).to_string().find("m_a^2") != std::string::npos);
  const auto named = (y * x * Rational(2)).named_terms();
  REQUIRE(named.size() == 1);
  CHECK(named[0].first == 2);
  CHECK(named[0].second.front().first == "m_a");
}

TEST_CASE("matrices and the diagonal projection") {
  CHECK(diag_projection(RatMatrix::identity(3)) == RatMatrix::identity(3));
  RatMatrix off(2, {0, 1, 2, 0});
  CHECK(diag_projection(off).is_zero());
  std::mt19937_64 rng(11);
  bool found_noncommuting = false;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(3, rng);
    const auto a2 = random_matrix(3, rng);
    const auto b = random_diagonal(3, rng);
    const auto b2 = random_diagonal(3, rng);
    CHECK(diag_projection(b * a) == b * diag_projection(a));
    CHECK(diag_projection(b * a * b2) == b * diag_projection(a) * b2);
    CHECK(diag_projection(b) == b);
    CHECK(diag_projection(diag_projection(a)) == diag_projection(a));
    CHECK(diag_projection(a + a2) == diag_projection(a) + diag_projection(a2));
    if (a * a2 != a2 * a) found_noncommuting = true;
  }
  CHECK(found_noncommuting);
  CHECK_THROWS_AS(RatMatrix(2) * RatMatrix(3), DimensionError);
  CHECK_THROWS_AS(RatMatrix(2, {1, 2, 3}), DimensionError);
  CHECK(RatMatrix(2, {1, 0, 0, Rational(1, 2)}).to_string() == "[1 0; 0 1/2]");
}

#include <doctest.h>

#include "dfone/linalg.hpp"
#include "dfone/max_flow.hpp"
#include "dfone/rational.hpp"

using namespace dfone;

TEST_CASE("rational literals are exact") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("+2") == 2);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(from_double(0.5) == Rational(1, 2));
}

TEST_CASE("rank, null space and inverse") {
  const auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  const auto zero = m * ns.front();
  for (const auto& q : zero) CHECK(q == 0);
  CHECK_FALSE(inverse(m).has_value());
  CHECK(determinant(m) == 0);

  const auto a = RationalMatrix::from_rows({{-3, 1, 1}, {1, -2, 1}, {1, 1, -2}});
  CHECK(determinant(a) == -3);
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == RationalMatrix::identity(3));
  const auto x = solve(a, {1, 2, 3});
  REQUIRE(x);
  CHECK(a * *x == RationalVector{1, 2, 3});
  CHECK(determinant(RationalMatrix()) == 1);
}

TEST_CASE("max flow with rational capacities") {
  MaxFlow f(4);
  const auto a = f.add_arc(0, 1, Rational(1, 2));
  f.add_arc(0, 2, Rational(2, 3));
  f.add_arc(1, 3, 1);
  f.add_arc(2, 3, Rational(1, 3));
  f.add_arc(1, 2, 1);
  CHECK(f.solve(0, 3) == Rational(5, 6));
  CHECK(f.flow(a) <= Rational(1, 2));
  CHECK(f.tail(a) == 0);
  CHECK(f.head(a) == 1);
}

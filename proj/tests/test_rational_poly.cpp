#include "tdn/index_set.hpp"
#include "tdn/linalg.hpp"
#include "tdn/poly.hpp"
#include "tdn/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tdn;

TEST_CASE("rational literals with the epsilon shorthand") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK(parse_rational("1/3+e") == Rational(1, 3) + Rational(1, 1000));
  CHECK(parse_rational("1/5-e", Rational(1, 100)) == Rational(19, 100));
  CHECK(parse_rational("1/6+3e", Rational(1, 60)) == Rational(1, 6) + Rational(1, 20));
  CHECK(parse_rational("e") == Rational(1, 1000));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  auto v = parse_rational_list("1, 1/2 ,1/3+e");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == Rational(1, 3) + Rational(1, 1000));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("polynomial arithmetic") {
  Poly a{1, 1};
  CHECK((a * a) == Poly{1, 2, 1});
  CHECK(a.pow(3) == Poly{1, 3, 3, 1});
  CHECK(Poly::qint(4) == Poly{1, 1, 1, 1});
  CHECK(Poly::blowup_factor(1).is_zero());
  CHECK(Poly::blowup_factor(3) == Poly{0, 1, 1});
  CHECK((Poly{1, 4, 4, 1}).palindromic());
  CHECK_FALSE((Poly{1, 4, 3, 1}).palindromic());
  CHECK((Poly{1, 3, 3, 1}).divexact(Poly{1, 1}) == Poly{1, 2, 1});
  CHECK_THROWS_AS((Poly{1, 0, 1}).divexact(Poly{1, 1}), std::domain_error);
  CHECK(coefficientwise_leq(Poly{1, 2, 1}, Poly{1, 3, 1}));
  CHECK_FALSE(coefficientwise_leq(Poly{1, 3, 1, 1}, Poly{1, 3, 1}));
  CHECK((Poly{1, 5, 1}).at_one() == 7);
  CHECK((Poly{1, 1} - Poly{1, 1}).is_zero());
  CHECK((Poly{1, 2, 1}).str() == "1 + 2q + q^2");
  CHECK_THROWS_AS(Poly::constant(INT64_MAX) + Poly::constant(1), std::overflow_error);
}

TEST_CASE("index sets") {
  IndexSet s = from_labels({1, 3, 4});
  CHECK(labels(s) == std::vector<int>{1, 3, 4});
  CHECK(set_key(s) == "[1,3,4]");
  CHECK(parse_set("[1,3,4]") == s);
  CHECK(parse_set("134") == s);
  CHECK(parse_set("{1, 3, 4}") == s);
  CHECK(parse_set("12,13") == from_labels({12, 13}));
  CHECK(overlaps(from_labels({1, 2}), from_labels({2, 3})));
  CHECK_FALSE(overlaps(from_labels({1, 2}), from_labels({1, 2, 3})));
  CHECK(lex_less(from_labels({1, 2, 4}), from_labels({1, 3})));
  CHECK(min_label(from_labels({5, 7})) == 5);
  CHECK_THROWS(parse_set("[0,1]"));
}

TEST_CASE("exact linear algebra") {
  MatQ m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 10;
  CHECK(rank(m) == 3);
  CHECK(determinant(m) == -3);
  auto inv = inverse(m);
  REQUIRE(inv);
  MatQ id = m * (*inv);
  CHECK(id == MatQ::Identity(3, 3));
  MatZ z(2, 2);
  z << 1, 1, 0, 2;
  CHECK(determinant<std::int64_t>(z) == 2);
  MatQ sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK(rank(sing) == 1);
  CHECK_FALSE(inverse(sing));
}

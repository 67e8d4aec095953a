#include <random>

#include "doctest.h"
#include "qkneser/laurent.hpp"

using namespace qkneser;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 5), exps(-6, 6), coeffs(-40, 40);
  LaurentPoly::Terms t;
  for (int n = terms(rng); n > 0; --n) t[exps(rng)] += coeffs(rng);
  return LaurentPoly::from_terms(t);
}

}  // namespace

TEST_CASE("add") {
  CHECK(P("q + 1") + P("-1") == P("q"));
  CHECK(LaurentPoly() + P("3*q^2 - q^-1") == P("3*q^2 - q^-1"));
  CHECK(P("q^-1") + P("q^-1") == P("2*q^-1"));
  CHECK((P("q") - P("q")).is_zero());
  CHECK((P("q") - P("q")).terms().empty());
}

TEST_CASE("mul") {
  CHECK(P("q + 1") * P("q - 1") == P("q^2 - 1"));
  CHECK(P("q^-1") * P("q") == P("1"));
  CHECK((P("q^3 + 7") * LaurentPoly()).is_zero());
}

TEST_CASE("shift") {
  CHECK(shift(P("q + 1"), -2) == P("q^-1 + q^-2"));
  CHECK(shift(LaurentPoly(), 5).is_zero());
  CHECK(shift(P("1"), 3) == P("q^3"));
}

TEST_CASE("evaluate") {
  CHECK(evaluate(P("1 + q + 2*q^2 + q^3 + q^4"), 2) == 35);
  CHECK(evaluate(P("-q^-1"), 2) == Rational(-1, 2));
  CHECK(evaluate(LaurentPoly(), 7) == 0);
  CHECK(evaluate(P("q^-2 + 3*q"), 3) == Rational(82, 9));
  CHECK_THROWS_AS(evaluate(P("q"), 1), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(P("q"), -4), std::invalid_argument);
}

TEST_CASE("canonical rendering") {
  CHECK(to_string(P("1 + q + 2*q^2 + q^3 + q^4")) == "q^4 + q^3 + 2*q^2 + q + 1");
  CHECK(to_string(LaurentPoly::monomial(-1, -1) + LaurentPoly::monomial(-1, -2)) == "-q^-1 - q^-2");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(P("-q")) == "-q");
  CHECK(to_string(P("-7")) == "-7");
  CHECK(to_string(P("q^2 - 2*q + 1")) == "q^2 - 2*q + 1");
  CHECK(to_string(LaurentPoly::monomial(BigInt("123456789012345678901234567890"), 0)) ==
        "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("q^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("2*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("q + + 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("x"), std::invalid_argument);
}

TEST_CASE("accessors") {
  auto p = P("3*q^2 - q^-1 + 5");
  CHECK(p.min_exponent() == -1);
  CHECK(p.max_exponent() == 2);
  CHECK(p.coefficient(0) == 5);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.leading_coefficient() == 3);
  CHECK(p.coefficient_sum() == 7);
  CHECK_FALSE(p.is_polynomial());
  CHECK(P("q + 1").is_polynomial());
  CHECK_FALSE(LaurentPoly().min_exponent().has_value());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(shift(a, 3) == a * LaurentPoly::monomial(1, 3));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng);
    for (int q0 : {2, 3, 4, 5}) {
      CHECK(evaluate(a * b, q0) == evaluate(a, q0) * evaluate(b, q0));
      CHECK(evaluate(a + b, q0) == evaluate(a, q0) + evaluate(b, q0));
    }
  }
}

TEST_CASE("normalization is idempotent and rendering round-trips") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_poly(rng) * random_poly(rng);
    CHECK(LaurentPoly::from_terms(a.terms()) == a);
    for (const auto& [e, c] : a.terms()) CHECK(c != 0);
    CHECK(parse_laurent(to_string(a)) == a);
  }
}

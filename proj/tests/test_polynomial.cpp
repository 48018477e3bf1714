#include <doctest.h>

#include "autopos/polynomial.hpp"

using namespace autopos;

namespace {
const std::vector<std::string> pk{"p", "k1", "k2"};
}

TEST_SUITE("polynomial") {

TEST_CASE("parsing") {
    const Polynomial a = parse_polynomial("4(k1*k2^3-k1^3*k2)", pk);
    const Polynomial b = parse_polynomial("4*k1*k2^3 - 4*k1^3*k2", pk);
    CHECK(a == b);
    CHECK(parse_polynomial("(p-1)(p^2+1)(k1-k2)", pk) == parse_polynomial("(p^3-p^2+p-1)*(k1-k2)", pk));
    CHECK(parse_polynomial("k1k2^3", pk) == parse_polynomial("k1*k2^3", pk));
    CHECK(parse_polynomial("\xE2\x88\x92" "p", pk) == parse_polynomial("-p", pk));
    CHECK(parse_polynomial("-p^2", pk) == parse_polynomial("-(p^2)", pk));
    CHECK(parse_polynomial("p/2 + p/2", pk) == parse_polynomial("p", pk));
    CHECK(parse_polynomial("0", pk).is_zero());
    CHECK_THROWS_AS(parse_polynomial("q", pk), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("(p", pk), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("p^", pk), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("p/k1", pk), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("", pk), std::invalid_argument);
}

TEST_CASE("arithmetic and printing") {
    const Polynomial x = parse_polynomial("k1 + k2", pk);
    CHECK((x * x).to_string(pk) == "k1^2 + 2*k1*k2 + k2^2");
    CHECK(x.pow(0) == Polynomial::constant(3, 1));
    CHECK((x - x).is_zero());
    CHECK(parse_polynomial("p*k1 - 1/2", pk).to_string(pk) == "p*k1 - 1/2");
    CHECK(parse_polynomial("k1^2 + k2", pk).homogeneous_degree() == -2);
    CHECK(parse_polynomial("k1^2 + p*k2", pk).homogeneous_degree() == 2);
    CHECK(Polynomial(3).to_string(pk) == "0");
}

TEST_CASE("univariate polynomials in p") {
    const PPoly a = PPoly::from_polynomial(parse_polynomial("p^4 - 1", pk), 0);
    CHECK(a.degree() == 4);
    CHECK(a.to_string() == "p^4 - 1");
    CHECK(a.evaluate(3) == 80);
    CHECK((a - a).is_zero());
    CHECK((PPoly::p() * PPoly::p()).to_string() == "p^2");
    CHECK((PPoly(Rational(1, 2)) * PPoly::p() + PPoly(-1)).to_string() == "1/2*p - 1");
    CHECK(a.to_polynomial(3, 0) == parse_polynomial("p^4-1", pk));
    CHECK_THROWS_AS(PPoly::from_polynomial(parse_polynomial("p*k1", pk), 0), std::invalid_argument);
}

}

#include <doctest.h>

#include "autopos/chow.hpp"

using namespace autopos;

namespace {

TautClass nf(const std::string& text, int g) { return normal_form(parse_polynomial(text, px_names(g)), g); }

EOFixture fixture(int g) { return parse_fixture(builtin_fixture_text(g)); }

Polynomial pk_poly(const std::string& text, int g) { return parse_polynomial(text, pk_names(g)); }

} // namespace

TEST_SUITE("chow") {

TEST_CASE("invariant ideal generators") {
    const auto g1 = invariant_ideal_generators(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == parse_polynomial("x1^2", x_names(1)));
    const auto g2 = invariant_ideal_generators(2);
    CHECK(g2[0] == parse_polynomial("x1^2 + x2^2", x_names(2)));
    CHECK(g2[1] == parse_polynomial("x1^4 + x2^4", x_names(2)));
    CHECK(invariant_ideal_generators(3)[2] == parse_polynomial("x1^6+x2^6+x3^6", x_names(3)));
}

TEST_CASE("normal forms") {
    CHECK(nf("x2^2", 2) == nf("-x1^2", 2));
    CHECK(nf("x1^2*x2^2", 2).is_zero());
    CHECK(nf("x1*x2^3", 2) == nf("-x1^3*x2", 2));
    const TautClass top3 = nf("x1^5*x2^3*x3", 3);
    REQUIRE(top3.terms().size() == 1);
    CHECK(top3.terms().begin()->first == Exponents{5, 3, 1});
    CHECK(standard_monomials(3, 9) == std::vector<Exponents>{{5, 3, 1}});
    CHECK(standard_monomials(2, 4) == std::vector<Exponents>{{3, 1}});
    CHECK(nf("x1^5", 2).is_zero());
    CHECK(nf("x1^3*x2^3", 2).degree() == 6);
    CHECK(nf("x1^3*x2^3", 2).is_zero());
    CHECK_THROWS_AS(nf("x1 + x2^2", 2), std::invalid_argument);
    CHECK(nf("(p^4-1)*x1*x2^3", 2).to_string() == "(-p^4 + 1)*x1^3*x2");
}

TEST_CASE("both presentations of the genus-2 ideal agree") {
    // (x1^2 + x2^2, x1^2 x2^2) and (f1, f2) reduce each other's generators to zero.
    CHECK(nf("x1^2*x2^2", 2).is_zero());
    CHECK(nf("x1^4+x2^4", 2).is_zero());
    CHECK(nf("(x1^2+x2^2)^2 - 2*x1^2*x2^2 - (x1^4+x2^4)", 2).is_zero());
    for (int d = 0; d <= 6; ++d) {
        const auto dims = quotient_dimensions(2);
        const int expected = d < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(d)] : 0;
        CHECK(static_cast<int>(standard_monomials(2, d).size()) == expected);
    }
}

TEST_CASE("quotient dimensions") {
    CHECK(quotient_dimensions(1) == std::vector<int>{1, 1});
    CHECK(quotient_dimensions(2) == std::vector<int>{1, 2, 2, 2, 1});
    const auto d3 = quotient_dimensions(3);
    CHECK(d3.size() == 10);
    CHECK(d3.back() == 1);
    const auto d4 = quotient_dimensions(4);
    int total = 0;
    for (int d : d4) total += d;
    CHECK(total == 384);
    CHECK(std::equal(d4.begin(), d4.end(), d4.rbegin()));
}

TEST_CASE("intersection numbers") {
    const auto fx = fixture(2);
    const Exponents norm{1, 3};
    CHECK(intersection_polynomial(unit_class(2), 4, norm) == pk_poly("4(k1*k2^3-k1^3*k2)", 2));
    CHECK(intersection_polynomial(fx.find("w3")->cls, 1, norm) == pk_poly("(p^2-1)(k2-p*k1)", 2));
    CHECK(intersection_polynomial(fx.find("w3'")->cls, 1, norm) == pk_poly("(p-1)(p^2+1)(k1-k2)", 2));
    CHECK(intersection_number(fx.find("w3")->cls, Weight({0, -1}), 1, norm).to_string() == "-p^2 + 1");
    CHECK_THROWS_AS(intersection_polynomial(unit_class(2), 3, norm), std::invalid_argument);
    CHECK_THROWS_AS(intersection_polynomial(unit_class(2), 4, Exponents{2, 2}), std::invalid_argument);

    // Changing the normalizer rescales every product by the same unit.
    const Exponents other{3, 1};
    for (const auto& s : fx.strata) {
        CHECK(intersection_polynomial(s.cls, s.length, other) == intersection_polynomial(s.cls, s.length, norm) * Rational(-1));
    }
}

TEST_CASE("fixtures verify") {
    const auto fx2 = fixture(2);
    CHECK(fx2.g == 2);
    CHECK(fx2.strata.size() == 8);
    for (const auto& s : fx2.strata) CHECK(s.cls.degree() == 4 - s.length);
    const auto checks = verify_fixture(fx2);
    CHECK(checks.size() == 8);
    for (const auto& c : checks) {
        INFO(c.label, ": ", c.computed, " vs ", c.expected);
        CHECK(c.status == ProductStatus::matched);
    }

    const auto checks3 = verify_fixture(fixture(3));
    REQUIRE(checks3.size() == 2);
    CHECK(checks3[0].status == ProductStatus::matched);
    CHECK(checks3[1].label == "s3");
    CHECK(checks3[1].status == ProductStatus::inert);
    CHECK(checks3[1].expected == "-p^7 + p^6 + p");
}

TEST_CASE("a wrong expectation is reported") {
    const std::string text = "eo-fixture v1 g=2\n"
                             "stratum w3 len=1: (p^2-1)(p*x2-x1)*x1^2\n"
                             "normalizer: x1*x2^3\n"
                             "product w3 lambda=(k1,k2) expect: (p^2-1)(k2+p*k1)\n"
                             "product w3 lambda=(0,-1) expect: 1-p^2\n";
    const auto checks = verify_fixture(parse_fixture(text));
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].status == ProductStatus::mismatched);
    CHECK(checks[1].status == ProductStatus::matched);
}

TEST_CASE("fixture syntax errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_fixture("eo-fixture v2 g=2\n"), doctest::Contains("line 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_fixture("eo-fixture v1 g=2\nstratum a len=3: x1^2\nnormalizer: x1*x2^3\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_fixture("eo-fixture v1 g=2\nnormalizer: 2*x1*x2^3\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_fixture("eo-fixture v1 g=2\nstratum a len=4: 1\n"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_fixture("eo-fixture v1 g=2\nnormalizer: x1*x2^3\nproduct a lambda=(k1) expect: 0\n"),
                         doctest::Contains("line 3"), std::invalid_argument);
}

TEST_CASE("not-nef witnesses") {
    const auto fx = fixture(2);
    for (std::int64_t p : {3, 5, 7}) {
        const auto w = not_nef_witness(fx, Weight({0, -1}), p);
        REQUIRE(w);
        CHECK(w->label == "w3");
        CHECK(w->value == Rational(1 - p * p));
    }
    CHECK_FALSE(not_nef_witness(fx, Weight({-1, -1}), 5));
    CHECK_THROWS_AS(not_nef_witness(fx, Weight({-1, 0}), 5), std::invalid_argument);
}

}

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autopos/polynomial.hpp"
#include "autopos/rootdata.hpp"

namespace autopos {

/// Homogeneous class in Q[p][x1..xg] modulo the Weyl-invariant ideal, kept in normal form.
class TautClass {
public:
    TautClass(int g, int degree) : g_(g), degree_(degree) {}

    int g() const { return g_; }
    int degree() const { return degree_; }
    const std::map<Exponents, PPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c*x^e without reducing; normal_form() restores the invariant.
    void add_raw(const Exponents& e, const PPoly& c);

    friend bool operator==(const TautClass&, const TautClass&) = default;

    /// "(p^4 - 1)*x1*x2^3"
    std::string to_string() const;

private:
    int g_;
    int degree_;
    std::map<Exponents, PPoly> terms_;
};

/// x1..xg
std::vector<std::string> x_names(int g);
/// p, x1..xg
std::vector<std::string> px_names(int g);
/// p, k1..kg
std::vector<std::string> pk_names(int g);

/// f_i = x1^(2i) + ... + xg^(2i), i = 1..g, as polynomials in x1..xg.
std::vector<Polynomial> invariant_ideal_generators(int g);

/// Standard monomials of degree d (descending graded reverse lexicographic order).
std::vector<Exponents> standard_monomials(int g, int degree);

/// Graded dimensions of the quotient, degrees 0..g^2.
std::vector<int> quotient_dimensions(int g);

TautClass normal_form(const TautClass& cls);
/// Input over (p, x1..xg); must be homogeneous in the x variables.
TautClass normal_form(const Polynomial& poly, int g);

/// The class of 1 in degree 0, for convenience.
TautClass unit_class(int g);

/// c1(L)^power * cls with c1(L) = sum lambda_i x_i and lambda_i polynomials over
/// (p, k1..kg); returns the top-degree coefficient relative to the normalizer
/// monomial as a polynomial over (p, k1..kg).
Polynomial intersection_polynomial(const TautClass& cls, const std::vector<Polynomial>& lambda, int power,
                                   const Exponents& normalizer);
/// Symbolic lambda = (k1..kg).
Polynomial intersection_polynomial(const TautClass& cls, int power, const Exponents& normalizer);
/// Concrete weight.
PPoly intersection_number(const TautClass& cls, const Weight& lambda, int power, const Exponents& normalizer);

struct Stratum {
    std::string label;
    int length = 0;
    TautClass cls{1, 0};
};

struct ProductStanza {
    std::string label;
    std::string lambda_text;
    /// Entries over (p, k1..kg); absent for a named weight whose definition is not part of the fixture.
    std::optional<std::vector<Polynomial>> lambda;
    std::string expect_text;
    Polynomial expect;
};

struct EOFixture {
    int g = 0;
    std::vector<Stratum> strata;
    Exponents normalizer;
    std::vector<ProductStanza> products;

    const Stratum* find(std::string_view label) const;
};

/// Parses the "eo-fixture v1 g=<g>" text format. Throws std::invalid_argument
/// with a line number on malformed input or inhomogeneous classes.
EOFixture parse_fixture(std::string_view text);
EOFixture load_fixture(const std::string& path);
/// Fixture text shipped with the library (g = 2 and g = 3); empty otherwise.
std::string_view builtin_fixture_text(int g);

enum class ProductStatus { matched, mismatched, inert };
std::string to_string(ProductStatus s);

struct ProductCheck {
    std::string label;
    ProductStatus status = ProductStatus::inert;
    std::string expected;
    std::string computed;
    std::string reason;
};

std::vector<ProductCheck> verify_fixture(const EOFixture& fixture);

struct NefWitness {
    std::string label;
    int length = 0;
    Rational value;
};

/// Strata are scanned by increasing length (fixture order within a length);
/// returns the first one with a negative intersection number at p.
std::optional<NefWitness> not_nef_witness(const EOFixture& fixture, const Weight& lambda, std::int64_t p);

} // namespace autopos

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "autopos/numeric.hpp"

namespace autopos {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c);
    /// Total degree of every term; -1 for zero, -2 if not homogeneous.
    int homogeneous_degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    Polynomial pow(unsigned n) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Terms in descending lexicographic exponent order, e.g. "4*k1*k2^3 - 4*k1^3*k2".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

/// Parses +, -, *, ^ (nonnegative integer exponents), parentheses, rational
/// literals and the given variable names. Juxtaposition multiplies, so
/// "(p-1)(p^2+1)(k1-k2)" and "x1x2^3" are accepted. The Unicode minus sign is
/// allowed. Throws std::invalid_argument on syntax errors or unknown names.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Univariate polynomial in the formal symbol p over Q; coeffs[i] multiplies p^i.
class PPoly {
public:
    PPoly() = default;
    PPoly(const Rational& c) { if (c != 0) coeffs_.push_back(c); }
    explicit PPoly(std::vector<Rational> coeffs);

    static PPoly p() { return PPoly(std::vector<Rational>{0, 1}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational evaluate(const Rational& p) const;

    PPoly& operator+=(const PPoly& o);
    PPoly& operator-=(const PPoly& o);
    PPoly& operator*=(const Rational& c);
    friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
    friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
    friend PPoly operator*(const PPoly& a, const PPoly& b);
    friend PPoly operator*(PPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const PPoly&, const PPoly&) = default;

    /// From a polynomial whose only variable (index var) is p.
    static PPoly from_polynomial(const Polynomial& poly, std::size_t var);
    Polynomial to_polynomial(std::size_t nvars, std::size_t var) const;

    /// "p^4 - 1"
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace autopos

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autopos/numeric.hpp"
#include "autopos/partition.hpp"

namespace autopos {

enum class Basis { schur, power, monomial };

std::string to_string(Basis basis);

/// A symmetric function stored as exact coefficients on one basis.
/// Zero coefficients are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymFunc(Basis basis = Basis::schur) : basis_(basis) {}

    static SymFunc schur(const Partition& lambda, const Rational& c = 1);
    static SymFunc power(const Partition& mu, const Rational& c = 1);
    static SymFunc monomial(const Partition& mu, const Rational& c = 1);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& key) const;

    void add(const Partition& key, const Rational& c);

    /// Common size of all keys; nullopt when mixed. The zero function has
    /// degree 0.
    std::optional<int> degree() const;
    bool is_homogeneous() const { return degree().has_value(); }
    bool is_integral() const;
    SymFunc homogeneous_part(int d) const;
    std::vector<int> degrees() const;

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    /// e.g. "s[2] - s[1,1]"
    std::string to_string() const;

private:
    Basis basis_;
    Terms terms_;
};

/// Centralizer order z_mu = prod_i i^{m_i} m_i!.
BigInt zee(const Partition& mu);

/// Irreducible character of S_n indexed by lambda at cycle type mu
/// (Murnaghan-Nakayama). Values are memoized. Throws on size mismatch.
BigInt sym_character(const Partition& lambda, const Partition& mu);

/// Kostka number K_{lambda,content}: semistandard tableaux of shape lambda
/// and the given content.
BigInt kostka(const Partition& lambda, const Partition& content);

/// Schur (or monomial) to power sums.
SymFunc to_power(const SymFunc& f);

/// Power sums (or monomial) to Schur. Power-sum input must be homogeneous.
/// A positive max_height discards Schur terms with more rows.
SymFunc to_schur(const SymFunc& f, int max_height = 0);

/// Schur to monomial via Kostka numbers.
SymFunc to_monomial(const SymFunc& f);

/// Product, returned in the Schur basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

struct Constituent {
    Partition shape;
    std::int64_t multiplicity = 0;
    friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Constituents sorted ascending lexicographically by shape.
using Decomposition = std::vector<Constituent>;

struct PlethysmOptions {
    /// Positive values keep only constituents with at most this many rows.
    int max_height = 0;
    /// Worker threads for the Schur contraction; 0 = hardware concurrency.
    unsigned threads = 0;
    /// Called with (finished blocks, total blocks) during the contraction.
    std::function<void(std::size_t, std::size_t)> progress;
};

/// Multiplicities c^eta of S_eta in S_lambda o S_mu over C.
Decomposition plethysm(const Partition& lambda, const Partition& mu,
                       const PlethysmOptions& options = {});

Decomposition restrict_height(const Decomposition& constituents, int g);

struct DecompositionStats {
    std::size_t distinct = 0;
    std::int64_t max_multiplicity = 0;
    BigInt total = 0;
};

DecompositionStats stats(const Decomposition& constituents);

/// Sufficient condition for S_lambda o S_mu to be filtered by Schur functors
/// in characteristic p: p >= 2|lambda| - 1, or p > k when lambda = (1^k).
/// Throws std::invalid_argument when p is not prime.
bool filtration_condition(const Partition& lambda, std::int64_t p);

/// Rim-hook moves on beta-sets. fn receives the new shape and the sign
/// (-1)^{leg length}.
void add_border_strips(const Partition& lambda, int length, int max_height,
                       const std::function<void(const Partition&, int)>& fn);
void remove_border_strips(const Partition& lambda, int length,
                          const std::function<void(const Partition&, int)>& fn);

} // namespace autopos

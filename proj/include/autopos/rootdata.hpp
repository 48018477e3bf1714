#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "autopos/partition.hpp"

namespace autopos {

/// Integer vector in epsilon-coordinates: a character of the diagonal torus
/// of GL_g / Sp_2g, or a cocharacter when used as a coroot.
class Weight {
public:
    using value_type = std::int64_t;

    Weight() = default;
    Weight(std::initializer_list<value_type> coords) : coords_(coords) {}
    explicit Weight(std::vector<value_type> coords) : coords_(std::move(coords)) {}

    static Weight zero(int g) { return Weight(std::vector<value_type>(static_cast<std::size_t>(g), 0)); }
    /// k in every coordinate.
    static Weight parallel(int g, value_type k) {
        return Weight(std::vector<value_type>(static_cast<std::size_t>(g), k));
    }

    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<value_type>& coords() const { return coords_; }
    value_type operator[](std::size_t i) const { return coords_[i]; }
    value_type& operator[](std::size_t i) { return coords_[i]; }

    /// k_1 >= k_2 >= ... >= k_g.
    bool is_l_dominant() const;
    /// All coordinates equal.
    bool is_parallel() const;
    bool is_zero() const;

    /// "(-1,-3)".
    std::string to_string() const;
    /// Accepts "(-1,-3)", "[-1,-3]", "-1,-3"; the Unicode minus sign is allowed.
    static Weight parse(std::string_view text);

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(value_type k, Weight w);
    friend Weight operator-(Weight w);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<value_type> coords_;
};

/// An element of the hyperoctahedral group S_g x| (Z/2)^g: v -> w.v with
/// (w.v)[perm[i]] = sign[i] * v[i].
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> sign;

    Weight apply(const Weight& v) const;
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// All 2^g g! signed permutations.
std::vector<SignedPermutation> weyl_group_c(int g);

/// Simple reflections s_1..s_g for e_1-e_2, ..., e_{g-1}-e_g, 2e_g.
std::vector<SignedPermutation> simple_reflections_c(int g);

struct Root {
    Weight root;
    Weight coroot;
};

/// Root datum of Sp_2g with the Siegel Levi GL_g.
class RootDatumC {
public:
    explicit RootDatumC(int g);

    int rank() const { return g_; }
    std::int64_t weyl_order() const;

    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    /// e_i - e_j, i < j.
    const std::vector<Root>& levi_positive_roots() const { return levi_positive_; }
    /// Positive roots outside the Levi: e_i + e_j (i < j) and 2e_i.
    const std::vector<Root>& non_levi_positive_roots() const { return non_levi_positive_; }
    const std::vector<Root>& simple_roots() const { return simple_; }
    /// I = {e_i - e_{i+1}}.
    const std::vector<Root>& levi_simple_roots() const { return levi_simple_; }

    /// Weyl orbits of the coroots: {+-e_i} and (g >= 2) {+-e_i +- e_j}.
    const std::vector<std::vector<Weight>>& coroot_orbits() const { return coroot_orbits_; }

private:
    int g_;
    std::vector<Root> roots_;
    std::vector<Root> positive_;
    std::vector<Root> levi_positive_;
    std::vector<Root> non_levi_positive_;
    std::vector<Root> simple_;
    std::vector<Root> levi_simple_;
    std::vector<std::vector<Weight>> coroot_orbits_;
};

/// Orbit of v under signed permutations of its coordinates, sorted.
std::vector<Weight> weyl_orbit(const Weight& v);

/// 2 rho_L = (g-1, g-3, ..., -(g-1)).
Weight rho_L_doubled(int g);
/// Half-sum of the positive roots of Sp_2g: (g, g-1, ..., 1).
Weight rho_C(int g);

/// (k_1..k_g) -> (-k_g, ..., -k_1).
Weight reverse_negate(const Weight& w);

/// Weight of S_eta applied to the Hodge bundle: eta padded to length g,
/// reversed and negated. Throws when eta has more than g rows.
Weight automorphic_weight(const Partition& eta, int g);

/// <lambda, coroot>. Throws on length mismatch.
std::int64_t pairing(const Weight& lambda, const Weight& coroot);

/// Dominant for Sp_2g: k_1 >= ... >= k_g >= 0.
bool is_dominant_c(const Weight& w);

/// mu <= lambda in the root order of C_g: lambda - mu is a nonnegative
/// integer combination of positive roots.
bool root_order_leq(const Weight& mu, const Weight& lambda);

} // namespace autopos

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autopos/numeric.hpp"

namespace autopos {

/// A weakly decreasing sequence of positive integers (a Young diagram).
///
/// Trailing zeros are stripped on construction, so each diagram has exactly
/// one representation. Ordering is lexicographic on the parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    int size() const { return size_; }
    int height() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based); zero past the height.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool is_strict() const;
    /// True for (1^k), k >= 1.
    bool is_column() const;

    /// "[6,5,4,2,1]"; the empty partition is "[]".
    std::string to_string() const;
    /// Accepts "[4,2]", "4,2", "(4,2)" and whitespace.
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// A permutation of {1..n}; image[l-1] is the image of l.
struct Permutation {
    std::vector<int> image;

    int operator()(int l) const { return image.at(static_cast<std::size_t>(l - 1)); }
    std::size_t degree() const { return image.size(); }
    bool is_identity() const;
    Permutation inverse() const;
    /// (a * b)(l) = a(b(l)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

Partition conjugate(const Partition& lambda);

/// Sends the row-major index of cell (i,j) of lambda to the row-major index
/// of cell (j,i) of the conjugate diagram.
Permutation sigma_perm(const Partition& lambda);

/// Hook lengths of the main-diagonal cells.
std::vector<int> diagonal_hooks(const Partition& lambda);

/// 2[lambda] for a strict partition: the partition of 2|lambda| whose i-th
/// diagonal hook is 2*lambda_i and whose i-th row has length lambda_i + i.
/// Throws std::invalid_argument unless the parts are distinct.
Partition two_bracket(const Partition& lambda);

/// Dimension of the GL_g-module with highest weight lambda (Weyl formula).
/// Zero when lambda has more than g rows.
BigInt dim_gl(const Partition& lambda, int g);

/// All partitions of n in ascending lexicographic order. A positive
/// max_height drops partitions with more rows.
std::vector<Partition> partitions_of(int n, int max_height = 0);

/// Calls fn for every partition of n (ascending lexicographic order).
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

/// Partitions of n into distinct parts, ascending lexicographic order.
std::vector<Partition> distinct_part_partitions(int n);

/// mu <= lambda in dominance order (partial sums after zero padding).
/// Partitions of different sizes are never comparable.
bool dominance_leq(const Partition& mu, const Partition& lambda);

} // namespace autopos

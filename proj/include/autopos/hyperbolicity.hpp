#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autopos/plethysm_cache.hpp"
#include "autopos/positivity.hpp"
#include "autopos/symfunc.hpp"

namespace autopos {

enum class Verdict { certified, not_certified, filtration_fails };

std::string to_string(Verdict verdict);

struct ConstituentReport {
    Partition shape;
    std::int64_t multiplicity = 0;
    Weight weight;
    AmpleCertificate certificate;
    /// Strict partition lambda with shape = 2[lambda], for exterior powers.
    std::optional<Partition> bracket_source;
};

struct HyperbolicityReport {
    int g = 0;
    std::int64_t p = 0;
    Partition lambda;
    bool filtration_ok = false;
    /// Constituents came from the closed form for Lambda^k o Sym^2.
    bool closed_form = false;
    /// The closed form was compared against the plethysm engine.
    bool cross_checked = false;
    std::vector<ConstituentReport> constituents;
    Verdict verdict = Verdict::not_certified;
    std::vector<Weight> uncovered;
    std::vector<std::string> notes;
};

/// (lambda, 2[lambda]) for strict partitions lambda of k with lambda_1 <= g.
std::vector<std::pair<Partition, Partition>> lambda_k_sym2_terms(int k, int g);

/// Constituents of Lambda^k o Sym^2 with at most g rows, all of multiplicity 1.
Decomposition lambda_k_sym2(int k, int g);

/// Certifies every height-<=g constituent of S_lambda o Sym^2 at p.
/// Throws std::invalid_argument when p is not prime.
HyperbolicityReport analyze(const Partition& lambda, int g, std::int64_t p,
                            const PlethysmCache* cache = nullptr,
                            std::function<void(std::size_t, std::size_t)> progress = {});

/// g(g-1)/2 + 1
int k_threshold(int g);
/// g^2 + 3g + 1
std::int64_t p_threshold(int g);

/// Every strict partition of k has largest part >= g (by enumeration).
bool strict_partition_height_check(int k, int g);

/// |lambda| * dim_gl(lambda, g) / g. Throws when lambda has more than g rows.
BigInt log_canonical_exponent(const Partition& lambda, int g);

} // namespace autopos

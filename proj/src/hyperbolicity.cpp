#include "autopos/hyperbolicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace autopos {

namespace {

// Degree up to which the closed form is re-derived with the plethysm engine.
constexpr int cheap_cross_check_degree = 16;

} // namespace

std::string to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::certified: return "certified";
    case Verdict::not_certified: return "not_certified";
    case Verdict::filtration_fails: return "filtration_fails";
    }
    return "?";
}

std::vector<std::pair<Partition, Partition>> lambda_k_sym2_terms(int k, int g) {
    if (k < 1) throw std::invalid_argument("exterior power degree must be positive");
    std::vector<std::pair<Partition, Partition>> out;
    for (const Partition& strict : distinct_part_partitions(k)) {
        if (strict[0] <= g) out.emplace_back(strict, two_bracket(strict));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

Decomposition lambda_k_sym2(int k, int g) {
    Decomposition out;
    for (const auto& [strict, shape] : lambda_k_sym2_terms(k, g)) out.push_back({shape, 1});
    return out;
}

HyperbolicityReport analyze(const Partition& lambda, int g, std::int64_t p, const PlethysmCache* cache,
                            std::function<void(std::size_t, std::size_t)> progress) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (g < 1) throw std::invalid_argument("g must be positive");
    if (lambda.empty()) throw std::invalid_argument("partition must be nonempty");

    HyperbolicityReport report;
    report.g = g;
    report.p = p;
    report.lambda = lambda;
    report.filtration_ok = filtration_condition(lambda, p);

    const Partition sym2{2};
    std::vector<ConstituentReport> rows;
    if (lambda.is_column()) {
        const int k = lambda.size();
        report.closed_form = true;
        const auto terms = lambda_k_sym2_terms(k, g);
        for (const auto& [strict, shape] : terms) {
            rows.push_back({shape, 1, automorphic_weight(shape, g), {}, strict});
        }
        bool cached = false;
        if (cache) {
            if (auto stored = cache->load(lambda, sym2)) {
                cached = true;
                if (restrict_height(*stored, g) != lambda_k_sym2(k, g)) {
                    throw std::logic_error("closed form for Lambda^k o Sym^2 disagrees with cached plethysm");
                }
            }
        }
        if (!cached && 2 * k <= cheap_cross_check_degree) {
            PlethysmOptions opts;
            opts.max_height = g;
            if (plethysm(lambda, sym2, opts) != lambda_k_sym2(k, g)) {
                throw std::logic_error("closed form for Lambda^k o Sym^2 disagrees with the plethysm engine");
            }
        }
        report.cross_checked = cached || 2 * k <= cheap_cross_check_degree;
    } else {
        PlethysmOptions options;
        options.max_height = g;
        options.progress = std::move(progress);
        for (const auto& c : cached_plethysm(lambda, sym2, options, cache)) {
            rows.push_back({c.shape, c.multiplicity, automorphic_weight(c.shape, g), {}, std::nullopt});
        }
    }

    const RootDatumC datum(g);
    for (auto& row : rows) {
        row.certificate = certify(row.weight, p, datum);
        if (row.certificate.route == Route::none) report.uncovered.push_back(row.weight);
    }
    report.constituents = std::move(rows);

    if (!report.filtration_ok) {
        report.verdict = Verdict::filtration_fails;
        report.notes.push_back("filtration condition not met: need p >= 2|lambda|-1 = " +
                               std::to_string(2 * lambda.size() - 1) +
                               (lambda.is_column() ? " or p > " + std::to_string(lambda.size()) : std::string()));
    } else if (report.uncovered.empty()) {
        report.verdict = Verdict::certified;
    } else {
        report.verdict = Verdict::not_certified;
    }
    if (report.constituents.empty()) {
        report.notes.push_back("every constituent has more than g rows; the bundle vanishes");
    }
    if (report.verdict == Verdict::certified && lambda.is_column() && p < p_threshold(g)) {
        report.notes.push_back("below the general threshold p >= g^2+3g+1 = " + std::to_string(p_threshold(g)) +
                               ", certificate still valid");
    }
    return report;
}

int k_threshold(int g) {
    if (g < 1) throw std::invalid_argument("g must be positive");
    return g * (g - 1) / 2 + 1;
}

std::int64_t p_threshold(int g) {
    if (g < 1) throw std::invalid_argument("g must be positive");
    const auto h = static_cast<std::int64_t>(g);
    return h * h + 3 * h + 1;
}

bool strict_partition_height_check(int k, int g) {
    const auto strict = distinct_part_partitions(k);
    return std::all_of(strict.begin(), strict.end(), [g](const Partition& s) { return s[0] >= g; });
}

BigInt log_canonical_exponent(const Partition& lambda, int g) {
    if (lambda.height() > g) {
        throw std::invalid_argument(lambda.to_string() + " has more than " + std::to_string(g) + " rows");
    }
    const BigInt numerator = BigInt(lambda.size()) * dim_gl(lambda, g);
    if (!mpz_divisible_ui_p(numerator.get_mpz_t(), static_cast<unsigned long>(g))) {
        throw std::logic_error("non-integral determinant exponent");
    }
    return numerator / g;
}

} // namespace autopos

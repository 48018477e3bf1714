#include "autopos/positivity.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace autopos {

std::string to_string(Route route) {
    switch (route) {
    case Route::parallel: return "parallel";
    case Route::direct: return "direct";
    case Route::tensor_power: return "tensor_power";
    case Route::none: return "none";
    }
    return "?";
}

namespace {

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_rank(const Weight& w, const RootDatumC& datum) {
    if (w.rank() != datum.rank()) {
        throw std::invalid_argument("weight " + w.to_string() + " does not have rank " + std::to_string(datum.rank()));
    }
}

bool is_negative_parallel(const Weight& w) {
    return w.rank() > 0 && w.is_parallel() && w[0] < 0;
}

} // namespace

bool is_p_small(const Weight& lambda, std::int64_t p, const RootDatumC& datum) {
    require_prime(p);
    require_rank(lambda, datum);
    if (!is_dominant_c(lambda)) throw std::invalid_argument(lambda.to_string() + " is not dominant");
    const Weight shifted = lambda + rho_C(datum.rank());
    std::int64_t top = 0;
    for (const Root& r : datum.positive_roots()) top = std::max(top, pairing(shifted, r.coroot));
    return top <= p;
}

std::optional<Rational> orbit_ratio_max(const Weight& gamma, const RootDatumC& datum) {
    require_rank(gamma, datum);
    std::optional<Rational> best;
    for (const auto& orbit : datum.coroot_orbits()) {
        std::int64_t hi = 0;
        std::int64_t lo = 0;
        for (const Weight& v : orbit) {
            const std::int64_t a = std::llabs(pairing(gamma, v));
            if (a == 0) continue;
            hi = std::max(hi, a);
            lo = lo == 0 ? a : std::min(lo, a);
        }
        if (lo == 0) continue;
        Rational ratio(hi, lo);
        ratio.canonicalize();
        if (!best || ratio > *best) best = ratio;
    }
    return best;
}

bool is_z_empty_ample(const Weight& gamma, const RootDatumC& datum) {
    require_rank(gamma, datum);
    for (const Root& r : datum.levi_simple_roots()) {
        if (pairing(gamma, r.coroot) <= 0) return false;
    }
    for (const Root& r : datum.non_levi_positive_roots()) {
        if (pairing(gamma, r.coroot) >= 0) return false;
    }
    return true;
}

Weight shifted_weight(const Weight& lambda) {
    return 2 * lambda + rho_L_doubled(lambda.rank());
}

std::int64_t tensor_power_bound(const Weight& lambda) {
    const auto g = static_cast<std::int64_t>(lambda.rank());
    return (g + 1) * std::llabs(lambda.coords().back()) + g;
}

std::optional<std::int64_t> direct_threshold(const Weight& lambda, const RootDatumC& datum) {
    const Weight gamma = shifted_weight(lambda);
    if (!is_z_empty_ample(gamma, datum)) return std::nullopt;
    const auto ratio = orbit_ratio_max(gamma, datum);
    if (!ratio) return std::nullopt;
    // p - 1 >= ratio  <=>  p >= ceil(ratio) + 1
    BigInt ceil_ratio;
    mpz_cdiv_q(ceil_ratio.get_mpz_t(), ratio->get_num_mpz_t(), ratio->get_den_mpz_t());
    return next_prime_at_least(to_int64(ceil_ratio) + 1);
}

AmpleCertificate certify(const Weight& lambda, std::int64_t p, const RootDatumC& datum) {
    require_prime(p);
    require_rank(lambda, datum);
    if (!lambda.is_l_dominant()) throw std::invalid_argument(lambda.to_string() + " is not L-dominant");

    AmpleCertificate cert;
    cert.weight = lambda;
    const Weight gamma = shifted_weight(lambda);
    cert.orbit_ratio = orbit_ratio_max(gamma, datum);
    cert.z_empty_ok = is_z_empty_ample(gamma, datum);

    if (is_negative_parallel(lambda)) {
        cert.route = Route::parallel;
        cert.min_prime = 2;
        cert.notes = "parallel weight k(1,...,1) with k < 0";
        return cert;
    }
    const auto direct = direct_threshold(lambda, datum);
    if (direct && p >= *direct) {
        cert.route = Route::direct;
        cert.min_prime = *direct;
        cert.notes = "gamma " + gamma.to_string() + " is Z_empty-ample with orbit ratio " +
                     cert.orbit_ratio->get_str() + " <= p-1";
        return cert;
    }
    const bool negative_top = lambda[0] <= -1;
    const std::int64_t bound = tensor_power_bound(lambda);
    if (negative_top && p >= bound) {
        cert.route = Route::tensor_power;
        cert.min_prime = next_prime_at_least(bound);
        cert.notes = "lambda_1 <= -1 and p >= (g+1)|lambda_g|+g = " + std::to_string(bound);
        return cert;
    }

    std::string reason;
    if (!cert.z_empty_ok) {
        reason = "gamma " + gamma.to_string() + " is not Z_empty-ample";
    } else {
        reason = "orbit ratio " + (cert.orbit_ratio ? cert.orbit_ratio->get_str() : std::string("undefined")) +
                 " exceeds p-1 = " + std::to_string(p - 1);
    }
    if (!negative_top) {
        reason += "; lambda_1 = " + std::to_string(lambda[0]) + " >= 0 rules out the tensor-power bound";
    } else {
        reason += "; tensor-power bound needs p >= " + std::to_string(bound);
    }
    cert.notes = reason;
    return cert;
}

std::optional<std::int64_t> min_certifying_prime(const Weight& lambda, const RootDatumC& datum) {
    require_rank(lambda, datum);
    if (!lambda.is_l_dominant()) throw std::invalid_argument(lambda.to_string() + " is not L-dominant");
    if (is_negative_parallel(lambda)) return 2;
    std::optional<std::int64_t> best = direct_threshold(lambda, datum);
    if (lambda[0] <= -1) {
        const std::int64_t tensor = next_prime_at_least(tensor_power_bound(lambda));
        if (!best || tensor < *best) best = tensor;
    }
    return best;
}

namespace {

void enumerate_dominant(int g, RegionBox box, std::vector<Weight::value_type>& prefix,
                        const std::function<void(const Weight&)>& fn) {
    if (static_cast<int>(prefix.size()) == g) {
        fn(Weight(prefix));
        return;
    }
    const auto upper = prefix.empty() ? box.hi : std::min(box.hi, prefix.back());
    for (auto k = box.lo; k <= upper; ++k) {
        prefix.push_back(k);
        enumerate_dominant(g, box, prefix, fn);
        prefix.pop_back();
    }
}

bool row_order(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.coords().rbegin(), a.coords().rend(), b.coords().rbegin(),
                                        b.coords().rend());
}

} // namespace

RegionScan region_scan(int g, std::int64_t p, RegionBox box) {
    require_prime(p);
    if (box.lo > box.hi) throw std::invalid_argument("empty box");
    const RootDatumC datum(g);
    RegionScan scan{g, p, {}, {}};
    std::vector<Weight::value_type> prefix;
    enumerate_dominant(g, box, prefix, [&](const Weight& w) {
        const Route route = certify(w, p, datum).route;
        if (route == Route::parallel || route == Route::direct) {
            scan.points.push_back(w);
        } else if (route == Route::tensor_power) {
            scan.tensor_only.push_back(w);
        }
    });
    std::sort(scan.points.begin(), scan.points.end(), row_order);
    std::sort(scan.tensor_only.begin(), scan.tensor_only.end(), row_order);
    return scan;
}

std::string region_rows(const RegionScan& scan) {
    std::string out;
    for (const Weight& w : scan.points) {
        for (int i = w.rank() - 1; i >= 0; --i) {
            out += std::to_string(w[static_cast<std::size_t>(i)]);
            out += i == 0 ? '\n' : ' ';
        }
    }
    return out;
}

} // namespace autopos

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autopos/numeric.hpp"
#include "autopos/rootdata.hpp"

namespace autopos {

/// How a weight was shown to be (phi,D)-ample.
enum class Route {
    parallel,     ///< k(1,...,1) with k < 0
    direct,       ///< 2*lambda + 2*rho_L orbitally p-close and Z_empty-ample
    tensor_power, ///< lambda_1 <= -1 and p >= (g+1)|lambda_g| + g
    none,
};

std::string to_string(Route route);

struct AmpleCertificate {
    Weight weight;
    Route route = Route::none;
    /// Smallest prime at which the route taken succeeds; empty iff route is none.
    std::optional<std::int64_t> min_prime;
    /// Orbit ratio of 2*lambda + 2*rho_L; empty when that vector is zero.
    std::optional<Rational> orbit_ratio;
    bool z_empty_ok = false;
    std::string notes;
};

/// max over positive coroots of <lambda + rho, alpha^vee> <= p.
/// Throws unless lambda is dominant for Sp_2g and p is prime.
bool is_p_small(const Weight& lambda, std::int64_t p, const RootDatumC& datum);

/// Largest |<gamma, w a>| / |<gamma, a>| over coroots a with nonzero pairing and
/// Weyl elements w. Empty only for gamma = 0.
std::optional<Rational> orbit_ratio_max(const Weight& gamma, const RootDatumC& datum);

/// Strictly positive on the Levi simple coroots, strictly negative on the
/// positive coroots outside the Levi.
bool is_z_empty_ample(const Weight& gamma, const RootDatumC& datum);

/// gamma = 2*lambda + 2*rho_L.
Weight shifted_weight(const Weight& lambda);

/// (g+1)|lambda_g| + g.
std::int64_t tensor_power_bound(const Weight& lambda);

/// Smallest prime p with gamma Z_empty-ample and orbit ratio <= p - 1.
std::optional<std::int64_t> direct_threshold(const Weight& lambda, const RootDatumC& datum);

/// Sufficient (never necessary) certificate at prime p. Routes are tried in
/// the order parallel, direct, tensor_power.
AmpleCertificate certify(const Weight& lambda, std::int64_t p, const RootDatumC& datum);

/// Smallest prime at which some route certifies lambda.
std::optional<std::int64_t> min_certifying_prime(const Weight& lambda, const RootDatumC& datum);

struct RegionBox {
    std::int64_t lo = -44;
    std::int64_t hi = 5;
};

struct RegionScan {
    int g = 0;
    std::int64_t p = 0;
    /// Certified by the parallel or direct route, sorted by reversed coordinates.
    std::vector<Weight> points;
    /// Certified only through the tensor-power bound (not part of points).
    std::vector<Weight> tensor_only;
};

/// L-dominant weights with every coordinate in [box.lo, box.hi].
RegionScan region_scan(int g, std::int64_t p, RegionBox box);

/// One row per point, coordinates reversed ("k2 k1" when g = 2), no header.
std::string region_rows(const RegionScan& scan);

} // namespace autopos

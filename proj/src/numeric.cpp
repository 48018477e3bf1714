#include "autopos/numeric.hpp"

#include <stdexcept>

namespace autopos {

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) {
        throw std::overflow_error("integer " + v.get_str() + " does not fit in 64 bits");
    }
    return v.get_si();
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::int64_t next_prime_at_least(std::int64_t n) {
    if (n <= 2) return 2;
    while (!is_prime(n)) ++n;
    return n;
}

} // namespace autopos

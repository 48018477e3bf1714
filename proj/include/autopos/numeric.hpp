#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace autopos {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Renders a canonical rational as "n" or "n/d".
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Narrowing conversion that throws when the value does not fit.
std::int64_t to_int64(const BigInt& v);

bool is_prime(std::int64_t n);

/// Smallest prime >= n (n may be <= 2).
std::int64_t next_prime_at_least(std::int64_t n);

} // namespace autopos

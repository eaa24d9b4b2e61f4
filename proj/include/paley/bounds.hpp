#pragma once

#include <cstdint>
#include <string>

#include "paley/check.hpp"
#include "paley/errors.hpp"
#include "paley/field.hpp"
#include "paley/phi.hpp"
#include "paley/rational.hpp"

namespace paley {

// floor of the square root, integer Newton iteration
std::uint64_t isqrt(std::uint64_t n);

// largest clique size the parity inequalities allow: with n = isqrt(q),
//   n even:  s^2 + s - 1 <= q
//   n odd:   s^2 + 2s - 2 <= q
// valid for odd prime powers q = 1 mod 4 with odd exponent; the result is
// always n or n-1
std::uint64_t theorem_bound(std::uint64_t q);

enum class Classification {
    case_i_improved,      // n even, bound n-1
    case_i_not_improved,  // n even, bound n
    case_ii_improved,     // n odd, bound n-1
    case_ii_exception,    // n odd, q = (n+1)^2 - 3, bound n
};

const char* to_string(Classification c);

Classification classify_prime(std::uint64_t p);

struct ClassifyCounts {
    std::uint64_t total = 0;
    std::uint64_t i_improved = 0;
    std::uint64_t i_not_improved = 0;
    std::uint64_t ii_improved = 0;
    std::uint64_t ii_exception = 0;

    std::uint64_t improved() const { return i_improved + ii_improved; }
    Rational fraction() const;
};

// classify every prime p = 1 mod 4 with 5 <= p <= limit
ClassifyCounts improvement_fraction(std::uint64_t limit);

// interpolate phi1 mod p as a polynomial over Z_p and check: it reproduces
// the profile, has degree (p-1)/2, leading coefficient s mod p, and no more
// roots than its degree.  Prime fields only.
CheckReport poly_zero_check(const FieldSpec& spec, const PhiProfile& profile);

} // namespace paley

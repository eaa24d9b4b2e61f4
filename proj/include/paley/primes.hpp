#pragma once

#include <cstdint>
#include <vector>

#include "paley/errors.hpp"

namespace paley {

// all primes <= limit, ascending
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

struct PrimePower {
    std::uint64_t p = 0;
    unsigned k = 0;
};

// q = p^k with p prime; throws NotPrime otherwise
PrimePower factor_prime_power(std::uint64_t q);

// orders of fields carrying the graph: q in [lo, hi], q = 1 mod 4, q an odd
// prime, ascending.  prime_powers additionally admits odd extension degrees
// (p^3, p^5, ...); even_k admits every prime power, including the squares
// where the clique number meets the square root exactly
std::vector<std::uint64_t> admissible_orders(std::uint64_t lo, std::uint64_t hi,
                                             bool prime_powers = false,
                                             bool even_k = false);

} // namespace paley

#include "paley/primes.hpp"

#include <string>

namespace paley {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

PrimePower factor_prime_power(std::uint64_t q) {
    if (q < 2) throw NotPrime(q);
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1};
    unsigned k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw NotPrime(q);
    return {p, k};
}

std::vector<std::uint64_t> admissible_orders(std::uint64_t lo, std::uint64_t hi,
                                             bool prime_powers, bool even_k) {
    std::vector<std::uint64_t> out;
    if (hi < lo || hi < 5) return out;
    std::uint64_t start = lo < 5 ? 5 : lo;
    // advance to the first q = 1 mod 4
    start += (4 - (start % 4) + 1) % 4;
    for (std::uint64_t q = start; q <= hi; q += 4) {
        PrimePower pk;
        try {
            pk = factor_prime_power(q);
        } catch (const NotPrime&) {
            continue;
        }
        if (pk.p == 2) continue;
        bool admit = pk.k == 1 || (prime_powers && pk.k % 2 == 1) || even_k;
        if (admit) out.push_back(q);
    }
    return out;
}

} // namespace paley

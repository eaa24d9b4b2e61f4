#include "paley/bounds.hpp"

#include <bit>

#include "paley/primes.hpp"

namespace paley {

std::uint64_t isqrt(std::uint64_t n) {
    if (n < 2) return n;
    // start above the root, then Newton steps descend onto the floor
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
    while (true) {
        std::uint64_t y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

namespace {

// the inequality the parity argument imposes on a clique of size s
bool parity_allows(std::uint64_t s, std::uint64_t n, std::uint64_t q) {
    if (n % 2 == 0) return s * s + s - 1 <= q;
    return s * s + 2 * s - 2 <= q;
}

} // namespace

std::uint64_t theorem_bound(std::uint64_t q) {
    PrimePower pk = factor_prime_power(q);
    if (pk.p == 2 || q % 4 != 1) throw NotOneModFour(q);
    if (pk.k % 2 == 0)
        throw EvenExtensionDegree("q = " + std::to_string(q) +
                                  " is a square, the bound needs an odd exponent");
    std::uint64_t n = isqrt(q);
    if (parity_allows(n, n, q)) return n;
    // n-1 always satisfies the inequality: the worst case n odd needs
    // (n-1)^2 + 2(n-1) - 2 = n^2 - 3 <= q, and q >= n^2
    return n - 1;
}

const char* to_string(Classification c) {
    switch (c) {
    case Classification::case_i_improved: return "case_i_improved";
    case Classification::case_i_not_improved: return "case_i_not_improved";
    case Classification::case_ii_improved: return "case_ii_improved";
    case Classification::case_ii_exception: return "case_ii_exception";
    }
    return "unknown";
}

namespace {

Classification classify_unchecked(std::uint64_t p) {
    std::uint64_t n = isqrt(p);
    if (n % 2 == 0)
        return parity_allows(n, n, p) ? Classification::case_i_not_improved
                                      : Classification::case_i_improved;
    if (parity_allows(n, n, p)) return Classification::case_ii_exception;
    return Classification::case_ii_improved;
}

} // namespace

Classification classify_prime(std::uint64_t p) {
    PrimePower pk = factor_prime_power(p);
    if (pk.k != 1) throw NotPrime(p);
    if (pk.p == 2 || p % 4 != 1) throw NotOneModFour(p);
    return classify_unchecked(p);
}

Rational ClassifyCounts::fraction() const {
    if (total == 0) throw Error("no primes classified");
    return Rational(static_cast<std::int64_t>(improved()), static_cast<std::int64_t>(total));
}

ClassifyCounts improvement_fraction(std::uint64_t limit) {
    ClassifyCounts counts;
    for (std::uint64_t p : primes_up_to(limit)) {
        if (p % 4 != 1) continue;
        ++counts.total;
        switch (classify_unchecked(p)) {
        case Classification::case_i_improved: ++counts.i_improved; break;
        case Classification::case_i_not_improved: ++counts.i_not_improved; break;
        case Classification::case_ii_improved: ++counts.ii_improved; break;
        case Classification::case_ii_exception: ++counts.ii_exception; break;
        }
    }
    return counts;
}

CheckReport poly_zero_check(const FieldSpec& spec, const PhiProfile& profile) {
    if (spec.k != 1)
        throw ExtensionField("the polynomial argument runs over prime fields only");
    if (profile.q != spec.q)
        throw Error("profile order does not match the field");
    const std::uint64_t p = spec.p;
    const std::uint64_t half = (p - 1) / 2;

    auto mod = [p](std::int64_t v) -> std::uint64_t {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
    };
    // f(t) = phi1(t) mod p; coefficients of the unique interpolating
    // polynomial of degree < p:  a_0 = f(0),  a_j = -sum_t f(t) t^(p-1-j),
    // with 0^0 = 1.  Powers accumulate incrementally per t.
    std::vector<std::uint64_t> f(p);
    for (std::uint64_t t = 0; t < p; ++t) f[t] = mod(profile.phi[t] + 1);

    std::vector<std::uint64_t> sums(p, 0);
    for (std::uint64_t t = 0; t < p; ++t) {
        std::uint64_t cur = f[t];
        for (std::uint64_t e = 0; e + 1 < p; ++e) {
            sums[p - 1 - e] = (sums[p - 1 - e] + cur) % p;
            cur = cur * t % p;
        }
    }
    std::vector<std::uint64_t> a(p, 0);
    a[0] = f[0];
    for (std::uint64_t j = 1; j < p; ++j) a[j] = (p - sums[j]) % p;

    std::uint64_t degree = 0;
    for (std::uint64_t j = 0; j < p; ++j)
        if (a[j] != 0) degree = j;

    // evaluate back via Horner
    bool round_trip = true;
    std::string rt_detail = "interpolant reproduces phi1 at every point";
    for (std::uint64_t t = 0; t < p && round_trip; ++t) {
        std::uint64_t val = 0;
        for (std::uint64_t j = p; j-- > 0;) val = (val * t + a[j]) % p;
        if (val != f[t]) {
            round_trip = false;
            rt_detail = "interpolant disagrees at t = " + std::to_string(t);
        }
    }

    std::uint64_t zero_count = 0;
    std::uint64_t integer_zero_count = 0;
    for (std::uint64_t t = 0; t < p; ++t) {
        if (f[t] == 0) ++zero_count;
        if (profile.phi[t] + 1 == 0) ++integer_zero_count;
    }

    CheckReport rep;
    rep.add("poly_round_trip", round_trip, rt_detail);
    rep.add("poly_degree", degree == half,
            "degree " + std::to_string(degree) + ", expected (p-1)/2 = " + std::to_string(half));
    std::uint64_t lead = a[half];
    std::uint64_t s_mod = profile.s % p;
    rep.add("poly_leading_coeff", lead == s_mod,
            "leading coefficient " + std::to_string(lead) + ", expected s mod p = " +
                std::to_string(s_mod));
    // a nonzero polynomial cannot vanish more often than its degree; the
    // hypothetical count (q + s^2 - 2s)/2 is reported for context
    Rational hypothetical(static_cast<std::int64_t>(profile.q) +
                              static_cast<std::int64_t>(profile.s) *
                                  static_cast<std::int64_t>(profile.s) -
                              2 * static_cast<std::int64_t>(profile.s),
                          2);
    rep.add("poly_zero_count", zero_count <= half,
            std::to_string(zero_count) + " roots mod p (" + std::to_string(integer_zero_count) +
                " exact zeros of phi1) vs degree " + std::to_string(half) +
                "; a full-size clique would force >= " + hypothetical.str());
    return rep;
}

} // namespace paley

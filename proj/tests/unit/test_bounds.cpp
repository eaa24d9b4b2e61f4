#include <doctest.h>

#include <cmath>
#include <random>

#include "paley/bounds.hpp"
#include "paley/clique.hpp"
#include "paley/primes.hpp"

using namespace paley;

TEST_CASE("integer square root") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(2) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(8) == 2);
    CHECK(isqrt(9) == 3);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    CHECK(isqrt(999999999999ull) == 999999);
    CHECK(isqrt(1000000000000ull) == 1000000);
    CHECK(isqrt(~std::uint64_t{0}) == 4294967295ull);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t n = rng();
        std::uint64_t r = isqrt(n);
        using u128 = unsigned __int128;
        CHECK(u128(r) * r <= n);
        CHECK(u128(r + 1) * (r + 1) > n);
    }
}

TEST_CASE("parity bound against hand values") {
    CHECK(theorem_bound(5) == 2);
    CHECK(theorem_bound(13) == 3);   // n = 3 odd, 9 + 6 - 2 = 13 allows 3
    CHECK(theorem_bound(17) == 3);   // n = 4 even, 16 + 4 - 1 = 19 > 17
    CHECK(theorem_bound(29) == 4);   // n = 5 odd, 25 + 10 - 2 = 33 > 29
    CHECK(theorem_bound(37) == 5);   // n = 6 even, 36 + 6 - 1 = 41 > 37
    CHECK(theorem_bound(41) == 6);   // 36 + 6 - 1 = 41 allows 6
    CHECK(theorem_bound(125) == 10); // n = 11 odd, 121 + 22 - 2 = 141 > 125
    CHECK(theorem_bound(2197) == 46);

    CHECK_THROWS_AS(theorem_bound(9), EvenExtensionDegree);
    CHECK_THROWS_AS(theorem_bound(49), EvenExtensionDegree);
    CHECK_THROWS_AS(theorem_bound(7), NotOneModFour);
    CHECK_THROWS_AS(theorem_bound(27), NotOneModFour);
    CHECK_THROWS_AS(theorem_bound(12), NotPrime);
}

TEST_CASE("parity bound never drops more than one below the root") {
    for (std::uint64_t p : primes_up_to(100000)) {
        if (p % 4 != 1) continue;
        std::uint64_t n = isqrt(p);
        std::uint64_t b = theorem_bound(p);
        CAPTURE(p);
        CHECK((b == n || b == n - 1));
    }
}

TEST_CASE("prime classification against hand buckets through 100") {
    CHECK(classify_prime(17) == Classification::case_i_improved);
    CHECK(classify_prime(37) == Classification::case_i_improved);
    CHECK(classify_prime(5) == Classification::case_i_not_improved);
    CHECK(classify_prime(41) == Classification::case_i_not_improved);
    CHECK(classify_prime(73) == Classification::case_i_not_improved);
    CHECK(classify_prime(29) == Classification::case_ii_improved);
    CHECK(classify_prime(53) == Classification::case_ii_improved);
    CHECK(classify_prime(89) == Classification::case_ii_improved);
    CHECK(classify_prime(13) == Classification::case_ii_exception);
    CHECK(classify_prime(61) == Classification::case_ii_exception);
    CHECK(classify_prime(97) == Classification::case_ii_exception);

    CHECK_THROWS_AS(classify_prime(7), NotOneModFour);
    CHECK_THROWS_AS(classify_prime(9), NotPrime);
    CHECK_THROWS_AS(classify_prime(15), NotPrime);

    CHECK(std::string(to_string(Classification::case_ii_exception)) == "case_ii_exception");
}

TEST_CASE("the exception bucket is exactly q = (n+1)^2 - 3") {
    for (std::uint64_t p : primes_up_to(10000)) {
        if (p % 4 != 1) continue;
        std::uint64_t n = isqrt(p);
        bool exceptional = classify_prime(p) == Classification::case_ii_exception;
        CAPTURE(p);
        CHECK(exceptional == (n % 2 == 1 && p == (n + 1) * (n + 1) - 3));
    }
}

TEST_CASE("classification tallies through 100") {
    ClassifyCounts c = improvement_fraction(100);
    CHECK(c.total == 11);
    CHECK(c.i_improved == 2);
    CHECK(c.i_not_improved == 3);
    CHECK(c.ii_improved == 3);
    CHECK(c.ii_exception == 3);
    CHECK(c.improved() == 5);
    CHECK(c.fraction() == Rational(5, 11));
}

TEST_CASE("classification agrees with the bound it predicts") {
    for (std::uint64_t p : primes_up_to(5000)) {
        if (p % 4 != 1) continue;
        std::uint64_t n = isqrt(p);
        std::uint64_t b = theorem_bound(p);
        Classification c = classify_prime(p);
        bool improved = c == Classification::case_i_improved ||
                        c == Classification::case_ii_improved;
        CAPTURE(p);
        CHECK(improved == (b == n - 1));
        // the exceptional class is exactly "bound stuck at an odd n"
        CHECK((c == Classification::case_ii_exception) == (b == n && n % 2 == 1));
    }
}

TEST_CASE("improved fraction stabilizes between 10^5 and 10^6") {
    double f5 = improvement_fraction(100000).fraction().to_double();
    double f6 = improvement_fraction(1000000).fraction().to_double();
    CHECK(f5 > 0.70);
    CHECK(f5 < 0.80);
    CHECK(f6 > 0.70);
    CHECK(f6 < 0.80);
    CHECK(std::abs(f5 - f6) < 0.02);
}

TEST_CASE("polynomial argument on the 5 element field") {
    FieldSpec spec = build_field(5, 1);
    CharacterTable chi = build_character(spec);
    PhiProfile prof = compute_phi(spec, chi, {0, 1});
    CheckReport rep = poly_zero_check(spec, prof);
    CHECK(rep.ok());
    // degree (p-1)/2 = 2, leading coefficient s = 2, no roots mod 5
    bool saw_degree = false;
    for (const Check& c : rep.checks)
        if (c.name == "poly_degree") {
            saw_degree = true;
            CHECK(c.pass);
        }
    CHECK(saw_degree);
}

TEST_CASE("polynomial argument across small primes") {
    for (std::uint64_t p : {13ull, 17ull, 29ull, 37ull, 41ull, 53ull}) {
        FieldSpec spec = build_field(p, 1);
        CharacterTable chi = build_character(spec);
        PaleyGraph g = build_paley(spec, chi);
        CliqueResult res = max_clique(g);
        PhiProfile prof = compute_phi(spec, chi, res.witness);
        CAPTURE(p);
        CHECK(poly_zero_check(spec, prof).ok());
    }
}

TEST_CASE("polynomial argument rejects extension fields") {
    FieldSpec spec = build_field(3, 2);
    CharacterTable chi = build_character(spec);
    PhiProfile prof = compute_phi(spec, chi, {0, 1, 2});
    CHECK_THROWS_AS(poly_zero_check(spec, prof), ExtensionField);
}

TEST_CASE("prime power factoring") {
    CHECK(factor_prime_power(13).p == 13);
    CHECK(factor_prime_power(13).k == 1);
    CHECK(factor_prime_power(125).p == 5);
    CHECK(factor_prime_power(125).k == 3);
    CHECK(factor_prime_power(2197).p == 13);
    CHECK(factor_prime_power(2197).k == 3);
    CHECK(factor_prime_power(81).k == 4);
    CHECK_THROWS_AS(factor_prime_power(12), NotPrime);
    CHECK_THROWS_AS(factor_prime_power(1), NotPrime);
    CHECK_THROWS_AS(factor_prime_power(0), NotPrime);
}

TEST_CASE("admissible orders") {
    CHECK(admissible_orders(5, 100) ==
          std::vector<std::uint64_t>{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97});
    // odd extension degrees only: the first beyond the primes is 125 = 5^3
    CHECK(admissible_orders(5, 100, true) ==
          std::vector<std::uint64_t>{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97});
    CHECK(admissible_orders(5, 130, true) ==
          std::vector<std::uint64_t>{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113,
                                     125});
    // even degrees bring in the squares (including p = 3 mod 4, since q = p^2
    // is always 1 mod 4) and fourth powers
    CHECK(admissible_orders(5, 100, true, true) ==
          std::vector<std::uint64_t>{5, 9, 13, 17, 25, 29, 37, 41, 49, 53, 61, 73, 81, 89, 97});
    CHECK(admissible_orders(6, 12).empty());
    CHECK(admissible_orders(100, 5).empty());
    CHECK(admissible_orders(0, 4).empty());
    CHECK(admissible_orders(121, 130, true) == std::vector<std::uint64_t>{125});
    CHECK(admissible_orders(121, 130, true, true) == std::vector<std::uint64_t>{121, 125});
}

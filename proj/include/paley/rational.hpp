#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "paley/errors.hpp"

namespace paley {

// Exact rational with reduced num/den, den > 0. Big enough for the bound
// arithmetic here; nothing in this project needs arbitrary precision.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    std::int64_t floor() const {
        if (num >= 0) return num / den;
        return -((-num + den - 1) / den);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace paley

#pragma once

#include <stdexcept>
#include <string>

namespace paley {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction
struct NotPrime : Error {
    explicit NotPrime(unsigned long long p)
        : Error("not an odd prime: " + std::to_string(p)) {}
};
struct BadModulus : Error {
    using Error::Error;
};
struct ReduciblePolynomial : Error {
    using Error::Error;
};
struct OrderTooLarge : Error {
    using Error::Error;
};

// field arithmetic
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct CharacterMismatch : Error {
    using Error::Error;
};

// graph
struct NotOneModFour : Error {
    explicit NotOneModFour(unsigned long long q)
        : Error("q = " + std::to_string(q) + " is not 1 mod 4") {}
};

// clique
struct NotAClique : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};

// phi
struct EmptyClique : Error {
    EmptyClique() : Error("clique is empty") {}
    using Error::Error;
};
struct TIsInB : Error {
    using Error::Error;
};
struct ZeroR : Error {
    ZeroR() : Error("D-set size r must be >= 1") {}
    using Error::Error;
};

// bounds
struct EvenExtensionDegree : Error {
    using Error::Error;
};
struct ExtensionField : Error {
    using Error::Error;
};

// cache
struct EmptyCache : Error {
    using Error::Error;
};

} // namespace paley

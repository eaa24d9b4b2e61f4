#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paley/bitset.hpp"
#include "paley/errors.hpp"

namespace paley {

// Canonical element index in [0, q): the coefficient vector (c_0,...,c_{k-1})
// of the residue polynomial, encoded as sum c_i * p^i. Index 0 is the additive
// identity, index 1 the multiplicative identity; for k = 1 the index is the
// residue itself.
using Element = std::uint32_t;

constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

// F_{p^k} with a fixed monic irreducible modulus polynomial. Immutable after
// construction; safe to share read-only across threads.
struct FieldSpec {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> modulus; // c_0..c_k over Z_p, monic, degree k

    bool prime_field() const { return k == 1; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    // square-and-multiply; 0^0 = 1 by convention, 0^e = 0 for e > 0
    Element pow(Element a, std::uint64_t e) const;

    void check_index(Element a) const {
        if (a >= q) throw IndexOutOfRange("element index " + std::to_string(a) +
                                          " out of range for q=" + std::to_string(q));
    }
};

// Validates p odd prime, k >= 1, q = p^k <= cap. If `modulus` is omitted and
// k > 1, picks the lexicographically smallest monic irreducible of degree k
// (coefficient tuples (c_0,...,c_{k-1}) compared left to right); a supplied
// modulus is verified monic, degree k and irreducible by trial division
// against all monic irreducibles of degree <= k/2.
FieldSpec build_field(std::uint64_t p, unsigned k,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                      std::uint64_t order_cap = kDefaultOrderCap);

// chi(x): +1 on Q, -1 on NQ, 0 at 0. Built by enumerating squares a*a and
// cross-validated against the Euler criterion x^((q-1)/2) at every index;
// disagreement (or |Q| != (q-1)/2) throws CharacterMismatch.
struct CharacterTable {
    std::vector<std::int8_t> values;
    Bitset q_set;
    Bitset nq_set;

    int chi(Element x) const { return values[x]; }
    bool is_square(Element x) const { return values[x] > 0; }
    std::size_t order() const { return values.size(); }

    // smallest-index non-residue (deterministic pick for the complement map)
    Element smallest_nonresidue() const {
        return static_cast<Element>(nq_set.find_first());
    }
};

CharacterTable build_character(const FieldSpec& spec);

} // namespace paley

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "paley/check.hpp"
#include "paley/errors.hpp"
#include "paley/field.hpp"
#include "paley/rational.hpp"

namespace paley {

// phi(t) = sum over b in B of chi(b - t), tabulated for every t in F_q.
// phi1 is the shifted profile phi + 1.
struct PhiProfile {
    std::uint64_t q = 0;
    std::size_t s = 0;
    std::vector<std::uint32_t> b;     // the clique, ascending
    std::vector<std::int64_t> phi;    // indexed by t
    Bitset in_b;

    std::int64_t phi1(std::uint32_t t) const { return phi[t] + 1; }
};

// D = (B - t) restricted to non-squares, for a t outside B
struct DSet {
    std::uint32_t t = 0;
    std::vector<std::uint32_t> d;     // ascending
    std::size_t r = 0;                // |D| = (s - phi(t)) / 2
};

// throws NotAClique / EmptyClique / IndexOutOfRange
PhiProfile compute_phi(const FieldSpec& spec, const CharacterTable& chi,
                       const std::vector<std::uint32_t>& b);

// the five exact sum identities a clique profile satisfies
CheckReport verify_moments(const PhiProfile& profile);

// phi = s-1 on B; outside B (for a maximal clique) phi <= s-2 and
// phi has the parity of s
CheckReport verify_pointwise(const PhiProfile& profile, bool maximal = true);

// t outside B minimizing phi(t); ties break to the smallest t
std::uint32_t find_best_t(const PhiProfile& profile);

// throws TIsInB; verifies every pairwise difference within D is a square
DSet construct_dset(const FieldSpec& spec, const CharacterTable& chi,
                    const PhiProfile& profile, std::uint32_t t);

// counts solutions of b1 - b2 = z d (b1 != b2 in B, d in D, z a non-square):
// the count must be exactly s(s-1)r, each (b1, z) pair must occur at most
// once, and s(s-1)r <= s(q-1)/2 follows
CheckReport verify_lemma_count(const FieldSpec& spec, const CharacterTable& chi,
                               const PhiProfile& profile, const DSet& dset);

// the clique-size bound implied by the counting lemma: 1 + (q-1)/(2r)
Rational sbound(const DSet& dset, std::uint64_t q);

// sum over all t of phi(t)^3
std::int64_t third_moment(const PhiProfile& profile);

// columns: t,phi,phi1,in_B
void write_profile_csv(const PhiProfile& profile, std::ostream& out);

} // namespace paley

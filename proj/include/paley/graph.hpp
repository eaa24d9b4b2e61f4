#pragma once

#include <cstdint>
#include <iosfwd>

#include "paley/bitset.hpp"
#include "paley/check.hpp"
#include "paley/field.hpp"

namespace paley {

// P_q as dense bitset adjacency: bit (x,y) set iff x - y is a nonzero square.
// Defined only for q = 1 mod 4, which makes the relation symmetric. Immutable
// after build (except for the explicit fault-injection hook used by tests).
class PaleyGraph {
public:
    PaleyGraph(FieldSpec spec, const CharacterTable& chi);

    std::uint64_t order() const { return q_; }
    std::size_t row_words() const { return words_; }
    const FieldSpec& spec() const { return spec_; }

    const std::uint64_t* row(std::uint64_t x) const { return rows_.data() + x * words_; }

    bool adjacent(std::uint64_t x, std::uint64_t y) const {
        return (row(x)[y >> 6] >> (y & 63)) & 1;
    }

    std::size_t degree(std::uint64_t x) const {
        const std::uint64_t* r = row(x);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_; ++i) c += std::popcount(r[i]);
        return c;
    }

    std::uint64_t edge_count() const;

    // test hook: toggles the (x,y)/(y,x) adjacency pair to fault the graph
    void toggle_edge(std::uint64_t x, std::uint64_t y);

    // neighbors of x as a Bitset copy (convenience; hot paths use row())
    Bitset neighbors(std::uint64_t x) const;

private:
    FieldSpec spec_;
    std::uint64_t q_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

PaleyGraph build_paley(const FieldSpec& spec, const CharacterTable& chi);

// Exhaustive strongly-regular check against (q, (q-1)/2, (q-5)/4, (q-1)/4):
// every degree, every adjacent pair's common-neighbor count, every
// non-adjacent pair's. The report carries the first counterexample.
CheckReport verify_srg(const PaleyGraph& g);

// Checks that x -> z*x for the smallest-index non-residue z maps the graph
// onto its complement (exhaustive edge check).
bool verify_self_complementary(const PaleyGraph& g, const CharacterTable& chi);

// `q` header line, then one "x y" pair per edge with x < y
void write_edge_list(const PaleyGraph& g, std::ostream& out);

} // namespace paley

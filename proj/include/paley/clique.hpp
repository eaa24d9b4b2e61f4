#pragma once

#include <cstdint>
#include <vector>

#include "paley/graph.hpp"

namespace paley {

enum class CliqueMethod { branch_and_bound, naive_oracle };

struct CliqueResult {
    std::size_t s = 0;
    std::vector<std::uint32_t> witness; // sorted ascending
    std::uint64_t nodes_explored = 0;
    CliqueMethod method = CliqueMethod::branch_and_bound;
    // re-verified after the search, independent of the search path
    bool witness_is_clique = false;
    bool witness_is_maximal = false;
};

// true iff all pairwise differences of distinct members are squares
bool is_clique(const std::vector<std::uint32_t>& b, const PaleyGraph& g);

// true iff no outside vertex is adjacent to every member; throws NotAClique
// when b is not a clique
bool is_maximal(const std::vector<std::uint32_t>& b, const PaleyGraph& g);

// Exact s(q). Vertex/edge transitivity lets the search fix {0, 1} and explore
// only N(0) & N(1), so s = 2 + omega(induced subgraph). Branch and bound with
// greedy-coloring bounds over bitset candidate sets; the witness is the
// lexicographically smallest maximum clique, independent of `threads`.
// nodes_explored is deterministic for threads == 1.
CliqueResult max_clique(const PaleyGraph& g, unsigned threads = 1);

// Exhaustive enumeration of every clique, no bounds, no symmetry reduction.
// Validation oracle only; throws TooLarge for q > cap.
CliqueResult max_clique_naive(const PaleyGraph& g, std::uint64_t cap = 200);

} // namespace paley

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paley/check.hpp"
#include "paley/clique.hpp"
#include "paley/errors.hpp"

namespace paley {

// one computed order, as cached on disk
struct ResultRow {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned k = 1;
    std::uint64_t n = 0;                       // isqrt(q)
    std::uint64_t s_exact = 0;
    std::uint64_t trivial_bound = 0;           // n
    std::optional<std::uint64_t> theorem_bound; // absent for even exponents
    std::optional<bool> improved;              // theorem_bound < trivial_bound
    std::string classification;                // empty off the prime case
    std::int64_t phi_min = 0;                  // min phi(t) off the clique
    std::uint64_t r_best = 0;                  // D-set size at the best t
    std::string lemma_bound;                   // 1 + (q-1)/(2r) as a fraction
    std::int64_t third_moment = 0;
    std::uint64_t nodes_explored = 0;
    std::uint64_t wall_time_ms = 0;
};

struct AnalyzeOptions {
    unsigned threads = 1;
    CliqueMethod method = CliqueMethod::branch_and_bound;
    std::uint64_t naive_cap = 200;
};

// end-to-end pipeline for one order: field, character, graph, exact clique,
// phi profile, best D-set, bounds
ResultRow analyze_order(std::uint64_t q, const AnalyzeOptions& opts = {});

// every mechanical check for one order in a single report: graph structure,
// moment identities, pointwise behaviour, the counting lemma, bound
// consistency, and (prime fields) the polynomial argument
CheckReport run_verification(std::uint64_t q, const AnalyzeOptions& opts = {});

// cache format: "# schema=1", a header row, then one CSV row per order,
// sorted by q
extern const char* const kCacheHeader;

std::string to_csv_row(const ResultRow& row);
ResultRow parse_csv_row(const std::string& line);

std::vector<ResultRow> read_cache(const std::string& path);          // throws EmptyCache
void write_cache(const std::string& path, std::vector<ResultRow> rows); // atomic, sorts by q

} // namespace paley

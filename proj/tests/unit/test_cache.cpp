#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "paley/analyze.hpp"

using namespace paley;

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("analyzing one prime yields the full frozen row") {
    ResultRow row = analyze_order(13);
    CHECK(row.q == 13);
    CHECK(row.p == 13);
    CHECK(row.k == 1);
    CHECK(row.n == 3);
    CHECK(row.s_exact == 3);
    CHECK(row.trivial_bound == 3);
    REQUIRE(row.theorem_bound.has_value());
    CHECK(*row.theorem_bound == 3);
    REQUIRE(row.improved.has_value());
    CHECK(!*row.improved);
    CHECK(row.classification == "case_ii_exception");
    CHECK(row.phi_min == -3);
    CHECK(row.r_best == 3);
    CHECK(row.lemma_bound == "3");
    CHECK(row.third_moment == -6);
    CHECK(row.nodes_explored > 0);
}

TEST_CASE("analyzing a square order leaves the parity fields empty") {
    ResultRow row = analyze_order(9);
    CHECK(row.q == 9);
    CHECK(row.p == 3);
    CHECK(row.k == 2);
    CHECK(row.n == 3);
    CHECK(row.s_exact == 3);
    CHECK(!row.theorem_bound.has_value());
    CHECK(!row.improved.has_value());
    CHECK(row.classification.empty());
    CHECK(row.phi_min == -1);
    CHECK(row.r_best == 2);
    CHECK(row.lemma_bound == "3");
    CHECK(row.third_moment == 18);
}

TEST_CASE("cube orders keep the parity bound") {
    ResultRow row = analyze_order(125);
    CHECK(row.k == 3);
    REQUIRE(row.theorem_bound.has_value());
    CHECK(*row.theorem_bound == 10);
    CHECK(row.classification.empty());
    CHECK(row.s_exact <= 10);
}

TEST_CASE("csv row round trip") {
    ResultRow row;
    row.q = 37;
    row.p = 37;
    row.k = 1;
    row.n = 6;
    row.s_exact = 4;
    row.trivial_bound = 6;
    row.theorem_bound = 5;
    row.improved = true;
    row.classification = "case_i_improved";
    row.phi_min = -4;
    row.r_best = 4;
    row.lemma_bound = "11/2";
    row.third_moment = -12;
    row.nodes_explored = 42;
    row.wall_time_ms = 7;

    std::string line = to_csv_row(row);
    CHECK(line == "37,37,1,6,4,6,5,1,case_i_improved,-4,4,11/2,-12,42,7");
    ResultRow back = parse_csv_row(line);
    CHECK(back.q == row.q);
    CHECK(back.theorem_bound == row.theorem_bound);
    CHECK(back.improved == row.improved);
    CHECK(back.classification == row.classification);
    CHECK(back.phi_min == row.phi_min);
    CHECK(back.lemma_bound == row.lemma_bound);
    CHECK(back.third_moment == row.third_moment);

    ResultRow square;
    square.q = 9;
    square.p = 3;
    square.k = 2;
    square.n = 3;
    square.s_exact = 3;
    square.trivial_bound = 3;
    square.lemma_bound = "3";
    std::string sq_line = to_csv_row(square);
    ResultRow sq_back = parse_csv_row(sq_line);
    CHECK(!sq_back.theorem_bound.has_value());
    CHECK(!sq_back.improved.has_value());
    CHECK(sq_back.classification.empty());
}

TEST_CASE("malformed csv rows are rejected") {
    CHECK_THROWS_AS(parse_csv_row("1,2,3"), Error);
    CHECK_THROWS_AS(parse_csv_row("x,37,1,6,4,6,5,1,c,-4,4,11/2,-12,42,7"), Error);
    CHECK_THROWS_AS(parse_csv_row("37,37,1,6,4,6,5,1,c,-4,4,11/2,-12,42,7,extra"), Error);
}

TEST_CASE("cache file round trip, sorted and atomic") {
    std::string path = temp_path("paley_cache_test.csv");
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_cache(path), EmptyCache);

    ResultRow a = analyze_order(13);
    ResultRow b = analyze_order(5);
    write_cache(path, {a, b});

    std::vector<ResultRow> rows = read_cache(path);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].q == 5); // sorted even though written out of order
    CHECK(rows[1].q == 13);
    CHECK(rows[1].s_exact == 3);

    std::ifstream in(path);
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    CHECK(first == "# schema=1");
    CHECK(second == kCacheHeader);

    std::remove(path.c_str());
}

TEST_CASE("verification passes end to end on small orders") {
    for (std::uint64_t q : {5ull, 13ull, 9ull, 17ull, 25ull, 29ull}) {
        CheckReport rep = run_verification(q);
        CAPTURE(q);
        if (!rep.ok()) { CAPTURE(rep.first_failure()->name); }
        CHECK(rep.ok());
    }
}

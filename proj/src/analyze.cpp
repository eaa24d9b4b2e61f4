#include "paley/analyze.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "paley/bounds.hpp"
#include "paley/field.hpp"
#include "paley/graph.hpp"
#include "paley/phi.hpp"
#include "paley/primes.hpp"

namespace paley {

ResultRow analyze_order(std::uint64_t q, const AnalyzeOptions& opts) {
    auto start = std::chrono::steady_clock::now();

    PrimePower pk = factor_prime_power(q);
    FieldSpec spec = build_field(pk.p, pk.k);
    CharacterTable chi = build_character(spec);
    PaleyGraph graph = build_paley(spec, chi);

    CliqueResult clique = opts.method == CliqueMethod::naive_oracle
                              ? max_clique_naive(graph, opts.naive_cap)
                              : max_clique(graph, opts.threads);

    PhiProfile prof = compute_phi(spec, chi, clique.witness);
    std::uint32_t t = find_best_t(prof);
    DSet ds = construct_dset(spec, chi, prof, t);

    ResultRow row;
    row.q = q;
    row.p = pk.p;
    row.k = pk.k;
    row.n = isqrt(q);
    row.s_exact = clique.s;
    row.trivial_bound = row.n;
    if (pk.k % 2 == 1) {
        row.theorem_bound = theorem_bound(q);
        row.improved = *row.theorem_bound < row.trivial_bound;
    }
    if (pk.k == 1) row.classification = to_string(classify_prime(q));
    row.phi_min = prof.phi[t];
    row.r_best = ds.r;
    row.lemma_bound = sbound(ds, q).str();
    row.third_moment = third_moment(prof);
    row.nodes_explored = clique.nodes_explored;

    auto end = std::chrono::steady_clock::now();
    row.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
    return row;
}

CheckReport run_verification(std::uint64_t q, const AnalyzeOptions& opts) {
    PrimePower pk = factor_prime_power(q);
    FieldSpec spec = build_field(pk.p, pk.k);
    CharacterTable chi = build_character(spec);
    PaleyGraph graph = build_paley(spec, chi);

    CheckReport rep;
    for (const Check& c : verify_srg(graph).checks) rep.add(c.name, c.pass, c.detail);
    rep.add("self_complementary", verify_self_complementary(graph, chi),
            "complement is isomorphic via a non-square multiplier");

    CliqueResult clique = opts.method == CliqueMethod::naive_oracle
                              ? max_clique_naive(graph, opts.naive_cap)
                              : max_clique(graph, opts.threads);
    rep.add("witness_is_clique", clique.witness_is_clique,
            "witness of size " + std::to_string(clique.s));
    rep.add("witness_is_maximal", clique.witness_is_maximal,
            "a maximum clique admits no extension");

    if (q <= 200 && opts.method != CliqueMethod::naive_oracle) {
        CliqueResult slow = max_clique_naive(graph, opts.naive_cap);
        rep.add("oracle_equivalence", slow.s == clique.s && slow.witness == clique.witness,
                "exhaustive enumeration also finds s = " + std::to_string(slow.s));
    }

    std::uint64_t n = isqrt(q);
    rep.add("trivial_bound", clique.s <= n,
            "s = " + std::to_string(clique.s) + " vs isqrt(q) = " + std::to_string(n));
    if (pk.k % 2 == 1) {
        std::uint64_t tb = theorem_bound(q);
        rep.add("parity_bound_holds", clique.s <= tb,
                "s = " + std::to_string(clique.s) + " vs bound " + std::to_string(tb));
        rep.add("parity_bound_range", tb == n || tb == n - 1,
                "bound " + std::to_string(tb) + " with isqrt(q) = " + std::to_string(n));
    } else {
        std::uint64_t root = 1;
        for (unsigned i = 0; i < pk.k / 2; ++i) root *= pk.p;
        rep.add("square_order_equality", clique.s == root,
                "s = " + std::to_string(clique.s) + " vs subfield order " + std::to_string(root));
    }

    PhiProfile prof = compute_phi(spec, chi, clique.witness);
    for (const Check& c : verify_moments(prof).checks) rep.add(c.name, c.pass, c.detail);
    for (const Check& c : verify_pointwise(prof, clique.witness_is_maximal).checks)
        rep.add(c.name, c.pass, c.detail);

    std::uint32_t t = find_best_t(prof);
    DSet ds = construct_dset(spec, chi, prof, t);
    for (const Check& c : verify_lemma_count(spec, chi, prof, ds).checks)
        rep.add(c.name, c.pass, c.detail);

    Rational bound = sbound(ds, q);
    Rational s_rat(static_cast<std::int64_t>(clique.s), 1);
    // the excess of r over s/2 is informational: observed but never asserted
    Rational excess = Rational(2 * static_cast<std::int64_t>(ds.r) -
                               static_cast<std::int64_t>(clique.s), 2);
    rep.add("lemma_bound_holds", s_rat < bound || s_rat == bound,
            "s = " + std::to_string(clique.s) + " vs 1 + (q-1)/(2r) = " + bound.str() +
            ", r - s/2 = " + excess.str());

    if (pk.k == 1)
        for (const Check& c : poly_zero_check(spec, prof).checks) rep.add(c.name, c.pass, c.detail);

    return rep;
}

const char* const kCacheHeader =
    "q,p,k,n,s_exact,trivial_bound,theorem_bound,improved,classification,"
    "phi_min,r_best,lemma_bound,third_moment,nodes_explored,wall_time_ms";

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& field) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error("bad cache value for " + field + ": '" + s + "'");
    }
}

std::int64_t parse_i64(const std::string& s, const std::string& field) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error("bad cache value for " + field + ": '" + s + "'");
    }
}

} // namespace

std::string to_csv_row(const ResultRow& row) {
    std::ostringstream out;
    out << row.q << ',' << row.p << ',' << row.k << ',' << row.n << ',' << row.s_exact << ','
        << row.trivial_bound << ',';
    if (row.theorem_bound) out << *row.theorem_bound;
    out << ',';
    if (row.improved) out << (*row.improved ? 1 : 0);
    out << ',' << row.classification << ',' << row.phi_min << ',' << row.r_best << ','
        << row.lemma_bound << ',' << row.third_moment << ',' << row.nodes_explored << ','
        << row.wall_time_ms;
    return out.str();
}

ResultRow parse_csv_row(const std::string& line) {
    std::vector<std::string> f = split(line, ',');
    if (f.size() != 15)
        throw Error("cache row has " + std::to_string(f.size()) + " fields, expected 15");
    ResultRow row;
    row.q = parse_u64(f[0], "q");
    row.p = parse_u64(f[1], "p");
    row.k = static_cast<unsigned>(parse_u64(f[2], "k"));
    row.n = parse_u64(f[3], "n");
    row.s_exact = parse_u64(f[4], "s_exact");
    row.trivial_bound = parse_u64(f[5], "trivial_bound");
    if (!f[6].empty()) row.theorem_bound = parse_u64(f[6], "theorem_bound");
    if (!f[7].empty()) row.improved = parse_u64(f[7], "improved") != 0;
    row.classification = f[8];
    row.phi_min = parse_i64(f[9], "phi_min");
    row.r_best = parse_u64(f[10], "r_best");
    row.lemma_bound = f[11];
    row.third_moment = parse_i64(f[12], "third_moment");
    row.nodes_explored = parse_u64(f[13], "nodes_explored");
    row.wall_time_ms = parse_u64(f[14], "wall_time_ms");
    return row;
}

std::vector<ResultRow> read_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EmptyCache("no cache file at " + path);
    std::string line;
    if (!std::getline(in, line) || line != "# schema=1")
        throw Error("unrecognized cache schema in " + path);
    if (!std::getline(in, line) || line != kCacheHeader)
        throw Error("unrecognized cache header in " + path);
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(parse_csv_row(line));
    }
    if (rows.empty()) throw EmptyCache("cache at " + path + " holds no rows");
    return rows;
}

void write_cache(const std::string& path, std::vector<ResultRow> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const ResultRow& a, const ResultRow& b) { return a.q < b.q; });
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cache at " + tmp);
        out << "# schema=1\n" << kCacheHeader << '\n';
        for (const ResultRow& row : rows) out << to_csv_row(row) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot move cache into place at " + path);
}

} // namespace paley

// command line front end: compute clique data over ranges of field orders,
// verify the structural identities for single orders or ranges, classify
// primes by which bound applies, and emit plot-ready tables from a cache.
#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "paley/analyze.hpp"
#include "paley/bounds.hpp"
#include "paley/clique.hpp"
#include "paley/field.hpp"
#include "paley/graph.hpp"
#include "paley/phi.hpp"
#include "paley/primes.hpp"

namespace {

volatile std::sig_atomic_t g_interrupted = 0;

void handle_sigint(int) { g_interrupted = 1; }

struct ComputeArgs {
    std::uint64_t lo = 0, hi = 0;
    std::string cache;
    unsigned jobs = 1;
    bool prime_powers = false;
    bool even_k = false;
    bool force = false;
    bool csv = false;
    std::uint64_t cap = 10000;
};

// rows already cached stay untouched (so reruns are byte-identical); new
// orders are analyzed, merged in, and flushed sorted.  SIGINT flushes the
// rows finished so far and stops.
int cmd_compute(const ComputeArgs& args) {
    if (args.hi > args.cap) {
        std::cerr << "error: range end " << args.hi << " exceeds the cap " << args.cap
                  << " (raise --cap to search further)" << '\n';
        return 2;
    }
    std::vector<std::uint64_t> orders =
        paley::admissible_orders(args.lo, args.hi, args.prime_powers, args.even_k);
    if (orders.empty()) {
        std::cerr << "error: no admissible orders in [" << args.lo << ", " << args.hi
                  << "]; orders are odd prime powers = 1 mod 4" << '\n';
        return 2;
    }

    std::vector<paley::ResultRow> rows;
    if (!args.cache.empty() && !args.force) {
        try {
            rows = paley::read_cache(args.cache);
        } catch (const paley::EmptyCache&) {
            // nothing cached yet
        }
    }
    auto cached = [&rows](std::uint64_t q) {
        for (const auto& r : rows)
            if (r.q == q) return true;
        return false;
    };

    std::vector<std::uint64_t> todo;
    for (std::uint64_t q : orders)
        if (!cached(q)) todo.push_back(q);

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;

    auto worker = [&]() {
        while (!g_interrupted && !failed.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) break;
            try {
                paley::ResultRow row = paley::analyze_order(todo[i]);
                std::lock_guard<std::mutex> lock(mu);
                rows.push_back(row);
            } catch (const paley::Error& e) {
                std::lock_guard<std::mutex> lock(mu);
                failed.store(true);
                failure = "q = " + std::to_string(todo[i]) + ": " + e.what();
            }
        }
    };

    unsigned jobs = std::max(1u, args.jobs);
    if (jobs == 1 || todo.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, todo.size()); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::sort(rows.begin(), rows.end(),
              [](const paley::ResultRow& a, const paley::ResultRow& b) { return a.q < b.q; });

    if (!args.cache.empty() && !rows.empty()) paley::write_cache(args.cache, rows);

    if (args.csv) {
        std::cout << "# schema=1\n" << paley::kCacheHeader << '\n';
        for (const auto& r : rows) std::cout << paley::to_csv_row(r) << '\n';
    } else {
        for (const auto& r : rows) {
            std::cout << "q=" << r.q << " s=" << r.s_exact << " n=" << r.n;
            if (r.theorem_bound) std::cout << " bound=" << *r.theorem_bound;
            if (!r.classification.empty()) std::cout << " " << r.classification;
            std::cout << '\n';
        }
    }

    if (failed.load()) {
        std::cerr << "error: " << failure << '\n';
        return 1;
    }
    if (g_interrupted) {
        std::cerr << "interrupted: flushed " << rows.size() << " finished rows" << '\n';
        return 1;
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::uint64_t> range;
    bool prime_powers = false;
    bool even_k = false;
    std::vector<std::uint64_t> inject_fault;
    std::string export_graph;
    std::string dump_phi;
    bool quiet = false;
};

int verify_one(std::uint64_t q, const VerifyArgs& args) {
    // the fault hook and the export paths need the graph in hand, so this
    // mirrors run_verification when those are requested
    paley::CheckReport rep;
    if (!args.inject_fault.empty() || !args.export_graph.empty() || !args.dump_phi.empty()) {
        paley::PrimePower pk = paley::factor_prime_power(q);
        paley::FieldSpec spec = paley::build_field(pk.p, pk.k);
        paley::CharacterTable chi = paley::build_character(spec);
        paley::PaleyGraph graph = paley::build_paley(spec, chi);
        if (!args.inject_fault.empty())
            graph.toggle_edge(static_cast<paley::Element>(args.inject_fault[0]),
                              static_cast<paley::Element>(args.inject_fault[1]));
        if (!args.export_graph.empty()) {
            std::ofstream out(args.export_graph, std::ios::trunc);
            if (!out) throw paley::Error("cannot write " + args.export_graph);
            paley::write_edge_list(graph, out);
        }

        for (const auto& c : paley::verify_srg(graph).checks) rep.add(c.name, c.pass, c.detail);
        rep.add("self_complementary", paley::verify_self_complementary(graph, chi),
                "complement is isomorphic via a non-square multiplier");
        if (rep.ok()) {
            // structure holds, run the full pipeline for the rest
            paley::CliqueResult clique = paley::max_clique(graph);
            paley::PhiProfile prof = paley::compute_phi(spec, chi, clique.witness);
            if (!args.dump_phi.empty()) {
                std::ofstream out(args.dump_phi, std::ios::trunc);
                if (!out) throw paley::Error("cannot write " + args.dump_phi);
                paley::write_profile_csv(prof, out);
            }
            for (const auto& c : paley::verify_moments(prof).checks)
                rep.add(c.name, c.pass, c.detail);
            for (const auto& c : paley::verify_pointwise(prof, clique.witness_is_maximal).checks)
                rep.add(c.name, c.pass, c.detail);
            std::uint32_t t = paley::find_best_t(prof);
            paley::DSet ds = paley::construct_dset(spec, chi, prof, t);
            for (const auto& c : paley::verify_lemma_count(spec, chi, prof, ds).checks)
                rep.add(c.name, c.pass, c.detail);
            if (pk.k == 1)
                for (const auto& c : paley::poly_zero_check(spec, prof).checks)
                    rep.add(c.name, c.pass, c.detail);
        }
    } else {
        rep = paley::run_verification(q);
    }

    for (const auto& c : rep.checks) {
        if (args.quiet && c.pass) continue;
        std::cout << "q=" << q << " " << (c.pass ? "pass" : "FAIL") << " " << c.name;
        if (!c.pass) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
    return rep.ok() ? 0 : 1;
}

int cmd_verify(const VerifyArgs& args) {
    std::uint64_t lo = args.range[0];
    std::uint64_t hi = args.range.size() > 1 ? args.range[1] : args.range[0];
    std::vector<std::uint64_t> orders =
        paley::admissible_orders(lo, hi, args.prime_powers, args.even_k);
    if (orders.empty()) {
        std::cerr << "error: no admissible orders in [" << lo << ", " << hi
                  << "]; orders are odd prime powers = 1 mod 4" << '\n';
        return 2;
    }
    int rc = 0;
    for (std::uint64_t q : orders) {
        if (g_interrupted) return 1;
        rc |= verify_one(q, args);
    }
    return rc;
}

int cmd_classify(std::uint64_t limit, bool csv) {
    paley::ClassifyCounts counts = paley::improvement_fraction(limit);
    if (counts.total == 0) {
        std::cerr << "error: no primes = 1 mod 4 up to " << limit << '\n';
        return 2;
    }
    if (csv) {
        std::cout << "classification,count\n";
        std::cout << "case_i_improved," << counts.i_improved << '\n';
        std::cout << "case_i_not_improved," << counts.i_not_improved << '\n';
        std::cout << "case_ii_improved," << counts.ii_improved << '\n';
        std::cout << "case_ii_exception," << counts.ii_exception << '\n';
        std::cout << "total," << counts.total << '\n';
    } else {
        std::cout << "primes = 1 mod 4 up to " << limit << ": " << counts.total << '\n';
        std::cout << "  case_i_improved     " << counts.i_improved << '\n';
        std::cout << "  case_i_not_improved " << counts.i_not_improved << '\n';
        std::cout << "  case_ii_improved    " << counts.ii_improved << '\n';
        std::cout << "  case_ii_exception   " << counts.ii_exception << '\n';
    }
    paley::Rational frac = counts.fraction();
    std::cout << "improved fraction " << frac.str() << " = " << frac.to_double() << '\n';
    return 0;
}

// least squares fit of s(p) = c * log2(p)^2 over the prime rows
int cmd_plotdata(const std::string& cache_path) {
    std::vector<paley::ResultRow> rows = paley::read_cache(cache_path);
    double num = 0, den = 0;
    std::size_t prime_rows = 0;
    std::ostringstream body;
    for (const auto& r : rows) {
        if (r.k != 1) continue;
        ++prime_rows;
        body << r.q << ',' << r.s_exact << ',' << r.n << ','
             << (r.theorem_bound ? std::to_string(*r.theorem_bound) : std::string()) << '\n';
        double lg = std::log2(static_cast<double>(r.q));
        num += static_cast<double>(r.s_exact) * lg * lg;
        den += lg * lg * lg * lg;
    }
    if (prime_rows == 0) {
        std::cerr << "error: cache has no prime rows" << '\n';
        return 1;
    }
    std::cout << "# c_log2=" << num / den << '\n';
    std::cout << "p,s,sqrt_p_floor,theorem_bound\n" << body.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_sigint);

    CLI::App app{"exact clique data for quadratic-residue graphs over finite fields"};
    app.require_subcommand(1);

    ComputeArgs comp;
    CLI::App* compute = app.add_subcommand(
        "compute", "search a range of orders and report exact clique data");
    compute->add_option("lo", comp.lo, "range start")->required();
    compute->add_option("hi", comp.hi, "range end (inclusive)")->required();
    compute->add_option("--cache", comp.cache, "CSV cache to reuse and update");
    compute->add_option("--jobs", comp.jobs, "parallel workers across orders");
    compute->add_flag("--prime-powers", comp.prime_powers,
                      "include odd-degree prime powers, not just primes");
    compute->add_flag("--even-k", comp.even_k,
                      "include every prime power, even extension degrees too");
    compute->add_flag("--force", comp.force, "recompute even when cached");
    compute->add_flag("--csv", comp.csv, "print rows as CSV");
    compute->add_option("--cap", comp.cap, "refuse ranges beyond this order")
        ->capture_default_str();

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand(
        "verify", "run every structural check for one order or a range");
    verify->add_option("range", ver.range, "order, or range lo hi")
        ->expected(1, 2)
        ->required();
    verify->add_flag("--prime-powers", ver.prime_powers,
                     "include odd-degree prime powers, not just primes");
    verify->add_flag("--even-k", ver.even_k,
                     "include every prime power, even extension degrees too");
    verify->add_option("--inject-fault", ver.inject_fault,
                       "toggle one edge x y before verifying (the checks must catch it)")
        ->expected(2);
    verify->add_option("--export-graph", ver.export_graph, "write the edge list to a file");
    verify->add_option("--dump-phi", ver.dump_phi, "write the phi profile CSV to a file");
    verify->add_flag("--quiet", ver.quiet, "print failures only");

    std::uint64_t classify_limit = 0;
    bool classify_csv = false;
    CLI::App* classify = app.add_subcommand(
        "classify", "bucket primes = 1 mod 4 by which parity bound applies");
    classify->add_option("limit", classify_limit, "classify primes up to this limit")
        ->required();
    classify->add_flag("--csv", classify_csv, "print counts as CSV");

    std::string plot_cache;
    CLI::App* plotdata = app.add_subcommand(
        "plotdata", "emit s(p) against the bounds from a cache, with a log^2 fit");
    plotdata->add_option("--cache", plot_cache, "cache produced by compute")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(compute)) return cmd_compute(comp);
        if (app.got_subcommand(verify)) return cmd_verify(ver);
        if (app.got_subcommand(classify)) return cmd_classify(classify_limit, classify_csv);
        if (app.got_subcommand(plotdata)) return cmd_plotdata(plot_cache);
    } catch (const paley::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

#include "paley/clique.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>

namespace paley {

bool is_clique(const std::vector<std::uint32_t>& b, const PaleyGraph& g) {
    for (std::uint32_t v : b)
        if (v >= g.order())
            throw IndexOutOfRange("vertex " + std::to_string(v) + " not in [0, q)");
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!g.adjacent(b[i], b[j])) return false;
    return true;
}

bool is_maximal(const std::vector<std::uint32_t>& b, const PaleyGraph& g) {
    if (!is_clique(b, g)) throw NotAClique("is_maximal called on a non-clique");
    const std::size_t words = g.row_words();
    // common neighborhood of all members; members themselves drop out because
    // no vertex neighbors itself
    std::vector<std::uint64_t> common(words, ~std::uint64_t{0});
    std::uint64_t q = g.order();
    if (q % 64) common[words - 1] = (std::uint64_t{1} << (q % 64)) - 1;
    for (std::uint32_t v : b) {
        const std::uint64_t* r = g.row(v);
        for (std::size_t i = 0; i < words; ++i) common[i] &= r[i];
    }
    for (std::size_t i = 0; i < words; ++i)
        if (common[i]) return false;
    return true;
}

namespace {

// induced subgraph on a compact vertex range, bitset rows
struct SubGraph {
    std::size_t m = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> adj;

    explicit SubGraph(std::size_t n) : m(n), words((n + 63) / 64), adj(n * words, 0) {}
    const std::uint64_t* row(std::size_t v) const { return adj.data() + v * words; }
    void link(std::size_t a, std::size_t b) {
        adj[a * words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
        adj[b * words + (a >> 6)] |= std::uint64_t{1} << (a & 63);
    }
};

// Branch and bound on the compact subgraph. At every node the candidate set
// is greedy-colored in descending within-set degree order; the color index is
// the per-vertex upper bound and branching runs from the highest color down.
class Searcher {
public:
    Searcher(const SubGraph& g, std::atomic<int>* shared_best)
        : g_(g), shared_best_(shared_best) {
        // depth never exceeds the vertex count; sizing up front keeps the
        // per-depth buffers stable across the recursion
        bufs_.resize(g.m + 2);
        for (auto& b : bufs_) b.cand.assign(g.words, 0);
    }

    std::uint64_t nodes() const { return nodes_; }
    int best() const { return best_; }
    void set_best(int b) { best_ = b; }

    // decision mode: stop as soon as a clique of size >= target exists
    void set_target(int target) {
        target_ = target;
        best_ = target - 1;
    }
    bool target_met() const { return target_ > 0 && best_ >= target_; }

    void run(const std::vector<std::uint64_t>& cand) {
        buf(0).cand = cand;
        expand(0);
    }

    // search restricted to one root branch: cand already intersected
    void run_at_depth1(const std::vector<std::uint64_t>& cand) {
        buf(1).cand = cand;
        expand(1);
    }

private:
    struct DepthBuf {
        std::vector<std::uint64_t> cand;
        std::vector<std::uint32_t> verts;
        std::vector<std::uint32_t> order;
        std::vector<int> bound;
        std::vector<std::uint64_t> scratch; // 2 x words: remaining + current class
        std::vector<std::uint64_t> keys;    // (degree << 32) | ~vertex, for one sort
        std::vector<std::uint32_t> live;    // uncolored vertices, degree order
    };

    DepthBuf& buf(std::size_t depth) { return bufs_[depth]; }

    int incumbent() const {
        if (shared_best_) {
            int s = shared_best_->load(std::memory_order_relaxed);
            return s > best_ ? s : best_;
        }
        return best_;
    }

    void record(int size) {
        if (size > best_) best_ = size;
        if (shared_best_) {
            int cur = shared_best_->load(std::memory_order_relaxed);
            while (size > cur &&
                   !shared_best_->compare_exchange_weak(cur, size, std::memory_order_relaxed)) {
            }
        }
    }

    void expand(int depth) {
        ++nodes_;
        if (target_ > 0 && depth >= target_) {
            record(depth);
            return;
        }
        DepthBuf& b = buf(depth);
        DepthBuf& child = buf(depth + 1);

        b.verts.clear();
        for (std::size_t wi = 0; wi < g_.words; ++wi) {
            std::uint64_t w = b.cand[wi];
            while (w) {
                b.verts.push_back(static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        if (b.verts.empty()) {
            record(depth);
            return;
        }
        if (depth + static_cast<int>(b.verts.size()) <= incumbent()) return;

        color_sort(b);

        for (std::size_t idx = b.order.size(); idx-- > 0;) {
            if (target_met()) return;
            if (depth + b.bound[idx] <= incumbent()) return;
            std::uint32_t v = b.order[idx];
            const std::uint64_t* nv = g_.row(v);
            for (std::size_t wi = 0; wi < g_.words; ++wi) child.cand[wi] = b.cand[wi] & nv[wi];
            expand(depth + 1);
            b.cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    void color_sort(DepthBuf& b) {
        const std::size_t n = b.verts.size();
        const std::size_t words = g_.words;

        // one packed key per candidate: high half is the degree within the
        // set, low half the complemented vertex, so a plain descending sort
        // yields descending degree with ascending vertex as tiebreak
        b.keys.clear();
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t deg = intersection_count(b.cand.data(), g_.row(b.verts[i]), words);
            b.keys.push_back((deg << 32) | (0xFFFFFFFFu - b.verts[i]));
        }
        std::sort(b.keys.begin(), b.keys.end(), std::greater<>());

        b.live.clear();
        for (std::size_t pi = 0; pi < n; ++pi)
            b.live.push_back(0xFFFFFFFFu - static_cast<std::uint32_t>(b.keys[pi]));

        // classes are filled one at a time: each sweep places every vertex
        // (in the order above) whose neighbors miss the class so far, which
        // yields exactly the first-fit assignment vertex by vertex
        b.scratch.assign(2 * words, 0);
        std::uint64_t* remaining = b.scratch.data();
        std::uint64_t* avail = b.scratch.data() + words;
        std::copy_n(b.cand.data(), words, remaining);

        b.order.resize(n);
        b.bound.resize(n);
        std::size_t out = 0;
        std::size_t nlive = n;
        int c = 0;
        while (nlive > 0) {
            ++c;
            std::copy_n(remaining, words, avail);
            std::size_t w = 0;
            for (std::size_t i = 0; i < nlive; ++i) {
                std::uint32_t v = b.live[i];
                if ((avail[v >> 6] >> (v & 63)) & 1) {
                    b.order[out] = v;
                    b.bound[out] = c;
                    ++out;
                    remaining[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                    const std::uint64_t* nv = g_.row(v);
                    avail[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                    for (std::size_t wi = 0; wi < words; ++wi) avail[wi] &= ~nv[wi];
                } else {
                    b.live[w++] = v;
                }
            }
            nlive = w;
        }
    }

    const SubGraph& g_;
    std::atomic<int>* shared_best_;
    std::vector<DepthBuf> bufs_;
    std::uint64_t nodes_ = 0;
    int best_ = 0;
    int target_ = -1;
};

// deterministic first-fit cliques from a few rotated scan starts; seeds the
// incumbent so the first branches prune early
int greedy_seed(const SubGraph& g) {
    if (g.m == 0) return 0;
    int best = 0;
    std::vector<std::uint32_t> clique;
    const std::size_t starts = std::min<std::size_t>(8, g.m);
    for (std::size_t s = 0; s < starts; ++s) {
        std::size_t start = s * g.m / starts;
        clique.clear();
        for (std::size_t off = 0; off < g.m; ++off) {
            std::uint32_t v = static_cast<std::uint32_t>((start + off) % g.m);
            bool compatible = true;
            for (std::uint32_t u : clique)
                if (!((g.row(u)[v >> 6] >> (v & 63)) & 1)) {
                    compatible = false;
                    break;
                }
            if (compatible) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int solve_omega(const SubGraph& g, unsigned threads, std::uint64_t& nodes) {
    if (g.m == 0) {
        nodes = 1; // the root is still examined
        return 0;
    }

    std::vector<std::uint64_t> full(g.words, 0);
    for (std::size_t v = 0; v < g.m; ++v) full[v >> 6] |= std::uint64_t{1} << (v & 63);

    int seed = greedy_seed(g);

    if (threads <= 1) {
        Searcher s(g, nullptr);
        s.set_best(seed);
        s.run(full);
        nodes = s.nodes();
        return s.best();
    }

    // root branches distributed to workers; the incumbent is shared state
    struct RootPlan {
        std::vector<std::uint32_t> order;
        std::vector<int> bound;
    } plan;
    // root coloring, same scheme as Searcher::color_sort
    std::vector<std::uint32_t> verts;
    for (std::size_t v = 0; v < g.m; ++v) verts.push_back(static_cast<std::uint32_t>(v));
    std::vector<std::size_t> deg(g.m);
    for (std::size_t v = 0; v < g.m; ++v)
        deg[v] = intersection_count(full.data(), g.row(v), g.words);
    std::vector<std::uint32_t> perm(verts);
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<std::uint64_t> class_bits;
    for (std::uint32_t v : perm) {
        const std::uint64_t* nv = g.row(v);
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            const std::uint64_t* cls = class_bits.data() + c * g.words;
            bool conflict = false;
            for (std::size_t wi = 0; wi < g.words; ++wi)
                if (cls[wi] & nv[wi]) {
                    conflict = true;
                    break;
                }
            if (!conflict) break;
        }
        if (c == classes.size()) {
            classes.emplace_back();
            class_bits.resize(classes.size() * g.words, 0);
        }
        classes[c].push_back(v);
        class_bits[c * g.words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::uint32_t v : classes[c]) {
            plan.order.push_back(v);
            plan.bound.push_back(static_cast<int>(c) + 1);
        }

    // prefix masks: task i sees only vertices ordered before i
    const std::size_t n = plan.order.size();
    std::atomic<int> shared_best{seed};
    std::atomic<std::int64_t> next{static_cast<std::int64_t>(n) - 1};
    std::atomic<std::uint64_t> total_nodes{1}; // the root node itself

    auto worker = [&]() {
        Searcher s(g, &shared_best);
        std::vector<std::uint64_t> cand(g.words);
        std::vector<std::uint64_t> prefix(g.words);
        while (true) {
            std::int64_t i = next.fetch_sub(1, std::memory_order_relaxed);
            if (i < 0) break;
            if (plan.bound[i] <= shared_best.load(std::memory_order_relaxed)) continue;
            prefix.assign(g.words, 0);
            for (std::int64_t j = 0; j < i; ++j) {
                std::uint32_t u = plan.order[j];
                prefix[u >> 6] |= std::uint64_t{1} << (u & 63);
            }
            std::uint32_t v = plan.order[i];
            const std::uint64_t* nv = g.row(v);
            for (std::size_t wi = 0; wi < g.words; ++wi) cand[wi] = prefix[wi] & nv[wi];
            s.set_best(shared_best.load(std::memory_order_relaxed));
            s.run_at_depth1(cand);
        }
        total_nodes.fetch_add(s.nodes(), std::memory_order_relaxed);
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    nodes = total_nodes.load();
    return shared_best.load();
}

// does the candidate set contain a clique of size >= target?
bool exists_clique(const SubGraph& g, const std::vector<std::uint64_t>& cand, int target,
                   std::uint64_t& nodes) {
    if (target <= 0) return true;
    Searcher s(g, nullptr);
    s.set_target(target);
    s.run(cand);
    nodes += s.nodes();
    return s.target_met();
}

// lexicographically smallest clique of exactly `size` in the subgraph
std::vector<std::uint32_t> lex_smallest_clique(const SubGraph& g, int size,
                                               std::uint64_t& nodes) {
    std::vector<std::uint32_t> chosen;
    if (size == 0) return chosen;
    std::vector<std::uint64_t> cand(g.words, 0);
    for (std::size_t v = 0; v < g.m; ++v) cand[v >> 6] |= std::uint64_t{1} << (v & 63);

    int need = size;
    std::vector<std::uint64_t> trial(g.words);
    while (need > 0) {
        bool advanced = false;
        for (std::size_t wi = 0; wi < g.words && !advanced; ++wi) {
            std::uint64_t w = cand[wi];
            while (w) {
                std::uint32_t v = static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w));
                w &= w - 1;
                // candidates after v, restricted to neighbors of v
                const std::uint64_t* nv = g.row(v);
                for (std::size_t k = 0; k < g.words; ++k) trial[k] = cand[k] & nv[k];
                trial[v >> 6] &= ~(((std::uint64_t{1} << (v & 63)) << 1) - 1);
                for (std::size_t k = 0; k < (v >> 6); ++k) trial[k] = 0;
                if (need == 1 || exists_clique(g, trial, need - 1, nodes)) {
                    chosen.push_back(v);
                    cand = trial;
                    --need;
                    advanced = true;
                    break;
                }
            }
        }
        if (!advanced) throw Error("lexicographic witness extraction lost the clique");
    }
    return chosen;
}

} // namespace

CliqueResult max_clique(const PaleyGraph& g, unsigned threads) {
    // candidates adjacent to both fixed vertices 0 and 1
    std::vector<std::uint32_t> verts;
    {
        const std::uint64_t* r0 = g.row(0);
        const std::uint64_t* r1 = g.row(1);
        for (std::size_t wi = 0; wi < g.row_words(); ++wi) {
            std::uint64_t w = r0[wi] & r1[wi];
            while (w) {
                verts.push_back(static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    SubGraph sub(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) sub.link(i, j);

    CliqueResult res;
    res.method = CliqueMethod::branch_and_bound;

    std::uint64_t nodes = 0;
    int omega = solve_omega(sub, threads, nodes);

    // second pass: lexicographically smallest witness, sequential and
    // independent of how omega was found
    std::vector<std::uint32_t> tail = lex_smallest_clique(sub, omega, nodes);

    res.s = 2 + static_cast<std::size_t>(omega);
    res.witness = {0, 1};
    for (std::uint32_t c : tail) res.witness.push_back(verts[c]);
    std::sort(res.witness.begin(), res.witness.end());
    res.nodes_explored = nodes;
    res.witness_is_clique = is_clique(res.witness, g);
    res.witness_is_maximal = res.witness_is_clique && is_maximal(res.witness, g);
    return res;
}

CliqueResult max_clique_naive(const PaleyGraph& g, std::uint64_t cap) {
    const std::uint64_t q = g.order();
    if (q > cap)
        throw TooLarge("q = " + std::to_string(q) + " beyond the naive oracle cap " +
                       std::to_string(cap));

    const std::size_t words = g.row_words();
    std::vector<std::vector<std::uint64_t>> cand_at(q + 2,
                                                    std::vector<std::uint64_t>(words, 0));
    std::vector<std::uint32_t> cur;
    std::vector<std::uint32_t> best;
    std::uint64_t nodes = 0;

    // full vertex set at depth 0
    for (std::uint64_t v = 0; v < q; ++v) cand_at[0][v >> 6] |= std::uint64_t{1} << (v & 63);

    // depth-first enumeration of every clique, in lexicographic order; the
    // first clique reaching a new size is the lexicographically smallest of
    // that size
    auto explore = [&](auto&& self, std::size_t depth) -> void {
        ++nodes;
        if (cur.size() > best.size()) best = cur;
        const std::vector<std::uint64_t>& cand = cand_at[depth];
        std::vector<std::uint64_t>& child = cand_at[depth + 1];
        for (std::size_t wi = 0; wi < words; ++wi) {
            std::uint64_t w = cand[wi];
            while (w) {
                std::uint32_t v = static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w));
                w &= w - 1;
                const std::uint64_t* nv = g.row(v);
                for (std::size_t k = 0; k < words; ++k) child[k] = cand[k] & nv[k];
                // only higher-indexed vertices may extend
                child[v >> 6] &= ~(((std::uint64_t{1} << (v & 63)) << 1) - 1);
                for (std::size_t k = 0; k < (v >> 6); ++k) child[k] = 0;
                cur.push_back(v);
                self(self, depth + 1);
                cur.pop_back();
            }
        }
    };
    explore(explore, 0);

    CliqueResult res;
    res.s = best.size();
    res.witness = best;
    res.nodes_explored = nodes;
    res.method = CliqueMethod::naive_oracle;
    res.witness_is_clique = is_clique(res.witness, g);
    res.witness_is_maximal = res.witness_is_clique && is_maximal(res.witness, g);
    return res;
}

} // namespace paley

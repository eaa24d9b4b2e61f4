#include "paley/graph.hpp"

#include <ostream>
#include <string>

namespace paley {

PaleyGraph::PaleyGraph(FieldSpec spec, const CharacterTable& chi)
    : spec_(std::move(spec)), q_(spec_.q), words_((q_ + 63) / 64) {
    if (q_ % 4 != 1) throw NotOneModFour(q_);
    rows_.assign(q_ * words_, 0);
    // row x = x - Q: walk the residues once per row
    auto squares = chi.q_set.to_vector();
    for (std::uint64_t x = 0; x < q_; ++x) {
        std::uint64_t* r = rows_.data() + x * words_;
        for (Element d : squares) {
            std::uint64_t y = spec_.sub(static_cast<Element>(x), d);
            r[y >> 6] |= std::uint64_t{1} << (y & 63);
        }
    }
}

PaleyGraph build_paley(const FieldSpec& spec, const CharacterTable& chi) {
    return PaleyGraph(spec, chi);
}

std::uint64_t PaleyGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint64_t x = 0; x < q_; ++x) twice += degree(x);
    return twice / 2;
}

void PaleyGraph::toggle_edge(std::uint64_t x, std::uint64_t y) {
    rows_[x * words_ + (y >> 6)] ^= std::uint64_t{1} << (y & 63);
    rows_[y * words_ + (x >> 6)] ^= std::uint64_t{1} << (x & 63);
}

Bitset PaleyGraph::neighbors(std::uint64_t x) const {
    Bitset b(q_);
    const std::uint64_t* r = row(x);
    for (std::size_t i = 0; i < words_; ++i) b.data()[i] = r[i];
    return b;
}

CheckReport verify_srg(const PaleyGraph& g) {
    const std::uint64_t q = g.order();
    const std::size_t deg = (q - 1) / 2;
    const std::size_t lambda = (q - 5) / 4;
    const std::size_t mu = (q - 1) / 4;
    const std::size_t words = g.row_words();

    CheckReport rep;
    std::string params = "(" + std::to_string(q) + ", " + std::to_string(deg) + ", " +
                         std::to_string(lambda) + ", " + std::to_string(mu) + ")";

    for (std::uint64_t x = 0; x < q; ++x) {
        if (g.adjacent(x, x)) {
            rep.add("no_self_loops", false, "self loop at vertex " + std::to_string(x));
            return rep;
        }
        std::size_t d = g.degree(x);
        if (d != deg) {
            rep.add("degree", false,
                    "vertex " + std::to_string(x) + " has degree " + std::to_string(d) +
                        ", expected " + std::to_string(deg));
            return rep;
        }
    }
    rep.add("no_self_loops", true);
    rep.add("degree", true, "all " + std::to_string(deg));

    for (std::uint64_t x = 0; x < q; ++x) {
        for (std::uint64_t y = x + 1; y < q; ++y) {
            bool adj = g.adjacent(x, y);
            if (adj != g.adjacent(y, x)) {
                rep.add("symmetric", false,
                        "asymmetric pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
                return rep;
            }
            std::size_t common = intersection_count(g.row(x), g.row(y), words);
            std::size_t want = adj ? lambda : mu;
            if (common != want) {
                rep.add(adj ? "lambda" : "mu", false,
                        "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has " +
                            std::to_string(common) + " common neighbors, expected " +
                            std::to_string(want));
                return rep;
            }
        }
    }
    rep.add("symmetric", true);
    rep.add("lambda", true, std::to_string(lambda));
    rep.add("mu", true, std::to_string(mu));
    rep.add("srg_params", true, params);
    return rep;
}

bool verify_self_complementary(const PaleyGraph& g, const CharacterTable& chi) {
    const std::uint64_t q = g.order();
    const Element z = chi.smallest_nonresidue();
    const FieldSpec& spec = g.spec();
    std::vector<Element> image(q);
    for (std::uint64_t x = 0; x < q; ++x)
        image[x] = spec.mul(z, static_cast<Element>(x));
    for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = x + 1; y < q; ++y)
            if (g.adjacent(x, y) == g.adjacent(image[x], image[y])) return false;
    return true;
}

void write_edge_list(const PaleyGraph& g, std::ostream& out) {
    out << g.order() << "\n";
    for (std::uint64_t x = 0; x < g.order(); ++x)
        for (std::uint64_t y = x + 1; y < g.order(); ++y)
            if (g.adjacent(x, y)) out << x << " " << y << "\n";
}

} // namespace paley

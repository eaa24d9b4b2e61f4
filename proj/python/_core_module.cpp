// python bindings for the main operations: exact clique data, structural
// verification, bounds and classification
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paley/analyze.hpp"
#include "paley/bounds.hpp"
#include "paley/clique.hpp"
#include "paley/field.hpp"
#include "paley/graph.hpp"
#include "paley/phi.hpp"
#include "paley/primes.hpp"

namespace py = pybind11;

namespace {

struct Pipeline {
    paley::FieldSpec spec;
    paley::CharacterTable chi;
    paley::PaleyGraph graph;
};

Pipeline make_pipeline(std::uint64_t q) {
    paley::PrimePower pk = paley::factor_prime_power(q);
    paley::FieldSpec spec = paley::build_field(pk.p, pk.k);
    paley::CharacterTable chi = paley::build_character(spec);
    paley::PaleyGraph graph = paley::build_paley(spec, chi);
    return {std::move(spec), std::move(chi), std::move(graph)};
}

py::dict row_to_dict(const paley::ResultRow& r) {
    py::dict d;
    d["q"] = r.q;
    d["p"] = r.p;
    d["k"] = r.k;
    d["n"] = r.n;
    d["s_exact"] = r.s_exact;
    d["trivial_bound"] = r.trivial_bound;
    d["theorem_bound"] = r.theorem_bound ? py::cast(*r.theorem_bound) : py::none();
    d["improved"] = r.improved ? py::cast(*r.improved) : py::none();
    d["classification"] = r.classification;
    d["phi_min"] = r.phi_min;
    d["r_best"] = r.r_best;
    d["lemma_bound"] = r.lemma_bound;
    d["third_moment"] = r.third_moment;
    d["nodes_explored"] = r.nodes_explored;
    d["wall_time_ms"] = r.wall_time_ms;
    return d;
}

py::list report_to_list(const paley::CheckReport& rep) {
    py::list out;
    for (const auto& c : rep.checks) {
        py::dict d;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["detail"] = c.detail;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact clique data for quadratic-residue graphs over finite fields";

    py::register_exception<paley::Error>(m, "PaleyError");

    m.def("clique_number",
          [](std::uint64_t q) {
              Pipeline p = make_pipeline(q);
              return paley::max_clique(p.graph).s;
          },
          py::arg("q"), "exact clique number s(q)");

    m.def("max_clique",
          [](std::uint64_t q) {
              Pipeline p = make_pipeline(q);
              paley::CliqueResult res = paley::max_clique(p.graph);
              return py::make_tuple(res.s, res.witness);
          },
          py::arg("q"), "(s, lexicographically smallest maximum clique)");

    m.def("is_clique",
          [](std::uint64_t q, const std::vector<std::uint32_t>& members) {
              Pipeline p = make_pipeline(q);
              return paley::is_clique(members, p.graph);
          },
          py::arg("q"), py::arg("members"));

    m.def("phi_profile",
          [](std::uint64_t q) {
              Pipeline p = make_pipeline(q);
              paley::CliqueResult res = paley::max_clique(p.graph);
              paley::PhiProfile prof = paley::compute_phi(p.spec, p.chi, res.witness);
              return py::make_tuple(prof.b, prof.phi);
          },
          py::arg("q"), "(witness, phi values indexed by t)");

    m.def("analyze", [](std::uint64_t q) { return row_to_dict(paley::analyze_order(q)); },
          py::arg("q"), "full result row for one order");

    m.def("verify", [](std::uint64_t q) { return report_to_list(paley::run_verification(q)); },
          py::arg("q"), "every structural check with outcomes");

    m.def("isqrt", &paley::isqrt, py::arg("n"));

    m.def("theorem_bound", &paley::theorem_bound, py::arg("q"),
          "largest clique size the parity inequalities allow");

    m.def("classify",
          [](std::uint64_t p) { return std::string(paley::to_string(paley::classify_prime(p))); },
          py::arg("p"));

    m.def("improvement_fraction",
          [](std::uint64_t limit) {
              paley::ClassifyCounts c = paley::improvement_fraction(limit);
              py::dict d;
              d["total"] = c.total;
              d["case_i_improved"] = c.i_improved;
              d["case_i_not_improved"] = c.i_not_improved;
              d["case_ii_improved"] = c.ii_improved;
              d["case_ii_exception"] = c.ii_exception;
              d["improved"] = c.improved();
              d["fraction"] = c.fraction().to_double();
              return d;
          },
          py::arg("limit"));

    m.def("admissible_orders", &paley::admissible_orders, py::arg("lo"), py::arg("hi"),
          py::arg("prime_powers") = false, py::arg("even_k") = false);
}

#include "paley/phi.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <string>

namespace paley {

PhiProfile compute_phi(const FieldSpec& spec, const CharacterTable& chi,
                       const std::vector<std::uint32_t>& b) {
    if (b.empty()) throw EmptyClique("phi profile needs a non-empty clique");
    if (chi.order() != spec.q)
        throw CharacterMismatch("character table order does not match the field");
    for (std::uint32_t v : b)
        if (v >= spec.q)
            throw IndexOutOfRange("clique member " + std::to_string(v) + " not in [0, q)");
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (chi.chi(spec.sub(b[i], b[j])) != 1)
                throw NotAClique("difference of members " + std::to_string(b[i]) + " and " +
                                 std::to_string(b[j]) + " is not a square");

    PhiProfile prof;
    prof.q = spec.q;
    prof.s = b.size();
    prof.b = b;
    std::sort(prof.b.begin(), prof.b.end());
    prof.in_b = Bitset(spec.q);
    for (std::uint32_t v : prof.b) prof.in_b.set(v);
    prof.phi.assign(spec.q, 0);
    for (std::uint64_t t = 0; t < spec.q; ++t) {
        std::int64_t acc = 0;
        for (std::uint32_t v : prof.b) acc += chi.chi(spec.sub(v, static_cast<Element>(t)));
        prof.phi[t] = acc;
    }
    return prof;
}

CheckReport verify_moments(const PhiProfile& profile) {
    const std::int64_t q = static_cast<std::int64_t>(profile.q);
    const std::int64_t s = static_cast<std::int64_t>(profile.s);
    std::int64_t sum = 0, sum_sq = 0, out_sum = 0, out1_sum = 0, out1_sq = 0;
    for (std::uint64_t t = 0; t < profile.q; ++t) {
        std::int64_t v = profile.phi[t];
        sum += v;
        sum_sq += v * v;
        if (!profile.in_b.test(t)) {
            out_sum += v;
            out1_sum += v + 1;
            out1_sq += (v + 1) * (v + 1);
        }
    }

    CheckReport rep;
    auto expect = [&rep](const std::string& name, std::int64_t got, std::int64_t want) {
        rep.add(name, got == want,
                "got " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    expect("sum_phi", sum, 0);
    expect("sum_phi_sq", sum_sq, s * (q - s));
    expect("sum_phi_outside", out_sum, -s * (s - 1));
    expect("sum_phi1_outside", out1_sum, q - s * s);
    expect("sum_phi1_sq_outside", out1_sq, (s + 1) * (q - s * s));
    return rep;
}

CheckReport verify_pointwise(const PhiProfile& profile, bool maximal) {
    const std::int64_t s = static_cast<std::int64_t>(profile.s);
    CheckReport rep;

    bool on_b = true;
    std::string on_detail = "phi = s-1 on every member";
    for (std::uint32_t v : profile.b)
        if (profile.phi[v] != s - 1) {
            on_b = false;
            on_detail = "phi(" + std::to_string(v) + ") = " + std::to_string(profile.phi[v]) +
                        ", expected " + std::to_string(s - 1);
            break;
        }
    rep.add("phi_on_clique", on_b, on_detail);

    if (!maximal) return rep;

    bool below = true, parity = true;
    std::string below_detail = "phi <= s-2 off the clique";
    std::string parity_detail = "phi has the parity of s off the clique";
    for (std::uint64_t t = 0; t < profile.q; ++t) {
        if (profile.in_b.test(t)) continue;
        std::int64_t v = profile.phi[t];
        if (below && v > s - 2) {
            below = false;
            below_detail = "phi(" + std::to_string(t) + ") = " + std::to_string(v) +
                           " exceeds s-2 = " + std::to_string(s - 2);
        }
        if (parity && ((v - s) % 2 + 2) % 2 != 0) {
            parity = false;
            parity_detail = "phi(" + std::to_string(t) + ") = " + std::to_string(v) +
                            " disagrees with s = " + std::to_string(s) + " mod 2";
        }
    }
    rep.add("phi_off_clique_bound", below, below_detail);
    rep.add("phi_off_clique_parity", parity, parity_detail);
    return rep;
}

std::uint32_t find_best_t(const PhiProfile& profile) {
    bool found = false;
    std::uint32_t best = 0;
    std::int64_t best_val = 0;
    for (std::uint64_t t = 0; t < profile.q; ++t) {
        if (profile.in_b.test(t)) continue;
        if (!found || profile.phi[t] < best_val) {
            found = true;
            best = static_cast<std::uint32_t>(t);
            best_val = profile.phi[t];
        }
    }
    if (!found) throw Error("the clique covers the whole field");
    return best;
}

DSet construct_dset(const FieldSpec& spec, const CharacterTable& chi,
                    const PhiProfile& profile, std::uint32_t t) {
    if (t >= spec.q) throw IndexOutOfRange("t = " + std::to_string(t) + " not in [0, q)");
    if (profile.in_b.test(t))
        throw TIsInB("t = " + std::to_string(t) + " lies in the clique");

    DSet ds;
    ds.t = t;
    for (std::uint32_t v : profile.b) {
        Element diff = spec.sub(v, t);
        if (chi.chi(diff) == -1) ds.d.push_back(diff);
    }
    std::sort(ds.d.begin(), ds.d.end());
    ds.r = ds.d.size();

    // |D| is pinned by phi(t): the s differences split into squares and
    // non-squares, none zero
    std::int64_t expected_r = (static_cast<std::int64_t>(profile.s) - profile.phi[t]) / 2;
    if (static_cast<std::int64_t>(ds.r) != expected_r)
        throw Error("D-set size " + std::to_string(ds.r) + " disagrees with (s - phi(t))/2 = " +
                    std::to_string(expected_r));

    // differences within D are differences within B, hence squares
    for (std::size_t i = 0; i < ds.d.size(); ++i)
        for (std::size_t j = 0; j < ds.d.size(); ++j) {
            if (i == j) continue;
            if (chi.chi(spec.sub(ds.d[i], ds.d[j])) != 1)
                throw Error("difference within D at indices " + std::to_string(i) + "," +
                            std::to_string(j) + " is not a square");
        }
    return ds;
}

CheckReport verify_lemma_count(const FieldSpec& spec, const CharacterTable& chi,
                               const PhiProfile& profile, const DSet& dset) {
    const std::uint64_t q = spec.q;
    const std::int64_t s = static_cast<std::int64_t>(profile.s);
    const std::int64_t r = static_cast<std::int64_t>(dset.r);

    CheckReport rep;

    // every (b1, b2, d) determines z = (b1 - b2)/d; the lemma says z is a
    // non-square and distinct (b2, d) give distinct z for fixed b1
    std::int64_t count = 0;
    bool all_nonsquare = true;
    bool injective = true;
    std::string nonsq_detail = "every solution has a non-square z";
    std::string inj_detail = "no (b1, z) pair repeats";
    std::map<std::pair<std::uint32_t, Element>, std::pair<std::uint32_t, Element>> seen;
    std::vector<Element> dinv(dset.d.size());
    for (std::size_t i = 0; i < dset.d.size(); ++i) dinv[i] = spec.pow(dset.d[i], q - 2);
    for (std::uint32_t b1 : profile.b)
        for (std::uint32_t b2 : profile.b) {
            if (b1 == b2) continue;
            Element diff = spec.sub(b1, b2);
            for (std::size_t di = 0; di < dset.d.size(); ++di) {
                Element d = dset.d[di];
                Element z = spec.mul(diff, dinv[di]);
                ++count;
                if (all_nonsquare && chi.chi(z) != -1) {
                    all_nonsquare = false;
                    nonsq_detail = "z = " + std::to_string(z) + " from (" + std::to_string(b1) +
                                   "," + std::to_string(b2) + "," + std::to_string(d) +
                                   ") is not a non-square";
                }
                auto key = std::make_pair(b1, z);
                auto [it, fresh] = seen.emplace(key, std::make_pair(b2, d));
                if (!fresh && injective) {
                    injective = false;
                    inj_detail = "(b1, z) = (" + std::to_string(b1) + "," + std::to_string(z) +
                                 ") reached from two (b2, d) pairs";
                }
            }
        }

    std::int64_t expected = s * (s - 1) * r;
    rep.add("lemma_solution_count", count == expected,
            "got " + std::to_string(count) + ", expected s(s-1)r = " + std::to_string(expected));
    rep.add("lemma_z_nonsquare", all_nonsquare, nonsq_detail);
    rep.add("lemma_injectivity", injective, inj_detail);

    // injectivity packs s(s-1)r distinct (b1, z) pairs into s * (q-1)/2 slots
    std::int64_t slots = s * static_cast<std::int64_t>((q - 1) / 2);
    rep.add("lemma_capacity", expected <= slots,
            "s(s-1)r = " + std::to_string(expected) + " vs s(q-1)/2 = " + std::to_string(slots));
    return rep;
}

Rational sbound(const DSet& dset, std::uint64_t q) {
    if (dset.r == 0) throw ZeroR("the D-set is empty, the counting bound needs r >= 1");
    return Rational(1, 1) + Rational(static_cast<std::int64_t>(q - 1),
                                     2 * static_cast<std::int64_t>(dset.r));
}

std::int64_t third_moment(const PhiProfile& profile) {
    std::int64_t acc = 0;
    for (std::uint64_t t = 0; t < profile.q; ++t) {
        std::int64_t v = profile.phi[t];
        acc += v * v * v;
    }
    return acc;
}

void write_profile_csv(const PhiProfile& profile, std::ostream& out) {
    out << "t,phi,phi1,in_B\n";
    for (std::uint64_t t = 0; t < profile.q; ++t)
        out << t << ',' << profile.phi[t] << ',' << profile.phi[t] + 1 << ','
            << (profile.in_b.test(t) ? 1 : 0) << '\n';
}

} // namespace paley

#include "paley/field.hpp"

#include <algorithm>
#include <string>

namespace paley {

namespace {

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// digits of `a` in base p, least significant first, padded to n
void to_digits(std::uint64_t a, std::uint64_t p, unsigned n, std::uint32_t* out) {
    for (unsigned i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p);
        a /= p;
    }
}

std::uint64_t from_digits(const std::uint32_t* d, std::uint64_t p, unsigned n) {
    std::uint64_t a = 0;
    for (unsigned i = n; i-- > 0;) a = a * p + d[i];
    return a;
}

// polynomial remainder a mod b over Z_p, in place on `a` (degree da shrinks)
void poly_mod(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
              std::uint64_t p) {
    int db = static_cast<int>(b.size()) - 1;
    while (db > 0 && b[db] == 0) --db;
    int da = static_cast<int>(a.size()) - 1;
    while (da >= db && da >= 0) {
        if (a[da] != 0) {
            // b is monic in every call here
            std::uint64_t c = a[da];
            for (int j = 0; j <= db; ++j) {
                std::uint64_t sub = (c * b[j]) % p;
                std::uint64_t cur = a[da - db + j];
                a[da - db + j] = static_cast<std::uint32_t>((cur + p - sub % p) % p);
            }
        }
        --da;
    }
    a.resize(std::max(db, 0));
    a.resize(std::max<std::size_t>(a.size(), 1), 0);
}

bool divides(const std::vector<std::uint32_t>& divisor, std::vector<std::uint32_t> poly,
             std::uint64_t p) {
    poly_mod(poly, divisor, p);
    return std::all_of(poly.begin(), poly.end(), [](std::uint32_t c) { return c == 0; });
}

// All monic irreducibles over Z_p of degree exactly d, built bottom-up:
// a monic polynomial is irreducible iff no monic irreducible of degree
// <= deg/2 divides it.
std::vector<std::vector<std::uint32_t>> monic_irreducibles(std::uint64_t p, unsigned d,
                                                           std::vector<std::vector<std::uint32_t>>& smaller) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> coeffs(d + 1, 0);
    coeffs[d] = 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    for (std::uint64_t m = 0; m < total; ++m) {
        to_digits(m, p, d, coeffs.data());
        bool irred = true;
        for (const auto& f : smaller) {
            if ((f.size() - 1) * 2 > d) break;
            if (divides(f, coeffs, p)) {
                irred = false;
                break;
            }
        }
        if (irred) out.push_back(coeffs);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> irreducibles_up_to(std::uint64_t p, unsigned dmax) {
    std::vector<std::vector<std::uint32_t>> all;
    for (unsigned d = 1; d <= dmax; ++d) {
        auto batch = monic_irreducibles(p, d, all);
        all.insert(all.end(), batch.begin(), batch.end());
    }
    return all;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint64_t p,
                    const std::vector<std::vector<std::uint32_t>>& small_irreds) {
    unsigned d = static_cast<unsigned>(poly.size()) - 1;
    for (const auto& f : small_irreds) {
        if ((f.size() - 1) * 2 > d) break;
        if (divides(f, poly, p)) return false;
    }
    return true;
}

} // namespace

Element FieldSpec::add(Element a, Element b) const {
    check_index(a);
    check_index(b);
    if (k == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % p);
    std::uint32_t da[64], db[64];
    to_digits(a, p, k, da);
    to_digits(b, p, k, db);
    for (unsigned i = 0; i < k; ++i) da[i] = static_cast<std::uint32_t>((da[i] + std::uint64_t{db[i]}) % p);
    return static_cast<Element>(from_digits(da, p, k));
}

Element FieldSpec::sub(Element a, Element b) const {
    check_index(a);
    check_index(b);
    if (k == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) + p - b) % p);
    std::uint32_t da[64], db[64];
    to_digits(a, p, k, da);
    to_digits(b, p, k, db);
    for (unsigned i = 0; i < k; ++i)
        da[i] = static_cast<std::uint32_t>((da[i] + p - std::uint64_t{db[i]}) % p);
    return static_cast<Element>(from_digits(da, p, k));
}

Element FieldSpec::neg(Element a) const {
    return sub(0, a);
}

Element FieldSpec::mul(Element a, Element b) const {
    check_index(a);
    check_index(b);
    if (k == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p);
    std::uint32_t da[64], db[64];
    std::uint64_t prod[128] = {0};
    to_digits(a, p, k, da);
    to_digits(b, p, k, db);
    for (unsigned i = 0; i < k; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    }
    // reduce mod the monic modulus: x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
    for (unsigned i = 2 * k - 2; i >= k; --i) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k; ++j)
            prod[i - k + j] = (prod[i - k + j] + c * (p - modulus[j])) % p;
    }
    std::uint32_t dr[64];
    for (unsigned i = 0; i < k; ++i) dr[i] = static_cast<std::uint32_t>(prod[i]);
    return static_cast<Element>(from_digits(dr, p, k));
}

Element FieldSpec::pow(Element a, std::uint64_t e) const {
    check_index(a);
    Element result = 1;
    Element base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldSpec build_field(std::uint64_t p, unsigned k,
                      std::optional<std::vector<std::uint32_t>> modulus,
                      std::uint64_t order_cap) {
    if (!is_odd_prime(p)) throw NotPrime(p);
    if (k < 1) throw BadModulus("extension degree k must be >= 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > order_cap / p)
            throw OrderTooLarge("p^k exceeds the configured order cap " +
                                std::to_string(order_cap));
        q *= p;
    }
    if (q > order_cap)
        throw OrderTooLarge("q = " + std::to_string(q) + " exceeds the configured order cap " +
                            std::to_string(order_cap));

    FieldSpec spec;
    spec.p = p;
    spec.k = k;
    spec.q = q;

    if (k == 1) {
        // modulus is the polynomial x
        if (modulus && *modulus != std::vector<std::uint32_t>{0, 1})
            throw BadModulus("for k=1 the modulus must be the polynomial x");
        spec.modulus = {0, 1};
        return spec;
    }

    auto small_irreds = irreducibles_up_to(p, k / 2);

    if (modulus) {
        auto& m = *modulus;
        if (m.size() != k + 1 || m[k] != 1)
            throw BadModulus("modulus must be monic of degree k");
        for (auto c : m)
            if (c >= p) throw BadModulus("modulus coefficient out of range mod p");
        if (!is_irreducible(m, p, small_irreds))
            throw ReduciblePolynomial("supplied modulus factors over Z_p");
        spec.modulus = m;
        return spec;
    }

    // Exhaustive scan in lexicographic order of (c_0,...,c_{k-1}), c_0 most
    // significant, so the selected modulus is reproducible everywhere.
    std::vector<std::uint32_t> cand(k + 1, 0);
    cand[k] = 1;
    std::vector<std::uint32_t> tuple(k, 0);
    while (true) {
        for (unsigned i = 0; i < k; ++i) cand[i] = tuple[i];
        if (is_irreducible(cand, p, small_irreds)) {
            spec.modulus = cand;
            return spec;
        }
        // increment the tuple with c_{k-1} as the fastest digit
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && tuple[pos] == p - 1) {
            tuple[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[pos];
    }
    throw ReduciblePolynomial("no irreducible polynomial found (unreachable)");
}

CharacterTable build_character(const FieldSpec& spec) {
    const std::uint64_t q = spec.q;
    CharacterTable tab;
    tab.values.assign(q, 0);
    tab.q_set = Bitset(q);
    tab.nq_set = Bitset(q);

    for (Element a = 1; a < q; ++a) {
        Element sq = spec.mul(a, a);
        if (sq == 0)
            throw CharacterMismatch("a*a = 0 for nonzero a: modulus is not irreducible");
        tab.q_set.set(sq);
    }

    std::size_t n_squares = tab.q_set.count();
    if (n_squares != (q - 1) / 2)
        throw CharacterMismatch("|Q| = " + std::to_string(n_squares) + ", expected " +
                                std::to_string((q - 1) / 2));

    // Euler criterion cross-check at every index
    const std::uint64_t half = (q - 1) / 2;
    for (Element x = 1; x < q; ++x) {
        Element e = spec.pow(x, half);
        bool euler_square = (e == 1);
        if (euler_square != tab.q_set.test(x))
            throw CharacterMismatch("square table and Euler criterion disagree at index " +
                                    std::to_string(x));
        if (euler_square) {
            tab.values[x] = 1;
        } else {
            tab.values[x] = -1;
            tab.nq_set.set(x);
        }
    }
    tab.values[0] = 0;
    return tab;
}

} // namespace paley

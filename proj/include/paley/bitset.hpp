#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace paley {

// Dense bitset sized at construction. Rows of the Paley graph and clique
// candidate sets both live in these; the hot loops work on raw words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return w_.size(); }
    std::uint64_t* data() { return w_.data(); }
    const std::uint64_t* data() const { return w_.data(); }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // first set bit at or after `from`, or npos
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_first(std::size_t from = 0) const {
        if (from >= n_) return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi == w_.size()) return npos;
            w = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f((wi << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> out;
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline std::size_t intersection_count(const std::uint64_t* a, const std::uint64_t* b,
                                      std::size_t words) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

} // namespace paley

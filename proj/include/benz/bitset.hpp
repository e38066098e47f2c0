#pragma once

#include <cstdint>
#include <vector>
#include <cassert>

namespace benz {

// Fixed-size dynamic bitset. All hot loops (circle intersections, relation
// matrices, clique search) run on this.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }
    void fill_all() {
        std::fill(w_.begin(), w_.end(), ~uint64_t{0});
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t x : w_) c += std::size_t(__builtin_popcountll(x));
        return c;
    }
    bool any() const {
        for (uint64_t x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bits& andnot(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    static std::size_t count_and(const Bits& a, const Bits& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += std::size_t(__builtin_popcountll(a.w_[i] & b.w_[i]));
        return c;
    }

    // first set bit at position >= from, or size() if none
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t wi = from >> 6;
        uint64_t cur = w_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + std::size_t(__builtin_ctzll(cur));
            if (++wi == w_.size()) return n_;
            cur = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = next(0); i < n_; i = next(i + 1)) f(i);
    }

    std::vector<int32_t> to_vector() const {
        std::vector<int32_t> v;
        for_each([&](std::size_t i) { v.push_back(int32_t(i)); });
        return v;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t{0} >> (64 - (n_ & 63)));
    }
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace benz

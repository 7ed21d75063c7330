#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumrange {

/// Fixed-capacity bit vector used by the shift-or sumset kernels.
/// Capacity is chosen up front so shifted writes never need to grow.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : nbits_(bits), words_((bits + 63) / 64) {}

    std::size_t bit_capacity() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    /// this |= (src << shift).  Caller guarantees the shifted image fits.
    void or_shifted(const BitVec& src, std::size_t shift) {
        const std::size_t woff = shift >> 6;
        const unsigned b = static_cast<unsigned>(shift & 63);
        const std::size_t n = src.words_.size();
        if (b == 0) {
            for (std::size_t i = 0; i < n; ++i) words_[i + woff] |= src.words_[i];
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t w = src.words_[i];
                words_[i + woff] |= w << b;
                if (i + woff + 1 < words_.size()) words_[i + woff + 1] |= w >> (64 - b);
            }
        }
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Calls f(index) for every set bit, in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const unsigned b = static_cast<unsigned>(std::countr_zero(w));
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sumrange

#ifndef STRIPSLEARN_UTIL_BITSET_H
#define STRIPSLEARN_UTIL_BITSET_H

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace util {

// Fixed-width bitset over 64-bit blocks. Width is set at construction and
// never changes; bits past the width are kept zero so equality and hashing
// can work block-wise.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), blocks_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (blocks_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool value = true) {
        assert(i < size_);
        if (value)
            blocks_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void reset(std::size_t i) { set(i, false); }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t b : blocks_)
            n += std::popcount(b);
        return n;
    }

    bool none() const {
        for (std::uint64_t b : blocks_)
            if (b) return false;
        return true;
    }

    // True if every bit of this is also set in other.
    bool subset_of(const Bitset& other) const {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~other.blocks_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] |= other.blocks_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& other) {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= other.blocks_[i];
        return *this;
    }

    // this \ other
    Bitset& subtract(const Bitset& other) {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= ~other.blocks_[i];
        return *this;
    }

    bool operator==(const Bitset&) const = default;

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
        for (std::uint64_t b : blocks_) {
            h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    template <typename F>
    void for_each_set(F&& fn) const {
        for (std::size_t w = 0; w < blocks_.size(); ++w) {
            std::uint64_t b = blocks_[w];
            while (b) {
                unsigned bit = std::countr_zero(b);
                fn(w * 64 + bit);
                b &= b - 1;
            }
        }
    }

private:
    void trim() {
        if (size_ % 64 != 0 && !blocks_.empty())
            blocks_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace util

#endif

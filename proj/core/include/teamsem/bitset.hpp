#ifndef TEAMSEM_BITSET_HPP
#define TEAMSEM_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace teamsem {

// Fixed-width bitset with value semantics.  Used for sets of interpretations
// (teams or valuations), sets of states, and sets of semantic classes.  The
// canonical order on equally sized bitsets is their value as a binary number
// (bit i has weight 2^i); every "canonically least" witness in the library
// refers to this order or to plain index order.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    static DynBitset all_set(std::size_t bits) {
        DynBitset b(bits);
        for (auto& w : b.words_) w = ~0ull;
        b.trim();
        return b;
    }

    static DynBitset from_value(std::size_t bits, std::uint64_t value) {
        DynBitset b(bits);
        if (!b.words_.empty()) b.words_[0] = value;
        b.trim();
        return b;
    }

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void set(std::size_t i) { words_[i / 64] |= (1ull << (i % 64)); }
    void reset(std::size_t i) { words_[i / 64] &= ~(1ull << (i % 64)); }

    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Removes o's bits from this set.
    DynBitset& subtract(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    DynBitset complement() const {
        DynBitset r(bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Index of the least set bit, or size() when empty.
    std::size_t find_first() const noexcept { return find_next(0); }

    // Index of the least set bit >= from, or size() when there is none.
    std::size_t find_next(std::size_t from) const noexcept {
        if (from >= bits_) return bits_;
        std::size_t wi = from / 64;
        std::uint64_t w = words_[wi] & (~0ull << (from % 64));
        while (true) {
            if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return bits_;
            w = words_[wi];
        }
    }

    bool operator==(const DynBitset& o) const = default;

    // Numeric value order (most significant word first).
    bool operator<(const DynBitset& o) const {
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    // Little-endian bit string: character i is '1' iff bit i is set.
    std::string to_bit_string() const {
        std::string s(bits_, '0');
        for (std::size_t i = find_first(); i < bits_; i = find_next(i + 1)) s[i] = '1';
        return s;
    }

    static DynBitset from_bit_string(const std::string& s) {
        DynBitset b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') b.set(i);
        return b;
    }

    std::size_t hash() const noexcept {
        std::size_t h = bits_;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull + w;
        return h;
    }

private:
    void trim() {
        if (bits_ % 64 != 0 && !words_.empty())
            words_.back() &= (~0ull >> (64 - bits_ % 64));
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const noexcept { return b.hash(); }
};

}  // namespace teamsem

#endif  // TEAMSEM_BITSET_HPP

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rfs {

/// The two-letter alphabet. 'a' packs to bit 0, 'b' to bit 1, so numeric
/// order of packed blocks agrees with lexicographic order a < b.
enum class Letter : unsigned char { a = 0, b = 1 };

constexpr char to_char(Letter l) { return l == Letter::a ? 'a' : 'b'; }
Letter letter_from_char(char c);

/// A finite word over {a,b}, bit-packed one bit per letter.
///
/// Letters are stored MSB-first inside 64-bit blocks (letter i occupies bit
/// 63 - i%64 of block i/64), so whole-block unsigned comparison yields
/// lexicographic order. Words of up to 64 letters live inline without heap
/// allocation; longer words spill extra blocks into a vector. Trailing bits
/// of the last block are always zero.
///
/// Public indexing is 1-based and inclusive on both ends: slice(a, b) is the
/// sub-word from position a through position b.
class Word {
public:
    Word() = default;

    /// Parses an ASCII string of 'a'/'b'. Throws std::invalid_argument on
    /// any other character.
    static Word parse(std::string_view text);

    static Word repeated(Letter l, std::size_t count);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    /// Letter at 1-based position pos; throws range_error if out of range.
    Letter at(std::size_t pos) const;

    /// Number of occurrences of l in the word.
    std::size_t count(Letter l) const;

    /// Number of b's among the first k letters (k <= size()).
    std::size_t count_b_prefix(std::size_t k) const;

    /// Sub-word from position a through b, 1-based inclusive.
    /// Requires 1 <= a <= b <= size(); throws range_error naming the
    /// offending bound otherwise.
    Word slice(std::size_t a, std::size_t b) const;

    /// True if f occurs as a contiguous sub-word.
    bool contains(const Word& f) const;

    void push_back(Letter l);
    void append(const Word& w);

    std::string str() const;

    /// Lexicographic comparison with a < b; a proper prefix precedes its
    /// extensions.
    int compare(const Word& other) const;

    bool operator==(const Word& other) const { return compare(other) == 0; }
    std::strong_ordering operator<=>(const Word& other) const {
        int c = compare(other);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    std::size_t block_count() const { return (len_ + 63) / 64; }
    std::uint64_t block(std::size_t i) const { return i == 0 ? head_ : tail_[i - 1]; }

private:
    std::uint64_t& block_ref(std::size_t i) { return i == 0 ? head_ : tail_[i - 1]; }
    void ensure_blocks(std::size_t n);
    static void append_bits(Word& dst, const Word& src, std::size_t first, std::size_t count);

    std::uint64_t len_ = 0;
    std::uint64_t head_ = 0;
    std::vector<std::uint64_t> tail_;
};

Word concat(const Word& u, const Word& v);

}  // namespace rfs

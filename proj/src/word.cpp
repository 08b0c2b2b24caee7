#include "rfs/word.hpp"

#include <bit>
#include <stdexcept>

#include "rfs/errors.hpp"

namespace rfs {

Letter letter_from_char(char c) {
    if (c == 'a') return Letter::a;
    if (c == 'b') return Letter::b;
    throw std::invalid_argument(std::string("word may contain only 'a' and 'b', got '") + c + "'");
}

Word Word::parse(std::string_view text) {
    Word w;
    w.ensure_blocks((text.size() + 63) / 64);
    for (char c : text) w.push_back(letter_from_char(c));
    return w;
}

Word Word::repeated(Letter l, std::size_t count) {
    Word w;
    w.ensure_blocks((count + 63) / 64);
    for (std::size_t i = 0; i < count; ++i) w.push_back(l);
    return w;
}

void Word::ensure_blocks(std::size_t n) {
    if (n > 1 && tail_.size() < n - 1) tail_.resize(n - 1, 0);
}

Letter Word::at(std::size_t pos) const {
    if (pos < 1 || pos > len_)
        throw range_error("letter index " + std::to_string(pos) + " outside word of length " +
                          std::to_string(len_));
    std::size_t i = pos - 1;
    std::uint64_t bit = (block(i / 64) >> (63 - i % 64)) & 1u;
    return bit ? Letter::b : Letter::a;
}

void Word::push_back(Letter l) {
    std::size_t blk = len_ / 64;
    ensure_blocks(blk + 1);
    if (l == Letter::b) block_ref(blk) |= std::uint64_t{1} << (63 - len_ % 64);
    ++len_;
}

std::size_t Word::count(Letter l) const {
    // trailing pad bits are zero, so popcount over all blocks counts the b's
    std::size_t bs = 0;
    for (std::size_t i = 0; i < block_count(); ++i) bs += std::popcount(block(i));
    return l == Letter::b ? bs : len_ - bs;
}

std::size_t Word::count_b_prefix(std::size_t k) const {
    if (k > len_)
        throw range_error("prefix length " + std::to_string(k) + " outside word of length " +
                          std::to_string(len_));
    std::size_t full = k / 64, rem = k % 64, bs = 0;
    for (std::size_t i = 0; i < full; ++i) bs += std::popcount(block(i));
    if (rem) bs += std::popcount(block(full) & (~std::uint64_t{0} << (64 - rem)));
    return bs;
}

// Appends the bit range [first, first+count) of src's letters onto dst.
void Word::append_bits(Word& dst, const Word& src, std::size_t first, std::size_t count) {
    dst.ensure_blocks((dst.len_ + count + 63) / 64);
    std::size_t produced = 0;
    while (produced < count) {
        std::size_t sbit = first + produced;
        std::size_t soff = sbit % 64;
        std::size_t take = std::min<std::size_t>(64 - soff, count - produced);
        std::uint64_t chunk = src.block(sbit / 64) << soff;
        if (take < 64) chunk &= ~std::uint64_t{0} << (64 - take);
        std::size_t dbit = dst.len_ + produced;
        std::size_t doff = dbit % 64;
        dst.block_ref(dbit / 64) |= chunk >> doff;
        if (doff != 0 && doff + take > 64) dst.block_ref(dbit / 64 + 1) |= chunk << (64 - doff);
        produced += take;
    }
    dst.len_ += count;
}

void Word::append(const Word& w) {
    if (w.len_ == 0) return;
    if (this == &w) {
        Word copy = w;
        append_bits(*this, copy, 0, copy.len_);
        return;
    }
    append_bits(*this, w, 0, w.len_);
}

Word Word::slice(std::size_t a, std::size_t b) const {
    if (a < 1) throw range_error("slice lower bound " + std::to_string(a) + " must be at least 1");
    if (a > b)
        throw range_error("slice lower bound " + std::to_string(a) + " exceeds upper bound " +
                          std::to_string(b));
    if (b > len_)
        throw range_error("slice upper bound " + std::to_string(b) + " exceeds word length " +
                          std::to_string(len_));
    Word out;
    append_bits(out, *this, a - 1, b - a + 1);
    return out;
}

bool Word::contains(const Word& f) const {
    if (f.len_ > len_) return false;
    if (f.len_ == 0) return true;
    for (std::size_t start = 1; start + f.len_ - 1 <= len_; ++start) {
        if (slice(start, start + f.len_ - 1) == f) return true;
    }
    return false;
}

std::string Word::str() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i)
        s.push_back((block(i / 64) >> (63 - i % 64)) & 1u ? 'b' : 'a');
    return s;
}

int Word::compare(const Word& other) const {
    std::size_t common = std::min(len_, other.len_);
    if (len_ <= 64 && other.len_ <= 64) {
        std::uint64_t mask = common == 0 ? 0
                             : common == 64
                                 ? ~std::uint64_t{0}
                                 : ~std::uint64_t{0} << (64 - common);
        std::uint64_t a = head_ & mask, b = other.head_ & mask;
        if (a != b) return a < b ? -1 : 1;
        return len_ == other.len_ ? 0 : (len_ < other.len_ ? -1 : 1);
    }
    std::size_t full = common / 64, rem = common % 64;
    for (std::size_t i = 0; i < full; ++i) {
        std::uint64_t a = block(i), b = other.block(i);
        if (a != b) return a < b ? -1 : 1;
    }
    if (rem) {
        std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
        std::uint64_t a = block(full) & mask, b = other.block(full) & mask;
        if (a != b) return a < b ? -1 : 1;
    }
    return len_ == other.len_ ? 0 : (len_ < other.len_ ? -1 : 1);
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.append(v);
    return w;
}

}  // namespace rfs

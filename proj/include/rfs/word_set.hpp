#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "rfs/word.hpp"

namespace rfs {

/// A deduplicated set of words kept in lexicographic order (a < b), so
/// iteration and serialization are deterministic.
class WordSet {
public:
    WordSet() = default;

    /// Takes ownership of an arbitrary word list; sorts and deduplicates.
    static WordSet from_words(std::vector<Word> words);

    static WordSet of(std::initializer_list<std::string_view> texts);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const Word& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Word>& members() const { return members_; }

    bool contains(const Word& w) const;

    /// True if every member of other is a member of this set.
    bool includes(const WordSet& other) const;

    bool operator==(const WordSet& other) const { return members_ == other.members_; }

    /// {w[a,b] : w in set}, 1-based inclusive. Every member must have length
    /// at least b; throws range_error naming the short member otherwise.
    WordSet slice_set(std::size_t a, std::size_t b) const;

    std::size_t min_length() const;
    std::size_t max_length() const;

    /// Writes one word per line, LF-terminated, in canonical order.
    void write(std::ostream& os) const;
    static WordSet read(std::istream& is);

    /// Packed binary form: 8-byte magic "RFSWSET1", little-endian u64 count,
    /// then one ceil(m/8)-byte record per word (letters MSB-first per byte,
    /// a=0, b=1). Only defined for sets whose members all share one length m;
    /// the reader needs m supplied out of band.
    void write_binary(std::ostream& os) const;
    static WordSet read_binary(std::istream& is, std::size_t m);

private:
    std::vector<Word> members_;
};

/// {uv : u in U, v in V}; empty if either side is empty.
WordSet set_product(const WordSet& U, const WordSet& V);

WordSet set_union(const WordSet& U, const WordSet& V);

}  // namespace rfs

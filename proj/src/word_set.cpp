#include "rfs/word_set.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rfs/errors.hpp"

namespace rfs {

WordSet WordSet::from_words(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    WordSet s;
    s.members_ = std::move(words);
    return s;
}

WordSet WordSet::of(std::initializer_list<std::string_view> texts) {
    std::vector<Word> words;
    words.reserve(texts.size());
    for (auto t : texts) words.push_back(Word::parse(t));
    return from_words(std::move(words));
}

bool WordSet::contains(const Word& w) const {
    return std::binary_search(members_.begin(), members_.end(), w);
}

bool WordSet::includes(const WordSet& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
}

WordSet WordSet::slice_set(std::size_t a, std::size_t b) const {
    std::vector<Word> out;
    out.reserve(members_.size());
    for (const Word& w : members_) {
        if (w.size() < b)
            throw range_error("slice_set upper bound " + std::to_string(b) +
                              " exceeds member of length " + std::to_string(w.size()));
        out.push_back(w.slice(a, b));
    }
    return from_words(std::move(out));
}

std::size_t WordSet::min_length() const {
    std::size_t m = members_.empty() ? 0 : members_.front().size();
    for (const Word& w : members_) m = std::min(m, w.size());
    return m;
}

std::size_t WordSet::max_length() const {
    std::size_t m = 0;
    for (const Word& w : members_) m = std::max(m, w.size());
    return m;
}

void WordSet::write(std::ostream& os) const {
    for (const Word& w : members_) os << w.str() << '\n';
}

WordSet WordSet::read(std::istream& is) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        words.push_back(Word::parse(line));
    }
    return from_words(std::move(words));
}

namespace {

constexpr std::array<char, 8> kMagic = {'R', 'F', 'S', 'W', 'S', 'E', 'T', '1'};

void put_u64le(std::ostream& os, std::uint64_t v) {
    std::array<unsigned char, 8> buf;
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(buf.data()), 8);
}

std::uint64_t get_u64le(std::istream& is) {
    std::array<unsigned char, 8> buf;
    is.read(reinterpret_cast<char*>(buf.data()), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
    return v;
}

}  // namespace

void WordSet::write_binary(std::ostream& os) const {
    std::size_t m = members_.empty() ? 0 : members_.front().size();
    for (const Word& w : members_) {
        if (w.size() != m)
            throw std::invalid_argument("binary word-set form requires uniform member length");
    }
    os.write(kMagic.data(), kMagic.size());
    put_u64le(os, members_.size());
    std::size_t record = (m + 7) / 8;
    std::vector<unsigned char> buf(record);
    for (const Word& w : members_) {
        std::fill(buf.begin(), buf.end(), 0);
        for (std::size_t i = 0; i < record; ++i) {
            // byte i carries letters 8i+1 .. 8i+8, MSB-first
            std::size_t blk = i / 8;
            if (blk < w.block_count())
                buf[i] = static_cast<unsigned char>(w.block(blk) >> (56 - 8 * (i % 8)));
        }
        os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(record));
    }
}

WordSet WordSet::read_binary(std::istream& is, std::size_t m) {
    std::array<char, 8> magic;
    is.read(magic.data(), magic.size());
    if (!is || std::memcmp(magic.data(), kMagic.data(), 8) != 0)
        throw std::invalid_argument("bad word-set magic header");
    std::uint64_t count = get_u64le(is);
    std::size_t record = (m + 7) / 8;
    std::vector<Word> words;
    words.reserve(count);
    std::vector<unsigned char> buf(record);
    for (std::uint64_t k = 0; k < count; ++k) {
        is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(record));
        if (!is) throw std::invalid_argument("truncated word-set record");
        Word w;
        for (std::size_t i = 0; i < m; ++i) {
            unsigned char byte = buf[i / 8];
            w.push_back((byte >> (7 - i % 8)) & 1u ? Letter::b : Letter::a);
        }
        words.push_back(std::move(w));
    }
    return from_words(std::move(words));
}

WordSet set_product(const WordSet& U, const WordSet& V) {
    std::vector<Word> out;
    out.reserve(U.size() * V.size());
    for (const Word& u : U)
        for (const Word& v : V) out.push_back(concat(u, v));
    return WordSet::from_words(std::move(out));
}

WordSet set_union(const WordSet& U, const WordSet& V) {
    std::vector<Word> out;
    out.reserve(U.size() + V.size());
    std::merge(U.begin(), U.end(), V.begin(), V.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return WordSet::from_words(std::move(out));
}

}  // namespace rfs

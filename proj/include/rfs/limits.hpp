#pragma once

#include <cstdint>

namespace rfs {

/// Hard caps on enumeration work. Exceeding one raises capacity_error with a
/// message naming the limit, instead of exhausting memory.
struct Limits {
    /// Most words a single set construction may materialize (pre-dedup).
    std::uint64_t max_set_size = 10'000'000;

    /// Cap on log2 of the branch count of one all-realizations expansion.
    unsigned max_branch_bits = 24;

    /// Cap on the length of one sampled word.
    std::uint64_t max_word_symbols = std::uint64_t{1} << 26;

    /// Highest generation index whose sets may be enumerated.
    int max_generation = 5;
};

}  // namespace rfs

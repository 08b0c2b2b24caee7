#pragma once

#include <cstdint>

#include "rfs/limits.hpp"
#include "rfs/report.hpp"
#include "rfs/word_set.hpp"

namespace rfs {

/// Generation-n inflation sets: A holds every word reachable from 'a' after
/// n-1 inflation steps (each of length f_{2n}), B the words reachable from
/// 'b' (each of length f_{2n-1}). Built by the set recursion
///   A_n = B_{n-1} A_{n-1} A_{n-1},   B_n = A_{n-1} B_{n-1} u B_{n-1} A_{n-1}
/// from A_1 = {a}, B_1 = {b}.
struct GenerationSets {
    int n = 0;
    WordSet A;
    WordSet B;
};

/// Enumerates generation n. Requires 1 <= n <= limits.max_generation;
/// capacity_error above that, with the predicted memory cost in the message.
GenerationSets build(int n, const Limits& limits = {});

/// Closed-form counts, as base-2 exponents: |A_n| = 2^(f_{2n-3}-1) and
/// |B_n| = 2^(f_{2n-4}+1) for n >= 2.
std::uint64_t count_log2_A(int n);
std::uint64_t count_log2_B(int n);

/// Enumerated |A_n|, |B_n| equal the closed forms for 2 <= n <= n_max.
VerificationReport verify_counts(int n_max, const Limits& limits = {});

/// Distinct words of A_n (and of B_n) have disjoint all-realization image
/// sets under the inflation rule, for 2 <= n <= n_max. Checked by expanding
/// every member and looking for any duplicate output.
VerificationReport verify_injectivity(int n_max, const Limits& limits = {});

/// Prefix-set relations between consecutive generations:
///   A_n[1, f_{2n}-1]   is included in  A_{n+1}[1, f_{2n}-1]        (n >= 2)
///   A_n[1, f_{2n}-1]   is included in  (B_n A_n)[1, f_{2n}-1]      (n >= 2)
///   A_n[1, f_{2n-2}-1]  =  A_{n+1}[1, f_{2n-2}-1]                  (n >= 3)
///   B_n[1, f_{2n-2}-1]  =  A_n[1, f_{2n-2}-1]                      (n >= 3)
///   B_n                 =  B_{n+1}[1, f_{2n-1}]                    (n >= 3)
VerificationReport verify_prefix_relations(int n_max, const Limits& limits = {});

/// Suffix-set relations:
///   A_n[f_{2n-2}+2, f_{2n}]  is included in  B_n[2, f_{2n-1}]      (n >= 2)
///   B_n[2, f_{2n-1}]          =  B_{n+1}[f_{2n}+2, f_{2n+1}]       (n >= 2)
VerificationReport verify_suffix_relations(int n_max, const Limits& limits = {});

}  // namespace rfs

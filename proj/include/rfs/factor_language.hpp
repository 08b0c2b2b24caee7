#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rfs/limits.hpp"
#include "rfs/report.hpp"
#include "rfs/word_set.hpp"

namespace rfs {

enum class FactorMethod { direct_window, inflation_pipeline, raw_scan };

const char* to_string(FactorMethod m);

/// The set of all length-m factors of some generating set, with the method
/// that produced it.
struct FactorSet {
    std::size_t m = 0;
    WordSet members;
    FactorMethod method = FactorMethod::raw_scan;
    std::string source;
};

/// All length-m sub-words of members of S (sliding window, deduplicated).
/// Requires 1 <= m <= length of the shortest member; range_error otherwise.
WordSet factors(const WordSet& S, std::size_t m);

/// Largest factor length the direct-window method can certify with
/// enumeration capped at limits.max_generation: f_{2n} - f_{2n-3} for
/// n = max_generation - 1 (16 when the cap is 5).
std::size_t direct_window_capacity(const Limits& limits = {});

/// The limit factor set F(A, m) by direct window: the smallest generation
/// n with f_{2n} - f_{2n-3} >= m already contains every length-m factor of
/// the limit, so F(A, m) = factors(A_{n+1}, m). capacity_error when m is
/// beyond direct_window_capacity, advising the pipeline method.
FactorSet exact_factor_set(std::size_t m, const Limits& limits = {});

/// The limit factor set F(A, m) by the staged inflation pipeline.
///
/// Stage n inflates every factor of length f_{2n-2}+1 through the rule
/// (all realizations), giving carrier words of length f_{2n}+1 .. f_{2n}+4
/// whose length-f_{2n} factors exhaust F(A, f_{2n}). Factor lengths below a
/// stage length come out of the stage set by windowing again (factor sets
/// are downward closed: every short factor of the limit occurs inside a
/// longer one).
///
/// Seeds beyond direct-window reach come from a second carrier family built
/// from windows one letter longer: its images are at least f_{2n}+4 long,
/// which leaves enough slack for complete extraction at lengths f_{2n}+1
/// and f_{2n}+2 (a window's image can start at most two letters' images
/// after any position, so length margin 2 guarantees coverage). The two
/// families are cross-checked against each other at every shared length.
class FactorPipeline {
public:
    explicit FactorPipeline(Limits limits = {});

    /// F(A, m); runs stages up to the first f_{2n} >= m. capacity_error if a
    /// stage would exceed max_set_size, naming the last completed stage.
    FactorSet compute(std::size_t m);

    /// Injects an externally validated F(A, m) (e.g. a cache hit).
    void preload(std::size_t m, WordSet members);

    /// True if F(A, m) is already in memory.
    bool has(std::size_t m) const { return known_.count(m) != 0; }

    /// Stage lengths f_4, f_6, ... computed so far.
    const std::vector<std::size_t>& stage_lengths() const { return stage_lengths_; }

    /// Length range and size of the carrier set of a completed stage.
    struct CarrierSummary {
        std::size_t count = 0;
        std::size_t min_length = 0;
        std::size_t max_length = 0;
    };
    const std::map<int, CarrierSummary>& carriers() const { return carriers_; }

    const Limits& limits() const { return limits_; }

private:
    const WordSet& obtain(std::size_t m);
    void run_stage(int n);

    Limits limits_;
    int stages_done_ = 1;
    std::map<std::size_t, WordSet> known_;
    std::vector<std::size_t> stage_lengths_;
    std::map<int, CarrierSummary> carriers_;
};

/// Convenience wrapper: one-shot pipeline computation.
FactorSet pipeline_factor_set(std::size_t m, const Limits& limits = {});

/// factors(A_{n+1}, f_{2n}-1) = factors(B_{n+1}, f_{2n}-1) for 2 <= n <=
/// n_max, plus F(A, m) = F(B, m) via direct windows on the B side for every
/// m up to min(f_{2 n_max}-1, direct capacity).
VerificationReport verify_AB_factor_equality(int n_max, const Limits& limits = {});

/// factors(A_{n+1}, L) = factors(A_{n+2}, L) at the stabilization length
/// L = f_{2n} - f_{2n-3}, for 2 <= n <= n_max.
VerificationReport verify_window_stabilization(int n_max, const Limits& limits = {});

/// Letter-count laws: (i) every length-k prefix of every member of A_n and
/// B_n has b-count in {floor(k/tau^2), ceil(k/tau^2)} for 2 <= n <= n_max;
/// (ii) every member of factors(A_{n+2}, f_{2n}) has b-count within 1 of
/// f_{2n-2}, for n up to min(n_max, max_generation - 2).
VerificationReport verify_bcount_bounds(int n_max, const Limits& limits = {});

/// Pipeline counts satisfy 2^(f_{2n-3}-1) <= |F(A, f_{2n})| <=
/// 2^(f_{2n-3}+2n) * 5^(n-1) for 2 <= n <= n_max.
VerificationReport verify_upper_bound(int n_max, FactorPipeline& pipeline);

}  // namespace rfs

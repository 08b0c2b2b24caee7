#include "rfs/factor_language.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "rfs/errors.hpp"
#include "rfs/fib.hpp"
#include "rfs/generations.hpp"
#include "rfs/golden.hpp"
#include "rfs/substitution.hpp"

namespace rfs {

const char* to_string(FactorMethod m) {
    switch (m) {
        case FactorMethod::direct_window: return "direct-window";
        case FactorMethod::inflation_pipeline: return "inflation-pipeline";
        case FactorMethod::raw_scan: return "raw-scan";
    }
    return "?";
}

WordSet factors(const WordSet& S, std::size_t m) {
    if (m < 1) throw range_error("factor length must be at least 1");
    for (const Word& w : S) {
        if (w.size() < m)
            throw range_error("factor length " + std::to_string(m) +
                              " exceeds member of length " + std::to_string(w.size()));
    }
    // dedup in chunks so wide windows over large sets stay memory-bounded
    constexpr std::size_t chunk = 8'000'000;
    std::vector<Word> out;
    WordSet acc;
    for (const Word& w : S) {
        for (std::size_t i = 1; i + m - 1 <= w.size(); ++i) {
            out.push_back(w.slice(i, i + m - 1));
            if (out.size() >= chunk) {
                acc = set_union(acc, WordSet::from_words(std::move(out)));
                out = {};
            }
        }
    }
    if (acc.empty()) return WordSet::from_words(std::move(out));
    return set_union(acc, WordSet::from_words(std::move(out)));
}

namespace {

// Smallest n >= 2 whose window f_{2n} - f_{2n-3} already covers length m;
// needs A_{n+1} enumerated.
int direct_generation_for(std::size_t m, const Limits& limits) {
    for (int n = 2; n + 1 <= limits.max_generation; ++n) {
        if (fib(2 * n) - fib(2 * n - 3) >= m) return n;
    }
    return -1;
}

}  // namespace

std::size_t direct_window_capacity(const Limits& limits) {
    int n = limits.max_generation - 1;
    if (n < 2) return 0;
    return fib(2 * n) - fib(2 * n - 3);
}

FactorSet exact_factor_set(std::size_t m, const Limits& limits) {
    if (m < 1) throw range_error("factor length must be at least 1");
    int n = direct_generation_for(m, limits);
    if (n < 0)
        throw capacity_error("factor length " + std::to_string(m) +
                             " is beyond the direct-window capacity " +
                             std::to_string(direct_window_capacity(limits)) +
                             " (generation cap " + std::to_string(limits.max_generation) +
                             "); use the inflation pipeline");
    GenerationSets g = build(n + 1, limits);
    FactorSet fs;
    fs.m = m;
    fs.members = factors(g.A, m);
    fs.method = FactorMethod::direct_window;
    fs.source = "A_" + std::to_string(n + 1) + " window";
    return fs;
}

FactorPipeline::FactorPipeline(Limits limits) : limits_(limits) {}

void FactorPipeline::preload(std::size_t m, WordSet members) {
    known_.emplace(m, std::move(members));
}

// F(A, m) for a seed length: known, within direct reach, or planted on
// demand from the auxiliary carrier family of the stage just below m.
const WordSet& FactorPipeline::obtain(std::size_t m) {
    auto it = known_.find(m);
    if (it != known_.end()) return it->second;
    if (direct_generation_for(m, limits_) >= 0)
        return known_.emplace(m, exact_factor_set(m, limits_).members).first->second;
    int n = 2;
    while (fib(2 * n) + 2 < m) ++n;
    if (m <= fib(2 * n))
        throw std::logic_error("pipeline seed F(A," + std::to_string(m) + ") unavailable");
    for (int k = 2; k <= n; ++k) {
        if (!known_.count(fib(2 * k))) run_stage(k);
    }
    // Auxiliary family: windows one letter longer than the stage-n windows
    // inflate to length at least f_2n+4, which leaves margin >= 2 for
    // complete extraction at f_2n+1 and f_2n+2.
    std::size_t f2n = fib(2 * n);
    const WordSet& aux_seed = obtain(fib(2 * n - 2) + 2);
    WordSet aux;
    try {
        aux = apply_all_set(SubstitutionRule::preset_phi(), aux_seed, limits_);
    } catch (const capacity_error& e) {
        throw capacity_error("pipeline stage n=" + std::to_string(n) +
                             " auxiliary carriers: " + std::string(e.what()) +
                             "; computed through stage n=" + std::to_string(stages_done_) +
                             " (length " + std::to_string(fib(2 * stages_done_)) + ")");
    }
    if (aux.min_length() < f2n + 4)
        throw std::logic_error("auxiliary carrier shorter than f_2n+4 at stage " +
                               std::to_string(n));
    if (factors(aux, f2n) != known_.at(f2n))
        throw std::logic_error("carrier families disagree on F(A," + std::to_string(f2n) +
                               ") at stage " + std::to_string(n));
    known_.emplace(f2n + 1, factors(aux, f2n + 1));
    known_.emplace(f2n + 2, factors(aux, f2n + 2));
    return known_.at(m);
}

void FactorPipeline::run_stage(int n) {
    std::size_t f2n = fib(2 * n);
    std::size_t window = fib(2 * n - 2) + 1;
    const WordSet& seed = obtain(window);
    WordSet carriers;
    try {
        carriers = apply_all_set(SubstitutionRule::preset_phi(), seed, limits_);
    } catch (const capacity_error& e) {
        throw capacity_error("pipeline stage n=" + std::to_string(n) + " (length " +
                             std::to_string(f2n) + "): " + std::string(e.what()) +
                             "; computed through stage n=" + std::to_string(stages_done_) +
                             " (length " + std::to_string(fib(2 * stages_done_)) + ")");
    }
    std::size_t lo = carriers.min_length(), hi = carriers.max_length();
    if (lo < f2n + 1 || hi > f2n + 4)
        throw std::logic_error("carrier length outside [f_2n+1, f_2n+4] at stage " +
                               std::to_string(n));
    carriers_[n] = {carriers.size(), lo, hi};
    known_[f2n] = factors(carriers, f2n);
    stage_lengths_.push_back(f2n);
    stages_done_ = n;
}

FactorSet FactorPipeline::compute(std::size_t m) {
    if (m < 1) throw range_error("factor length must be at least 1");
    int target = 2;
    while (fib(2 * target) < m) ++target;
    for (int n = 2; n <= target; ++n) {
        if (!known_.count(fib(2 * n))) run_stage(n);
    }
    FactorSet fs;
    fs.m = m;
    fs.method = FactorMethod::inflation_pipeline;
    fs.source = "carrier pipeline through length " + std::to_string(fib(2 * target));
    if (m == fib(2 * target)) {
        fs.members = known_.at(m);
        return fs;
    }
    // downward closure from the smallest computed stage length >= m
    std::size_t host = fib(2 * target);
    for (std::size_t len : stage_lengths_) {
        if (len >= m) host = std::min(host, len);
    }
    auto it = known_.find(m);
    fs.members = it != known_.end() ? it->second : factors(known_.at(host), m);
    known_.emplace(m, fs.members);
    return fs;
}

FactorSet pipeline_factor_set(std::size_t m, const Limits& limits) {
    FactorPipeline pipeline(limits);
    return pipeline.compute(m);
}

VerificationReport verify_AB_factor_equality(int n_max, const Limits& limits) {
    VerificationReport rep;
    rep.proposition = "factor-set-equality";
    rep.anchor = "A_(n+1) and B_(n+1) share every factor of length f_2n - 1, and the "
                 "limit factor sets from the A and B sides coincide";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    nlohmann::json details = nlohmann::json::array();
    for (int n = 2; n <= n_max; ++n) {
        GenerationSets g = build(n + 1, limits);
        std::size_t len = fib(2 * n) - 1;
        bool ok = factors(g.A, len) == factors(g.B, len);
        ++rep.checked;
        details.push_back({{"n", n},
                           {"relation", "F(A_(n+1),f_2n-1) = F(B_(n+1),f_2n-1)"},
                           {"status", ok ? "pass" : "fail"}});
        if (!ok) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"n", n}, {"length", len}};
        }
    }
    // B-side direct windows against the A-side limit sets
    GenerationSets top = build(limits.max_generation, limits);
    std::size_t m_hi = std::min<std::size_t>(fib(2 * n_max) - 1, direct_window_capacity(limits));
    for (std::size_t m = 1; m <= m_hi; ++m) {
        ++rep.checked;
        bool ok = exact_factor_set(m, limits).members == factors(top.B, m);
        if (!ok) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"side", "B"}, {"length", m}};
        }
    }
    details.push_back({{"relation", "F(A,m) = F(B_" + std::to_string(limits.max_generation) +
                                        ",m) for m=1.." + std::to_string(m_hi)},
                       {"status", rep.pass ? "pass" : "fail"}});
    rep.details = std::move(details);
    return rep;
}

VerificationReport verify_window_stabilization(int n_max, const Limits& limits) {
    VerificationReport rep;
    rep.proposition = "factor-window-stabilization";
    rep.anchor = "factor sets at length f_2n - f_(2n-3) agree between generations n+1 and n+2";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    nlohmann::json details = nlohmann::json::array();
    for (int n = 2; n <= n_max; ++n) {
        std::size_t len = fib(2 * n) - fib(2 * n - 3);
        GenerationSets g1 = build(n + 1, limits);
        GenerationSets g2 = build(n + 2, limits);
        bool ok = factors(g1.A, len) == factors(g2.A, len);
        ++rep.checked;
        details.push_back({{"n", n}, {"length", len}, {"status", ok ? "pass" : "fail"}});
        if (!ok) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"n", n}, {"length", len}};
        }
    }
    rep.details = std::move(details);
    return rep;
}

VerificationReport verify_bcount_bounds(int n_max, const Limits& limits) {
    VerificationReport rep;
    rep.proposition = "letter-count-laws";
    rep.anchor = "prefix b-counts sit in {floor(k/tau^2), ceil(k/tau^2)}; factors of "
                 "length f_2n carry f_(2n-2) b's give or take one";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    nlohmann::json details = nlohmann::json::array();
    for (int n = 2; n <= n_max; ++n) {
        GenerationSets g = build(n, limits);
        bool ok = true;
        nlohmann::json cex;
        for (const WordSet* S : {&g.A, &g.B}) {
            for (const Word& w : *S) {
                for (std::size_t k = 1; k <= w.size() && ok; ++k) {
                    std::uint64_t bs = w.count_b_prefix(k);
                    ++rep.checked;
                    if (bs != floor_k_over_tau2(k) && bs != ceil_k_over_tau2(k)) {
                        ok = false;
                        cex = nlohmann::json{{"n", n}, {"word", w.str()}, {"k", k}, {"b", bs}};
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        details.push_back(
            {{"n", n}, {"relation", "prefix b-count law"}, {"status", ok ? "pass" : "fail"}});
        if (!ok) {
            rep.pass = false;
            if (!rep.counterexample) rep.counterexample = cex;
        }
    }
    for (int n = 2; n <= std::min(n_max, limits.max_generation - 2); ++n) {
        GenerationSets g = build(n + 2, limits);
        std::uint64_t center = fib(2 * n - 2);
        bool ok = true;
        nlohmann::json cex;
        for (const Word& x : factors(g.A, fib(2 * n))) {
            std::uint64_t bs = x.count(Letter::b);
            ++rep.checked;
            if (bs + 1 < center || bs > center + 1) {
                ok = false;
                cex = nlohmann::json{{"n", n}, {"factor", x.str()}, {"b", bs}};
                break;
            }
        }
        details.push_back(
            {{"n", n}, {"relation", "factor b-count band"}, {"status", ok ? "pass" : "fail"}});
        if (!ok) {
            rep.pass = false;
            if (!rep.counterexample) rep.counterexample = cex;
        }
    }
    rep.details = std::move(details);
    return rep;
}

VerificationReport verify_upper_bound(int n_max, FactorPipeline& pipeline) {
    using u128 = unsigned __int128;
    VerificationReport rep;
    rep.proposition = "factor-count-bounds";
    rep.anchor = "2^(f_(2n-3)-1) <= |F(A,f_2n)| <= 2^(f_(2n-3)+2n) * 5^(n-1)";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    nlohmann::json details = nlohmann::json::array();
    for (int n = 2; n <= n_max; ++n) {
        std::uint64_t upper_exp = fib(2 * n - 3) + 2 * static_cast<std::uint64_t>(n);
        if (upper_exp >= 127)
            throw capacity_error("count bound exponent overflows 128 bits at n = " +
                                 std::to_string(n));
        std::size_t count = pipeline.compute(fib(2 * n)).members.size();
        u128 lower = u128{1} << (fib(2 * n - 3) - 1);
        u128 upper = u128{1} << upper_exp;
        for (int i = 1; i < n; ++i) upper *= 5;
        bool ok = lower <= count && count <= upper;
        ++rep.checked;
        details.push_back({{"n", n},
                           {"length", fib(2 * n)},
                           {"count", count},
                           {"status", ok ? "pass" : "fail"}});
        if (!ok) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"n", n}, {"count", count}};
        }
    }
    rep.details = std::move(details);
    return rep;
}

}  // namespace rfs

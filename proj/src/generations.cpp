#include "rfs/generations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfs/errors.hpp"
#include "rfs/fib.hpp"
#include "rfs/substitution.hpp"

namespace rfs {

namespace {

std::string predicted_cost(int n) {
    // |A_n| = 2^(f_{2n-3}-1) words of f_{2n} letters
    double log2_count = static_cast<double>(fib(2 * n - 3)) - 1.0;
    double bytes_per_word = 48.0 + std::ceil(static_cast<double>(fib(2 * n)) / 8.0);
    std::ostringstream os;
    os.precision(3);
    os << "2^" << static_cast<std::uint64_t>(log2_count) << " words (~"
       << std::scientific << std::exp2(log2_count) * bytes_per_word << " bytes)";
    return os.str();
}

}  // namespace

GenerationSets build(int n, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("generation index must be at least 1");
    if (n > limits.max_generation)
        throw capacity_error("generation " + std::to_string(n) + " exceeds max_generation = " +
                             std::to_string(limits.max_generation) +
                             "; enumerating it would cost " + predicted_cost(n));
    GenerationSets g;
    g.n = 1;
    g.A = WordSet::of({"a"});
    g.B = WordSet::of({"b"});
    for (int k = 2; k <= n; ++k) {
        WordSet A_next = set_product(set_product(g.B, g.A), g.A);
        WordSet B_next = set_union(set_product(g.A, g.B), set_product(g.B, g.A));
        g.A = std::move(A_next);
        g.B = std::move(B_next);
        g.n = k;
    }
    return g;
}

std::uint64_t count_log2_A(int n) {
    if (n < 2) throw std::invalid_argument("closed-form count needs n >= 2");
    return fib(2 * n - 3) - 1;
}

std::uint64_t count_log2_B(int n) {
    if (n < 2) throw std::invalid_argument("closed-form count needs n >= 2");
    return fib(2 * n - 4) + 1;
}

VerificationReport verify_counts(int n_max, const Limits& limits) {
    VerificationReport rep;
    rep.proposition = "generation-set-counts";
    rep.anchor = "|A_n| = 2^(f_(2n-3)-1) and |B_n| = 2^(f_(2n-4)+1)";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    GenerationSets g = build(1, limits);
    for (int n = 2; n <= n_max; ++n) {
        g = build(n, limits);
        ++rep.checked;
        std::uint64_t want_a = std::uint64_t{1} << count_log2_A(n);
        std::uint64_t want_b = std::uint64_t{1} << count_log2_B(n);
        if (g.A.size() != want_a || g.B.size() != want_b) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"n", n},
                                                {"enumerated_A", g.A.size()},
                                                {"closed_form_A", want_a},
                                                {"enumerated_B", g.B.size()},
                                                {"closed_form_B", want_b}};
            return rep;
        }
    }
    return rep;
}

VerificationReport verify_injectivity(int n_max, const Limits& limits) {
    VerificationReport rep;
    rep.proposition = "inflation-injectivity";
    rep.anchor = "distinct members of A_n (and of B_n) have disjoint all-realization sets";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    SubstitutionRule phi = SubstitutionRule::preset_phi();
    for (int n = 2; n <= n_max; ++n) {
        GenerationSets g = build(n, limits);
        for (const WordSet* S : {&g.A, &g.B}) {
            std::vector<Word> all;
            std::uint64_t expected = 0;
            for (const Word& w : *S) {
                WordSet images = apply_all(phi, w, limits);
                std::uint64_t want = std::uint64_t{1} << w.count(Letter::b);
                if (images.size() != want) {
                    rep.pass = false;
                    rep.counterexample = nlohmann::json{
                        {"n", n}, {"word", w.str()}, {"images", images.size()}, {"expected", want}};
                    return rep;
                }
                expected += want;
                for (const Word& x : images) all.push_back(x);
            }
            std::sort(all.begin(), all.end());
            auto dup = std::adjacent_find(all.begin(), all.end());
            ++rep.checked;
            if (dup != all.end() || all.size() != expected) {
                rep.pass = false;
                rep.counterexample = nlohmann::json{
                    {"n", n},
                    {"set", S == &g.A ? "A" : "B"},
                    {"duplicate", dup != all.end() ? dup->str() : std::string("count-mismatch")}};
                return rep;
            }
        }
    }
    return rep;
}

namespace {

struct Relation {
    std::string label;
    bool holds;
};

void record(VerificationReport& rep, nlohmann::json& details, int n, const Relation& r) {
    ++rep.checked;
    details.push_back({{"n", n}, {"relation", r.label}, {"status", r.holds ? "pass" : "fail"}});
    if (!r.holds) {
        rep.pass = false;
        if (!rep.counterexample) rep.counterexample = nlohmann::json{{"n", n}, {"relation", r.label}};
    }
}

}  // namespace

VerificationReport verify_prefix_relations(int n_max, const Limits& limits) {
    VerificationReport rep;
    rep.proposition = "prefix-relations";
    rep.anchor = "prefix-set inclusions and equalities between consecutive generations";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    nlohmann::json details = nlohmann::json::array();
    std::vector<GenerationSets> gens(static_cast<std::size_t>(n_max) + 2);
    for (int n = 1; n <= n_max + 1; ++n) gens[static_cast<std::size_t>(n)] = build(n, limits);
    for (int n = 2; n <= n_max; ++n) {
        const auto& g = gens[static_cast<std::size_t>(n)];
        const auto& g1 = gens[static_cast<std::size_t>(n) + 1];
        std::uint64_t f2n = fib(2 * n);
        WordSet a_pref = g.A.slice_set(1, f2n - 1);
        record(rep, details, n,
               {"A_n[1,f_2n-1] in A_(n+1)[1,f_2n-1]",
                g1.A.slice_set(1, f2n - 1).includes(a_pref)});
        record(rep, details, n,
               {"A_n[1,f_2n-1] in (B_n A_n)[1,f_2n-1]",
                set_product(g.B, g.A).slice_set(1, f2n - 1).includes(a_pref)});
        if (n >= 3) {
            std::uint64_t w = fib(2 * n - 2) - 1;
            record(rep, details, n,
                   {"A_n[1,f_(2n-2)-1] = A_(n+1)[1,f_(2n-2)-1]",
                    g.A.slice_set(1, w) == g1.A.slice_set(1, w)});
            record(rep, details, n,
                   {"B_n[1,f_(2n-2)-1] = A_n[1,f_(2n-2)-1]",
                    g.B.slice_set(1, w) == g.A.slice_set(1, w)});
            record(rep, details, n,
                   {"B_n = B_(n+1)[1,f_(2n-1)]", g.B == g1.B.slice_set(1, fib(2 * n - 1))});
        }
    }
    rep.details = std::move(details);
    return rep;
}

VerificationReport verify_suffix_relations(int n_max, const Limits& limits) {
    VerificationReport rep;
    rep.proposition = "suffix-relations";
    rep.anchor = "suffix-set inclusion into B_n and its propagation to B_(n+1)";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    nlohmann::json details = nlohmann::json::array();
    std::vector<GenerationSets> gens(static_cast<std::size_t>(n_max) + 2);
    for (int n = 1; n <= n_max + 1; ++n) gens[static_cast<std::size_t>(n)] = build(n, limits);
    for (int n = 2; n <= n_max; ++n) {
        const auto& g = gens[static_cast<std::size_t>(n)];
        const auto& g1 = gens[static_cast<std::size_t>(n) + 1];
        WordSet b_mid = g.B.slice_set(2, fib(2 * n - 1));
        record(rep, details, n,
               {"A_n[f_(2n-2)+2,f_2n] in B_n[2,f_(2n-1)]",
                b_mid.includes(g.A.slice_set(fib(2 * n - 2) + 2, fib(2 * n)))});
        record(rep, details, n,
               {"B_n[2,f_(2n-1)] = B_(n+1)[f_2n+2,f_(2n+1)]",
                b_mid == g1.B.slice_set(fib(2 * n) + 2, fib(2 * n + 1))});
    }
    rep.details = std::move(details);
    return rep;
}

}  // namespace rfs

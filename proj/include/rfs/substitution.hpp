#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rfs/limits.hpp"
#include "rfs/word.hpp"
#include "rfs/word_set.hpp"

namespace rfs {

struct WeightedImage {
    Word image;
    double weight;
};

/// A substitution rule over {a,b}: each letter maps to one or more weighted
/// image words. A letter with several images is resolved independently at
/// every occurrence, either by enumerating all branches (apply_all) or by
/// one weighted draw per occurrence (apply_sampled).
///
/// Weights must be positive and sum to 1 per letter; they matter only to
/// sampling. Branch enumeration ignores them.
class SubstitutionRule {
public:
    SubstitutionRule(std::string name, std::vector<WeightedImage> images_a,
                     std::vector<WeightedImage> images_b);

    /// a -> baa; b -> ab with probability p, ba with probability 1-p.
    static SubstitutionRule preset_phi(double p = 0.5);

    /// a -> b; b -> ab with probability p, ba with probability 1-p.
    static SubstitutionRule preset_theta(double p = 0.5);

    /// Loads {"a": [{"image": "...", "weight": ...}, ...], "b": [...]}.
    static SubstitutionRule from_json(const nlohmann::json& j);

    const std::string& name() const { return name_; }
    const std::vector<WeightedImage>& images(Letter l) const {
        return l == Letter::a ? images_a_ : images_b_;
    }

    /// Summed image lengths if every branch picked its longest image.
    std::uint64_t max_image_length(Letter l) const;

private:
    std::string name_;
    std::vector<WeightedImage> images_a_;
    std::vector<WeightedImage> images_b_;
};

/// One sampled application: the output word plus the branch index chosen at
/// each multi-image letter, in left-to-right scan order. Replaying the
/// choices through the rule reproduces the output exactly.
struct Realization {
    Word output;
    std::vector<std::uint8_t> choices;
};

/// The set of all branch realizations of rule on w. The branch count (the
/// product of image counts over the letters of w) must not exceed
/// 2^max_branch_bits, and the accumulated output may not exceed
/// max_set_size words; capacity_error names the violated limit.
WordSet apply_all(const SubstitutionRule& rule, const Word& w, const Limits& limits = {});

/// Union of apply_all over the members of W, deduplicated.
WordSet apply_all_set(const SubstitutionRule& rule, const WordSet& W, const Limits& limits = {});

/// Number of branch realizations of rule on w (what apply_all would
/// enumerate), as a 128-bit count.
unsigned __int128 branch_count(const SubstitutionRule& rule, const Word& w);

/// One realization drawn with an mt19937_64 engine seeded with seed.
/// Stream semantics: one uniform double in [0,1) is drawn per multi-image
/// letter, in left-to-right scan order; the branch with the least index
/// whose cumulative weight exceeds the draw is taken. Deterministic across
/// platforms for a fixed seed.
Realization apply_sampled(const SubstitutionRule& rule, const Word& w, std::uint64_t seed);

/// Same draw semantics against a caller-owned engine (consumed in place).
Realization apply_sampled(const SubstitutionRule& rule, const Word& w, std::mt19937_64& engine);

/// Rebuilds the output of a realization from its recorded choices.
Word replay(const SubstitutionRule& rule, const Word& w, std::span<const std::uint8_t> choices);

/// Iterates sampled application: r_1 = start, r_{k+1} = one sampled
/// application to r_k. Returns the generations-1 step realizations, all
/// drawn from a single engine seeded once with seed. capacity_error if an
/// output would exceed max_word_symbols.
std::vector<Realization> iterate_sampled(const SubstitutionRule& rule, const Word& start,
                                         int generations, std::uint64_t seed,
                                         const Limits& limits = {});

}  // namespace rfs

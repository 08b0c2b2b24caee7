#include "rfs/substitution.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "rfs/errors.hpp"

namespace rfs {

namespace {

using u128 = unsigned __int128;

void validate_images(Letter l, const std::vector<WeightedImage>& images) {
    if (images.empty())
        throw std::invalid_argument(std::string("letter '") + to_char(l) + "' has no image");
    double total = 0.0;
    for (const auto& wi : images) {
        if (!(wi.weight > 0.0))
            throw std::invalid_argument(std::string("letter '") + to_char(l) +
                                        "' has a non-positive image weight");
        total += wi.weight;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument(std::string("image weights of letter '") + to_char(l) +
                                    "' sum to " + std::to_string(total) + ", expected 1");
}

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return s;
}

}  // namespace

SubstitutionRule::SubstitutionRule(std::string name, std::vector<WeightedImage> images_a,
                                   std::vector<WeightedImage> images_b)
    : name_(std::move(name)), images_a_(std::move(images_a)), images_b_(std::move(images_b)) {
    validate_images(Letter::a, images_a_);
    validate_images(Letter::b, images_b_);
}

SubstitutionRule SubstitutionRule::preset_phi(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must satisfy 0 < p < 1");
    return SubstitutionRule("phi", {{Word::parse("baa"), 1.0}},
                            {{Word::parse("ab"), p}, {Word::parse("ba"), 1.0 - p}});
}

SubstitutionRule SubstitutionRule::preset_theta(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must satisfy 0 < p < 1");
    return SubstitutionRule("theta", {{Word::parse("b"), 1.0}},
                            {{Word::parse("ab"), p}, {Word::parse("ba"), 1.0 - p}});
}

SubstitutionRule SubstitutionRule::from_json(const nlohmann::json& j) {
    auto parse_images = [&](const char* key) {
        std::vector<WeightedImage> images;
        for (const auto& item : j.at(key)) {
            images.push_back({Word::parse(item.at("image").get<std::string>()),
                              item.at("weight").get<double>()});
        }
        return images;
    };
    std::string name = j.value("name", "custom");
    return SubstitutionRule(name, parse_images("a"), parse_images("b"));
}

std::uint64_t SubstitutionRule::max_image_length(Letter l) const {
    std::uint64_t m = 0;
    for (const auto& wi : images(l)) m = std::max<std::uint64_t>(m, wi.image.size());
    return m;
}

unsigned __int128 branch_count(const SubstitutionRule& rule, const Word& w) {
    std::size_t na = w.count(Letter::a);
    std::size_t nb = w.size() - na;
    u128 total = 1;
    // per-letter image counts are constant, so the product is a power pair
    for (std::size_t i = 0; i < na; ++i) total *= rule.images(Letter::a).size();
    for (std::size_t i = 0; i < nb; ++i) total *= rule.images(Letter::b).size();
    return total;
}

namespace {

u128 checked_branch_count(const SubstitutionRule& rule, const Word& w, const Limits& limits) {
    std::size_t ka = rule.images(Letter::a).size();
    std::size_t kb = rule.images(Letter::b).size();
    u128 cap = u128{1} << limits.max_branch_bits;
    u128 total = 1;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        total *= w.at(i) == Letter::a ? ka : kb;
        if (total > cap)
            throw capacity_error("expanding a word with branch count above 2^" +
                                 std::to_string(limits.max_branch_bits) +
                                 " (max_branch_bits); raise the limit or shorten the input");
    }
    return total;
}

void expand_into(const SubstitutionRule& rule, const Word& w, std::vector<Word>& out,
                 const Limits& limits) {
    u128 count = checked_branch_count(rule, w, limits);
    if (static_cast<u128>(out.size()) + count > limits.max_set_size)
        throw capacity_error("expansion would materialize more than " +
                             std::to_string(limits.max_set_size) +
                             " words (max_set_size)");
    std::vector<Word> cur(1);
    std::vector<Word> next;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const auto& images = rule.images(w.at(i));
        if (images.size() == 1) {
            for (Word& x : cur) x.append(images[0].image);
            continue;
        }
        next.clear();
        next.reserve(cur.size() * images.size());
        for (const Word& x : cur) {
            for (const auto& wi : images) {
                Word y = x;
                y.append(wi.image);
                next.push_back(std::move(y));
            }
        }
        cur.swap(next);
    }
    for (Word& x : cur) out.push_back(std::move(x));
}

}  // namespace

WordSet apply_all(const SubstitutionRule& rule, const Word& w, const Limits& limits) {
    std::vector<Word> out;
    expand_into(rule, w, out, limits);
    return WordSet::from_words(std::move(out));
}

WordSet apply_all_set(const SubstitutionRule& rule, const WordSet& W, const Limits& limits) {
    u128 predicted = 0;
    for (const Word& w : W) predicted += checked_branch_count(rule, w, limits);
    if (predicted > limits.max_set_size)
        throw capacity_error("expanding the set would materialize " + u128_str(predicted) +
                             " words, above max_set_size = " +
                             std::to_string(limits.max_set_size));
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(predicted));
    for (const Word& w : W) expand_into(rule, w, out, limits);
    return WordSet::from_words(std::move(out));
}

namespace {

std::size_t draw_branch(const std::vector<WeightedImage>& images, std::mt19937_64& engine) {
    // exact double in [0,1) from the top 53 bits of one engine output
    double u = static_cast<double>(engine() >> 11) * 0x1p-53;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
        acc += images[i].weight;
        if (u < acc) return i;
    }
    return images.size() - 1;
}

}  // namespace

Realization apply_sampled(const SubstitutionRule& rule, const Word& w, std::mt19937_64& engine) {
    Realization r;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const auto& images = rule.images(w.at(i));
        if (images.size() == 1) {
            r.output.append(images[0].image);
        } else {
            std::size_t pick = draw_branch(images, engine);
            r.choices.push_back(static_cast<std::uint8_t>(pick));
            r.output.append(images[pick].image);
        }
    }
    return r;
}

Realization apply_sampled(const SubstitutionRule& rule, const Word& w, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    return apply_sampled(rule, w, engine);
}

Word replay(const SubstitutionRule& rule, const Word& w, std::span<const std::uint8_t> choices) {
    Word out;
    std::size_t used = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const auto& images = rule.images(w.at(i));
        if (images.size() == 1) {
            out.append(images[0].image);
        } else {
            if (used >= choices.size())
                throw std::invalid_argument("replay: choice sequence too short");
            std::uint8_t pick = choices[used++];
            if (pick >= images.size())
                throw std::invalid_argument("replay: branch index out of range");
            out.append(images[pick].image);
        }
    }
    if (used != choices.size()) throw std::invalid_argument("replay: choice sequence too long");
    return out;
}

std::vector<Realization> iterate_sampled(const SubstitutionRule& rule, const Word& start,
                                         int generations, std::uint64_t seed,
                                         const Limits& limits) {
    if (generations < 1) throw std::invalid_argument("generations must be at least 1");
    std::mt19937_64 engine(seed);
    std::vector<Realization> steps;
    steps.reserve(static_cast<std::size_t>(generations) - 1);
    Word current = start;
    for (int g = 2; g <= generations; ++g) {
        std::uint64_t na = current.count(Letter::a);
        std::uint64_t nb = current.size() - na;
        std::uint64_t bound = na * rule.max_image_length(Letter::a) +
                              nb * rule.max_image_length(Letter::b);
        if (bound > limits.max_word_symbols)
            throw capacity_error("generation " + std::to_string(g) + " could reach " +
                                 std::to_string(bound) + " letters, above max_word_symbols = " +
                                 std::to_string(limits.max_word_symbols));
        steps.push_back(apply_sampled(rule, current, engine));
        current = steps.back().output;
    }
    return steps;
}

}  // namespace rfs

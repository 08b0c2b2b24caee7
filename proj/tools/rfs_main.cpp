#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfs/cache.hpp"
#include "rfs/entropy.hpp"
#include "rfs/errors.hpp"
#include "rfs/factor_language.hpp"
#include "rfs/fib.hpp"
#include "rfs/generations.hpp"
#include "rfs/golden.hpp"
#include "rfs/substitution.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitVerification = 3;

struct Options {
    std::string command;

    std::string kind = "A";
    int n = 3;

    int generations = 3;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string rule = "phi";
    std::string rule_file;

    std::size_t length = 3;
    std::string method = "direct";
    bool emit_words = false;
    std::string output;

    std::size_t max_length = 55;
    bool all_lengths = false;
    std::string format = "json";

    std::string prop = "all";
    int max_n = -1;

    std::string cache_dir;
    std::string cache_format = "text";
    rfs::Limits limits;
};

rfs::SubstitutionRule make_rule(const Options& opt) {
    if (!opt.rule_file.empty()) {
        std::ifstream in(opt.rule_file);
        if (!in) throw std::invalid_argument("cannot open rule file " + opt.rule_file);
        return rfs::SubstitutionRule::from_json(nlohmann::json::parse(in));
    }
    if (opt.rule == "phi") return rfs::SubstitutionRule::preset_phi(opt.p);
    if (opt.rule == "theta") return rfs::SubstitutionRule::preset_theta(opt.p);
    throw std::invalid_argument("unknown rule preset " + opt.rule);
}

std::optional<rfs::FactorCache> make_cache(const Options& opt) {
    std::string dir = opt.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("RFS_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) return std::nullopt;
    auto format = opt.cache_format == "binary" ? rfs::WireFormat::binary : rfs::WireFormat::text;
    return rfs::FactorCache(dir, format);
}

// Computes F(A, m), preferring cache hits and persisting fresh results.
rfs::FactorSet factor_set_for(std::size_t m, const Options& opt, rfs::FactorPipeline& pipeline,
                              const std::optional<rfs::FactorCache>& cache) {
    if (cache) {
        if (auto hit = cache->lookup(m)) {
            pipeline.preload(m, hit->members);
            return *hit;
        }
    }
    rfs::FactorSet fs = opt.method == "direct" ? rfs::exact_factor_set(m, opt.limits)
                                               : pipeline.compute(m);
    if (cache) cache->store(fs);
    return fs;
}

int run_generate(const Options& opt) {
    rfs::GenerationSets g = rfs::build(opt.n, opt.limits);
    const rfs::WordSet& s = opt.kind == "A" ? g.A : g.B;
    if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::binary);
        s.write(out);
    } else {
        s.write(std::cout);
    }
    return kExitOk;
}

int run_sample(const Options& opt) {
    rfs::SubstitutionRule rule = make_rule(opt);
    auto steps = rfs::iterate_sampled(rule, rfs::Word::parse("a"), opt.generations, opt.seed,
                                      opt.limits);
    nlohmann::json j{{"rule", rule.name()}, {"generations", opt.generations},
                     {"p", opt.p},          {"seed", opt.seed},
                     {"start", "a"},        {"steps", nlohmann::json::array()}};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        nlohmann::json step{{"generation", i + 2},
                            {"length", steps[i].output.size()},
                            {"choices", steps[i].choices}};
        step["word"] = steps[i].output.size() <= 4096 ? steps[i].output.str()
                                                      : "(" + std::to_string(steps[i].output.size()) +
                                                            " letters, omitted)";
        j["steps"].push_back(step);
    }
    if (!steps.empty()) j["word"] = j["steps"].back()["word"];
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int run_subwords(const Options& opt) {
    rfs::FactorPipeline pipeline(opt.limits);
    auto cache = make_cache(opt);
    rfs::FactorSet fs = factor_set_for(opt.length, opt, pipeline, cache);
    if (opt.emit_words) {
        std::string path = opt.output.empty() ? "subwords_" + std::to_string(opt.length) + ".txt"
                                              : opt.output;
        std::ofstream out(path, std::ios::binary);
        fs.members.write(out);
    }
    nlohmann::json j{{"m", fs.m},
                     {"count", fs.members.size()},
                     {"method", rfs::to_string(fs.method)},
                     {"source", fs.source},
                     {"stage_lengths", pipeline.stage_lengths()}};
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int run_entropy(const Options& opt) {
    rfs::FactorPipeline pipeline(opt.limits);
    auto cache = make_cache(opt);
    std::vector<std::size_t> ms;
    if (opt.all_lengths) {
        for (std::size_t m = 1; m <= opt.max_length; ++m) ms.push_back(m);
    } else {
        for (int n = 2; rfs::fib(2 * n) <= opt.max_length; ++n) ms.push_back(rfs::fib(2 * n));
    }
    if (cache) {
        for (std::size_t m : ms) {
            if (auto hit = cache->lookup(m)) pipeline.preload(m, hit->members);
        }
    }
    rfs::EntropyReport rep = rfs::entropy_series(ms, pipeline);
    if (cache) {
        for (std::size_t m : ms) {
            if (!cache->lookup(m)) cache->store(pipeline.compute(m));
        }
    }
    if (opt.format == "csv")
        rep.write_csv(std::cout);
    else
        std::cout << rep.to_json().dump(2) << '\n';
    return kExitOk;
}

int run_verify(const Options& opt) {
    auto n_or = [&](int def) { return opt.max_n > 0 ? opt.max_n : def; };
    std::vector<rfs::VerificationReport> reports;
    bool all = opt.prop == "all";
    rfs::FactorPipeline pipeline(opt.limits);
    if (all || opt.prop == "counts")
        reports.push_back(rfs::verify_counts(n_or(5), opt.limits));
    if (all || opt.prop == "injectivity")
        reports.push_back(rfs::verify_injectivity(std::min(n_or(4), 4), opt.limits));
    if (all || opt.prop == "prefix")
        reports.push_back(rfs::verify_prefix_relations(std::min(n_or(4), 4), opt.limits));
    if (all || opt.prop == "suffix")
        reports.push_back(rfs::verify_suffix_relations(std::min(n_or(4), 4), opt.limits));
    if (all || opt.prop == "factor-eq")
        reports.push_back(rfs::verify_AB_factor_equality(std::min(n_or(3), 4), opt.limits));
    if (all || opt.prop == "stabilization")
        reports.push_back(rfs::verify_window_stabilization(std::min(n_or(3), 3), opt.limits));
    if (all || opt.prop == "bcount")
        reports.push_back(rfs::verify_bcount_bounds(n_or(5), opt.limits));
    if (all || opt.prop == "upper-bound")
        reports.push_back(rfs::verify_upper_bound(std::min(n_or(5), 5), pipeline));
    if (all || opt.prop == "diophantine") {
        reports.push_back(rfs::verify_diophantine_bound(n_or(30)));
        reports.push_back(rfs::verify_fib_distance_identity(42));
    }
    if (all || opt.prop == "floor-shift")
        reports.push_back(rfs::verify_floor_shift_identity(n_or(25)));
    if (all || opt.prop == "entropy") {
        reports.push_back(rfs::verify_growth_convergence(40));
        reports.push_back(rfs::verify_entropy_sandwich(std::min(n_or(5), 5), pipeline));
    }
    if (reports.empty()) throw std::invalid_argument("unknown proposition " + opt.prop);

    nlohmann::json j = nlohmann::json::array();
    bool ok = true;
    for (const auto& r : reports) {
        j.push_back(r.to_json());
        ok = ok && r.pass;
    }
    std::cout << j.dump(2) << '\n';
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of the two-step random Fibonacci substitution"};
    app.require_subcommand(1);
    Options opt;

    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--limit-set-size", opt.limits.max_set_size,
                        "cap on words materialized per set");
        cmd->add_option("--limit-branch-bits", opt.limits.max_branch_bits,
                        "cap on log2 branches per expansion");
    };
    auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache-dir", opt.cache_dir,
                        "factor-set cache directory (default $RFS_CACHE_DIR)");
        cmd->add_option("--cache-format", opt.cache_format, "cache word-list format")
            ->check(CLI::IsMember({"text", "binary"}));
    };

    CLI::App* generate = app.add_subcommand("generate", "enumerate a generation set");
    generate->add_option("--kind", opt.kind, "which family")->check(CLI::IsMember({"A", "B"}));
    generate->add_option("--n", opt.n, "generation index")->required();
    generate->add_option("--output", opt.output, "write the word list here instead of stdout");
    add_limits(generate);

    CLI::App* sample = app.add_subcommand("sample", "iterate one random realization");
    sample->add_option("--generations", opt.generations, "number of generations")->required();
    sample->add_option("--p", opt.p, "branch probability, 0 < p < 1");
    sample->add_option("--seed", opt.seed, "PRNG seed");
    sample->add_option("--rule", opt.rule, "rule preset")->check(CLI::IsMember({"phi", "theta"}));
    sample->add_option("--rule-file", opt.rule_file, "JSON file with a custom rule");
    add_limits(sample);

    CLI::App* subwords = app.add_subcommand("subwords", "compute the factor set F(A, m)");
    subwords->add_option("--length", opt.length, "factor length m")->required();
    subwords->add_option("--method", opt.method, "computation route")
        ->check(CLI::IsMember({"direct", "pipeline"}));
    subwords->add_flag("--emit-words", opt.emit_words, "also write the sorted word list");
    subwords->add_option("--output", opt.output, "word list destination (with --emit-words)");
    add_cache(subwords);
    add_limits(subwords);

    CLI::App* entropy = app.add_subcommand("entropy", "entropy-convergence series");
    entropy->add_option("--max-length", opt.max_length, "largest factor length");
    entropy->add_flag("--all-lengths", opt.all_lengths,
                      "row for every length, not just stage lengths");
    entropy->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    add_cache(entropy);
    add_limits(entropy);

    CLI::App* verify = app.add_subcommand("verify", "run exhaustive proposition checks");
    verify->add_option("--prop", opt.prop, "which proposition family")
        ->check(CLI::IsMember({"all", "counts", "injectivity", "prefix", "suffix", "factor-eq",
                               "stabilization", "bcount", "upper-bound", "diophantine",
                               "floor-shift", "entropy"}));
    verify->add_option("--max-n", opt.max_n, "range override (clamped by enumeration capacity)");
    add_limits(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (sample->parsed() && !(opt.p > 0.0 && opt.p < 1.0)) {
        std::cerr << "error: p must satisfy 0 < p < 1\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(opt);
        if (sample->parsed()) return run_sample(opt);
        if (subwords->parsed()) return run_subwords(opt);
        if (entropy->parsed()) return run_entropy(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const rfs::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

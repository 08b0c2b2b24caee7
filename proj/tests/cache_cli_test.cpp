#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rfs/cache.hpp"
#include "rfs/factor_language.hpp"

using namespace rfs;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("rfs_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, const fs::path& stdout_to) {
    std::string cmd = std::string(RFS_CLI_PATH) + " " + args + " > " + stdout_to.string() +
                      " 2> " + stdout_to.string() + ".err";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("store and lookup round-trip") {
    fs::path dir = fresh_dir("roundtrip");
    FactorCache cache(dir);
    FactorSet fs8 = exact_factor_set(8);
    cache.store(fs8);
    auto hit = cache.lookup(8);
    REQUIRE(hit.has_value());
    CHECK(hit->members == fs8.members);
    CHECK(hit->m == 8);
    CHECK(hit->method == FactorMethod::direct_window);
    CHECK(!cache.lookup(9).has_value());
}

TEST_CASE("binary format round-trip") {
    fs::path dir = fresh_dir("binary");
    FactorCache cache(dir, WireFormat::binary);
    FactorSet fs5 = exact_factor_set(5);
    cache.store(fs5);
    auto hit = cache.lookup(5);
    REQUIRE(hit.has_value());
    CHECK(hit->members == fs5.members);
    // the payload starts with the magic header
    std::string payload = slurp(cache.words_path(5));
    CHECK(payload.substr(0, 8) == "RFSWSET1");
}

TEST_CASE("corruption is a miss, then recompute heals it") {
    fs::path dir = fresh_dir("corrupt");
    FactorCache cache(dir);
    cache.store(exact_factor_set(4));
    REQUIRE(cache.lookup(4).has_value());

    // flip one byte in the word list
    std::string payload = slurp(cache.words_path(4));
    payload[0] = payload[0] == 'a' ? 'b' : 'a';
    std::ofstream(cache.words_path(4), std::ios::binary) << payload;
    CHECK(!cache.lookup(4).has_value());

    cache.store(exact_factor_set(4));
    auto healed = cache.lookup(4);
    REQUIRE(healed.has_value());
    CHECK(healed->members == exact_factor_set(4).members);
}

TEST_CASE("sidecar count mismatch is a miss") {
    fs::path dir = fresh_dir("count");
    FactorCache cache(dir);
    cache.store(exact_factor_set(3));
    // rewrite the sidecar with a wrong count but a fixed-up checksum
    std::string words = slurp(cache.words_path(3));
    auto meta = nlohmann::json::parse(slurp(cache.sidecar_path(3)));
    meta["count"] = 99;
    std::ofstream(cache.sidecar_path(3)) << meta.dump();
    CHECK(!cache.lookup(3).has_value());
}

TEST_CASE("cli: generate emits the sorted generation") {
    fs::path dir = fresh_dir("cli_gen");
    REQUIRE(run_cli("generate --kind A --n 3", dir / "out") == 0);
    CHECK(slurp(dir / "out") == "abbaabaa\nbabaabaa\n");
    REQUIRE(run_cli("generate --kind B --n 2", dir / "out2") == 0);
    CHECK(slurp(dir / "out2") == "ab\nba\n");
}

TEST_CASE("cli: subwords summary and cache interplay") {
    fs::path dir = fresh_dir("cli_sub");
    std::string cache_arg = " --cache-dir " + (dir / "cache").string();
    REQUIRE(run_cli("subwords --length 3 --method direct" + cache_arg, dir / "out") == 0);
    auto j = nlohmann::json::parse(slurp(dir / "out"));
    CHECK(j["count"] == 7);
    CHECK(j["method"] == "direct-window");
    // second run hits the cache and reports the same count
    REQUIRE(run_cli("subwords --length 3 --method pipeline" + cache_arg, dir / "out2") == 0);
    auto j2 = nlohmann::json::parse(slurp(dir / "out2"));
    CHECK(j2["count"] == 7);
}

TEST_CASE("cli: RFS_CACHE_DIR provides the default cache directory") {
    fs::path dir = fresh_dir("cli_env");
    fs::path cache_dir = dir / "envcache";
    std::string cmd = "RFS_CACHE_DIR=" + cache_dir.string() + " " + RFS_CLI_PATH +
                      " subwords --length 4 > " + (dir / "out").string() + " 2>/dev/null";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(fs::exists(cache_dir / "fa_4.words"));
    CHECK(fs::exists(cache_dir / "fa_4.json"));
}

TEST_CASE("cli: subwords writes the word list with --emit-words") {
    fs::path dir = fresh_dir("cli_words");
    fs::path words = dir / "f3.txt";
    REQUIRE(run_cli("subwords --length 3 --emit-words --output " + words.string(),
                    dir / "out") == 0);
    CHECK(slurp(words) == "aaa\naab\naba\nabb\nbaa\nbab\nbba\n");
}

TEST_CASE("cli: sample is deterministic and seed-sensitive") {
    fs::path dir = fresh_dir("cli_sample");
    REQUIRE(run_cli("sample --generations 3 --p 0.5 --seed 7", dir / "a") == 0);
    REQUIRE(run_cli("sample --generations 3 --p 0.5 --seed 7", dir / "b") == 0);
    CHECK(slurp(dir / "a") == slurp(dir / "b"));
    auto j = nlohmann::json::parse(slurp(dir / "a"));
    std::string word = j["word"].get<std::string>();
    CHECK((word == "abbaabaa" || word == "babaabaa"));
    CHECK(j["steps"][0]["word"] == "baa");
}

TEST_CASE("cli: exit codes") {
    fs::path dir = fresh_dir("cli_exit");
    CHECK(run_cli("sample --generations 3 --p 1.5", dir / "o1") == 1);   // usage
    CHECK(run_cli("generate --kind A --n 6", dir / "o2") == 2);          // capacity
    CHECK(run_cli("subwords --length 3 --method pipeline --limit-set-size 2", dir / "o3") == 2);
    CHECK(run_cli("nonsense", dir / "o4") == 1);
    CHECK(run_cli("verify --prop counts --max-n 4", dir / "o5") == 0);
}

TEST_CASE("cli: verify all is green json") {
    fs::path dir = fresh_dir("cli_verify");
    REQUIRE(run_cli("verify --prop floor-shift", dir / "out") == 0);
    auto j = nlohmann::json::parse(slurp(dir / "out"));
    REQUIRE(j.is_array());
    for (const auto& rep : j) {
        CHECK(rep["status"] == "pass");
        CHECK(rep.contains("proposition"));
        CHECK(rep.contains("paper_anchor"));
        CHECK(rep.contains("range"));
    }
}

TEST_CASE("cli: entropy csv") {
    fs::path dir = fresh_dir("cli_entropy");
    REQUIRE(run_cli("entropy --max-length 8 --format csv", dir / "out") == 0);
    std::string text = slurp(dir / "out");
    CHECK(text.rfind("m,count,estimate_bits", 0) == 0);
    CHECK(text.find("\n3,7,") != std::string::npos);
    CHECK(text.find("\n8,58,") != std::string::npos);
}

#include "rfs/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace rfs {

std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::optional<std::string> slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FactorMethod method_from_string(const std::string& s) {
    if (s == "direct-window") return FactorMethod::direct_window;
    if (s == "inflation-pipeline") return FactorMethod::inflation_pipeline;
    return FactorMethod::raw_scan;
}

}  // namespace

FactorCache::FactorCache(std::filesystem::path dir, WireFormat format)
    : dir_(std::move(dir)), format_(format) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path FactorCache::words_path(std::size_t m) const {
    return dir_ / ("fa_" + std::to_string(m) + ".words");
}

std::filesystem::path FactorCache::sidecar_path(std::size_t m) const {
    return dir_ / ("fa_" + std::to_string(m) + ".json");
}

std::optional<FactorSet> FactorCache::lookup(std::size_t m) const {
    auto sidecar_text = slurp(sidecar_path(m));
    auto words_text = slurp(words_path(m));
    if (!sidecar_text || !words_text) return std::nullopt;

    nlohmann::json meta = nlohmann::json::parse(*sidecar_text, nullptr, false);
    if (meta.is_discarded()) {
        std::cerr << "cache: unreadable sidecar for m=" << m << ", recomputing\n";
        return std::nullopt;
    }
    std::string checksum = "fnv1a64:" + hex64(fnv1a64(words_text->data(), words_text->size()));
    if (meta.value("checksum", "") != checksum) {
        std::cerr << "cache: checksum mismatch for m=" << m << ", recomputing\n";
        return std::nullopt;
    }
    FactorSet fs;
    fs.m = m;
    fs.method = method_from_string(meta.value("method", ""));
    fs.source = meta.value("source", "");
    std::istringstream in(*words_text);
    try {
        fs.members = meta.value("format", "text") == "binary" ? WordSet::read_binary(in, m)
                                                              : WordSet::read(in);
    } catch (const std::exception& e) {
        std::cerr << "cache: corrupt word list for m=" << m << " (" << e.what()
                  << "), recomputing\n";
        return std::nullopt;
    }
    if (fs.members.size() != meta.value("count", std::uint64_t{0}) ||
        (!fs.members.empty() && (fs.members.min_length() != m || fs.members.max_length() != m))) {
        std::cerr << "cache: count or length mismatch for m=" << m << ", recomputing\n";
        return std::nullopt;
    }
    return fs;
}

void FactorCache::store(const FactorSet& fs) const {
    std::ostringstream words;
    if (format_ == WireFormat::binary)
        fs.members.write_binary(words);
    else
        fs.members.write(words);
    std::string payload = words.str();

    auto final_words = words_path(fs.m);
    auto tmp_words = final_words;
    tmp_words += ".tmp";
    {
        std::ofstream out(tmp_words, std::ios::binary | std::ios::trunc);
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    }
    std::filesystem::rename(tmp_words, final_words);

    nlohmann::json meta{
        {"m", fs.m},
        {"count", fs.members.size()},
        {"method", to_string(fs.method)},
        {"source", fs.source},
        {"format", format_ == WireFormat::binary ? "binary" : "text"},
        {"checksum", "fnv1a64:" + hex64(fnv1a64(payload.data(), payload.size()))},
    };
    auto final_meta = sidecar_path(fs.m);
    auto tmp_meta = final_meta;
    tmp_meta += ".tmp";
    {
        std::ofstream out(tmp_meta, std::ios::binary | std::ios::trunc);
        out << meta.dump(2) << '\n';
    }
    std::filesystem::rename(tmp_meta, final_meta);
}

}  // namespace rfs

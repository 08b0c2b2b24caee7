#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "rfs/factor_language.hpp"

namespace rfs {

/// 64-bit FNV-1a over a byte buffer.
std::uint64_t fnv1a64(const void* data, std::size_t size);

enum class WireFormat { text, binary };

/// Disk cache of computed factor sets, one pair of files per length m:
/// a word-list file plus a JSON sidecar with count, method, checksum and
/// format. Stores are atomic (write to a temp name, then rename). A lookup
/// whose checksum, count or word lengths do not match is treated as a miss
/// with a warning, never as data.
class FactorCache {
public:
    explicit FactorCache(std::filesystem::path dir, WireFormat format = WireFormat::text);

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<FactorSet> lookup(std::size_t m) const;
    void store(const FactorSet& fs) const;

    std::filesystem::path words_path(std::size_t m) const;
    std::filesystem::path sidecar_path(std::size_t m) const;

private:
    std::filesystem::path dir_;
    WireFormat format_;
};

}  // namespace rfs

#pragma once

#include <stdexcept>
#include <string>

namespace rfs {

/// Out-of-range index or window length against a concrete word/set bound.
class range_error : public std::out_of_range {
public:
    explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

/// A request that would exceed a configured enumeration/memory/branching cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric request outside the certified-exactness range of the fixed-point
/// golden-ratio arithmetic.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rfs

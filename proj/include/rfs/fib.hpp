#pragma once

#include <cstdint>

namespace rfs {

/// Exact Fibonacci numbers f_0 = 0, f_1 = 1, f_{n+1} = f_n + f_{n-1}.
///
/// Values are held in a checked 64-bit table up to n = 90 (the last index
/// safe well inside uint64_t at desk scale); asking beyond the bound raises
/// capacity_error. fib_u128 is the wide escape hatch for indices up to 184
/// when a caller genuinely needs values past the table.
class FibCache {
public:
    static constexpr int bound = 90;

    static const FibCache& instance();

    /// f_n for 0 <= n <= bound; capacity_error otherwise.
    std::uint64_t at(int n) const;

private:
    FibCache();
    std::uint64_t values_[bound + 1];
};

/// Convenience wrapper for FibCache::instance().at(n).
std::uint64_t fib(int n);

/// f_n as unsigned __int128, exact for 0 <= n <= 184.
unsigned __int128 fib_u128(int n);

/// True if k equals some f_n (0, 1, 2, 3, 5, 8, ...).
bool is_fibonacci(std::uint64_t k);

/// For k >= 4 and not a Fibonacci number, the unique n with f_{n-1} < k < f_n.
int fib_gap_index(std::uint64_t k);

}  // namespace rfs

#include "rfs/fib.hpp"

#include <stdexcept>
#include <string>

#include "rfs/errors.hpp"

namespace rfs {

FibCache::FibCache() {
    values_[0] = 0;
    values_[1] = 1;
    for (int n = 2; n <= bound; ++n) values_[n] = values_[n - 1] + values_[n - 2];
}

const FibCache& FibCache::instance() {
    static const FibCache cache;
    return cache;
}

std::uint64_t FibCache::at(int n) const {
    if (n < 0) throw std::invalid_argument("Fibonacci index must be non-negative");
    if (n > bound)
        throw capacity_error("Fibonacci index " + std::to_string(n) +
                             " exceeds the 64-bit table bound " + std::to_string(bound) +
                             "; use fib_u128 for wider exact values");
    return values_[n];
}

std::uint64_t fib(int n) { return FibCache::instance().at(n); }

unsigned __int128 fib_u128(int n) {
    if (n < 0) throw std::invalid_argument("Fibonacci index must be non-negative");
    if (n > 184)
        throw capacity_error("Fibonacci index " + std::to_string(n) +
                             " exceeds the 128-bit range (max 184)");
    unsigned __int128 a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        unsigned __int128 c = a + b;
        a = b;
        b = c;
    }
    return a;
}

bool is_fibonacci(std::uint64_t k) {
    const FibCache& c = FibCache::instance();
    for (int n = 0; n <= FibCache::bound; ++n) {
        std::uint64_t f = c.at(n);
        if (f == k) return true;
        if (f > k) return false;
    }
    return false;
}

int fib_gap_index(std::uint64_t k) {
    const FibCache& c = FibCache::instance();
    for (int n = 1; n <= FibCache::bound; ++n) {
        if (c.at(n - 1) < k && k < c.at(n)) return n;
    }
    throw std::invalid_argument("no Fibonacci gap contains " + std::to_string(k));
}

}  // namespace rfs

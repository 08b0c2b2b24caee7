#include "rfs/golden.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rfs/errors.hpp"
#include "rfs/fib.hpp"

namespace rfs {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 isqrt_u128(u128 x) {
    if (x < 2) return x;
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
    u128 max_root = (u128{1} << 64) - 1;
    if (r > max_root) r = max_root;
    while (r > 0 && r * r > x) --r;
    while (r < max_root && (r + 1) * (r + 1) <= x) ++r;
    return r;
}

u128 abs_i128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

void require_dist_range(std::uint64_t k) {
    if (k < 1 || k > dist_k_max)
        throw precision_error("k = " + std::to_string(k) +
                              " outside the certified distance range [1, 2^28]");
}

double dist_from_frac(u128 frac_q62) {
    constexpr u128 one = u128{1} << 62;
    u128 d = frac_q62 <= one - frac_q62 ? frac_q62 : one - frac_q62;
    return static_cast<double>(static_cast<std::uint64_t>(d)) * 0x1p-62;
}

double dist_times_q62(std::uint64_t k, u128 mult_q62) {
    require_dist_range(k);
    u128 v = static_cast<u128>(k) * mult_q62;
    return dist_from_frac(v & ((u128{1} << 62) - 1));
}

}  // namespace

const GoldenConstants& GoldenConstants::get() {
    static const GoldenConstants g = [] {
        GoldenConstants c;
        // floor(sqrt5 * 2^61) via one integer square root of 5 * 2^122
        u128 s61 = isqrt_u128(u128{5} << 122);
        c.sqrt5_q61 = static_cast<std::uint64_t>(s61);
        // tau * 2^62 = 2^61 + sqrt5 * 2^61; the additive integer term keeps
        // the floor exact
        c.tau_q62 = (u128{1} << 61) + s61;
        // (1/tau) * 2^62 = sqrt5 * 2^61 - 2^61
        c.inv_tau_q62 = s61 - (u128{1} << 61);
        // (1/tau^2) * 2^62 = 3 * 2^61 - sqrt5 * 2^61; sqrt5*2^61 is
        // irrational, so flooring the negated part costs one unit
        c.inv_tau2_q62 = (u128{3} << 61) - s61 - 1;
        return c;
    }();
    return g;
}

double GoldenConstants::tau() const { return (1.0 + std::sqrt(5.0)) / 2.0; }
double GoldenConstants::tau_hat() const { return (1.0 - std::sqrt(5.0)) / 2.0; }

int sign_minus_sqrt5(i128 a, i128 b) {
    if (b == 0) return a > 0 ? 1 : a < 0 ? -1 : 0;
    if (b > 0 && a <= 0) return -1;
    if (b < 0 && a >= 0) return 1;
    u128 a2 = abs_i128(a);
    a2 *= a2;
    u128 b2 = abs_i128(b);
    b2 *= b2;
    b2 *= 5;
    int s = a2 > b2 ? 1 : a2 < b2 ? -1 : 0;
    return a > 0 ? s : -s;
}

namespace {

void require_floor_range(std::uint64_t k) {
    if (k > exact_floor_k_max)
        throw precision_error("k = " + std::to_string(k) +
                              " outside the certified floor range [0, 2^40]");
}

// floor(k * (3 - sqrt5) / 2): n is the floor iff
//   sqrt5*k <= 3k - 2n   and   3k - 2(n+1) < sqrt5*k.
bool is_floor_tau2(std::uint64_t k, std::uint64_t n) {
    i128 kk = static_cast<i128>(k);
    i128 nn = static_cast<i128>(n);
    return sign_minus_sqrt5(3 * kk - 2 * nn, kk) >= 0 &&
           sign_minus_sqrt5(3 * kk - 2 * nn - 2, kk) < 0;
}

// floor(k * (sqrt5 - 1) / 2): n is the floor iff
//   k + 2n <= sqrt5*k   and   sqrt5*k < k + 2(n+1).
bool is_floor_tau(std::uint64_t k, std::uint64_t n) {
    i128 kk = static_cast<i128>(k);
    i128 nn = static_cast<i128>(n);
    return sign_minus_sqrt5(kk + 2 * nn, kk) <= 0 &&
           sign_minus_sqrt5(kk + 2 * nn + 2, kk) > 0;
}

template <typename Pred>
std::uint64_t certified_floor(std::uint64_t k, u128 mult_q62, Pred is_floor) {
    require_floor_range(k);
    if (k == 0) return 0;
    auto n0 = static_cast<std::uint64_t>((static_cast<u128>(k) * mult_q62) >> 62);
    for (std::uint64_t n = n0 > 0 ? n0 - 1 : 0; n <= n0 + 1; ++n) {
        if (is_floor(k, n)) return n;
    }
    throw std::logic_error("floor certification failed for k = " + std::to_string(k));
}

}  // namespace

std::uint64_t floor_k_over_tau2(std::uint64_t k) {
    return certified_floor(k, GoldenConstants::get().inv_tau2_q62, is_floor_tau2);
}

std::uint64_t ceil_k_over_tau2(std::uint64_t k) {
    // k/tau^2 is irrational for k >= 1, never an integer
    return k == 0 ? 0 : floor_k_over_tau2(k) + 1;
}

std::uint64_t floor_k_over_tau(std::uint64_t k) {
    return certified_floor(k, GoldenConstants::get().inv_tau_q62, is_floor_tau);
}

std::uint64_t ceil_k_over_tau(std::uint64_t k) {
    return k == 0 ? 0 : floor_k_over_tau(k) + 1;
}

std::uint64_t nearest_int_tau_times(std::uint64_t k) {
    require_floor_range(k);
    if (k == 0) return 0;
    std::uint64_t m = k + floor_k_over_tau(k);  // floor(tau * k)
    // round up iff tau*k - m >= 1/2, i.e. sqrt5*k >= 2m + 1 - k
    i128 kk = static_cast<i128>(k);
    i128 mm = static_cast<i128>(m);
    if (sign_minus_sqrt5(2 * mm + 1 - kk, kk) <= 0) return m + 1;
    return m;
}

double dist_to_int_tau(std::uint64_t k) { return dist_times_q62(k, GoldenConstants::get().tau_q62); }

double dist_to_int_inv_tau(std::uint64_t k) {
    return dist_times_q62(k, GoldenConstants::get().inv_tau_q62);
}

double dist_to_int_inv_tau2(std::uint64_t k) {
    return dist_times_q62(k, GoldenConstants::get().inv_tau2_q62);
}

int compare_dist_tau_vs_inv_tau_pow(std::uint64_t k, int m) {
    require_dist_range(k);
    if (m < 2) throw std::invalid_argument("inverse power index must be at least 2");
    std::uint64_t fm = fib(m), fm1 = fib(m + 1);
    if (fm > dist_k_max)
        throw precision_error("f_" + std::to_string(m) + " outside the certified range [1, 2^28]");
    // 2*||tau k||   = |sqrt5*k - c| with c = 2*round(tau k) - k
    // 2 / tau^m     = |sqrt5*f_m - d| with d = 2*f_{m+1} - f_m
    i128 kk = static_cast<i128>(k);
    i128 c = 2 * static_cast<i128>(nearest_int_tau_times(k)) - kk;
    i128 f = static_cast<i128>(fm);
    i128 d = 2 * static_cast<i128>(fm1) - f;
    // sign of (5k^2 + c^2 - 5f^2 - d^2) - sqrt5 * 2(ck - df)
    i128 p = 5 * kk * kk + c * c - 5 * f * f - d * d;
    i128 q = 2 * (c * kk - d * f);
    return sign_minus_sqrt5(p, q);
}

VerificationReport verify_diophantine_bound(int n_max) {
    if (n_max < 5) throw std::invalid_argument("n_max must be at least 5");
    if (fib(n_max) > dist_k_max)
        throw precision_error("f_" + std::to_string(n_max) + " outside the certified range");
    VerificationReport rep;
    rep.proposition = "golden-distance-lower-bound";
    rep.anchor = "||tau k|| > 1/tau^(n-2) for every non-Fibonacci k with f_(n-1) < k < f_n";
    rep.range = "n=5.." + std::to_string(n_max);
    rep.pass = true;
    for (int n = 5; n <= n_max; ++n) {
        for (std::uint64_t k = fib(n - 1) + 1; k < fib(n); ++k) {
            ++rep.checked;
            if (compare_dist_tau_vs_inv_tau_pow(k, n - 2) <= 0) {
                rep.pass = false;
                rep.counterexample = nlohmann::json{{"k", k}, {"n", n}};
                return rep;
            }
        }
    }
    return rep;
}

VerificationReport verify_fib_distance_identity(int n_max) {
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    if (fib(n_max) > dist_k_max)
        throw precision_error("f_" + std::to_string(n_max) + " outside the certified range");
    VerificationReport rep;
    rep.proposition = "fibonacci-distance-identity";
    rep.anchor = "||tau f_n|| = 1/tau^n";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    double tau = GoldenConstants::get().tau();
    for (int n = 2; n <= n_max; ++n) {
        ++rep.checked;
        bool exact_ok = compare_dist_tau_vs_inv_tau_pow(fib(n), n) == 0;
        double numeric = dist_to_int_tau(fib(n));
        bool numeric_ok = std::abs(numeric - std::pow(tau, -n)) < 0x1p-32;
        if (!exact_ok || !numeric_ok) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"n", n}, {"distance", numeric}};
            return rep;
        }
    }
    return rep;
}

VerificationReport verify_floor_shift_identity(int m_max) {
    if (m_max < 5) throw std::invalid_argument("m_max must be at least 5");
    VerificationReport rep;
    rep.proposition = "floor-shift-identity";
    rep.anchor = "floor((q - f_(m-1))/tau^2) = floor(q/tau^2) - f_(m-3) for f_(m-1) < q < f_m";
    rep.range = "m=5.." + std::to_string(m_max);
    rep.pass = true;
    for (int m = 5; m <= m_max; ++m) {
        for (std::uint64_t q = fib(m - 1) + 1; q < fib(m); ++q) {
            ++rep.checked;
            std::uint64_t lhs = floor_k_over_tau2(q - fib(m - 1));
            std::uint64_t rhs = floor_k_over_tau2(q) - fib(m - 3);
            if (lhs != rhs) {
                rep.pass = false;
                rep.counterexample =
                    nlohmann::json{{"m", m}, {"q", q}, {"lhs", lhs}, {"rhs", rhs}};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace rfs

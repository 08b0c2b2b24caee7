#pragma once

#include <cstdint>

#include "rfs/report.hpp"

namespace rfs {

/// Fixed-point values of the golden mean tau = (1+sqrt5)/2 and its derived
/// constants, each stored as floor(value * 2^62). All three are computed
/// from one integer square root, so each carries absolute error below 2^-62.
struct GoldenConstants {
    static constexpr int precision_bits = 62;

    std::uint64_t sqrt5_q61;          // floor(sqrt5 * 2^61)
    unsigned __int128 tau_q62;        // floor(tau * 2^62)
    unsigned __int128 inv_tau_q62;    // floor((1/tau) * 2^62) = floor((tau-1) * 2^62)
    unsigned __int128 inv_tau2_q62;   // floor((1/tau^2) * 2^62) = floor((2-tau) * 2^62)

    static const GoldenConstants& get();

    double tau() const;
    double tau_hat() const;  // the conjugate root (1-sqrt5)/2 = 1 - tau
};

/// Largest k accepted by the certified floor/ceil routines. The integer
/// certificates square 3k-scale quantities, which stay far inside 128 bits
/// up to here.
inline constexpr std::uint64_t exact_floor_k_max = std::uint64_t{1} << 40;

/// Largest k accepted by dist_to_int_* and the exact distance comparator:
/// the fixed-point product error k * 2^-62 stays below 2^-33 < 2^-32, and
/// the comparator's squared integers stay inside 128 bits.
inline constexpr std::uint64_t dist_k_max = std::uint64_t{1} << 28;

/// Sign of a - sqrt5 * b, exact, for |a|, |b| < 2^62.
int sign_minus_sqrt5(__int128 a, __int128 b);

/// floor(k / tau^2), exact: the candidate from fixed point is certified by
/// integer comparisons against the quadratic irrational (k/tau^2 is never an
/// integer for k >= 1, so the floor is unambiguous). precision_error beyond
/// exact_floor_k_max.
std::uint64_t floor_k_over_tau2(std::uint64_t k);
std::uint64_t ceil_k_over_tau2(std::uint64_t k);

/// floor(k / tau) = floor(k * (tau - 1)), exact on the same terms.
std::uint64_t floor_k_over_tau(std::uint64_t k);
std::uint64_t ceil_k_over_tau(std::uint64_t k);

/// The integer nearest to tau * k, exact (tau * k is never half-integral).
std::uint64_t nearest_int_tau_times(std::uint64_t k);

/// ||tau * k||, the distance from tau*k to the nearest integer, in [0, 1/2].
/// Certified absolute error below 2^-32 for 1 <= k <= dist_k_max;
/// precision_error outside that range.
double dist_to_int_tau(std::uint64_t k);

/// ||k / tau|| and ||k / tau^2||, computed from independently derived
/// fixed-point constants. Algebraically all three distances coincide.
double dist_to_int_inv_tau(std::uint64_t k);
double dist_to_int_inv_tau2(std::uint64_t k);

/// Exact sign of ||tau * k|| - 1/tau^m, for k <= dist_k_max, 2 <= m, and
/// f_m <= dist_k_max. Both sides are quadratic irrationals, so the
/// comparison reduces to integer sign tests; no floating point is involved.
int compare_dist_tau_vs_inv_tau_pow(std::uint64_t k, int m);

/// Exhaustively checks ||tau * k|| > 1/tau^{n-2} for every non-Fibonacci k
/// with f_{n-1} < k < f_n, for 5 <= n <= n_max. Requires n_max >= 5 and
/// f_{n_max} <= dist_k_max.
VerificationReport verify_diophantine_bound(int n_max);

/// Exhaustively checks floor((q - f_{m-1})/tau^2) = floor(q/tau^2) - f_{m-3}
/// for every 5 <= m <= m_max and f_{m-1} < q < f_m.
VerificationReport verify_floor_shift_identity(int m_max);

/// Checks ||tau * f_n|| = 1/tau^n for 2 <= n <= n_max, both exactly through
/// the integer comparator and numerically within 2^-32.
VerificationReport verify_fib_distance_identity(int n_max);

}  // namespace rfs

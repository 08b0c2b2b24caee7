#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rfs/errors.hpp"
#include "rfs/fib.hpp"
#include "rfs/golden.hpp"

using namespace rfs;

TEST_CASE("fibonacci values") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(90) == 2880067194370816120ull);
    CHECK_THROWS_AS(fib(91), capacity_error);
    CHECK(fib_u128(90) == static_cast<unsigned __int128>(fib(90)));
    CHECK(fib_u128(184) > 0);
}

TEST_CASE("fibonacci membership and gap index") {
    CHECK(is_fibonacci(0));
    CHECK(is_fibonacci(55));
    CHECK(!is_fibonacci(4));
    CHECK(!is_fibonacci(6));
    CHECK(fib_gap_index(4) == 5);
    CHECK(fib_gap_index(6) == 6);
    CHECK(fib_gap_index(7) == 6);
    CHECK_THROWS_AS(fib_gap_index(8), std::invalid_argument);  // 8 is Fibonacci
}

TEST_CASE("fibonacci agrees with the closed form in long double") {
    long double sqrt5 = std::sqrt(5.0L);
    long double tau = (1.0L + sqrt5) / 2.0L;
    long double tau_hat = (1.0L - sqrt5) / 2.0L;
    for (int n = 0; n <= 70; ++n) {
        long double binet = (std::pow(tau, n) - std::pow(tau_hat, n)) / sqrt5;
        CHECK(std::abs(binet - static_cast<long double>(fib(n))) < 0.5L);
    }
}

TEST_CASE("f_n - tau f_(n-1) = tau_hat^(n-1)") {
    long double sqrt5 = std::sqrt(5.0L);
    long double tau = (1.0L + sqrt5) / 2.0L;
    long double tau_hat = (1.0L - sqrt5) / 2.0L;
    for (int n = 1; n <= 60; ++n) {
        long double lhs = static_cast<long double>(fib(n)) - tau * static_cast<long double>(fib(n - 1));
        long double tol = 1e-18L * static_cast<long double>(fib(n - 1)) * 8.0L + 1e-12L;
        CHECK(std::abs(lhs - std::pow(tau_hat, n - 1)) < tol);
    }
}

TEST_CASE("golden constants satisfy the quadratic identities") {
    const auto& g = GoldenConstants::get();
    double tau = g.tau();
    CHECK(tau + g.tau_hat() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tau * g.tau_hat() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(tau * tau == doctest::Approx(tau + 1.0).epsilon(1e-15));
    // the fixed-point constants floor the same irrationals
    long double q62 = 0x1p62L;
    CHECK(std::abs(static_cast<long double>(g.tau_q62) / q62 - 1.6180339887498948482L) < 1e-17L);
    CHECK(std::abs(static_cast<long double>(g.inv_tau_q62) / q62 - 0.6180339887498948482L) < 1e-17L);
    CHECK(std::abs(static_cast<long double>(g.inv_tau2_q62) / q62 - 0.3819660112501051518L) < 1e-17L);
}

TEST_CASE("distance examples") {
    CHECK(dist_to_int_tau(3) == doctest::Approx(0.145898).epsilon(1e-5));   // 1/tau^4
    CHECK(dist_to_int_tau(1) == doctest::Approx(0.381966).epsilon(1e-5));   // 2 - tau
    CHECK(dist_to_int_tau(4) == doctest::Approx(0.472136).epsilon(1e-5));
    CHECK_THROWS_AS(dist_to_int_tau(0), precision_error);
    CHECK_THROWS_AS(dist_to_int_tau(dist_k_max + 1), precision_error);
}

TEST_CASE("distance identity chain against a long double oracle") {
    long double tau = (1.0L + std::sqrt(5.0L)) / 2.0L;
    auto dist_ld = [&](long double x) {
        long double f = x - std::floor(x);
        return std::min(f, 1.0L - f);
    };
    for (std::uint64_t k = 1; k <= 1'000'000; ++k) {
        double d = dist_to_int_tau(k);
        if (k % 997 == 1) {
            // spot-check the numeric value against the oracle
            CHECK(std::abs(d - static_cast<double>(dist_ld(tau * k))) < 1e-9);
        }
        CHECK(std::abs(d - dist_to_int_inv_tau(k)) < 0x1p-32);
        CHECK(std::abs(d - dist_to_int_inv_tau2(k)) < 0x1p-32);
    }
}

TEST_CASE("floor examples") {
    CHECK(floor_k_over_tau2(5) == 1);
    CHECK(floor_k_over_tau2(0) == 0);
    CHECK(floor_k_over_tau2(8) == 3);
    CHECK(ceil_k_over_tau2(8) == 4);
    CHECK(ceil_k_over_tau2(0) == 0);
}

TEST_CASE("floors at Fibonacci points") {
    // f_2n / tau^2 sits just above f_(2n-2); f_(2n-1) / tau^2 just below f_(2n-3)
    for (int n = 2; n <= 20; ++n) {
        CHECK(floor_k_over_tau2(fib(2 * n)) == fib(2 * n - 2));
        CHECK(ceil_k_over_tau2(fib(2 * n - 1)) == fib(2 * n - 3));
    }
}

TEST_CASE("dual-route floor identity, exhaustive to one million") {
    // 1/tau^2 = 2 - tau and 1/tau = tau - 1 give floor(k/tau^2) = k - ceil(k/tau)
    for (std::uint64_t k = 0; k <= 1'000'000; ++k) {
        CHECK(floor_k_over_tau2(k) == k - ceil_k_over_tau(k));
    }
}

TEST_CASE("nearest integer to tau k") {
    CHECK(nearest_int_tau_times(1) == 2);
    CHECK(nearest_int_tau_times(3) == 5);
    CHECK(nearest_int_tau_times(4) == 6);
    // round(tau f_n) = f_(n+1) because the distance is below 1/2
    for (int n = 2; n <= 40; ++n) CHECK(nearest_int_tau_times(fib(n)) == fib(n + 1));
}

TEST_CASE("exact distance comparator at Fibonacci points") {
    for (int n = 2; n <= 42; ++n) CHECK(compare_dist_tau_vs_inv_tau_pow(fib(n), n) == 0);
    // k=4 sits in (f_4, f_5): ||4 tau|| > 1/tau^3
    CHECK(compare_dist_tau_vs_inv_tau_pow(4, 3) > 0);
    CHECK(compare_dist_tau_vs_inv_tau_pow(6, 4) > 0);
}

TEST_CASE("diophantine lower bound verifier") {
    auto rep = verify_diophantine_bound(30);
    CHECK(rep.pass);
    CHECK(rep.checked > 800'000);
    CHECK_THROWS_AS(verify_diophantine_bound(4), std::invalid_argument);
}

TEST_CASE("fibonacci distance identity verifier") {
    auto rep = verify_fib_distance_identity(42);
    CHECK(rep.pass);
    CHECK(rep.checked == 41);
}

TEST_CASE("floor shift identity verifier") {
    auto rep = verify_floor_shift_identity(25);
    CHECK(rep.pass);
    // m=6, q=6 and m=7, q=9 by hand
    CHECK(floor_k_over_tau2(6 - fib(5)) == floor_k_over_tau2(6) - fib(3));
    CHECK(floor_k_over_tau2(9 - fib(6)) == floor_k_over_tau2(9) - fib(4));
}

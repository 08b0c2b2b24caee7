#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rfs/factor_language.hpp"

namespace rfs {

/// An exact non-negative rational, converted to floating point only at
/// presentation time.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Exact growth exponent of the generation-set sizes, in bits per letter:
/// log2|A_n| / f_{2n} = (f_{2n-3}-1) / f_{2n}. Nothing is enumerated.
Rational growth_rate_A_rational(int n);
Rational growth_rate_B_rational(int n);
double growth_rate_A(int n);
double growth_rate_B(int n);

enum class LogBase { two, e };

/// The closed-form entropy of the system: (1/tau^3) * log 2, which equals
/// sqrt5 - 2 in base 2 and (sqrt5 - 2) * ln 2 in base e.
double limit_constant(LogBase base);

/// |r - (sqrt5 - 2)| for an exact rational r, evaluated through the exact
/// integer (num + 2 den)^2 - 5 den^2 so that gaps far below double epsilon
/// survive. Used for the convergence sweep of the growth rates.
long double convergence_gap(const Rational& r);

/// Closed-form sandwich on log2|F(A, f_{2n})| / f_{2n}, in bits.
double sandwich_lower_bits(int n);
double sandwich_upper_bits(int n);

struct EntropySample {
    std::size_t m = 0;
    std::uint64_t count = 0;
    double estimate_bits = 0.0;
    // bounds attach only when m is a stage length f_{2n}
    std::optional<double> lower_bits;
    std::optional<double> upper_bits;
};

struct GrowthSample {
    int n = 0;
    Rational rate;
};

/// Exact factor counts with their normalized log2 estimates, the growth
/// series of both generation families, and the closed-form limit.
struct EntropyReport {
    std::vector<EntropySample> series;
    std::vector<GrowthSample> growth_A;
    std::vector<GrowthSample> growth_B;
    double limit_bits = 0.0;

    nlohmann::json to_json() const;
    /// Columns: m, count, estimate_bits, lower_bound_bits, upper_bound_bits,
    /// limit_bits. Bound cells are empty away from stage lengths.
    void write_csv(std::ostream& os) const;
};

/// Counts each requested factor length through the supplied pipeline.
EntropyReport entropy_series(const std::vector<std::size_t>& m_values, FactorPipeline& pipeline,
                             int growth_n_max = 20);

/// limit_constant(2) equals sqrt5 - 2 to 1e-12; the exact-rational growth
/// gaps |growth_rate_A(n) - (sqrt5-2)| shrink monotonically for 5 <= n <=
/// n_max and the final gap is below 1e-15.
VerificationReport verify_growth_convergence(int n_max = 40);

/// Pipeline estimates log2|F(A, f_{2n})| / f_{2n} sit inside the closed-form
/// sandwich for 2 <= n <= n_max.
VerificationReport verify_entropy_sandwich(int n_max, FactorPipeline& pipeline);

}  // namespace rfs

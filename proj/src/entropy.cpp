#include "rfs/entropy.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rfs/fib.hpp"

namespace rfs {

Rational growth_rate_A_rational(int n) {
    if (n < 2) throw std::invalid_argument("growth rate needs n >= 2");
    return {fib(2 * n - 3) - 1, fib(2 * n)};
}

Rational growth_rate_B_rational(int n) {
    if (n < 2) throw std::invalid_argument("growth rate needs n >= 2");
    return {fib(2 * n - 4) + 1, fib(2 * n - 1)};
}

double growth_rate_A(int n) { return growth_rate_A_rational(n).to_double(); }
double growth_rate_B(int n) { return growth_rate_B_rational(n).to_double(); }

double limit_constant(LogBase base) {
    double bits = std::sqrt(5.0) - 2.0;  // 1/tau^3, from tau^2 = tau + 1
    return base == LogBase::two ? bits : bits * std::log(2.0);
}

long double convergence_gap(const Rational& r) {
    using i128 = __int128;
    using u128 = unsigned __int128;
    // r - (sqrt5 - 2) = (p - sqrt5 q) / q with p = num + 2 den, q = den.
    // |p - sqrt5 q| = |p^2 - 5 q^2| / (p + sqrt5 q); the numerator is exact.
    i128 p = static_cast<i128>(r.num) + 2 * static_cast<i128>(r.den);
    i128 q = static_cast<i128>(r.den);
    i128 d = p * p - 5 * q * q;
    u128 mag = d < 0 ? static_cast<u128>(-d) : static_cast<u128>(d);
    long double hi = static_cast<long double>(static_cast<std::uint64_t>(mag >> 64));
    long double lo = static_cast<long double>(static_cast<std::uint64_t>(mag));
    long double num = hi * 0x1p64L + lo;
    long double denom = (static_cast<long double>(p) +
                         std::sqrt(5.0L) * static_cast<long double>(q)) *
                        static_cast<long double>(q);
    return num / denom;
}

double sandwich_lower_bits(int n) { return growth_rate_A(n); }

double sandwich_upper_bits(int n) {
    double f2n = static_cast<double>(fib(2 * n));
    return (static_cast<double>(fib(2 * n - 3)) + 2.0 * n) / f2n +
           (n - 1) * std::log2(5.0) / f2n;
}

EntropyReport entropy_series(const std::vector<std::size_t>& m_values, FactorPipeline& pipeline,
                             int growth_n_max) {
    EntropyReport rep;
    rep.limit_bits = limit_constant(LogBase::two);
    for (std::size_t m : m_values) {
        EntropySample s;
        s.m = m;
        s.count = pipeline.compute(m).members.size();
        s.estimate_bits = std::log2(static_cast<double>(s.count)) / static_cast<double>(m);
        for (int n = 2; fib(2 * n) <= m; ++n) {
            if (fib(2 * n) == m) {
                s.lower_bits = sandwich_lower_bits(n);
                s.upper_bits = sandwich_upper_bits(n);
            }
        }
        rep.series.push_back(s);
    }
    for (int n = 2; n <= growth_n_max; ++n) {
        rep.growth_A.push_back({n, growth_rate_A_rational(n)});
        rep.growth_B.push_back({n, growth_rate_B_rational(n)});
    }
    return rep;
}

VerificationReport verify_growth_convergence(int n_max) {
    VerificationReport rep;
    rep.proposition = "growth-convergence";
    rep.anchor = "the exact growth rates of the generation sets approach sqrt5 - 2";
    rep.range = "n=5.." + std::to_string(n_max);
    rep.pass = true;
    if (std::abs(limit_constant(LogBase::two) - (std::sqrt(5.0) - 2.0)) > 1e-12) {
        rep.pass = false;
        rep.counterexample = nlohmann::json{{"what", "limit constant"}};
        return rep;
    }
    ++rep.checked;
    long double prev = convergence_gap(growth_rate_A_rational(5));
    for (int n = 6; n <= n_max; ++n) {
        long double gap = convergence_gap(growth_rate_A_rational(n));
        ++rep.checked;
        if (gap >= prev) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"n", n}, {"gap", static_cast<double>(gap)}};
            return rep;
        }
        prev = gap;
    }
    if (convergence_gap(growth_rate_A_rational(n_max)) >= 1e-15L) {
        rep.pass = false;
        rep.counterexample = nlohmann::json{
            {"n", n_max},
            {"gap", static_cast<double>(convergence_gap(growth_rate_A_rational(n_max)))}};
    }
    return rep;
}

VerificationReport verify_entropy_sandwich(int n_max, FactorPipeline& pipeline) {
    VerificationReport rep;
    rep.proposition = "entropy-sandwich";
    rep.anchor = "normalized log2 factor counts sit between the closed-form growth bounds";
    rep.range = "n=2.." + std::to_string(n_max);
    rep.pass = true;
    nlohmann::json details = nlohmann::json::array();
    for (int n = 2; n <= n_max; ++n) {
        std::size_t m = fib(2 * n);
        std::uint64_t count = pipeline.compute(m).members.size();
        double est = std::log2(static_cast<double>(count)) / static_cast<double>(m);
        bool ok = sandwich_lower_bits(n) <= est && est <= sandwich_upper_bits(n);
        ++rep.checked;
        details.push_back(
            {{"n", n}, {"m", m}, {"estimate_bits", est}, {"status", ok ? "pass" : "fail"}});
        if (!ok) {
            rep.pass = false;
            rep.counterexample = nlohmann::json{{"n", n}, {"estimate_bits", est}};
        }
    }
    rep.details = std::move(details);
    return rep;
}

nlohmann::json EntropyReport::to_json() const {
    nlohmann::json j;
    j["limit_bits"] = limit_bits;
    j["series"] = nlohmann::json::array();
    for (const auto& s : series) {
        nlohmann::json row{{"m", s.m}, {"count", s.count}, {"estimate_bits", s.estimate_bits}};
        if (s.lower_bits) row["lower_bound_bits"] = *s.lower_bits;
        if (s.upper_bits) row["upper_bound_bits"] = *s.upper_bits;
        j["series"].push_back(row);
    }
    auto growth_json = [](const std::vector<GrowthSample>& g) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : g)
            arr.push_back({{"n", s.n},
                           {"num", s.rate.num},
                           {"den", s.rate.den},
                           {"bits", s.rate.to_double()}});
        return arr;
    };
    j["growth_A"] = growth_json(growth_A);
    j["growth_B"] = growth_json(growth_B);
    return j;
}

void EntropyReport::write_csv(std::ostream& os) const {
    os << "m,count,estimate_bits,lower_bound_bits,upper_bound_bits,limit_bits\n";
    os.precision(10);
    for (const auto& s : series) {
        os << s.m << ',' << s.count << ',' << s.estimate_bits << ',';
        if (s.lower_bits) os << *s.lower_bits;
        os << ',';
        if (s.upper_bits) os << *s.upper_bits;
        os << ',' << limit_bits << '\n';
    }
}

}  // namespace rfs

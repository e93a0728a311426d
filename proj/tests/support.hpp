#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wsinterp/spectral_weights.hpp"
#include "wsinterp/testsignals.hpp"

namespace testing {

// Small hand-rolled generator layer for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return integer(0, 1) == 1; }

    std::vector<double> reals(std::size_t n, double lo, double hi)
    {
        std::vector<double> v(n);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

    // Symmetric nonnegative coefficients, so G > 0 is guaranteed.
    wsinterp::WeightSpec spec(double B, int K, int M)
    {
        std::vector<double> d(2 * M + 1);
        for (int m = 0; m <= M; ++m) d[M + m] = d[M - m] = uniform(0.05, 2.0);
        return wsinterp::WeightSpec(B, K, M, std::move(d), uniform(0.0, 0.1));
    }

    wsinterp::WeightSpec spec(double B)
    {
        return spec(B, integer(0, 5), integer(0, 12));
    }

private:
    std::mt19937_64 engine_;
};

struct NamedSpec {
    std::string name;
    wsinterp::WeightSpec spec;
};

// Specs used by the corpus-wide checks.
inline std::vector<NamedSpec> corpus(double B)
{
    Gen g(20240611);
    return {
        {"uniform", wsinterp::WeightSpec::uniform(B)},
        {"lowpass", wsinterp::example1_weights(B)},
        {"highpass", wsinterp::example2_weights(B)},
        {"K0M0", wsinterp::WeightSpec(B, 0, 0, {1.0}, 0.0)},
        {"random_K1_M4", g.spec(B, 1, 4)},
        {"random_K3_M11", g.spec(B, 3, 11)},
        {"random_K5_M3", g.spec(B, 5, 3)},
    };
}

inline std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

}  // namespace testing

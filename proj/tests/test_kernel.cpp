#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "wsinterp/errors.hpp"
#include "wsinterp/kernel.hpp"
#include "wsinterp/sinc.hpp"

using namespace wsinterp;
using std::numbers::pi;

TEST_SUITE("kernel")
{
    TEST_CASE("sinc")
    {
        CHECK(sinc(0.0) == 1.0);
        for (int k = 1; k <= 50; ++k) {
            CHECK(sinc(k) == 0.0);
            CHECK(sinc(-k) == 0.0);
        }
        CHECK(sinc(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-15));
        CHECK(sinc(1e-10) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(sinc(0.37) == sinc(-0.37));
        CHECK(sinc(1e-7) == doctest::Approx(std::sin(pi * 1e-7) / (pi * 1e-7)).epsilon(1e-15));
    }

    TEST_CASE("shannon kernel")
    {
        CHECK(shannon_kernel(2.0, 0.0) == 1.0);
        CHECK(shannon_kernel(2.0, 6.0) == 0.0);
        CHECK(shannon_kernel(1.0, 0.5) == doctest::Approx(2.0 / pi));
        CHECK_THROWS_AS(shannon_kernel(0.0, 1.0), std::invalid_argument);
    }

    TEST_CASE("uniform kernel at the Nyquist bandwidth is sinc(t/T)/T")
    {
        const double T = 0.4;
        const Kernel k = Kernel::uniform(1.0 / (2.0 * T));
        CHECK(k.is_uniform());
        for (double t : testing::linspace(-5.0, 5.0, 201))
            CHECK(k(t) == doctest::Approx(sinc(t / T) / T).epsilon(1e-14));
    }

    TEST_CASE("psi(0) from the coefficients")
    {
        testing::Gen g(11);
        for (int trial = 0; trial < 20; ++trial) {
            const auto s = g.spec(g.uniform(0.3, 3.0));
            double sum = 0.0;
            for (int m = -s.half_count(); m <= s.half_count(); ++m) sum += s.coeff(m);
            const double expected = s.spacing() / pi * sum + 2.0 * s.floor_alpha() * s.bandwidth();
            const Kernel k(s);
            CHECK(k.at_zero() == doctest::Approx(expected).epsilon(1e-13));
            CHECK(k.at_zero() > 0.0);
        }
    }

    TEST_CASE("the weighted construction with W = 1 agrees with the uniform kernel")
    {
        const Kernel flat(WeightSpec(1.0, 0, 0, {1.0}, 0.0));
        const Kernel ref = Kernel::uniform(1.0);
        CHECK_FALSE(flat.is_uniform());
        for (double t : testing::linspace(-4.0, 4.0, 81)) CHECK(flat(t) == doctest::Approx(ref(t)).epsilon(1e-13));
    }

    TEST_CASE("closed form matches quadrature on random specs")
    {
        testing::Gen g(12);
        for (int trial = 0; trial < 12; ++trial) {
            const auto s = trial == 0 ? g.spec(1.0, 3, 11) : g.spec(g.uniform(0.5, 2.0));
            const Kernel k(s);
            const double tol = std::max(1e-8, 1e-6 * std::abs(k.at_zero()));
            for (int i = 0; i < 50; ++i) {
                const double t = g.uniform(-10.0, 10.0);
                CHECK(std::abs(psi_closed_form(k, t) - psi_quadrature(k, t)) <= tol);
            }
        }
    }

    TEST_CASE("quadrature oracle point values")
    {
        const double B = 1.25;
        const Kernel u = Kernel::uniform(B);
        CHECK(psi_quadrature(u, 0.0) == doctest::Approx(2.0 * B).epsilon(1e-9));
        CHECK(std::abs(psi_quadrature(u, 1.0 / (2.0 * B))) < 1e-9);

        const Kernel floor_only(WeightSpec(B, 3, 2, std::vector<double>(5, 0.0), 2.0));
        for (double t : {0.0, 0.13, 0.9, 3.7})
            CHECK(std::abs(psi_quadrature(floor_only, t) - 2.0 * 2.0 * B * sinc(2.0 * B * t)) < 1e-8);
    }

    TEST_CASE("psi is even")
    {
        testing::Gen g(13);
        for (const auto& [name, spec] : testing::corpus(1.0)) {
            const Kernel k(spec);
            for (int i = 0; i < 50; ++i) {
                const double t = g.uniform(0.0, 30.0);
                CHECK(k(t) == k(-t));
            }
        }
    }

    TEST_CASE("quadrature error paths")
    {
        const Kernel k(example1_weights(1.0));
        CHECK_THROWS_AS(psi_quadrature(k, 1.0, 0.0), std::invalid_argument);
        // a jump that is not declared as a breakpoint cannot be resolved
        auto step = [](double w) { return w < 1.0 ? 1.0 : 2.0; };
        const std::vector<double> knots{0.0, 2.0 * pi};
        CHECK_THROWS_AS(inverse_fourier_even(step, knots, 0.0, 1e-12), QuadratureError);
        try {
            inverse_fourier_even(step, knots, 0.0, 1e-12);
        } catch (const QuadratureError& e) {
            CHECK(e.error_bound() > 0.0);
            CHECK(std::isfinite(e.estimate()));
        }
    }
}

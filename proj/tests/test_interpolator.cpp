#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "wsinterp/errors.hpp"
#include "wsinterp/interpolator.hpp"
#include "wsinterp/quadrature.hpp"
#include "wsinterp/sinc.hpp"

using namespace wsinterp;
using std::numbers::pi;

namespace {

SampleSet random_samples(testing::Gen& g, double T, int N)
{
    const auto v = g.reals(2 * N + 1, -1.0, 1.0);
    return SampleSet::real(T, N, v);
}

double max_abs(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("interpolator")
{
    TEST_CASE("sample set")
    {
        const std::vector<double> v{1.0, -2.0, 3.0};
        const auto s = SampleSet::real(0.5, 1, v);
        CHECK(s.size() == 3);
        CHECK(s.at(-1) == Complex(1.0));
        CHECK(s.at(1) == Complex(3.0));
        CHECK(s.node(-1) == -0.5);
        CHECK(s.max_abs() == 3.0);
        CHECK_THROWS_AS(s.at(2), std::out_of_range);
        CHECK_THROWS_AS(SampleSet(0.0, 1, {1, 2, 3}), std::invalid_argument);
        CHECK_THROWS_AS(SampleSet(1.0, -1, {}), std::invalid_argument);
        CHECK_THROWS_AS(SampleSet(1.0, 1, {1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(SampleSet(1.0, 0, {Complex(NAN, 0.0)}), std::invalid_argument);
    }

    TEST_CASE("uniform kernel at Nyquist gives R = I / T")
    {
        const double T = 0.25;
        const auto gram = build_gram(Kernel::uniform(1.0 / (2.0 * T)), T, 6);
        const Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(13, 13) / T;
        CHECK((gram.dense() - expected).cwiseAbs().maxCoeff() < 1e-13);
        CHECK(gram.condition_estimate() == doctest::Approx(1.0));
    }

    TEST_CASE("Gram is symmetric Toeplitz")
    {
        testing::Gen g(21);
        const auto gram = build_gram(Kernel(g.spec(1.0, 3, 11)), 0.6, 7);
        for (int m = -7; m < 7; ++m) {
            for (int n = -7; n < 7; ++n) {
                CHECK(gram.entry(m, n) == gram.entry(m + 1, n + 1));
                CHECK(gram.entry(m, n) == gram.entry(n, m));
            }
        }
        CHECK(gram.first_row().size() == 15);
        CHECK(gram.first_row()[3] == gram.entry(0, 3));
        CHECK_THROWS_AS(gram.entry(8, 0), std::out_of_range);
    }

    TEST_CASE("conditioning grows as T shrinks below Nyquist spacing")
    {
        for (const auto& spec : {example1_weights(1.0), example2_weights(1.0)}) {
            double last = 0.0;
            for (double f : {0.9, 0.7, 0.5}) {
                const auto gram = build_gram(Kernel(spec), f / 2.0, 10);
                CHECK(gram.condition_estimate() > last);
                last = gram.condition_estimate();
            }
        }
    }

    TEST_CASE("singular systems surface the condition estimate")
    {
        try {
            build_gram(Kernel::uniform(1.0), 0.02, 20);
            FAIL("expected NotPositiveDefinite");
        } catch (const NotPositiveDefinite& e) {
            CHECK(e.condition_estimate() > kSingularConditionLimit);
        }
        // a ridge restores solvability
        CHECK_NOTHROW(build_gram(Kernel::uniform(1.0), 0.02, 20, 1e-3));
    }

    TEST_CASE("build and solve argument errors")
    {
        const Kernel k = Kernel::uniform(1.0);
        CHECK_THROWS_AS(build_gram(k, 0.0, 3), std::invalid_argument);
        CHECK_THROWS_AS(build_gram(k, 0.5, -1), std::invalid_argument);
        CHECK_THROWS_AS(build_gram(k, 0.5, 3, -1.0), std::invalid_argument);
        CHECK_THROWS_AS(GramMatrix::build(KernelFunction{}, 0.5, 3), std::invalid_argument);
        const auto gram = build_gram(k, 0.5, 3);
        const std::vector<double> v(5, 1.0);
        CHECK_THROWS_AS(solve(gram, SampleSet::real(0.5, 2, v), 0.0), std::invalid_argument);
        const std::vector<double> w(7, 1.0);
        CHECK_THROWS_AS(solve(gram, SampleSet::real(0.5, 3, w), -1.0), std::invalid_argument);
    }

    TEST_CASE("diagonal solves at Nyquist")
    {
        const double T = 0.5;
        testing::Gen g(22);
        const auto samples = random_samples(g, T, 5);
        const auto gram = build_gram(Kernel::uniform(1.0), T, 5);
        const auto c = solve(gram, samples);
        const auto cr = solve(gram, samples, 0.3);
        CHECK(cr.ridge() == 0.3);
        for (int n = -5; n <= 5; ++n) {
            CHECK(std::abs(c.coeff(n) - T * samples.at(n)) < 1e-14);
            CHECK(std::abs(cr.coeff(n) - samples.at(n) / (1.0 / T + 0.3)) < 1e-14);
        }
    }

    TEST_CASE("solve residual on random specs")
    {
        testing::Gen g(23);
        for (int trial = 0; trial < 20; ++trial) {
            const auto spec = g.spec(1.0);
            const double T = g.uniform(0.5, 1.5);
            const int N = g.integer(0, 15);
            const double ridge = g.coin() ? 0.0 : g.uniform(0.0, 0.1);
            const auto samples = random_samples(g, T, N);
            const auto interp = solve(build_gram(Kernel(spec), T, N), samples, ridge);
            Eigen::VectorXd c(2 * N + 1), x(2 * N + 1);
            for (int n = -N; n <= N; ++n) c[n + N] = interp.coeff(n).real(), x[n + N] = samples.at(n).real();
            const Eigen::VectorXd r = interp.gram().dense() * c + ridge * c - x;
            CHECK(max_abs(r) <= 1e-9 * max_abs(x));
        }
    }

    TEST_CASE("node exactness across the corpus")
    {
        testing::Gen g(24);
        for (const auto& [name, spec] : testing::corpus(1.0)) {
            CAPTURE(name);
            for (double T : {0.5, 2.0 / 3.0, 1.0}) {
                const auto samples = random_samples(g, T, 10);
                const auto interp = solve(build_gram(Kernel(spec), T, 10), samples);
                for (int n = -10; n <= 10; ++n)
                    CHECK(std::abs(interp(n * T) - samples.at(n)) <= 1e-9 * (1.0 + samples.max_abs()));
            }
        }
    }

    TEST_CASE("single sample")
    {
        const Kernel k(example1_weights(1.0));
        const std::vector<double> v{1.7};
        const auto interp = solve(build_gram(k, 1.0, 0), SampleSet::real(1.0, 0, v));
        for (double t : {-3.0, -0.4, 0.0, 0.8, 5.0})
            CHECK(interp(t).real() == doctest::Approx(1.7 * k(t) / k.at_zero()).epsilon(1e-13));
    }

    TEST_CASE("uniform weight at Nyquist is truncated Shannon")
    {
        const double T = 0.5;
        testing::Gen g(25);
        const auto samples = random_samples(g, T, 10);
        const auto interp = solve(build_gram(Kernel::uniform(1.0), T, 10), samples);
        for (double t : testing::linspace(-8.0, 8.0, 401))
            CHECK(std::abs(evaluate(interp, t) - truncated_shannon(samples, t)) < 1e-8);
    }

    TEST_CASE("complex samples solve as two real systems")
    {
        testing::Gen g(26);
        const double T = 1.0;
        const int N = 6;
        const auto re = g.reals(13, -1, 1), im = g.reals(13, -1, 1);
        std::vector<Complex> z;
        for (int i = 0; i < 13; ++i) z.emplace_back(re[i], im[i]);
        const auto gram = build_gram(Kernel(example2_weights(1.0)), T, N);
        const auto iz = solve(gram, SampleSet(T, N, z));
        const auto ir = solve(gram, SampleSet::real(T, N, re));
        const auto ii = solve(gram, SampleSet::real(T, N, im));
        for (double t : {-2.3, 0.1, 4.4}) {
            CHECK(std::abs(iz(t) - (ir(t) + Complex(0, 1) * ii(t))) < 1e-12);
        }
    }

    TEST_CASE("linearity")
    {
        testing::Gen g(27);
        const double T = 0.8;
        const auto gram = build_gram(Kernel(g.spec(1.0, 3, 11)), T, 8);
        const auto x = g.reals(17, -1, 1), y = g.reals(17, -1, 1);
        std::vector<double> combo(17);
        for (int i = 0; i < 17; ++i) combo[i] = 2.5 * x[i] - 0.7 * y[i];
        const auto ix = solve(gram, SampleSet::real(T, 8, x));
        const auto iy = solve(gram, SampleSet::real(T, 8, y));
        const auto ic = solve(gram, SampleSet::real(T, 8, combo));
        for (double t : testing::linspace(-7, 7, 57)) CHECK(std::abs(ic(t) - (2.5 * ix(t) - 0.7 * iy(t))) < 1e-12);
    }

    TEST_CASE("weighted norm matches the spectral integral")
    {
        testing::Gen g(28);
        const auto spec = g.spec(1.0, 3, 5);
        const double T = 0.9;
        const int N = 3;
        const auto interp = solve(build_gram(Kernel(spec), T, N), random_samples(g, T, N));
        // X(omega) = G(omega) sum_n c_n e^{-j omega n T}, norm^2 = (1/2pi) int |X|^2 W
        auto integrand = [&](double omega) {
            Complex s = 0.0;
            for (int n = -N; n <= N; ++n) s += interp.coeff(n) * std::polar(1.0, -omega * n * T);
            return std::norm(s) * spec.inverse_weight(std::min(omega, spec.band_edge() * (1 - 1e-15)));
        };
        const auto knots = spec.positive_breakpoints();
        const double norm2 = 2.0 * adaptive_simpson_piecewise(integrand, knots, 1e-12).value / (2.0 * pi);
        CHECK(interp.norm_squared() == doctest::Approx(norm2).epsilon(1e-8));
        CHECK(interp.norm_squared() >= 0.0);
    }

    TEST_CASE("ridge shrinks the coefficients")
    {
        testing::Gen g(29);
        const double T = 1.0;
        const auto samples = random_samples(g, T, 10);
        const auto gram = build_gram(Kernel(example1_weights(1.0)), T, 10);
        double last_norm = INFINITY, last_res = -1.0;
        for (double s2 : {0.0, 1e-4, 1e-2, 1.0}) {
            const auto interp = solve(gram, samples, s2);
            double norm = 0.0, res = 0.0;
            for (int n = -10; n <= 10; ++n) {
                norm += std::norm(interp.coeff(n));
                res = std::max(res, std::abs(interp(n * T) - samples.at(n)));
            }
            CHECK(std::sqrt(norm) <= last_norm);
            CHECK(res >= last_res);
            last_norm = std::sqrt(norm);
            last_res = res;
        }
    }

    TEST_CASE("with_ridge refactors")
    {
        const auto gram = build_gram(Kernel(example1_weights(1.0)), 1.0, 4);
        const auto r = gram.with_ridge(0.5);
        CHECK(r.ridge() == 0.5);
        CHECK(r.dense() == gram.dense());
        CHECK(r.condition_estimate() < gram.condition_estimate());
    }

    TEST_CASE("cardinal Kronecker property")
    {
        for (const auto& spec : {example1_weights(1.0), example2_weights(1.0)}) {
            const double T = 1.0;
            const CardinalBasis basis(build_gram(Kernel(spec), T, 10));
            for (int n = -10; n <= 10; ++n)
                for (int m = -10; m <= 10; ++m)
                    CHECK(std::abs(basis.value(n, m * T) - (n == m ? 1.0 : 0.0)) < 1e-8);
            CHECK(cardinal(basis.gram(), 3, 3 * T) == doctest::Approx(1.0));
            CHECK_THROWS_AS(basis.value(11, 0.0), std::out_of_range);
            CHECK_THROWS_AS(basis.p(0, -11), std::out_of_range);
        }
    }

    TEST_CASE("centre row of P reproduces delta")
    {
        const double T = 2.0 / 3.0;
        const Kernel k(example2_weights(1.0));
        const CardinalBasis basis(build_gram(k, T, 10));
        for (int kk = -10; kk <= 10; ++kk) {
            double s = 0.0;
            for (int m = -10; m <= 10; ++m) s += basis.p(0, m) * k((kk - m) * T);
            CHECK(std::abs(s - (kk == 0 ? 1.0 : 0.0)) < 1e-9);
        }
    }

    TEST_CASE("uniform-Nyquist cardinals are shifted sincs")
    {
        const double T = 0.5;
        const CardinalBasis basis(build_gram(Kernel::uniform(1.0), T, 8));
        for (double t : testing::linspace(-6, 6, 97))
            for (int n = -8; n <= 8; ++n) CHECK(std::abs(basis.value(n, t) - sinc(t / T - n)) < 1e-13);
    }

    TEST_CASE("interpolant equals the cardinal expansion")
    {
        testing::Gen g(30);
        const double T = 1.0;
        const auto samples = random_samples(g, T, 10);
        const auto gram = build_gram(Kernel(example1_weights(1.0)), T, 10);
        const CardinalBasis basis(gram);
        const auto interp = solve(gram, samples);
        for (int i = 0; i < 50; ++i) {
            const double t = g.uniform(-12, 12);
            const Eigen::VectorXd u = basis.values(t);
            Complex s = 0.0;
            for (int n = -10; n <= 10; ++n) s += samples.at(n) * u[n + 10];
            CHECK(std::abs(s - interp(t)) < 1e-10);
        }
    }

    TEST_CASE("centre cardinal approaches sinc at Nyquist as N grows")
    {
        for (const auto& spec : {example1_weights(1.0), example2_weights(1.0)}) {
            double last = INFINITY;
            for (int N : {5, 10, 20, 40}) {
                const double T = 0.5;
                const CardinalBasis basis(build_gram(Kernel(spec), T, N));
                double dev = 0.0;
                for (double t : testing::linspace(-2 * T, 2 * T, 201))
                    dev = std::max(dev, std::abs(basis.value(0, t) - sinc(t / T)));
                CHECK(dev < last);
                last = dev;
            }
        }
    }

    TEST_CASE("shift-invariant approximation")
    {
        testing::Gen g(31);
        {
            const double T = 0.5;
            const auto samples = random_samples(g, T, 10);
            const auto gram = build_gram(Kernel::uniform(1.0), T, 10);
            const CardinalBasis basis(gram);
            const auto interp = solve(gram, samples);
            for (double t : testing::linspace(-5, 5, 101))
                CHECK(std::abs(shift_invariant_approx(basis, samples, t) - interp(t)) < 1e-12);
        }
        {
            // measured 2.2e-5 for the low-pass example at half the Nyquist rate
            const double T = 1.0;
            const auto samples = sample_signal(AnalyticSignal::example1(1.0), T, 10);
            const auto gram = build_gram(Kernel(example1_weights(1.0)), T, 10);
            const CardinalBasis basis(gram);
            const auto interp = solve(gram, samples);
            double dev = 0.0;
            for (double t : testing::linspace(-5 * T, 5 * T, 401))
                dev = std::max(dev, std::abs(shift_invariant_approx(basis, samples, t) - interp(t)));
            MESSAGE("shift-invariant deviation: " << dev);
            CHECK(dev < 1e-4);
        }
    }

    TEST_CASE("truncated Shannon")
    {
        const double T = 0.7;
        const std::vector<double> ones(21, 1.0);
        const auto s = SampleSet::real(T, 10, ones);
        double expected = 0.0;
        for (int n = -10; n <= 10; ++n) expected += sinc(0.5 - n);
        CHECK(truncated_shannon(s, T / 2).real() == doctest::Approx(expected).epsilon(1e-14));
        testing::Gen g(32);
        const auto r = random_samples(g, T, 10);
        for (int n = -10; n <= 10; ++n) CHECK(std::abs(truncated_shannon(r, n * T) - r.at(n)) < 1e-14);
    }

    TEST_CASE("Levinson recursion agrees with the dense solve")
    {
        testing::Gen g(33);
        for (int trial = 0; trial < 10; ++trial) {
            const int N = g.integer(0, 20);
            const auto gram = build_gram(Kernel(g.spec(1.0)), g.uniform(0.5, 1.5), N);
            const auto rhs = g.reals(2 * N + 1, -1, 1);
            const auto x = toeplitz_solve(gram.first_row(), rhs);
            const Eigen::VectorXd dense =
                gram.solve(Eigen::MatrixXd(Eigen::Map<const Eigen::VectorXd>(rhs.data(), 2 * N + 1)));
            for (int i = 0; i <= 2 * N; ++i) CHECK(x[i] == doctest::Approx(dense[i]).epsilon(1e-9));
        }
        const std::vector<double> row{1.0, 0.5}, short_rhs{1.0};
        CHECK_THROWS_AS(toeplitz_solve(row, short_rhs), std::invalid_argument);
        const std::vector<double> bad{0.0, 1.0}, rhs2{1.0, 1.0};
        CHECK_THROWS_AS(toeplitz_solve(bad, rhs2), NotPositiveDefinite);
        const std::vector<double> indefinite{1.0, 2.0}, rhs3{1.0, 1.0};
        CHECK_THROWS_AS(toeplitz_solve(indefinite, rhs3), NotPositiveDefinite);
    }
}

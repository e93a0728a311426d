#include "wsinterp/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wsinterp/errors.hpp"
#include "wsinterp/quadrature.hpp"
#include "wsinterp/sinc.hpp"

namespace wsinterp {

namespace {
constexpr double kPi = std::numbers::pi;
}

Kernel::Kernel(WeightSpec spec) : Kernel(std::move(spec), false) {}

Kernel::Kernel(WeightSpec spec, bool uniform)
    : spec_(std::move(spec)), uniform_(uniform), psi0_(0.0)
{
    psi0_ = (*this)(0.0);
}

Kernel Kernel::uniform(double bandwidth_hz)
{
    return Kernel(WeightSpec::uniform(bandwidth_hz), true);
}

double Kernel::operator()(double t) const
{
    const double B = spec_.bandwidth();
    if (uniform_) return 2.0 * B * sinc(2.0 * B * t);

    const double A = spec_.spacing();
    const int M = spec_.half_count();
    const auto d = spec_.coeffs();
    double series = d[M];
    for (int m = 1; m <= M; ++m) series += 2.0 * d[M + m] * std::cos(2.0 * A * m * t);
    const double envelope = (A / kPi) * std::pow(sinc(A * t / kPi), spec_.degree() + 1);
    return envelope * series + 2.0 * spec_.floor_alpha() * B * sinc(2.0 * B * t);
}

double psi_closed_form(const Kernel& kernel, double t) { return kernel(t); }

double inverse_fourier_even(const std::function<double(double)>& g,
                            std::span<const double> breakpoints, double t, double tolerance)
{
    if (breakpoints.size() < 2) throw std::invalid_argument("inverse_fourier_even: need two breakpoints");
    // Knots recomputed from omega can land an ulp off the true jump, so each
    // piece only samples g strictly inside its own interval.
    const double total = breakpoints.back() - breakpoints.front();
    QuadratureResult res;
    res.converged = true;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i], b = breakpoints[i + 1];
        if (b < a) throw std::invalid_argument("inverse_fourier_even: breakpoints must be sorted");
        if (b == a) continue;
        const double nudge = 1e-12 * (b - a);
        auto f = [&](double omega) { return std::cos(omega * t) * g(std::clamp(omega, a + nudge, b - nudge)); };
        // at most about a radian of oscillation per starting panel, otherwise
        // the first Simpson estimates can alias and stop early
        const int parts = std::max(1, static_cast<int>(std::ceil(std::abs(t) * (b - a))));
        for (int j = 0; j < parts; ++j) {
            const double lo = a + (b - a) * j / parts;
            const double hi = j + 1 == parts ? b : a + (b - a) * (j + 1) / parts;
            const auto piece = adaptive_simpson(f, lo, hi, kPi * tolerance * (hi - lo) / total);
            res.value += piece.value;
            res.error_estimate += piece.error_estimate;
            res.evaluations += piece.evaluations;
            res.converged = res.converged && piece.converged;
        }
    }
    // The 1/pi factor folds the even half-range and the 1/(2 pi) normalization.
    const double value = res.value / kPi;
    if (!res.converged) {
        std::ostringstream msg;
        msg << "quadrature did not converge at t = " << t << " (estimate " << value
            << ", error bound " << res.error_estimate / kPi << ")";
        throw QuadratureError(msg.str(), value, res.error_estimate / kPi);
    }
    return value;
}

double psi_quadrature(const Kernel& kernel, double t, double tolerance)
{
    if (!(tolerance > 0.0)) throw std::invalid_argument("psi_quadrature: tolerance must be positive");
    const WeightSpec& spec = kernel.spec();
    const auto knots = spec.positive_breakpoints();
    return inverse_fourier_even([&](double omega) { return spec.inverse_weight(omega); }, knots, t,
                                tolerance);
}

double shannon_kernel(double T, double t)
{
    if (!(T > 0.0)) throw std::invalid_argument("shannon_kernel: T must be positive");
    return sinc(t / T);
}

}  // namespace wsinterp

#pragma once

#include <cmath>
#include <numbers>

namespace wsinterp {

/// Normalized sinc, sin(pi x)/(pi x).
///
/// The argument is reduced as x = n + f with n the nearest integer so that
/// sinc is exactly zero at nonzero integers and accurate for large |x|.
inline double sinc(double x) noexcept
{
    constexpr double pi = std::numbers::pi;
    if (std::abs(x) < 1e-8) {
        const double px = pi * x;
        return 1.0 - px * px / 6.0;
    }
    const double n = std::nearbyint(x);
    const double f = x - n;
    if (f == 0.0) return 0.0;
    double s = std::sin(pi * f);
    if (std::fmod(n, 2.0) != 0.0) s = -s;
    return s / (pi * x);
}

}  // namespace wsinterp

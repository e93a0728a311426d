#pragma once

#include <functional>

#include "wsinterp/spectral_weights.hpp"

namespace wsinterp {

inline constexpr double kDefaultQuadratureTol = 1e-9;

/// Reproducing kernel psi(t), the inverse Fourier transform of 1/W over the
/// band. Real and even because the weight coefficients are symmetric.
class Kernel {
public:
    explicit Kernel(WeightSpec spec);

    /// W = 1 over bandwidth B: psi(t) = 2B sinc(2Bt).
    static Kernel uniform(double bandwidth_hz);

    const WeightSpec& spec() const noexcept { return spec_; }
    bool is_uniform() const noexcept { return uniform_; }
    double bandwidth() const noexcept { return spec_.bandwidth(); }

    /// Closed-form psi(t).
    double operator()(double t) const;
    double at_zero() const noexcept { return psi0_; }

private:
    Kernel(WeightSpec spec, bool uniform);

    WeightSpec spec_;
    bool uniform_;
    double psi0_;
};

/// Type-erased stationary kernel k(tau) used by the Gram machinery; both the
/// weighted kernel psi and a process autocorrelation R fit here.
using KernelFunction = std::function<double(double)>;

///   psi(t) = (A/pi) sinc(A t/pi)^(K+1) (d_0 + 2 sum_{m>=1} d_m cos(2 A m t))
///            + 2 alpha B sinc(2 B t)
double psi_closed_form(const Kernel& kernel, double t);

/// (1/pi) int_0^{2 pi B} cos(omega t) G(omega) d omega by composite adaptive
/// Simpson split at the spline knots. Throws QuadratureError when the depth
/// cap is reached before the tolerance is met.
double psi_quadrature(const Kernel& kernel, double t, double tolerance = kDefaultQuadratureTol);

/// Same integral for an arbitrary even inverse weight g on [0, 2 pi B].
/// Breakpoints must start at 0 and end at 2 pi B.
double inverse_fourier_even(const std::function<double(double)>& g,
                            std::span<const double> breakpoints, double t,
                            double tolerance = kDefaultQuadratureTol);

/// sinc(t/T), the truncated-Shannon building block.
double shannon_kernel(double T, double t);

}  // namespace wsinterp

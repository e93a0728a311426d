#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsinterp/interpolator.hpp"

namespace wsinterp {

/// Closed-form bandlimited test signals.
///  - LowPass:  sinc^2(B t) + sinc^2(B t / 20)
///  - HighPass: sinc^2(B t) + sinc^2(B t / 20) cos(1.7 pi B t)
///  - Mixture:  sum_k a_k psi(t - tau_k) for a given kernel
class AnalyticSignal {
public:
    enum class Kind { LowPass, HighPass, Mixture };

    static AnalyticSignal example1(double bandwidth_hz);
    static AnalyticSignal example2(double bandwidth_hz);
    static AnalyticSignal mixture(Kernel kernel, std::vector<double> locations,
                                  std::vector<double> amplitudes);
    /// "example1" or "example2".
    static AnalyticSignal by_name(const std::string& name, double bandwidth_hz);

    Kind kind() const noexcept { return kind_; }
    double bandwidth() const noexcept { return bandwidth_; }
    std::string name() const;

    double operator()(double t) const;

    /// ||x||_W^2 = a^T Psi a with Psi_kl = psi(tau_k - tau_l); mixture only.
    double mixture_norm_squared() const;

private:
    AnalyticSignal() = default;

    Kind kind_ = Kind::LowPass;
    double bandwidth_ = 1.0;
    std::optional<Kernel> kernel_;
    std::vector<double> locations_;
    std::vector<double> amplitudes_;
};

double eval_signal(const AnalyticSignal& signal, double t);

/// x[n] = x(nT), n = -N..N.
SampleSet sample_signal(const AnalyticSignal& signal, double T, int N);

/// T for a sampling rate equal to `fraction` of the Nyquist rate 2B,
/// i.e. T = 1/(2 B fraction).
double spacing_for_nyquist_fraction(double bandwidth_hz, double fraction);

/// Low-frequency-emphasizing weights (cubic splines, M = 11) for signals
/// like example1.
WeightSpec example1_weights(double bandwidth_hz);
/// High-frequency-emphasizing weights (cubic splines, M = 11) for signals
/// like example2.
WeightSpec example2_weights(double bandwidth_hz);

}  // namespace wsinterp

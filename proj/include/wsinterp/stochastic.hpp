#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsinterp/interpolator.hpp"

namespace wsinterp {

/// In-band power spectral density of a zero-mean WSS process; zero outside
/// |omega| <= 2 pi B. Three forms: a constant level gamma^2, the reciprocal of
/// a weight (S = 1/W = G), or a sampled density linearly interpolated between
/// nodes.
class PSDModel {
public:
    static PSDModel uniform(double bandwidth_hz, double level = 1.0);
    static PSDModel from_weights(WeightSpec spec);
    /// The grid must span the closed band and be strictly positive.
    static PSDModel from_density(double bandwidth_hz, DensityGrid grid);

    enum class Kind { Uniform, Weights, Density };
    Kind kind() const noexcept { return kind_; }
    double bandwidth() const noexcept { return bandwidth_; }
    double band_edge() const noexcept;
    const std::optional<WeightSpec>& weights() const noexcept { return spec_; }

    /// S(omega); zero out of band.
    double density(double omega) const;
    /// Kinks of S in [0, 2 pi B], both ends included.
    std::vector<double> positive_breakpoints() const;
    /// (1/2 pi) int S = R(0).
    double variance() const;

private:
    PSDModel() = default;

    Kind kind_ = Kind::Uniform;
    double bandwidth_ = 1.0;
    double level_ = 1.0;
    std::optional<WeightSpec> spec_;
    DensityGrid grid_;
};

/// R(tau) = (1/2 pi) int S(omega) cos(omega tau) d omega. Closed form for the
/// uniform and weight-reciprocal models, adaptive quadrature otherwise.
double autocorrelation(const PSDModel& psd, double tau, double tolerance = kDefaultQuadratureTol);

/// R as a KernelFunction for the Gram machinery.
KernelFunction autocorrelation_function(const PSDModel& psd);

/// LMMSE estimate sum_n c_n R(t - nT) with c chosen so the estimate matches
/// the samples (or (R + sigma^2 I) c = x with noise variance sigma^2).
class LmmseInterpolator {
public:
    LmmseInterpolator(const SampleSet& samples, const PSDModel& psd, double noise_sigma2 = 0.0);

    Complex operator()(double t) const { return interp_(t); }
    const Interpolant& interpolant() const noexcept { return interp_; }

private:
    Interpolant interp_;
};

Complex lmmse_interpolate(const SampleSet& samples, const PSDModel& psd, double t);

inline constexpr int kSynthesisFrequencies = 2048;

/// Spectral synthesis of one Gaussian realization,
///   x(t) = sum_k sqrt(S(omega_k) d_omega / pi) (a_k cos(omega_k t) + b_k sin(omega_k t)),
/// on 2048 midpoint frequencies in (0, 2 pi B). a_k, b_k are standard
/// normal draws (Box-Muller over mt19937_64) from a stream seeded by
/// (seed, realization); the output depends only on those and the grid.
std::vector<double> synthesize_process(const PSDModel& psd, std::uint64_t seed,
                                       std::span<const double> t_grid,
                                       std::uint64_t realization = 0);

/// Reusable synthesizer for many realizations on a fixed time grid.
class ProcessSynthesizer {
public:
    ProcessSynthesizer(const PSDModel& psd, std::span<const double> t_grid);

    std::vector<double> realization(std::uint64_t seed, std::uint64_t index) const;
    std::size_t grid_size() const noexcept { return grid_size_; }

private:
    std::size_t grid_size_;
    std::vector<double> amplitude_;
    // cos/sin(omega_k t_i), row-major by time point.
    std::vector<double> cos_table_;
    std::vector<double> sin_table_;
};

enum class EstimatorKind { Shannon, UniformWeight, MatchedWeight };

std::string to_string(EstimatorKind kind);
EstimatorKind estimator_kind_from_string(const std::string& name);

struct MseEstimate {
    double mse = 0.0;
    /// Standard error of the mean across realizations.
    double std_error = 0.0;
    int realizations = 0;
};

/// Mean of |x_hat(t) - x(t)|^2 over realizations and evaluation times.
///  - Shannon: truncated sinc interpolation with spacing T;
///  - UniformWeight: minimum-norm interpolation with W = 1 over the PSD band;
///  - MatchedWeight: W = 1/S, the LMMSE estimator.
/// Realization r uses the stream (seed, r), so all kinds see the same draws.
MseEstimate empirical_mse(const PSDModel& psd, EstimatorKind kind, double T, int N,
                          std::span<const double> t_eval, int realizations, std::uint64_t seed);

}  // namespace wsinterp

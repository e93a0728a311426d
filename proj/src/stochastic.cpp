#include "wsinterp/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wsinterp/errors.hpp"
#include "wsinterp/sinc.hpp"

namespace wsinterp {

namespace {

constexpr double kPi = std::numbers::pi;

// Piecewise-linear through the nodes; constant beyond the end nodes.
double interpolate_grid(const DensityGrid& grid, double omega)
{
    const auto& x = grid.omegas;
    const auto& y = grid.values;
    if (omega <= x.front()) return y.front();
    if (omega >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), omega);
    const auto i = static_cast<std::size_t>(it - x.begin());
    const double w = (omega - x[i - 1]) / (x[i] - x[i - 1]);
    return (1.0 - w) * y[i - 1] + w * y[i];
}

class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t index)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        engine_.seed(seq);
    }

    /// A pair of independent standard normals (Box-Muller).
    std::pair<double, double> pair()
    {
        constexpr double scale = 0x1.0p-53;
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * scale;  // (0, 1]
        const double u2 = static_cast<double>(engine_() >> 11) * scale;        // [0, 1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

PSDModel PSDModel::uniform(double bandwidth_hz, double level)
{
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("PSDModel: bandwidth must be positive");
    if (!(level > 0.0) || !std::isfinite(level))
        throw std::invalid_argument("PSDModel: uniform level must be positive and finite");
    PSDModel m;
    m.kind_ = Kind::Uniform;
    m.bandwidth_ = bandwidth_hz;
    m.level_ = level;
    return m;
}

PSDModel PSDModel::from_weights(WeightSpec spec)
{
    PSDModel m;
    m.kind_ = Kind::Weights;
    m.bandwidth_ = spec.bandwidth();
    m.spec_ = std::move(spec);
    return m;
}

PSDModel PSDModel::from_density(double bandwidth_hz, DensityGrid grid)
{
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("PSDModel: bandwidth must be positive");
    grid.validate();
    const double edge = 2.0 * kPi * bandwidth_hz;
    if (grid.omegas.front() > -edge * (1.0 - 1e-9) || grid.omegas.back() < edge * (1.0 - 1e-9))
        throw std::invalid_argument("PSDModel: density grid must span the band");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid.values[i] > 0.0))
            throw InvalidWeight("PSDModel: density is not bounded away from zero", grid.omegas[i]);
    }
    PSDModel m;
    m.kind_ = Kind::Density;
    m.bandwidth_ = bandwidth_hz;
    m.grid_ = std::move(grid);
    return m;
}

double PSDModel::band_edge() const noexcept { return 2.0 * kPi * bandwidth_; }

std::vector<double> PSDModel::positive_breakpoints() const
{
    const double edge = band_edge();
    if (kind_ == Kind::Weights) return spec_->positive_breakpoints();
    std::vector<double> knots{0.0, edge};
    if (kind_ == Kind::Density) {
        for (double w : grid_.omegas) {
            if (std::abs(w) > 0.0 && std::abs(w) < edge) knots.push_back(std::abs(w));
        }
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return knots;
}

double PSDModel::density(double omega) const
{
    if (std::abs(omega) > band_edge()) return 0.0;
    switch (kind_) {
    case Kind::Uniform:
        return level_;
    case Kind::Weights:
        return spec_->inverse_weight(omega);
    case Kind::Density:
        // Real processes have even spectra; use the symmetric part.
        return 0.5 * (interpolate_grid(grid_, omega) + interpolate_grid(grid_, -omega));
    }
    return 0.0;
}

double PSDModel::variance() const { return autocorrelation(*this, 0.0); }

double autocorrelation(const PSDModel& psd, double tau, double tolerance)
{
    const double B = psd.bandwidth();
    switch (psd.kind()) {
    case PSDModel::Kind::Uniform:
        return psd.density(0.0) * 2.0 * B * sinc(2.0 * B * tau);
    case PSDModel::Kind::Weights:
        return psi_closed_form(Kernel(*psd.weights()), tau);
    case PSDModel::Kind::Density:
        break;
    }
    return inverse_fourier_even([&](double omega) { return psd.density(omega); },
                                psd.positive_breakpoints(), tau, tolerance);
}

KernelFunction autocorrelation_function(const PSDModel& psd)
{
    switch (psd.kind()) {
    case PSDModel::Kind::Uniform: {
        const double level = psd.density(0.0);
        const double B = psd.bandwidth();
        return [level, B](double tau) { return level * 2.0 * B * sinc(2.0 * B * tau); };
    }
    case PSDModel::Kind::Weights:
        return Kernel(*psd.weights());
    case PSDModel::Kind::Density:
        break;
    }
    return [psd](double tau) { return autocorrelation(psd, tau); };
}

LmmseInterpolator::LmmseInterpolator(const SampleSet& samples, const PSDModel& psd,
                                     double noise_sigma2)
    : interp_(solve(GramMatrix::build(autocorrelation_function(psd), samples.spacing(),
                                      samples.half_count(), noise_sigma2),
                    samples, noise_sigma2))
{
}

Complex lmmse_interpolate(const SampleSet& samples, const PSDModel& psd, double t)
{
    return LmmseInterpolator(samples, psd)(t);
}

ProcessSynthesizer::ProcessSynthesizer(const PSDModel& psd, std::span<const double> t_grid)
    : grid_size_(t_grid.size())
{
    const double d_omega = psd.band_edge() / kSynthesisFrequencies;
    amplitude_.resize(kSynthesisFrequencies);
    std::vector<double> omegas(kSynthesisFrequencies);
    for (int k = 0; k < kSynthesisFrequencies; ++k) {
        omegas[k] = (k + 0.5) * d_omega;
        amplitude_[k] = std::sqrt(psd.density(omegas[k]) * d_omega / kPi);
    }
    cos_table_.resize(grid_size_ * kSynthesisFrequencies);
    sin_table_.resize(grid_size_ * kSynthesisFrequencies);
    for (std::size_t i = 0; i < grid_size_; ++i) {
        if (!std::isfinite(t_grid[i])) throw std::invalid_argument("synthesize_process: non-finite time");
        for (int k = 0; k < kSynthesisFrequencies; ++k) {
            cos_table_[i * kSynthesisFrequencies + k] = std::cos(omegas[k] * t_grid[i]);
            sin_table_[i * kSynthesisFrequencies + k] = std::sin(omegas[k] * t_grid[i]);
        }
    }
}

std::vector<double> ProcessSynthesizer::realization(std::uint64_t seed, std::uint64_t index) const
{
    NormalStream normals(seed, index);
    std::vector<double> a(kSynthesisFrequencies), b(kSynthesisFrequencies);
    for (int k = 0; k < kSynthesisFrequencies; ++k) {
        const auto [z0, z1] = normals.pair();
        a[k] = amplitude_[k] * z0;
        b[k] = amplitude_[k] * z1;
    }
    std::vector<double> x(grid_size_, 0.0);
    for (std::size_t i = 0; i < grid_size_; ++i) {
        const double* c = &cos_table_[i * kSynthesisFrequencies];
        const double* s = &sin_table_[i * kSynthesisFrequencies];
        double sum = 0.0;
        for (int k = 0; k < kSynthesisFrequencies; ++k) sum += a[k] * c[k] + b[k] * s[k];
        x[i] = sum;
    }
    return x;
}

std::vector<double> synthesize_process(const PSDModel& psd, std::uint64_t seed,
                                       std::span<const double> t_grid, std::uint64_t realization)
{
    return ProcessSynthesizer(psd, t_grid).realization(seed, realization);
}

std::string to_string(EstimatorKind kind)
{
    switch (kind) {
    case EstimatorKind::Shannon:
        return "shannon";
    case EstimatorKind::UniformWeight:
        return "uniform_weight";
    case EstimatorKind::MatchedWeight:
        return "matched_weight";
    }
    return "unknown";
}

EstimatorKind estimator_kind_from_string(const std::string& name)
{
    if (name == "shannon" || name == "sinc") return EstimatorKind::Shannon;
    if (name == "uniform_weight" || name == "uniform") return EstimatorKind::UniformWeight;
    if (name == "matched_weight" || name == "weighted" || name == "matched")
        return EstimatorKind::MatchedWeight;
    throw std::invalid_argument("unknown estimator kind '" + name + "'");
}

MseEstimate empirical_mse(const PSDModel& psd, EstimatorKind kind, double T, int N,
                          std::span<const double> t_eval, int realizations, std::uint64_t seed)
{
    if (realizations < 1) throw std::invalid_argument("empirical_mse: need at least one realization");
    if (!(T > 0.0) || N < 0) throw std::invalid_argument("empirical_mse: invalid T or N");
    if (t_eval.empty()) throw std::invalid_argument("empirical_mse: no evaluation times");

    const int size = 2 * N + 1;
    const auto n_eval = static_cast<Eigen::Index>(t_eval.size());

    // Every estimator is linear in the samples: x_hat(t_e) = sum_n w_en x[n].
    Eigen::MatrixXd weights(n_eval, size);
    if (kind == EstimatorKind::Shannon) {
        for (Eigen::Index e = 0; e < n_eval; ++e)
            for (int n = -N; n <= N; ++n) weights(e, n + N) = sinc(t_eval[e] / T - n);
    } else {
        KernelFunction k = kind == EstimatorKind::UniformWeight
                               ? KernelFunction(Kernel::uniform(psd.bandwidth()))
                               : autocorrelation_function(psd);
        const CardinalBasis basis(GramMatrix::build(std::move(k), T, N));
        for (Eigen::Index e = 0; e < n_eval; ++e) weights.row(e) = basis.values(t_eval[e]).transpose();
    }

    std::vector<double> grid;
    for (int n = -N; n <= N; ++n) grid.push_back(n * T);
    grid.insert(grid.end(), t_eval.begin(), t_eval.end());
    const ProcessSynthesizer synth(psd, grid);

    double sum = 0.0, sum_sq = 0.0;
    for (int r = 0; r < realizations; ++r) {
        const auto x = synth.realization(seed, static_cast<std::uint64_t>(r));
        const Eigen::Map<const Eigen::VectorXd> samples(x.data(), size);
        const Eigen::VectorXd est = weights * samples;
        double err = 0.0;
        for (Eigen::Index e = 0; e < n_eval; ++e) {
            const double d = est[e] - x[static_cast<std::size_t>(size + e)];
            err += d * d;
        }
        err /= static_cast<double>(n_eval);
        sum += err;
        sum_sq += err * err;
    }
    MseEstimate out;
    out.realizations = realizations;
    out.mse = sum / realizations;
    if (realizations > 1) {
        const double var = std::max(0.0, (sum_sq - realizations * out.mse * out.mse) / (realizations - 1));
        out.std_error = std::sqrt(var / realizations);
    }
    return out;
}

}  // namespace wsinterp

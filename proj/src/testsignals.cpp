#include "wsinterp/testsignals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wsinterp/sinc.hpp"

namespace wsinterp {

namespace {
constexpr double kPi = std::numbers::pi;
}

AnalyticSignal AnalyticSignal::example1(double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("AnalyticSignal: bandwidth must be positive");
    AnalyticSignal s;
    s.kind_ = Kind::LowPass;
    s.bandwidth_ = bandwidth_hz;
    return s;
}

AnalyticSignal AnalyticSignal::example2(double bandwidth_hz)
{
    AnalyticSignal s = example1(bandwidth_hz);
    s.kind_ = Kind::HighPass;
    return s;
}

AnalyticSignal AnalyticSignal::mixture(Kernel kernel, std::vector<double> locations,
                                       std::vector<double> amplitudes)
{
    if (locations.size() != amplitudes.size())
        throw std::invalid_argument("AnalyticSignal: locations and amplitudes differ in length");
    AnalyticSignal s;
    s.kind_ = Kind::Mixture;
    s.bandwidth_ = kernel.bandwidth();
    s.kernel_ = std::move(kernel);
    s.locations_ = std::move(locations);
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

AnalyticSignal AnalyticSignal::by_name(const std::string& name, double bandwidth_hz)
{
    if (name == "example1") return example1(bandwidth_hz);
    if (name == "example2") return example2(bandwidth_hz);
    throw std::invalid_argument("unknown signal '" + name + "' (expected example1 or example2)");
}

std::string AnalyticSignal::name() const
{
    switch (kind_) {
    case Kind::LowPass:
        return "example1";
    case Kind::HighPass:
        return "example2";
    case Kind::Mixture:
        return "mixture";
    }
    return "unknown";
}

double AnalyticSignal::operator()(double t) const
{
    const double B = bandwidth_;
    switch (kind_) {
    case Kind::LowPass: {
        const double a = sinc(B * t), b = sinc(B * t / 20.0);
        return a * a + b * b;
    }
    case Kind::HighPass: {
        const double a = sinc(B * t), b = sinc(B * t / 20.0);
        return a * a + b * b * std::cos(1.7 * kPi * B * t);
    }
    case Kind::Mixture: {
        double sum = 0.0;
        for (std::size_t k = 0; k < locations_.size(); ++k)
            sum += amplitudes_[k] * (*kernel_)(t - locations_[k]);
        return sum;
    }
    }
    return 0.0;
}

double AnalyticSignal::mixture_norm_squared() const
{
    if (kind_ != Kind::Mixture) throw std::logic_error("mixture_norm_squared: not a mixture signal");
    double sum = 0.0;
    for (std::size_t k = 0; k < locations_.size(); ++k)
        for (std::size_t l = 0; l < locations_.size(); ++l)
            sum += amplitudes_[k] * amplitudes_[l] * (*kernel_)(locations_[k] - locations_[l]);
    return sum;
}

double eval_signal(const AnalyticSignal& signal, double t) { return signal(t); }

SampleSet sample_signal(const AnalyticSignal& signal, double T, int N)
{
    if (!(T > 0.0)) throw std::invalid_argument("sample_signal: T must be positive");
    if (N < 0) throw std::invalid_argument("sample_signal: N must be nonnegative");
    std::vector<Complex> values;
    values.reserve(2 * N + 1);
    for (int n = -N; n <= N; ++n) values.emplace_back(signal(n * T));
    return SampleSet(T, N, std::move(values));
}

double spacing_for_nyquist_fraction(double bandwidth_hz, double fraction)
{
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be positive");
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("Nyquist fraction must lie in (0, 1]");
    return 1.0 / (2.0 * bandwidth_hz * fraction);
}

WeightSpec example1_weights(double bandwidth_hz)
{
    // triangle, like the spectrum of sinc^2(B t)
    constexpr int M = 11;
    std::vector<double> d(2 * M + 1);
    for (int m = -M; m <= M; ++m) d[m + M] = 1.0 - std::abs(m) / 12.0;
    return WeightSpec(bandwidth_hz, 3, M, std::move(d), 1e-2);
}

WeightSpec example2_weights(double bandwidth_hz)
{
    // triangle plus a bump over the modulated component near 0.85 of the band edge
    constexpr int M = 11;
    std::vector<double> d(2 * M + 1);
    for (int m = -M; m <= M; ++m) {
        const double r = (std::abs(m) - 11.05) / 0.7;
        d[m + M] = 1.0 - std::abs(m) / 12.0 + 5.0 * std::exp(-0.5 * r * r);
    }
    return WeightSpec(bandwidth_hz, 3, M, std::move(d), 1e-2);
}

}  // namespace wsinterp

#include "wsinterp/error_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wsinterp/errors.hpp"
#include "wsinterp/sinc.hpp"

namespace wsinterp {

namespace {

double clamp_power_sq(double p2, double scale, double t)
{
    if (p2 >= 0.0) return p2;
    if (p2 >= -kPowerClampFloor * std::max(1.0, scale)) return 0.0;
    std::ostringstream msg;
    msg << "power function squared is negative (" << p2 << ") at t = " << t;
    throw NumericalInconsistency(msg.str());
}

double ball_constant(double radius_sq, double norm_sq)
{
    const double slack = radius_sq - norm_sq;
    const double tol = 1e-12 * std::max(1.0, norm_sq);
    if (slack < -tol) {
        std::ostringstream msg;
        msg << "norm bound is infeasible: radius^2 = " << radius_sq
            << " is below the interpolant norm^2 = " << norm_sq;
        throw InfeasibleBall(msg.str());
    }
    return std::sqrt(std::max(slack, 0.0));
}

}  // namespace

double power_function(const CardinalBasis& basis, double t)
{
    const GramMatrix& gram = basis.gram();
    const double k0 = gram.kernel()(0.0);
    // k(nT - t) = k(t - nT) by evenness
    const Eigen::VectorXd k = basis.kernel_vector(t);
    const Eigen::VectorXd u = basis.inverse() * k;
    const double p2 = k0 - 2.0 * u.dot(k) + u.dot(gram.dense() * u);
    return std::sqrt(clamp_power_sq(p2, k0, t));
}

double power_function(const GramMatrix& gram, double t)
{
    return power_function(CardinalBasis(gram), t);
}

BoundReport weighted_pointwise_bound(const Interpolant& interp, double D,
                                     std::span<const double> t_grid)
{
    if (interp.ridge() != 0.0)
        throw std::invalid_argument("weighted_pointwise_bound: requires an unregularized interpolant");
    if (!(D >= 0.0)) throw std::invalid_argument("weighted_pointwise_bound: D must be nonnegative");

    BoundReport report;
    report.constant = ball_constant(D * D, interp.norm_squared());
    const CardinalBasis basis(interp.gram());
    report.t_grid.assign(t_grid.begin(), t_grid.end());
    for (double t : t_grid) {
        const double p = power_function(basis, t);
        report.power_values.push_back(p);
        report.bound_values.push_back(report.constant * p);
    }
    return report;
}

double shannon_constant(const SampleSet& samples, double E)
{
    if (!(E >= 0.0)) throw std::invalid_argument("shannon_constant: E must be nonnegative");
    double energy = 0.0;
    for (const auto& v : samples.values()) energy += std::norm(v);
    return ball_constant(E * E, samples.spacing() * energy);
}

BoundReport shannon_pointwise_bound(const SampleSet& samples, double E,
                                    std::span<const double> t_grid)
{
    BoundReport report;
    report.constant = shannon_constant(samples, E);
    const double T = samples.spacing();
    const int N = samples.half_count();
    report.t_grid.assign(t_grid.begin(), t_grid.end());
    for (double t : t_grid) {
        const double deficit = 1.0 - sinc_partition_sum(t, T, N);
        const double p = std::sqrt(clamp_power_sq(deficit / T, 1.0 / T, t));
        report.power_values.push_back(p);
        report.bound_values.push_back(report.constant * p);
    }
    return report;
}

double sinc_partition_sum(double t, double T, int truncation)
{
    if (!(T > 0.0)) throw std::invalid_argument("sinc_partition_sum: T must be positive");
    if (truncation < 0) throw std::invalid_argument("sinc_partition_sum: truncation must be nonnegative");
    const double u = t / T;
    // Smallest terms first.
    double sum = 0.0;
    for (int n = truncation; n >= 1; --n) {
        const double a = sinc(u - n);
        const double b = sinc(u + n);
        sum += a * a + b * b;
    }
    const double s0 = sinc(u);
    return sum + s0 * s0;
}

WorstCase minimax_worstcase(const SampleSet& samples, double E, double t, int tail_range,
                            double phase)
{
    const int N = samples.half_count();
    if (tail_range <= N) throw std::invalid_argument("minimax_worstcase: tail_range must exceed N");
    const double T = samples.spacing();
    const double C = shannon_constant(samples, E);
    const double u = t / T;

    WorstCase wc;
    std::vector<double> s;
    for (int n = -tail_range; n <= tail_range; ++n) {
        if (std::abs(n) <= N) continue;
        wc.indices.push_back(n);
        s.push_back(sinc(u - n));
    }
    double tail_sq = 0.0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) tail_sq += *it * *it;
    const double norm = std::sqrt(tail_sq);

    const Complex scale = (C / std::sqrt(T)) * std::polar(1.0, phase);
    Complex contribution = 0.0;
    double g_energy = 0.0;
    wc.g.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        wc.g[i] = norm > 0.0 ? scale * (s[i] / norm) : Complex(0.0);
        contribution += wc.g[i] * s[i];
        g_energy += std::norm(wc.g[i]);
    }

    wc.interpolant_value = truncated_shannon(samples, t);
    wc.adversary_value = wc.interpolant_value + contribution;
    wc.attained_error = std::abs(wc.interpolant_value - wc.adversary_value);
    wc.analytic_error = (C / std::sqrt(T)) * norm;
    wc.energy = T * g_energy;
    wc.truncation_deficit = 1.0 - sinc_partition_sum(t, T, tail_range);
    return wc;
}

}  // namespace wsinterp

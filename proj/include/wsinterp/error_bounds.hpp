#pragma once

#include <span>
#include <vector>

#include "wsinterp/interpolator.hpp"

namespace wsinterp {

/// P^2 values in [-floor, 0) are clamped to zero, with
/// floor = kPowerClampFloor * max(1, k(0)); anything more negative raises
/// NumericalInconsistency.
inline constexpr double kPowerClampFloor = 1e-12;

struct BoundReport {
    std::vector<double> t_grid;
    std::vector<double> power_values;
    std::vector<double> bound_values;
    /// C for the classical bound, sqrt(D^2 - ||x_hat||_W^2) for the weighted one.
    double constant = 0.0;
};

/// Power function
///   P^2(t) = k(0) - 2 sum_n Re(u_n(t)^* k(nT - t)) + sum_{m,n} u_m(t) k(nT - mT) u_n(t)^*.
/// Returns P(t).
double power_function(const CardinalBasis& basis, double t);
double power_function(const GramMatrix& gram, double t);

/// |x_hat_w(t) - x(t)| <= sqrt(D^2 - ||x_hat_w||_W^2) P(t) for every x in the
/// D-ball through the samples. The interpolant must be unregularized.
/// Throws InfeasibleBall if D^2 < ||x_hat_w||_W^2.
BoundReport weighted_pointwise_bound(const Interpolant& interp, double D,
                                     std::span<const double> t_grid);

/// Classical bound (C / sqrt(T)) sqrt(1 - sum_n sinc^2(t/T - n)) with
/// C = sqrt(E^2 - T sum |x[n]|^2). Throws InfeasibleBall if E is too small.
BoundReport shannon_pointwise_bound(const SampleSet& samples, double E,
                                    std::span<const double> t_grid);

/// C = sqrt(E^2 - T sum |x[n]|^2).
double shannon_constant(const SampleSet& samples, double E);

/// sum_{|n| <= truncation} sinc^2(t/T - n).
double sinc_partition_sum(double t, double T, int truncation);

inline constexpr int kDefaultTailRange = 10000;

/// Worst-case adversary for the classical pointwise bound at a fixed time,
/// with the infinite tail index set truncated to N < |n| <= tail_range.
struct WorstCase {
    std::vector<int> indices;
    std::vector<Complex> g;
    Complex interpolant_value;
    Complex adversary_value;
    /// |x_hat(t) - z(t)|.
    double attained_error = 0.0;
    /// (C / sqrt(T)) sqrt(sum over the truncated tail of sinc^2).
    double analytic_error = 0.0;
    /// T sum |g[n]|^2, equal to C^2.
    double energy = 0.0;
    /// 1 - sum_{|n| <= tail_range} sinc^2(t/T - n).
    double truncation_deficit = 0.0;
};

WorstCase minimax_worstcase(const SampleSet& samples, double E, double t,
                            int tail_range = kDefaultTailRange, double phase = 0.0);

}  // namespace wsinterp

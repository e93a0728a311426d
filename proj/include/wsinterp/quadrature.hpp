#pragma once

#include <functional>
#include <span>

namespace wsinterp {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
    long evaluations = 0;
};

inline constexpr int kDefaultSimpsonDepth = 24;

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Never throws; a panel that reaches max_depth without meeting its share of
/// the tolerance marks the result as not converged.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol, int max_depth = kDefaultSimpsonDepth);

/// Composite adaptive Simpson over consecutive breakpoints (sorted, at least
/// two). The tolerance is shared between pieces in proportion to their length.
QuadratureResult adaptive_simpson_piecewise(const std::function<double(double)>& f,
                                            std::span<const double> breakpoints, double tol,
                                            int max_depth = kDefaultSimpsonDepth);

}  // namespace wsinterp

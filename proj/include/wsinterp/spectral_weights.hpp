#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace wsinterp {

/// Centered B-spline of degree `degree`, the (degree+1)-fold convolution of
/// the unit rectangle. Supported on |x| < (degree+1)/2. The degree-0 spline
/// takes the midpoint value 1/2 at |x| = 1/2 so that translates form a
/// partition of unity everywhere.
double bspline(int degree, double x);

/// Number of points in the grid used to check that G(omega) is bounded away
/// from zero.
inline constexpr int kValidationGridSize = 4096;
/// G must exceed this fraction of its maximum on the validation grid.
inline constexpr double kPositivityRelTol = 1e-9;

/// Parameterization of the inverse spectral weight
///
///   G(omega) = 1/W(omega) = sum_{m=-M}^{M} d_m beta^K(omega/(2A) - m)
///                           + alpha beta^0(omega/(4 pi B)),
///
/// with A = 2 pi B / (K + 2M + 1) so the 2M+1 splines tile [-2 pi B, 2 pi B].
/// Coefficients are stored at offsets 0..2M for m = -M..M and must be
/// symmetric. Construction fails unless G is strictly positive on the band.
class WeightSpec {
public:
    WeightSpec(double bandwidth_hz, int degree, int half_count, std::vector<double> coeffs,
               double floor_alpha);

    /// G constant equal to `level` over the band (K = 0, M = 0).
    static WeightSpec uniform(double bandwidth_hz, double level = 1.0);

    double bandwidth() const noexcept { return bandwidth_; }
    int degree() const noexcept { return degree_; }
    int half_count() const noexcept { return half_count_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    /// d_m for logical index m in [-M, M].
    double coeff(int m) const;
    double floor_alpha() const noexcept { return floor_alpha_; }
    /// A = 2 pi B / (K + 2M + 1).
    double spacing() const noexcept { return spacing_; }
    /// 2 pi B.
    double band_edge() const noexcept;

    /// G(omega). Throws DomainError for |omega| > 2 pi B.
    double inverse_weight(double omega) const;
    /// W(omega) = 1/G(omega).
    double weight(double omega) const { return 1.0 / inverse_weight(omega); }

    /// min and max of G over the validation grid; 1/U and 1/L respectively.
    double min_inverse_weight() const noexcept { return g_min_; }
    double max_inverse_weight() const noexcept { return g_max_; }

    /// Knots of the piecewise-polynomial G inside [0, 2 pi B], sorted, with
    /// both endpoints included.
    std::vector<double> positive_breakpoints() const;

private:
    double bandwidth_;
    int degree_;
    int half_count_;
    std::vector<double> coeffs_;
    double floor_alpha_;
    double spacing_;
    double g_min_ = 0.0;
    double g_max_ = 0.0;
};

double inverse_weight_eval(const WeightSpec& spec, double omega);

/// Samples of a target density Z(omega) on strictly increasing angular
/// frequencies.
struct DensityGrid {
    std::vector<double> omegas;
    std::vector<double> values;

    DensityGrid() = default;
    DensityGrid(std::vector<double> omegas, std::vector<double> values);

    std::size_t size() const noexcept { return omegas.size(); }
    /// Throws std::invalid_argument on ordering, size, or finiteness problems.
    void validate() const;
};

/// theta(tau) used to map a density to an inverse weight: identity, or the
/// power family (tau + eps)^(p/2 - 1).
struct DensityTransform {
    enum class Kind { Identity, Power };
    Kind kind = Kind::Identity;
    double p = 1.0;
    double eps = 1e-3;

    static DensityTransform identity() { return {}; }
    static DensityTransform power(double p, double eps);

    double operator()(double tau) const;
};

struct FitOptions {
    double bandwidth_hz = 1.0;
    int degree = 3;
    int half_count = 11;
    /// Defaults to 1e-3 * max theta(Z) when unset.
    std::optional<double> floor_alpha;
    DensityTransform transform;
};

struct FitResult {
    WeightSpec spec;
    /// max and RMS of |G(omega_i) - theta(Z_i)| over the grid nodes.
    double max_residual;
    double rms_residual;
};

/// Least-squares fit of the B-spline coefficients so that G matches
/// theta(Z) at the grid nodes, followed by symmetrization and a positivity
/// check. Throws FitError naming the offending frequency if G is not
/// positive.
FitResult fit_weights(const DensityGrid& target, const FitOptions& options);

enum class DensityKind { Psd, FilterMagnitudeSquared };

/// W = 1/S (or 1/|H|^2): fits G to the density itself. The density must be
/// strictly positive at every node.
FitResult weights_from_density(const DensityGrid& density, DensityKind kind,
                               const FitOptions& options);

/// Samples G on `count` uniformly spaced frequencies spanning the closed band.
DensityGrid sample_inverse_weight(const WeightSpec& spec, int count);

nlohmann::json to_json(const WeightSpec& spec);
WeightSpec weight_spec_from_json(const nlohmann::json& doc);
std::string serialize(const WeightSpec& spec);
WeightSpec parse_weight_spec(const std::string& text);

/// Two-column CSV (omega, value). A non-numeric first row is treated as a
/// header.
DensityGrid read_density_csv(const std::string& path);
DensityGrid parse_density_csv(const std::string& text);
std::string density_csv(const DensityGrid& grid);

}  // namespace wsinterp

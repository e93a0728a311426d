#include "wsinterp/spectral_weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "wsinterp/csv.hpp"
#include "wsinterp/errors.hpp"

namespace wsinterp {

namespace {

constexpr double kPi = std::numbers::pi;

// Cox-de Boor on the integer knots 0..degree+1, evaluated at y in [0, degree+1).
double cardinal_bspline(int degree, double y)
{
    if (y < 0.0 || y >= degree + 1) return 0.0;
    std::vector<double> n(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j <= degree; ++j) n[j] = (y >= j && y < j + 1) ? 1.0 : 0.0;
    for (int k = 1; k <= degree; ++k) {
        for (int j = 0; j + k <= degree; ++j) {
            n[j] = ((y - j) * n[j] + (j + k + 1 - y) * n[j + 1]) / k;
        }
    }
    return n[0];
}

std::string format_omega(double omega)
{
    std::ostringstream ss;
    ss.precision(10);
    ss << omega;
    return ss.str();
}

}  // namespace

double bspline(int degree, double x)
{
    if (degree < 0) throw std::invalid_argument("bspline: degree must be nonnegative");
    const double ax = std::abs(x);
    switch (degree) {
    case 0:
        if (ax < 0.5) return 1.0;
        return ax == 0.5 ? 0.5 : 0.0;
    case 1:
        return ax < 1.0 ? 1.0 - ax : 0.0;
    case 2:
        if (ax < 0.5) return 0.75 - ax * ax;
        if (ax < 1.5) return 0.5 * (ax - 1.5) * (ax - 1.5);
        return 0.0;
    case 3:
        if (ax < 1.0) return 2.0 / 3.0 - ax * ax + 0.5 * ax * ax * ax;
        if (ax < 2.0) {
            const double r = 2.0 - ax;
            return r * r * r / 6.0;
        }
        return 0.0;
    default:
        // Evaluate on the mirrored side so the result is exactly even.
        return cardinal_bspline(degree, 0.5 * (degree + 1) - ax);
    }
}

WeightSpec::WeightSpec(double bandwidth_hz, int degree, int half_count,
                       std::vector<double> coeffs, double floor_alpha)
    : bandwidth_(bandwidth_hz), degree_(degree), half_count_(half_count),
      coeffs_(std::move(coeffs)), floor_alpha_(floor_alpha)
{
    if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_))
        throw std::invalid_argument("WeightSpec: bandwidth must be positive and finite");
    if (degree_ < 0) throw std::invalid_argument("WeightSpec: degree must be nonnegative");
    if (half_count_ < 0) throw std::invalid_argument("WeightSpec: half_count must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(2 * half_count_ + 1))
        throw std::invalid_argument("WeightSpec: expected 2M+1 coefficients");
    if (!(floor_alpha_ >= 0.0) || !std::isfinite(floor_alpha_))
        throw std::invalid_argument("WeightSpec: floor_alpha must be finite and nonnegative");

    double scale = 0.0;
    for (double d : coeffs_) {
        if (!std::isfinite(d)) throw std::invalid_argument("WeightSpec: non-finite coefficient");
        scale = std::max(scale, std::abs(d));
    }
    for (int m = 1; m <= half_count_; ++m) {
        double& lo = coeffs_[half_count_ - m];
        double& hi = coeffs_[half_count_ + m];
        if (std::abs(lo - hi) > 1e-12 * scale)
            throw std::invalid_argument("WeightSpec: coefficients must be symmetric (d[-m] = d[m])");
        lo = hi = 0.5 * (lo + hi);
    }

    spacing_ = 2.0 * kPi * bandwidth_ / (degree_ + 2 * half_count_ + 1);

    const double edge = band_edge();
    const double step = 2.0 * edge / kValidationGridSize;
    double arg_min = 0.0;
    g_min_ = std::numeric_limits<double>::infinity();
    g_max_ = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kValidationGridSize; ++i) {
        const double omega = -edge + (i + 0.5) * step;
        const double g = inverse_weight(omega);
        if (g < g_min_) {
            g_min_ = g;
            arg_min = omega;
        }
        g_max_ = std::max(g_max_, g);
    }
    if (!(g_max_ > 0.0) || !(g_min_ > kPositivityRelTol * g_max_))
        throw InvalidWeight("inverse weight G(omega) is not bounded away from zero (G = " +
                                format_omega(g_min_) + " at omega = " + format_omega(arg_min) + ")",
                            arg_min);
}

WeightSpec WeightSpec::uniform(double bandwidth_hz, double level)
{
    return WeightSpec(bandwidth_hz, 0, 0, {level}, 0.0);
}

double WeightSpec::band_edge() const noexcept { return 2.0 * kPi * bandwidth_; }

double WeightSpec::coeff(int m) const
{
    if (m < -half_count_ || m > half_count_) throw std::out_of_range("WeightSpec::coeff: index");
    return coeffs_[static_cast<std::size_t>(m + half_count_)];
}

double WeightSpec::inverse_weight(double omega) const
{
    const double edge = band_edge();
    if (!(std::abs(omega) <= edge * (1.0 + 1e-14)))
        throw DomainError("omega = " + format_omega(omega) + " is outside the band [-" +
                          format_omega(edge) + ", " + format_omega(edge) + "]");
    // G is even; folding to |omega| keeps it exactly so in floating point
    omega = std::min(std::abs(omega), edge);

    const double x = omega / (2.0 * spacing_);
    const double half_support = 0.5 * (degree_ + 1);
    const int lo = std::max(-half_count_, static_cast<int>(std::ceil(x - half_support)));
    const int hi = std::min(half_count_, static_cast<int>(std::floor(x + half_support)));
    double g = 0.0;
    for (int m = lo; m <= hi; ++m) g += coeffs_[m + half_count_] * bspline(degree_, x - m);
    return g + floor_alpha_ * bspline(0, omega / (4.0 * kPi * bandwidth_));
}

std::vector<double> WeightSpec::positive_breakpoints() const
{
    // Knots of beta^K(u - m) sit at integers (K odd) or half-integers (K even)
    // in u = omega / (2A).
    const double u_edge = 0.5 * (degree_ + 2 * half_count_ + 1);
    const double offset = (degree_ % 2 == 1) ? 0.0 : 0.5;
    std::vector<double> knots{0.0};
    for (double u = offset; u < u_edge; u += 1.0) {
        if (u > 0.0) knots.push_back(2.0 * spacing_ * u);
    }
    knots.push_back(band_edge());
    return knots;
}

double inverse_weight_eval(const WeightSpec& spec, double omega) { return spec.inverse_weight(omega); }

DensityGrid::DensityGrid(std::vector<double> o, std::vector<double> v)
    : omegas(std::move(o)), values(std::move(v))
{
    validate();
}

void DensityGrid::validate() const
{
    if (omegas.size() != values.size())
        throw std::invalid_argument("DensityGrid: omegas and values differ in length");
    if (omegas.empty()) throw std::invalid_argument("DensityGrid: empty grid");
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (!std::isfinite(omegas[i]) || !std::isfinite(values[i]))
            throw std::invalid_argument("DensityGrid: non-finite entry");
        if (values[i] < 0.0) throw std::invalid_argument("DensityGrid: negative density value");
        if (i > 0 && !(omegas[i] > omegas[i - 1]))
            throw std::invalid_argument("DensityGrid: omegas must be strictly increasing");
    }
}

DensityTransform DensityTransform::power(double p, double eps)
{
    if (!(p > 0.0) || !(eps > 0.0))
        throw std::invalid_argument("DensityTransform: power family needs p > 0 and eps > 0");
    return {Kind::Power, p, eps};
}

double DensityTransform::operator()(double tau) const
{
    if (kind == Kind::Identity) return tau;
    return std::pow(tau + eps, 0.5 * p - 1.0);
}

FitResult fit_weights(const DensityGrid& target, const FitOptions& options)
{
    target.validate();
    if (!(options.bandwidth_hz > 0.0))
        throw std::invalid_argument("fit_weights: bandwidth must be positive");
    if (options.degree < 0 || options.half_count < 0)
        throw std::invalid_argument("fit_weights: degree and half_count must be nonnegative");

    const int K = options.degree;
    const int M = options.half_count;
    const double B = options.bandwidth_hz;
    const double edge = 2.0 * kPi * B;
    const double A = edge / (K + 2 * M + 1);

    if (target.omegas.front() < -edge * (1.0 + 1e-12) || target.omegas.back() > edge * (1.0 + 1e-12))
        throw std::invalid_argument("fit_weights: grid extends outside the band");
    if (target.omegas.front() > -edge + A || target.omegas.back() < edge - A)
        throw std::invalid_argument("fit_weights: grid does not cover the band");

    const auto n = static_cast<Eigen::Index>(target.size());
    Eigen::VectorXd theta(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        theta[i] = options.transform(target.values[i]);
        if (!std::isfinite(theta[i]))
            throw std::invalid_argument("fit_weights: transform produced a non-finite value");
    }
    const double alpha = options.floor_alpha.value_or(1e-3 * theta.maxCoeff());
    if (!(alpha >= 0.0)) throw std::invalid_argument("fit_weights: floor_alpha must be nonnegative");

    Eigen::MatrixXd basis(n, 2 * M + 1);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double omega = std::clamp(target.omegas[i], -edge, edge);
        for (int m = -M; m <= M; ++m) basis(i, m + M) = bspline(K, omega / (2.0 * A) - m);
        rhs[i] = theta[i] - alpha * bspline(0, omega / (4.0 * kPi * B));
    }
    const Eigen::VectorXd d = basis.completeOrthogonalDecomposition().solve(rhs);

    std::vector<double> coeffs(d.data(), d.data() + d.size());
    for (int m = 1; m <= M; ++m) {
        const double avg = 0.5 * (coeffs[M - m] + coeffs[M + m]);
        coeffs[M - m] = coeffs[M + m] = avg;
    }

    try {
        WeightSpec spec(B, K, M, std::move(coeffs), alpha);
        double max_res = 0.0, sum_sq = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double r = std::abs(spec.inverse_weight(std::clamp(target.omegas[i], -edge, edge)) -
                                      theta[i]);
            max_res = std::max(max_res, r);
            sum_sq += r * r;
        }
        return {std::move(spec), max_res, std::sqrt(sum_sq / static_cast<double>(n))};
    } catch (const InvalidWeight& e) {
        throw FitError(std::string("fit_weights: ") + e.what(), e.omega());
    }
}

FitResult weights_from_density(const DensityGrid& density, DensityKind kind,
                               const FitOptions& options)
{
    density.validate();
    for (std::size_t i = 0; i < density.size(); ++i) {
        if (!(density.values[i] > 0.0)) {
            const char* what = kind == DensityKind::Psd ? "power spectral density" : "|H|^2";
            throw FitError(std::string("weights_from_density: ") + what +
                               " is not bounded away from zero (value " +
                               format_omega(density.values[i]) + " at omega = " +
                               format_omega(density.omegas[i]) + ")",
                           density.omegas[i]);
        }
    }
    FitOptions opts = options;
    opts.transform = DensityTransform::identity();
    return fit_weights(density, opts);
}

DensityGrid sample_inverse_weight(const WeightSpec& spec, int count)
{
    if (count < 2) throw std::invalid_argument("sample_inverse_weight: need at least two points");
    const double edge = spec.band_edge();
    std::vector<double> omegas(count), values(count);
    for (int i = 0; i < count; ++i) {
        omegas[i] = -edge + 2.0 * edge * i / (count - 1);
        values[i] = spec.inverse_weight(omegas[i]);
    }
    omegas.back() = edge;
    return DensityGrid(std::move(omegas), std::move(values));
}

nlohmann::json to_json(const WeightSpec& spec)
{
    return {
        {"bandwidth_B", spec.bandwidth()},
        {"degree_K", spec.degree()},
        {"half_count_M", spec.half_count()},
        {"coeffs_d", std::vector<double>(spec.coeffs().begin(), spec.coeffs().end())},
        {"floor_alpha", spec.floor_alpha()},
    };
}

WeightSpec weight_spec_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object()) throw std::invalid_argument("weight spec: expected an object");
    for (const char* key : {"bandwidth_B", "degree_K", "half_count_M", "coeffs_d", "floor_alpha"}) {
        if (!doc.contains(key)) throw std::invalid_argument(std::string("weight spec: missing key '") + key + "'");
    }
    try {
        return WeightSpec(doc.at("bandwidth_B").get<double>(), doc.at("degree_K").get<int>(),
                          doc.at("half_count_M").get<int>(),
                          doc.at("coeffs_d").get<std::vector<double>>(),
                          doc.at("floor_alpha").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("weight spec: ") + e.what());
    }
}

std::string serialize(const WeightSpec& spec) { return to_json(spec).dump(2) + "\n"; }

WeightSpec parse_weight_spec(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("weight spec: ") + e.what());
    }
    return weight_spec_from_json(doc);
}

DensityGrid parse_density_csv(const std::string& text)
{
    const auto table = csv::parse(text);
    std::vector<double> omegas, values;
    for (const auto& row : table.rows) {
        if (row.size() != 2) throw std::invalid_argument("density csv: expected two columns (omega, value)");
        omegas.push_back(row[0]);
        values.push_back(row[1]);
    }
    return DensityGrid(std::move(omegas), std::move(values));
}

DensityGrid read_density_csv(const std::string& path) { return parse_density_csv(csv::read_file(path)); }

std::string density_csv(const DensityGrid& grid)
{
    csv::Writer w({"omega", "value"});
    for (std::size_t i = 0; i < grid.size(); ++i) w.row({grid.omegas[i], grid.values[i]});
    return w.str();
}

}  // namespace wsinterp

#include <algorithm>
#include <cmath>
#include <fstream>

#include "wsinterp/cli.hpp"
#include "wsinterp/csv.hpp"
#include "wsinterp/error_bounds.hpp"
#include "wsinterp/sinc.hpp"
#include "wsinterp/testsignals.hpp"

namespace wsinterp::cli {

namespace {

using nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

struct CentralErrors {
    double max_abs = 0.0;
    double mean_abs = 0.0;
};

std::vector<std::size_t> central_indices(const std::vector<double>& t, double half_width)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::abs(t[i]) <= half_width * (1.0 + 1e-12)) idx.push_back(i);
    return idx;
}

CentralErrors central_errors(const std::vector<double>& est, const std::vector<double>& truth,
                             const std::vector<std::size_t>& idx)
{
    CentralErrors e;
    for (auto i : idx) {
        const double d = std::abs(est[i] - truth[i]);
        e.max_abs = std::max(e.max_abs, d);
        e.mean_abs += d;
    }
    if (!idx.empty()) e.mean_abs /= static_cast<double>(idx.size());
    return e;
}

EstimatorKind estimator_for(const std::string& kind)
{
    if (kind == "weighted") return EstimatorKind::MatchedWeight;
    if (kind == "uniform") return EstimatorKind::UniformWeight;
    return EstimatorKind::Shannon;
}

}  // namespace

int sign_changes(const std::vector<double>& values)
{
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double floor = 1e-12 * scale;
    int changes = 0, last = 0;
    for (double v : values) {
        if (std::abs(v) <= floor) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

OutputFiles cmd_kernel(const ExperimentConfig& config)
{
    const Kernel psi(config.weights);
    const Kernel ref = Kernel::uniform(config.bandwidth_hz);
    const auto t = config.t_grid.points();
    std::vector<double> a, b;
    csv::Writer w({"t", "psi", "psi_uniform_reference"});
    for (double x : t) {
        a.push_back(psi(x));
        b.push_back(ref(x));
        w.row({x, a.back(), b.back()});
    }
    json summary = {
        {"weights_source", config.weights_source},
        {"weights", to_json(config.weights)},
        {"psi_at_zero", psi.at_zero()},
        {"sign_changes_psi", sign_changes(a)},
        {"sign_changes_reference", sign_changes(b)},
    };
    return {{"kernel.csv", w.str()}, {"kernel_summary.json", dump(summary)}};
}

OutputFiles cmd_compare(const ExperimentConfig& config)
{
    const double T = config.spacing_s();
    const int N = config.half_count_N;
    const auto signal = AnalyticSignal::by_name(config.signal, config.bandwidth_hz);
    const SampleSet samples = sample_signal(signal, T, N);
    const auto t = config.t_grid.points();
    const auto central = central_indices(t, N * T / 2.0);
    if (central.empty()) throw ConfigError("t_grid has no points in the central interval |t| <= N T / 2");

    std::vector<double> truth;
    for (double x : t) truth.push_back(signal(x));

    std::vector<std::vector<double>> columns;
    json kinds = json::object();
    for (const auto& kind : config.kinds) {
        std::vector<double> col;
        json info;
        if (kind == "sinc") {
            for (double x : t) col.push_back(truncated_shannon(samples, x).real());
        } else {
            const Kernel k = kind == "weighted" ? Kernel(config.weights) : Kernel::uniform(config.bandwidth_hz);
            const auto interp = solve(build_gram(k, T, N, config.ridge_sigma2), samples, config.ridge_sigma2);
            for (double x : t) col.push_back(interp(x).real());
            info["condition_estimate"] = interp.condition_estimate();
        }
        const auto e = central_errors(col, truth, central);
        info["max_abs_error"] = e.max_abs;
        info["mean_abs_error"] = e.mean_abs;
        kinds[kind] = info;
        columns.push_back(std::move(col));
    }

    double deviation = 0.0;
    for (std::size_t a = 0; a < columns.size(); ++a)
        for (std::size_t b = a + 1; b < columns.size(); ++b)
            deviation = std::max(deviation, central_errors(columns[a], columns[b], central).max_abs);

    std::vector<std::string> header{"t", "truth"};
    header.insert(header.end(), config.kinds.begin(), config.kinds.end());
    csv::Writer w(header);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<double> row{t[i], truth[i]};
        for (const auto& col : columns) row.push_back(col[i]);
        w.row(row);
    }
    json summary = {
        {"signal", config.signal},
        {"bandwidth_hz", config.bandwidth_hz},
        {"nyquist_fraction", config.nyquist_fraction},
        {"spacing_s", T},
        {"half_count_N", N},
        {"ridge_sigma2", config.ridge_sigma2},
        {"central_half_width_s", N * T / 2.0},
        {"central_points", central.size()},
        {"weights_source", config.weights_source},
        {"kinds", kinds},
        {"max_pairwise_deviation", deviation},
    };
    return {{"compare.csv", w.str()}, {"compare_summary.json", dump(summary)}};
}

OutputFiles cmd_cardinals(const ExperimentConfig& config)
{
    const double T = config.spacing_s();
    const int N = config.half_count_N;
    const CardinalBasis weighted(build_gram(Kernel(config.weights), T, N));
    const CardinalBasis uniform(build_gram(Kernel::uniform(config.bandwidth_hz), T, N));
    const auto t = config.t_grid.points();

    std::vector<double> uw, uu, s;
    csv::Writer w({"t", "u0_weighted", "u0_uniform", "sinc"});
    for (double x : t) {
        uw.push_back(weighted.value(0, x));
        uu.push_back(uniform.value(0, x));
        s.push_back(sinc(x / T));
        w.row({x, uw.back(), uu.back(), s.back()});
    }

    auto node_error = [&](const CardinalBasis& basis) {
        double e = 0.0;
        for (int k = -N; k <= N; ++k) e = std::max(e, std::abs(basis.value(0, k * T) - (k == 0 ? 1.0 : 0.0)));
        return e;
    };
    auto max_diff = [](const std::vector<double>& a, const std::vector<double>& b) {
        double e = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
        return e;
    };
    // largest |u| away from the main lobe
    auto sidelobe = [&](const std::vector<double>& u) {
        double peak = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (std::abs(t[i]) >= T) peak = std::max(peak, std::abs(u[i]));
        return peak;
    };
    json summary = {
        {"spacing_s", T},
        {"half_count_N", N},
        {"weights_source", config.weights_source},
        {"sidelobe_peak_weighted", sidelobe(uw)},
        {"sidelobe_peak_uniform", sidelobe(uu)},
        {"sidelobe_peak_sinc", sidelobe(s)},
        {"node_error_weighted", node_error(weighted)},
        {"node_error_uniform", node_error(uniform)},
        {"sign_changes_weighted", sign_changes(uw)},
        {"sign_changes_uniform", sign_changes(uu)},
        {"sign_changes_sinc", sign_changes(s)},
        {"max_abs_weighted_minus_sinc", max_diff(uw, s)},
        {"max_abs_uniform_minus_sinc", max_diff(uu, s)},
    };
    return {{"cardinals.csv", w.str()}, {"cardinals_summary.json", dump(summary)}};
}

OutputFiles cmd_bounds(const ExperimentConfig& config)
{
    if (config.ridge_sigma2 != 0.0) throw ConfigError("bounds: ridge_sigma2 must be 0");
    const double T = config.spacing_s();
    const int N = config.half_count_N;
    const auto signal = AnalyticSignal::by_name(config.signal, config.bandwidth_hz);
    const SampleSet samples = sample_signal(signal, T, N);
    const auto interp = solve(build_gram(Kernel(config.weights), T, N), samples);
    const auto t = config.t_grid.points();

    double energy = 0.0;
    for (const auto& v : samples.values()) energy += std::norm(v);
    const double D = config.norm_bound_D.value_or(2.0 * std::sqrt(interp.norm_squared()));
    const double E = config.energy_bound_E.value_or(2.0 * std::sqrt(T * energy));

    const auto weighted = weighted_pointwise_bound(interp, D, t);
    const auto shannon = shannon_pointwise_bound(samples, E, t);

    csv::Writer w({"t", "truth", "weighted", "power_weighted", "bound_weighted", "sinc", "power_shannon",
                   "bound_shannon"});
    for (std::size_t i = 0; i < t.size(); ++i) {
        w.row({t[i], signal(t[i]), interp(t[i]).real(), weighted.power_values[i], weighted.bound_values[i],
               truncated_shannon(samples, t[i]).real(), shannon.power_values[i], shannon.bound_values[i]});
    }
    json summary = {
        {"spacing_s", T},
        {"half_count_N", N},
        {"weights_source", config.weights_source},
        {"norm_bound_D", D},
        {"energy_bound_E", E},
        {"interpolant_norm_squared", interp.norm_squared()},
        {"weighted_constant", weighted.constant},
        {"shannon_constant", shannon.constant},
    };
    return {{"bounds.csv", w.str()}, {"bounds_summary.json", dump(summary)}};
}

OutputFiles cmd_mc(const ExperimentConfig& config)
{
    const PSDModel psd = config.mc.psd == "uniform" ? PSDModel::uniform(config.bandwidth_hz)
                                                    : PSDModel::from_weights(config.weights);
    csv::Writer w({"kind", "T_over_nyquist", "N", "mse", "stderr"});
    for (double f : config.mc.nyquist_fractions) {
        const double T = spacing_for_nyquist_fraction(config.bandwidth_hz, f);
        for (int N : config.mc.half_counts) {
            // cell centres across the central interval
            const int count = config.mc.eval_count;
            const double width = std::max(N, 1) * T;
            std::vector<double> t_eval(static_cast<std::size_t>(count));
            for (int e = 0; e < count; ++e) t_eval[e] = -width / 2.0 + width * (e + 0.5) / count;
            for (const auto& kind : config.kinds) {
                const auto est = empirical_mse(psd, estimator_for(kind), T, N, t_eval, config.mc.realizations,
                                               config.seed);
                w.row(kind, {2.0 * config.bandwidth_hz * T, static_cast<double>(N), est.mse, est.std_error});
            }
        }
    }
    json summary = {
        {"seed", config.seed},
        {"realizations", config.mc.realizations},
        {"psd", config.mc.psd},
        {"weights_source", config.weights_source},
        {"generator", "mt19937_64 seeded by seed_seq(seed, realization), Box-Muller normals"},
        {"synthesis_frequencies", kSynthesisFrequencies},
        {"eval_count", config.mc.eval_count},
    };
    return {{"mc.csv", w.str()}, {"mc_summary.json", dump(summary)}};
}

OutputFiles cmd_fit(const ExperimentConfig& config)
{
    const WeightSpec& spec = config.weights;
    OutputFiles files{{"fit_weights.json", serialize(spec)}};
    json summary = {{"weights_source", config.weights_source}};

    if (config.fit) {
        const auto& fit = *config.fit;
        const double edge = spec.band_edge();
        csv::Writer w({"omega", "target", "fitted"});
        double max_res = 0.0, sum_sq = 0.0;
        for (std::size_t i = 0; i < fit.density.size(); ++i) {
            const double omega = std::clamp(fit.density.omegas[i], -edge, edge);
            const double target = fit.options.transform(fit.density.values[i]);
            const double fitted = spec.inverse_weight(omega);
            max_res = std::max(max_res, std::abs(fitted - target));
            sum_sq += (fitted - target) * (fitted - target);
            w.row({fit.density.omegas[i], target, fitted});
        }
        summary["max_residual"] = max_res;
        summary["rms_residual"] = std::sqrt(sum_sq / static_cast<double>(fit.density.size()));
        files.emplace_back("fit_residuals.csv", w.str());
    }

    // round trip: emit G on a grid, refit, compare
    const DensityGrid emitted = sample_inverse_weight(spec, 1024);
    FitOptions opts;
    opts.bandwidth_hz = spec.bandwidth();
    opts.degree = spec.degree();
    opts.half_count = spec.half_count();
    opts.floor_alpha = spec.floor_alpha();
    const auto refit = fit_weights(emitted, opts);
    double coeff_diff = 0.0;
    for (int m = -spec.half_count(); m <= spec.half_count(); ++m)
        coeff_diff = std::max(coeff_diff, std::abs(refit.spec.coeff(m) - spec.coeff(m)));
    summary["roundtrip_max_coeff_diff"] = coeff_diff;
    summary["roundtrip_max_residual"] = refit.max_residual;
    summary["max_inverse_weight"] = spec.max_inverse_weight();
    summary["min_inverse_weight"] = spec.min_inverse_weight();
    files.emplace_back("fit_density.csv", density_csv(emitted));
    files.emplace_back("fit_summary.json", dump(summary));
    return files;
}

void write_outputs(const std::filesystem::path& dir, const OutputFiles& files)
{
    std::filesystem::create_directories(dir);
    for (const auto& [name, text] : files) {
        const auto target = dir / name;
        const auto tmp = dir / (name + ".tmp");
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
            f << text;
            if (!f) throw std::runtime_error("write failed for '" + tmp.string() + "'");
        }
        std::filesystem::rename(tmp, target);
    }
}

}  // namespace wsinterp::cli

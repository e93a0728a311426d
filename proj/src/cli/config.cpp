#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "wsinterp/cli.hpp"
#include "wsinterp/errors.hpp"
#include "wsinterp/testsignals.hpp"

namespace wsinterp::cli {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed)
{
    if (!obj.is_object()) throw ConfigError(where + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (!ok.count(item.key())) throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where)
{
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type or missing");
    }
}

double get_finite(const json& obj, const char* key, const std::string& where)
{
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": must be finite");
    return x;
}

int get_int(const json& obj, const char* key, const std::string& where)
{
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
    return v.get<int>();
}

std::string canonical_kind(const std::string& name)
{
    if (name == "weighted" || name == "matched" || name == "matched_weight") return "weighted";
    if (name == "uniform" || name == "uniform_weight") return "uniform";
    if (name == "sinc" || name == "shannon") return "sinc";
    throw ConfigError("kinds: unknown interpolator '" + name + "' (expected weighted, uniform or sinc)");
}

WeightSpec preset(const std::string& name, double B)
{
    if (name == "example1") return example1_weights(B);
    if (name == "example2") return example2_weights(B);
    if (name == "uniform") return WeightSpec::uniform(B);
    throw ConfigError("weights: unknown preset '" + name + "' (expected example1, example2 or uniform)");
}

DensityTransform parse_transform(const json& obj)
{
    check_keys(obj, "weights.fit.transform", {"kind", "p", "eps"});
    const std::string kind = obj.contains("kind") ? get<std::string>(obj, "kind", "weights.fit.transform")
                                                  : "identity";
    if (kind == "identity") return DensityTransform::identity();
    if (kind != "power") throw ConfigError("weights.fit.transform.kind: expected identity or power");
    const double p = obj.contains("p") ? get_finite(obj, "p", "weights.fit.transform") : 1.0;
    const double eps = obj.contains("eps") ? get_finite(obj, "eps", "weights.fit.transform") : 1e-3;
    try {
        return DensityTransform::power(p, eps);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("weights.fit.transform: ") + e.what());
    }
}

FitConfig parse_fit(const json& obj, double B, const std::filesystem::path& base_dir)
{
    const std::string where = "weights.fit";
    check_keys(obj, where,
               {"density_csv", "density", "density_kind", "degree_K", "half_count_M", "floor_alpha",
                "transform"});
    FitConfig fit;
    if (obj.contains("density_csv") == obj.contains("density"))
        throw ConfigError(where + ": give exactly one of density_csv or density");
    try {
        if (obj.contains("density_csv")) {
            std::filesystem::path p = get<std::string>(obj, "density_csv", where);
            if (p.is_relative()) p = base_dir / p;
            fit.density = read_density_csv(p.string());
        } else {
            const json& d = obj.at("density");
            check_keys(d, where + ".density", {"omega_rad_s", "value"});
            fit.density = DensityGrid(get<std::vector<double>>(d, "omega_rad_s", where + ".density"),
                                      get<std::vector<double>>(d, "value", where + ".density"));
        }
        fit.density.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    if (obj.contains("density_kind")) {
        const auto kind = get<std::string>(obj, "density_kind", where);
        if (kind == "psd")
            fit.density_kind = DensityKind::Psd;
        else if (kind == "filter_magnitude_squared")
            fit.density_kind = DensityKind::FilterMagnitudeSquared;
        else
            throw ConfigError(where + ".density_kind: expected psd or filter_magnitude_squared");
    }
    fit.options.bandwidth_hz = B;
    if (obj.contains("degree_K")) fit.options.degree = get_int(obj, "degree_K", where);
    if (obj.contains("half_count_M")) fit.options.half_count = get_int(obj, "half_count_M", where);
    if (fit.options.degree < 0 || fit.options.half_count < 0)
        throw ConfigError(where + ": degree_K and half_count_M must be nonnegative");
    if (obj.contains("floor_alpha")) {
        const double a = get_finite(obj, "floor_alpha", where);
        if (a < 0.0) throw ConfigError(where + ".floor_alpha: must be nonnegative");
        fit.options.floor_alpha = a;
    }
    if (obj.contains("transform")) fit.options.transform = parse_transform(obj.at("transform"));
    return fit;
}

FitResult run_fit(const FitConfig& fit)
{
    try {
        if (fit.options.transform.kind == DensityTransform::Kind::Identity)
            return weights_from_density(fit.density, fit.density_kind, fit.options);
        return fit_weights(fit.density, fit.options);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("weights.fit: ") + e.what());
    }
}

}  // namespace

std::vector<double> TimeGrid::points() const
{
    std::vector<double> t(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) t[i] = min_s + (max_s - min_s) * i / (count - 1);
    t.back() = max_s;
    return t;
}

double ExperimentConfig::spacing_s() const { return spacing_for_nyquist_fraction(bandwidth_hz, nyquist_fraction); }

ExperimentConfig parse_config(const json& doc, const std::filesystem::path& base_dir)
{
    check_keys(doc, "config",
               {"bandwidth_hz", "signal", "nyquist_fraction", "half_count_N", "t_grid", "kinds",
                "ridge_sigma2", "seed", "weights", "norm_bound_D", "energy_bound_E", "mc"});
    ExperimentConfig c;
    const std::string top = "config";

    if (doc.contains("bandwidth_hz")) c.bandwidth_hz = get_finite(doc, "bandwidth_hz", top);
    if (!(c.bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz: must be positive");

    if (doc.contains("signal")) c.signal = get<std::string>(doc, "signal", top);
    if (c.signal != "example1" && c.signal != "example2")
        throw ConfigError("signal: expected example1 or example2");

    if (doc.contains("nyquist_fraction")) c.nyquist_fraction = get_finite(doc, "nyquist_fraction", top);
    if (!(c.nyquist_fraction > 0.0 && c.nyquist_fraction <= 1.0))
        throw ConfigError("nyquist_fraction: must lie in (0, 1]");

    if (doc.contains("half_count_N")) c.half_count_N = get_int(doc, "half_count_N", top);
    if (c.half_count_N < 0) throw ConfigError("half_count_N: must be nonnegative");

    const double T = c.spacing_s();
    c.t_grid = {-c.half_count_N * T, c.half_count_N * T, 401};
    if (c.half_count_N == 0) c.t_grid = {-T, T, 401};
    if (doc.contains("t_grid")) {
        const json& g = doc.at("t_grid");
        check_keys(g, "t_grid", {"min_s", "max_s", "count"});
        if (g.contains("min_s")) c.t_grid.min_s = get_finite(g, "min_s", "t_grid");
        if (g.contains("max_s")) c.t_grid.max_s = get_finite(g, "max_s", "t_grid");
        if (g.contains("count")) c.t_grid.count = get_int(g, "count", "t_grid");
    }
    if (c.t_grid.count < 2) throw ConfigError("t_grid.count: must be at least 2");
    if (!(c.t_grid.min_s < c.t_grid.max_s)) throw ConfigError("t_grid: min_s must be below max_s");

    if (doc.contains("kinds")) {
        const auto names = get<std::vector<std::string>>(doc, "kinds", top);
        if (names.empty()) throw ConfigError("kinds: must be nonempty");
        c.kinds.clear();
        for (const auto& n : names) {
            const auto k = canonical_kind(n);
            for (const auto& existing : c.kinds)
                if (existing == k) throw ConfigError("kinds: '" + k + "' listed twice");
            c.kinds.push_back(k);
        }
    }

    if (doc.contains("ridge_sigma2")) c.ridge_sigma2 = get_finite(doc, "ridge_sigma2", top);
    if (c.ridge_sigma2 < 0.0) throw ConfigError("ridge_sigma2: must be nonnegative");

    if (doc.contains("seed")) {
        const auto& v = doc.at("seed");
        if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            throw ConfigError("seed: expected a nonnegative integer");
        c.seed = doc.at("seed").get<std::uint64_t>();
    }

    if (doc.contains("norm_bound_D")) {
        c.norm_bound_D = get_finite(doc, "norm_bound_D", top);
        if (*c.norm_bound_D < 0.0) throw ConfigError("norm_bound_D: must be nonnegative");
    }
    if (doc.contains("energy_bound_E")) {
        c.energy_bound_E = get_finite(doc, "energy_bound_E", top);
        if (*c.energy_bound_E < 0.0) throw ConfigError("energy_bound_E: must be nonnegative");
    }

    if (doc.contains("mc")) {
        const json& m = doc.at("mc");
        check_keys(m, "mc", {"realizations", "nyquist_fractions", "half_counts", "psd", "eval_count"});
        if (m.contains("realizations")) c.mc.realizations = get_int(m, "realizations", "mc");
        if (c.mc.realizations < 1) throw ConfigError("mc.realizations: must be at least 1");
        if (m.contains("nyquist_fractions"))
            c.mc.nyquist_fractions = get<std::vector<double>>(m, "nyquist_fractions", "mc");
        if (c.mc.nyquist_fractions.empty()) throw ConfigError("mc.nyquist_fractions: must be nonempty");
        for (double f : c.mc.nyquist_fractions)
            if (!(f > 0.0 && f <= 1.0)) throw ConfigError("mc.nyquist_fractions: entries must lie in (0, 1]");
        if (m.contains("half_counts")) c.mc.half_counts = get<std::vector<int>>(m, "half_counts", "mc");
        for (int n : c.mc.half_counts)
            if (n < 0) throw ConfigError("mc.half_counts: entries must be nonnegative");
        if (m.contains("psd")) c.mc.psd = get<std::string>(m, "psd", "mc");
        if (c.mc.psd != "weights" && c.mc.psd != "uniform")
            throw ConfigError("mc.psd: expected weights or uniform");
        if (m.contains("eval_count")) c.mc.eval_count = get_int(m, "eval_count", "mc");
        if (c.mc.eval_count < 1) throw ConfigError("mc.eval_count: must be at least 1");
    }
    if (c.mc.half_counts.empty()) c.mc.half_counts = {c.half_count_N};

    // weights last: they depend on the bandwidth
    c.weights_source = "preset:" + c.signal;
    try {
        if (!doc.contains("weights")) {
            c.weights = preset(c.signal, c.bandwidth_hz);
        } else if (doc.at("weights").is_string()) {
            const auto name = doc.at("weights").get<std::string>();
            c.weights = preset(name, c.bandwidth_hz);
            c.weights_source = "preset:" + name;
        } else if (doc.at("weights").is_object() && doc.at("weights").contains("fit")) {
            check_keys(doc.at("weights"), "weights", {"fit"});
            c.fit = parse_fit(doc.at("weights").at("fit"), c.bandwidth_hz, base_dir);
            c.weights = run_fit(*c.fit).spec;
            c.weights_source = "fit";
        } else if (doc.at("weights").is_object()) {
            c.weights = weight_spec_from_json(doc.at("weights"));
            c.weights_source = "inline";
            if (std::abs(c.weights.bandwidth() - c.bandwidth_hz) > 1e-12 * c.bandwidth_hz)
                throw ConfigError("weights.bandwidth_B must equal bandwidth_hz");
        } else {
            throw ConfigError("weights: expected a preset name or an object");
        }
    } catch (const FitError&) {
        throw;
    } catch (const InvalidWeight& e) {
        throw ConfigError(std::string("weights: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("weights: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config '" + path.string() + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    json doc;
    try {
        doc = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc, path.parent_path());
}

}  // namespace wsinterp::cli

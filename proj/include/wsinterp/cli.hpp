#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wsinterp/spectral_weights.hpp"
#include "wsinterp/stochastic.hpp"

namespace wsinterp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double min_s = -10.0;
    double max_s = 10.0;
    int count = 401;

    std::vector<double> points() const;
};

struct FitConfig {
    DensityGrid density;
    DensityKind density_kind = DensityKind::Psd;
    FitOptions options;
};

struct McConfig {
    int realizations = 1000;
    std::vector<double> nyquist_fractions{0.5};
    std::vector<int> half_counts;  // empty: use half_count_N
    /// "weights" (S = 1/W of the configured spec) or "uniform".
    std::string psd = "weights";
    int eval_count = 101;
};

struct ExperimentConfig {
    double bandwidth_hz = 1.0;
    std::string signal = "example1";
    double nyquist_fraction = 1.0;
    int half_count_N = 10;
    TimeGrid t_grid;
    std::vector<std::string> kinds{"weighted", "uniform", "sinc"};
    double ridge_sigma2 = 0.0;
    std::uint64_t seed = 0;

    /// Resolved weight spec; from a preset, an inline document, or a fit.
    WeightSpec weights = WeightSpec::uniform(1.0);
    std::string weights_source = "preset:example1";
    std::optional<FitConfig> fit;

    std::optional<double> norm_bound_D;
    std::optional<double> energy_bound_E;
    McConfig mc;

    double spacing_s() const;
};

/// Relative paths inside the document (density_csv) resolve against base_dir.
ExperimentConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// File name (no directory part) and contents.
using OutputFiles = std::vector<std::pair<std::string, std::string>>;

OutputFiles cmd_kernel(const ExperimentConfig& config);
OutputFiles cmd_compare(const ExperimentConfig& config);
OutputFiles cmd_cardinals(const ExperimentConfig& config);
OutputFiles cmd_bounds(const ExperimentConfig& config);
OutputFiles cmd_mc(const ExperimentConfig& config);
OutputFiles cmd_fit(const ExperimentConfig& config);

/// Sign changes along a sequence; entries within 1e-12 of zero (relative to
/// the largest magnitude) are skipped.
int sign_changes(const std::vector<double>& values);

/// Writes every file into dir (created if missing). Each file goes through a
/// temporary name and a rename.
void write_outputs(const std::filesystem::path& dir, const OutputFiles& files);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsinterp::cli

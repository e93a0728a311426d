#include <ostream>

#include "CLI11.hpp"
#include "wsinterp/cli.hpp"
#include "wsinterp/errors.hpp"

namespace wsinterp::cli {

namespace {

struct Command {
    const char* name;
    const char* help;
    OutputFiles (*fn)(const ExperimentConfig&);
};

constexpr Command kCommands[] = {
    {"kernel", "reproducing kernel psi(t) next to 2B sinc(2Bt)", cmd_kernel},
    {"compare", "truth and interpolants of a test signal, with error summary", cmd_compare},
    {"cardinals", "centre cardinal functions against sinc(t/T)", cmd_cardinals},
    {"bounds", "weighted and classical pointwise error bounds", cmd_bounds},
    {"mc", "Monte-Carlo MSE table for the interpolator kinds", cmd_mc},
    {"fit", "weight spec fit and density round trip", cmd_fit},
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Minimum-norm interpolation in weighted Hilbert spaces", "wsinterp"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir = ".";
    std::uint64_t seed = 0;
    bool quiet = false;

    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : kCommands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--config", config_path, "JSON experiment config")->required();
        sub->add_option("--output-dir", output_dir, "directory for output files")->capture_default_str();
        sub->add_option("--seed", seed, "random seed; overrides the config value");
        sub->add_flag("--quiet", quiet, "no progress output");
        subs.emplace_back(sub, &c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    const Command* cmd = nullptr;
    CLI::App* sub = nullptr;
    for (auto& [s, c] : subs)
        if (s->parsed()) sub = s, cmd = c;

    try {
        ExperimentConfig config = load_config(config_path);
        if (sub->count("--seed")) config.seed = seed;
        const OutputFiles files = cmd->fn(config);
        write_outputs(output_dir, files);
        if (!quiet) {
            for (const auto& f : files) out << (std::filesystem::path(output_dir) / f.first).string() << "\n";
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NotPositiveDefinite& e) {
        err << "numerical failure: " << e.what() << " (condition estimate " << e.condition_estimate()
            << "); consider ridge_sigma2 > 0 or a spacing with T >= 1/(2B)\n";
        return kExitNumerical;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace wsinterp::cli

#include "ifnstat/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string_view>

using namespace ifnstat;

namespace {

constexpr const char* kUsage =
    "usage: ifnstat <command> [options]\n"
    "\n"
    "commands:\n"
    "  analyze <config>                 run the detector named by the config\n"
    "  density <config>                 lambda-density trace of the config's index_set\n"
    "  axioms <config>                  certify the t-norm, t-conorm and fuzzy norm\n"
    "  reproduce example-1|example-2    reproduce a worked example with default settings\n"
    "\n"
    "options (all commands):\n"
    "  --n-max N  --epsilon E  --time T  --lambda identity|sqrt|log\n"
    "  --out DIR  (reproduce only; default reproduce-<example>)\n";

struct Flags {
    std::optional<Index> n_max;
    std::optional<double> epsilon;
    std::optional<double> time;
    std::optional<std::string> lambda;

    Overrides overrides() const { return {n_max, epsilon, time, lambda}; }
};

void add_overrides(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--n-max", flags.n_max, "horizon n_max");
    cmd->add_option("--epsilon", flags.epsilon, "epsilon in (0,1)");
    cmd->add_option("--time", flags.time, "time parameter t > 0");
    cmd->add_option("--lambda", flags.lambda, "lambda family");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-statistical convergence in intuitionistic fuzzy normed spaces", "ifnstat"};
    app.require_subcommand(1);

    Flags flags;
    std::string config_path;
    std::string example;
    std::string out_dir;

    auto* analyze = app.add_subcommand("analyze", "run the configured detector");
    auto* density = app.add_subcommand("density", "density trace of an index set");
    auto* axioms = app.add_subcommand("axioms", "certify the configured operations");
    for (auto* cmd : {analyze, density, axioms}) {
        cmd->add_option("config", config_path, "YAML config")->required();
        add_overrides(cmd, flags);
    }
    auto* reproduce = app.add_subcommand("reproduce", "reproduce a worked example");
    reproduce->add_option("example", example, "example-1 or example-2")->required();
    reproduce->add_option("--out", out_dir, "output directory");
    add_overrides(reproduce, flags);

    if (argc > 1 && argv[1][0] != '-') {
        const std::string_view command = argv[1];
        if (command != "analyze" && command != "density" && command != "axioms" && command != "reproduce") {
            std::cerr << "error: unknown subcommand '" << command << "'\n\n" << kUsage;
            return kExitConfigError;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << kUsage;
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << kUsage;
        return kExitConfigError;
    }

    try {
        if (*reproduce) {
            ExampleId id;
            try {
                id = example_from_string(example);
            } catch (const std::invalid_argument&) {
                std::cerr << "error: unknown example '" << example << "'\n\n" << kUsage;
                return kExitConfigError;
            }
            if (out_dir.empty()) out_dir = "reproduce-" + example;
            return run_reproduce(id, flags.overrides(), out_dir, std::cout);
        }

        ExperimentConfig config = load_config(config_path);
        apply_overrides(config, flags.overrides());
        if (*analyze) return run_analyze(config, std::cout);
        if (*density) return run_density(config, std::cout);
        return run_axioms(config, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}

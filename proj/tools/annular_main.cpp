#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "annular/run_config.hpp"
#include "annular/run_ops.hpp"

int main(int argc, char** argv) {
    CLI::App app{"steady radially symmetric annular gas flows"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int samples = 0;
    int points = 50;

    CLI::App* classify = app.add_subcommand("classify", "print the flow regime report");
    CLI::App* profile = app.add_subcommand("profile", "write the radial profile table");
    CLI::App* shock = app.add_subcommand("shock", "print the transonic shock solution");
    CLI::App* sweep = app.add_subcommand("sweep", "write the shock position sweep table");
    CLI::App* limits =
        app.add_subcommand("limits", "print the analytical radii and the pressure interval");
    for (CLI::App* cmd : {classify, profile, shock, sweep, limits})
        cmd->add_option("--config", config_path, "configuration file")->required();
    for (CLI::App* cmd : {profile, sweep})
        cmd->add_option("--out", out_path, "output file, overrides output.path");
    profile->add_option("--samples", samples, "number of rows, overrides the config");
    sweep->add_option("--points", points, "number of shock positions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        annular::RunConfig cfg = annular::load_config(config_path);
        if (profile->count("--samples") > 0) {
            cfg.samples = samples;
            annular::validate(cfg);
        }
        if (app.got_subcommand(classify)) return annular::run_classify(cfg, std::cout);
        if (app.got_subcommand(shock)) return annular::run_shock(cfg, std::cout);
        if (app.got_subcommand(limits)) return annular::run_limits(cfg, std::cout);
        const std::string path = !out_path.empty() ? out_path : cfg.output.path;
        if (path.empty())
            throw annular::ConfigError("main: table commands need --out or output.path");
        if (app.got_subcommand(profile)) {
            annular::run_profile(cfg, path);
        } else {
            annular::run_sweep(cfg, points, path);
        }
        return 0;
    } catch (const annular::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const annular::SolverError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}

#include "cli/commands.hpp"
#include "cli/config.hpp"

#include <mtjsyn/errors.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

int main(int argc, char **argv) {
    using namespace mtjsyn::cli;

    CLI::App app{"Stochastic macrospin MTJ synapse simulator"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::optional<std::string> seed, out_dir, trials, interval, threads, mask;
    std::vector<std::string> sets;

    app.add_option("--config", config_path, "flat key = value configuration file");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--trials", trials, "Monte Carlo trials per interval");
    app.add_option("--interval-ns", interval, "inter-pulse gap for trace (ns)");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--set", sets, "override any config key: --set key=value")->take_all();

    std::string chosen;
    for (const auto &name : subcommands()) {
        auto *sub = app.add_subcommand(name);
        sub->fallthrough();
        sub->callback([&chosen, name] { chosen = name; });
        if (name == "array") sub->add_option("--mask", mask, "P1 bitmap stimulus (default: bundled glyph)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RunConfig config;
    try {
        std::string content;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                std::cerr << "error: cannot read config file '" << config_path << "'\n";
                return kExitUsage;
            }
            std::ostringstream ss;
            ss << f.rdbuf();
            content = ss.str();
        }
        std::vector<Override> overrides;
        for (const auto &s : sets) overrides.push_back(parse_override(s));
        if (seed) overrides.emplace_back("seed", *seed);
        if (out_dir) overrides.emplace_back("out_dir", *out_dir);
        if (trials) overrides.emplace_back("trials", *trials);
        if (interval) overrides.emplace_back("interval_ns", *interval);
        if (threads) overrides.emplace_back("threads", *threads);
        if (mask) overrides.emplace_back("mask_path", *mask);
        config = parse_config(content, overrides);
    } catch (const mtjsyn::ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return dispatch(chosen, config, std::cout, std::cerr);
}

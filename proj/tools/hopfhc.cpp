// Batch front-end: read a run configuration, execute the requested suite, and
// emit the JSON report. Exit codes: 0 all checks pass, 1 assertion failure
// (witness in the report), 2 usage or configuration error.

#include <CLI11.hpp>

#include "hopfhc/runner.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"hopfhc - exact (para-)cocyclic complexes for concrete Hopf algebras"};
    std::string config_path;
    std::string output_override;
    int max_degree_override = -1;
    app.add_option("config", config_path, "path to the run configuration")->required();
    app.add_option("--output", output_override, "write the report here instead of the configured path");
    app.add_option("--max-degree", max_degree_override, "override max_degree from the config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: cannot open config " << config_path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    hopfhc::RunConfig cfg;
    try {
        cfg = hopfhc::parse_config(buffer.str());
    } catch (const hopfhc::ParseError& e) {
        std::cerr << "error: " << config_path << ":" << e.line << ": " << e.what() << "\n";
        return 2;
    } catch (const hopfhc::ValidationError& e) {
        std::cerr << "error: invalid config key '" << e.key << "': " << e.what() << "\n";
        return 2;
    }
    if (!output_override.empty()) cfg.output = output_override;
    if (max_degree_override >= 0) cfg.max_degree = max_degree_override;

    hopfhc::RunResult result;
    try {
        result = hopfhc::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.output.empty()) {
        std::cout << result.report_json;
    } else {
        std::ofstream out(cfg.output);
        if (!out) {
            std::cerr << "error: cannot write report to " << cfg.output << "\n";
            return 2;
        }
        out << result.report_json;
    }
    return result.exit_code;
}

// Batch front door: scenario runs, convergence studies over the degree cap,
// and the side-by-side criterion oracle.  Exit codes: 0 all checks passed,
// 1 a check failed (or the oracle columns disagree), 2 input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bidisc/runner.hpp"

namespace {

int emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    out << body;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical workbench for wandering subspaces of the Bergman shift"};
    app.require_subcommand(1);

    bidisc::RunOptions opt;
    std::string scenario_path, out_path;
    int cap_flag = -1, samples_flag = -1, jobs_flag = 1;
    double tol_flag = -1.0;

    auto add_common = [&](CLI::App* cmd, bool with_jobs) {
        cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
        cmd->add_option("--cap", cap_flag, "override the degree cap");
        cmd->add_option("--tol", tol_flag, "override the relative tolerance");
        cmd->add_option("--samples", samples_flag, "override the circle sample count");
        cmd->add_option("--format", opt.format, "report format: csv or jsonl")
            ->check(CLI::IsMember({"csv", "jsonl"}));
        cmd->add_flag("--stable", opt.stable, "zero out timing columns for byte-stable output");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        if (with_jobs) cmd->add_option("--jobs", jobs_flag, "run checks concurrently");
    };

    CLI::App* run = app.add_subcommand("run", "execute the checks of a scenario");
    add_common(run, true);

    CLI::App* conv = app.add_subcommand("convergence", "re-run one subspace check over a cap ladder");
    std::string conv_subspace, conv_check = "radial_constancy";
    std::vector<int> conv_caps;
    add_common(conv, false);
    conv->add_option("--subspace", conv_subspace, "subspace name from the scenario")->required();
    conv->add_option("--caps", conv_caps, "strictly increasing cap list")->required()->delimiter(',');
    conv->add_option("--check", conv_check, "radial_constancy, orthonormal_system, or wandering_recovery");

    CLI::App* oracle = app.add_subcommand("oracle", "side-by-side criterion columns for one vector");
    std::string oracle_vector;
    int oracle_kmax = 1;
    add_common(oracle, false);
    oracle->add_option("--vector", oracle_vector, "vector name from the scenario")->required();
    oracle->add_option("--kmax", oracle_kmax, "largest frequency to tabulate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cap_flag >= 0) opt.cap = cap_flag;
    if (tol_flag > 0.0) opt.tol = tol_flag;
    if (samples_flag >= 0) opt.samples = samples_flag;
    opt.jobs = jobs_flag;

    try {
        bidisc::Scenario scenario = bidisc::load_scenario(scenario_path);
        if (run->parsed()) {
            bidisc::RunResult r = bidisc::run_scenario(scenario, opt);
            int io = emit(bidisc::render_report(r.rows, opt), out_path);
            return io ? io : r.exit_code;
        }
        if (conv->parsed()) {
            bidisc::RunResult r = bidisc::run_convergence(scenario, conv_subspace, conv_caps, conv_check, opt);
            int io = emit(bidisc::render_report(r.rows, opt), out_path);
            return io ? io : r.exit_code;
        }
        bidisc::OracleResult r = bidisc::run_oracle(scenario, oracle_vector, oracle_kmax, opt);
        int io = emit(bidisc::render_oracle(r.rows, opt), out_path);
        return io ? io : r.exit_code;
    } catch (const bidisc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const bidisc::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

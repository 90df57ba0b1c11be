#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sds/commands.hpp"

namespace {

std::vector<double> parse_range(const std::string& spec) {
    // "a:b:step" inclusive range
    double a = 0.0, b = 0.0, step = 0.0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0.0) {
        throw CLI::ValidationError("expected a:b:step with step > 0, got '" + spec + "'");
    }
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = a + i * step;
        if (v > b + 1e-12) break;
        grid.push_back(v);
    }
    return grid;
}

void write_output(const sds::CsvDocument& doc, const std::string& out_path) {
    const std::string text = doc.render();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + out_path);
        }
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic diffusion search: analytic model and simulator"};
    app.require_subcommand(1);

    sds::cli::SimOptions sim;
    sds::cli::SweepOptions sweep;
    std::string out_path;
    std::string emit = "trace";
    std::string grid_p_minus_spec;
    std::vector<double> grid_p_m;
    std::vector<std::size_t> grid_n;

    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n-agents", sim.params.n_agents, "population size N");
        cmd->add_option("--p-minus", sim.params.p_minus, "false-negative probability");
        cmd->add_option("--p-m", sim.params.p_m, "best-solution hit probability");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };
    auto add_sim_flags = [&](CLI::App* cmd) {
        add_model_flags(cmd);
        cmd->add_option("--iterations", sim.iterations, "iterations to run");
        cmd->add_option("--burn-in", sim.burn_in, "iterations discarded before statistics");
        cmd->add_option("--seed", sim.seed, "RNG seed");
        cmd->add_option("--task", sim.task_kind, "task kind: urn or string")
            ->check(CLI::IsMember({"urn", "string"}));
        cmd->add_option("--template-length", sim.template_length,
                        "template length for the string task");
    };

    auto* c_model = app.add_subcommand("model", "analytic steady state for one parameter set");
    add_model_flags(c_model);

    auto* c_table2 = app.add_subcommand("table2", "analytic predictions for the standard grid");
    c_table2->add_option("--out", out_path, "output file (default: stdout)");

    auto* c_table1 = app.add_subcommand("table1", "empirical vs analytic means and stds");
    add_sim_flags(c_table1);

    auto* c_sweep = app.add_subcommand("sweep", "analytic quantity over a parameter grid");
    c_sweep->add_option("--quantity", sweep.quantity,
                        "normalized_mean, std or rescaled_std");
    c_sweep->add_option("--grid-p-minus", grid_p_minus_spec, "p_minus grid as a:b:step");
    c_sweep->add_option("--grid-p-m", grid_p_m, "p_m grid values")->delimiter(',');
    c_sweep->add_option("--grid-n", grid_n, "n_agents grid values")->delimiter(',');
    c_sweep->add_option("--out", out_path, "output file (default: stdout)");

    auto* c_simulate = app.add_subcommand("simulate", "run one simulation");
    add_sim_flags(c_simulate);
    c_simulate->add_option("--emit", emit, "trace, summary or band")
        ->check(CLI::IsMember({"trace", "summary", "band"}));

    auto* c_ergodicity = app.add_subcommand("ergodicity", "ergodicity coefficients along a run");
    add_sim_flags(c_ergodicity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        sds::CsvDocument doc;
        if (c_model->parsed()) {
            doc = sds::cli::cmd_model(sim.params);
        } else if (c_table2->parsed()) {
            doc = sds::cli::cmd_table2();
        } else if (c_table1->parsed()) {
            doc = sds::cli::cmd_table1(sim);
        } else if (c_sweep->parsed()) {
            if (!grid_p_minus_spec.empty()) sweep.grid_p_minus = parse_range(grid_p_minus_spec);
            sweep.grid_p_m = grid_p_m;
            sweep.grid_n_agents = grid_n;
            doc = sds::cli::cmd_sweep(sweep);
        } else if (c_simulate->parsed()) {
            doc = sds::cli::cmd_simulate(sim, emit);
        } else {
            doc = sds::cli::cmd_ergodicity(sim);
        }
        write_output(doc, out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

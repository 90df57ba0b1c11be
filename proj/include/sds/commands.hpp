#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sds/csv.hpp"
#include "sds/model.hpp"
#include "sds/sim.hpp"

namespace sds::cli {

inline constexpr const char* kVersion = "1.0.0";

struct SimOptions {
    ModelParams params{1000, 0.2, 0.001};
    std::size_t iterations = 2000;
    std::size_t burn_in = 500;
    std::uint64_t seed = 0;
    std::string task_kind = "urn";  // "urn" or "string"
    std::size_t template_length = 10;

    void validate() const;
};

struct SweepOptions {
    std::vector<double> grid_p_minus;        // empty -> 0:0.99:0.01
    std::vector<double> grid_p_m;            // empty -> {1e-4,1e-3,1e-2,0.1,0.5}
    std::vector<std::size_t> grid_n_agents;  // empty -> {1000}
    std::string quantity = "normalized_mean";  // normalized_mean | std | rescaled_std
};

// Instantiates the search environment matching (p_minus, p_m).
std::unique_ptr<SearchTask> make_task(const std::string& kind, double p_minus, double p_m,
                                      std::size_t template_length);

// One analytic row for the given parameters.
CsvDocument cmd_model(const ModelParams& params);

// The four analytic rows at N=1000, p_m=0.001, p_minus in {0.1,0.2,0.5,0.7}.
CsvDocument cmd_table2();

// Empirical mean/std from four runs at the same parameter set, next to the
// model predictions.
CsvDocument cmd_table1(const SimOptions& opts);

// Analytic quantity over a parameter grid.
CsvDocument cmd_sweep(const SweepOptions& opts);

// Single run; emit is "trace", "summary" or "band".
CsvDocument cmd_simulate(const SimOptions& opts, const std::string& emit);

// Per-iteration ergodicity coefficients and cumulative sums along a run.
CsvDocument cmd_ergodicity(const SimOptions& opts);

}  // namespace sds::cli

#include "sds/commands.hpp"

#include <cmath>
#include <stdexcept>

#include "sds/stats.hpp"

namespace sds::cli {

namespace {

std::vector<std::string> param_meta(const std::string& command, const ModelParams& p) {
    return {
        "command=" + command,
        "n_agents=" + format_number(static_cast<unsigned long long>(p.n_agents)) +
            " p_minus=" + format_number(p.p_minus) + " p_m=" + format_number(p.p_m),
        std::string("rng=") + RngStream::algorithm() + " version=" + kVersion,
    };
}

void append_sim_meta(CsvDocument& doc, const SimOptions& o) {
    doc.meta.push_back("task=" + o.task_kind +
                       " iterations=" + format_number(static_cast<unsigned long long>(o.iterations)) +
                       " burn_in=" + format_number(static_cast<unsigned long long>(o.burn_in)) +
                       " seed=" + format_number(static_cast<unsigned long long>(o.seed)));
}

std::vector<std::string> model_row(const ModelParams& p) {
    const SteadyState s = steady_state(p);
    return {format_number(p.p_minus),
            format_number(p.p_m),
            format_number(static_cast<unsigned long long>(p.n_agents)),
            format_number(s.pi1),
            format_number(s.expected_active),
            format_number(s.std_active),
            format_number(static_cast<long long>(s.mode))};
}

}  // namespace

void SimOptions::validate() const {
    params.validate();
    if (burn_in >= iterations) {
        throw std::domain_error("burn_in must be smaller than iterations");
    }
    if (task_kind != "urn" && task_kind != "string") {
        throw std::domain_error("task must be 'urn' or 'string'");
    }
    if (params.p_m <= 0.0) {
        throw std::domain_error("simulation requires p_m > 0");
    }
}

std::unique_ptr<SearchTask> make_task(const std::string& kind, double p_minus, double p_m,
                                      std::size_t template_length) {
    if (p_m <= 0.0) {
        throw std::domain_error("task construction requires p_m > 0");
    }
    const auto hypothesis_count = static_cast<std::size_t>(std::llround(1.0 / p_m));
    if (kind == "urn") {
        return std::make_unique<BernoulliTask>(p_minus, hypothesis_count);
    }
    if (kind == "string") {
        return std::make_unique<StringTask>(
            make_string_task(p_minus, template_length, hypothesis_count));
    }
    throw std::domain_error("unknown task kind: " + kind);
}

CsvDocument cmd_model(const ModelParams& params) {
    params.validate();
    CsvDocument doc;
    doc.meta = param_meta("model", params);
    doc.header = {"p_minus", "p_m", "n_agents", "pi1", "expected_active", "std_active", "mode"};
    doc.rows.push_back(model_row(params));
    return doc;
}

CsvDocument cmd_table2() {
    CsvDocument doc;
    doc.meta = {
        "command=table2",
        "n_agents=1000 p_m=0.001 p_minus={0.1,0.2,0.5,0.7}",
        std::string("rng=") + RngStream::algorithm() + " version=" + kVersion,
        "note: the p_minus=0.1 row follows the flux-balance root (888.90, 9.94); the",
        "note: originally reported values 888.06/9.97 for that row differ slightly.",
    };
    doc.header = {"p_minus", "p_m", "n_agents", "pi1", "expected_active", "std_active", "mode"};
    for (double q : {0.1, 0.2, 0.5, 0.7}) {
        doc.rows.push_back(model_row(ModelParams{1000, q, 0.001}));
    }
    return doc;
}

CsvDocument cmd_table1(const SimOptions& opts) {
    opts.validate();
    CsvDocument doc;
    doc.meta = {
        "command=table1",
        "n_agents=" + format_number(static_cast<unsigned long long>(opts.params.n_agents)) +
            " p_m=" + format_number(opts.params.p_m) + " p_minus={0.1,0.2,0.5,0.7}",
        std::string("rng=") + RngStream::algorithm() + " version=" + kVersion,
    };
    append_sim_meta(doc, opts);
    doc.header = {"p_minus", "empirical_mean", "empirical_std", "model_mean", "model_std"};
    const double grid[] = {0.1, 0.2, 0.5, 0.7};
    for (std::size_t i = 0; i < 4; ++i) {
        const double q = grid[i];
        const ModelParams p{opts.params.n_agents, q, opts.params.p_m};
        const auto task = make_task(opts.task_kind, q, p.p_m, opts.template_length);
        const Trace trace =
            run(*task, p.n_agents, opts.iterations, derive_seed(opts.seed, i));
        const SummaryStats st = summarize(trace, opts.burn_in);
        const SteadyState model = steady_state(p);
        doc.rows.push_back({format_number(q), format_number(st.mean), format_number(st.std),
                            format_number(model.expected_active),
                            format_number(model.std_active)});
    }
    return doc;
}

CsvDocument cmd_sweep(const SweepOptions& opts) {
    std::vector<double> grid_q = opts.grid_p_minus;
    if (grid_q.empty()) {
        for (int i = 0; i <= 99; ++i) grid_q.push_back(i * 0.01);
    }
    std::vector<double> grid_pm = opts.grid_p_m;
    if (grid_pm.empty()) grid_pm = {1e-4, 1e-3, 1e-2, 0.1, 0.5};
    std::vector<std::size_t> grid_n = opts.grid_n_agents;
    if (grid_n.empty()) grid_n = {1000};

    const std::string& qty = opts.quantity;
    if (qty != "normalized_mean" && qty != "std" && qty != "rescaled_std") {
        throw std::domain_error("quantity must be normalized_mean, std or rescaled_std");
    }

    CsvDocument doc;
    doc.meta = {
        "command=sweep quantity=" + qty,
        "grid sizes: p_minus=" + format_number(static_cast<unsigned long long>(grid_q.size())) +
            " p_m=" + format_number(static_cast<unsigned long long>(grid_pm.size())) +
            " n_agents=" + format_number(static_cast<unsigned long long>(grid_n.size())),
        std::string("rng=") + RngStream::algorithm() + " version=" + kVersion,
    };
    doc.header = {"n_agents", "p_minus", "p_m", qty};
    const bool rescaled = qty == "rescaled_std";
    if (rescaled) doc.header.push_back("scaling_factor");

    for (std::size_t n : grid_n) {
        for (double q : grid_q) {
            for (double pm : grid_pm) {
                const SteadyState s = steady_state(ModelParams{n, q, pm});
                double value;
                if (qty == "normalized_mean") {
                    value = s.pi1;
                } else if (qty == "std") {
                    value = s.std_active;
                } else {
                    value = std::sqrt(s.pi1 * s.pi2);
                }
                std::vector<std::string> row = {
                    format_number(static_cast<unsigned long long>(n)), format_number(q),
                    format_number(pm), format_number(value)};
                if (rescaled) {
                    row.push_back(format_number(1.0 / std::sqrt(static_cast<double>(n))));
                }
                doc.rows.push_back(std::move(row));
            }
        }
    }
    return doc;
}

CsvDocument cmd_simulate(const SimOptions& opts, const std::string& emit) {
    opts.validate();
    if (emit != "trace" && emit != "summary" && emit != "band") {
        throw std::domain_error("emit must be trace, summary or band");
    }
    const auto task =
        make_task(opts.task_kind, opts.params.p_minus, opts.params.p_m, opts.template_length);
    const Trace trace = run(*task, opts.params.n_agents, opts.iterations, opts.seed);
    const SteadyState model = steady_state(opts.params);

    CsvDocument doc;
    doc.meta = param_meta("simulate emit=" + emit, opts.params);
    append_sim_meta(doc, opts);

    if (emit == "trace") {
        doc.header = {"iteration", "m", "model_mean", "band_low", "band_high"};
        const std::string mean = format_number(model.expected_active);
        const std::string lo = format_number(model.expected_active - 2.0 * model.std_active);
        const std::string hi = format_number(model.expected_active + 2.0 * model.std_active);
        for (std::size_t t = 0; t < trace.values.size(); ++t) {
            doc.rows.push_back({format_number(static_cast<unsigned long long>(t + 1)),
                                format_number(static_cast<unsigned long long>(trace.values[t])),
                                mean, lo, hi});
        }
    } else if (emit == "summary") {
        const SummaryStats st = summarize(trace, opts.burn_in);
        doc.header = {"p_minus", "p_m", "n_agents", "mean", "std", "model_mean", "model_std",
                      "count", "burn_in"};
        doc.rows.push_back({format_number(opts.params.p_minus), format_number(opts.params.p_m),
                            format_number(static_cast<unsigned long long>(opts.params.n_agents)),
                            format_number(st.mean), format_number(st.std),
                            format_number(model.expected_active), format_number(model.std_active),
                            format_number(static_cast<unsigned long long>(st.count)),
                            format_number(static_cast<unsigned long long>(st.burn_in))});
    } else {
        const double coverage = band_coverage(trace, opts.burn_in, model.expected_active,
                                              2.0 * model.std_active);
        doc.header = {"p_minus", "p_m", "n_agents", "center", "halfwidth", "coverage"};
        doc.rows.push_back({format_number(opts.params.p_minus), format_number(opts.params.p_m),
                            format_number(static_cast<unsigned long long>(opts.params.n_agents)),
                            format_number(model.expected_active),
                            format_number(2.0 * model.std_active), format_number(coverage)});
    }
    return doc;
}

CsvDocument cmd_ergodicity(const SimOptions& opts) {
    // burn_in is unused here, so only the task parameters are validated
    opts.params.validate();
    if (opts.params.p_m <= 0.0) {
        throw std::domain_error("simulation requires p_m > 0");
    }
    if (opts.task_kind != "urn" && opts.task_kind != "string") {
        throw std::domain_error("task must be 'urn' or 'string'");
    }
    const auto task =
        make_task(opts.task_kind, opts.params.p_minus, opts.params.p_m, opts.template_length);
    const Trace trace = run(*task, opts.params.n_agents, opts.iterations, opts.seed);
    const std::vector<double> sums = weak_ergodicity_partial_sums(trace.values, opts.params);
    const double slope = opts.params.p_m * (1.0 - opts.params.p_minus);

    CsvDocument doc;
    doc.meta = param_meta("ergodicity", opts.params);
    append_sim_meta(doc, opts);
    doc.header = {"iteration", "m", "lambda", "cumulative_one_minus_lambda", "lower_bound"};
    for (std::size_t t = 0; t < trace.values.size(); ++t) {
        const double lambda =
            ergodicity_coefficient(build_transition_matrix(trace.values[t], opts.params));
        doc.rows.push_back({format_number(static_cast<unsigned long long>(t + 1)),
                            format_number(static_cast<unsigned long long>(trace.values[t])),
                            format_number(lambda), format_number(sums[t]),
                            format_number(static_cast<double>(t + 1) * slope)});
    }
    return doc;
}

}  // namespace sds::cli

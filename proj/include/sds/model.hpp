#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sds {

/// Parameters of the two-state agent model: population size N, false-negative
/// test probability p_minus at the best solution, and the probability p_m that
/// a uniform resample lands on the best solution.
struct ModelParams {
    std::size_t n_agents = 1;
    double p_minus = 0.0;
    double p_m = 0.0;

    void validate() const;
};

/// 2x2 row-stochastic matrix over the states {active, inactive}.
struct TransitionMatrix2 {
    double aa = 1.0;  // active -> active
    double an = 0.0;  // active -> inactive
    double na = 0.0;  // inactive -> active
    double nn = 1.0;  // inactive -> inactive

    bool row_stochastic(double tol = 1e-12) const;
};

TransitionMatrix2 identity_matrix();

/// Analytic equilibrium of the model.
struct SteadyState {
    double pi1 = 0.0;             // equilibrium activity probability of one agent
    double pi2 = 1.0;
    double expected_active = 0.0; // N * pi1
    double std_active = 0.0;      // sqrt(N * pi1 * pi2)
    double mode_low = 0.0;        // (N+1)*pi1 - 1
    double mode_high = 0.0;       // (N+1)*pi1
    long mode = 0;                // integer mode, clamped to [0, N]
};

/// Element of the set K the mean-field map acts on: an activity distribution
/// (p, 1-p) paired with the transition matrix generated from p.
struct MeanFieldState {
    std::array<double, 2> activity{0.0, 1.0};
    TransitionMatrix2 matrix;
};

// Per-agent activation probability when a fraction x of the population is
// active: copy an active agent with probability x, otherwise resample and hit
// the best solution with probability p_m; either way the test must pass.
double p1_of_activity(double x, const ModelParams& params);

// One-step agent matrix given m of N agents active.
TransitionMatrix2 build_transition_matrix(std::size_t m, const ModelParams& params);

// Same matrix at a real-valued activity fraction.
TransitionMatrix2 transition_matrix_at(double activity_fraction, const ModelParams& params);

// Solves the flux-balance equation pi1*p_minus = (1-pi1)*p1_of_activity(pi1)
// for the unique root in [0,1] and fills in moments and mode bounds.
SteadyState steady_state(const ModelParams& params);

// Binomial stationary mass P(n active of N), evaluated in log space.
double stationary_pmf(const ModelParams& params, double pi1, std::size_t n);

// Product-form probability of one exact activity configuration.
double configuration_probability(const std::vector<bool>& config, double pi1);

// Brute-force aggregate of configuration_probability over all 2^N
// configurations, bucketed by active count. Oracle for stationary_pmf.
std::vector<double> aggregate_configurations(std::size_t n, double pi1);

// Markov-Dobrushin contraction coefficient: 1 - sum_j min_i M[i][j].
double ergodicity_coefficient(const TransitionMatrix2& m);

// Cumulative sums of 1 - lambda(P_m) along a trajectory of active counts.
std::vector<double> weak_ergodicity_partial_sums(const std::vector<std::size_t>& m_trajectory,
                                                 const ModelParams& params);

// The self-consistency map S: (p, P) -> (p*P, P rebuilt from the new activity).
MeanFieldState mean_field_map(const MeanFieldState& state, const ModelParams& params);

// Builds the K element whose matrix is consistent with the given activity.
MeanFieldState make_mean_field_state(double active_prob, const ModelParams& params);

struct FixedPointResult {
    MeanFieldState state;
    std::size_t iterations = 0;
};

// Iterates mean_field_map until successive states are closer than tol in
// k_distance. Throws on non-convergence.
FixedPointResult fixed_point_iterate(const ModelParams& params, const MeanFieldState& init,
                                     double tol, std::size_t max_iter);

// l1 distance of the activity vectors plus the max-absolute-column-sum norm of
// the matrix difference.
double k_distance(const MeanFieldState& a, const MeanFieldState& b);

// Transition matrix at the equilibrium activity pi1.
TransitionMatrix2 limit_matrix(const ModelParams& params);

// Left-to-right product of row-stochastic matrices; empty input gives identity.
TransitionMatrix2 forward_product(const std::vector<TransitionMatrix2>& matrices);

}  // namespace sds

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sds/model.hpp"
#include "sds/sim.hpp"
#include "sds/stats.hpp"

using namespace sds;

TEST_CASE("init_population is deterministic, inactive and uniform") {
    const BernoulliTask task(0.2, 10);
    RngStream r1(99), r2(99);
    const auto a = init_population(3, task, r1);
    const auto b = init_population(3, task, r2);
    REQUIRE(a.agents.size() == 3);
    CHECK(a.iteration == 0);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.agents[i].hypothesis == b.agents[i].hypothesis);
        CHECK_FALSE(a.agents[i].active);
    }

    const BernoulliTask small(0.0, 4);
    RngStream rng(1);
    const auto big = init_population(1000000, small, rng);
    CHECK(big.active_count() == 0);
    std::size_t bins[4] = {0, 0, 0, 0};
    for (const auto& agent : big.agents) bins[agent.hypothesis]++;
    for (std::size_t h = 0; h < 4; ++h) {
        CHECK(std::abs(bins[h] / 1e6 - 0.25) < 0.005);
    }
}

TEST_CASE("diffusion_step leaves a fully active population unchanged") {
    const BernoulliTask task(0.2, 10);
    Population pop;
    pop.agents = {{true, 3}, {true, 3}, {true, 3}};
    RngStream rng(0);
    const auto next = diffusion_step(pop, task, rng);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(next.agents[i].hypothesis == 3);
        CHECK(next.agents[i].active);
    }
}

TEST_CASE("a lone inactive agent always resamples") {
    const BernoulliTask task(0.0, 10);
    RngStream rng(4);
    std::size_t bins[10] = {};
    for (int trial = 0; trial < 100000; ++trial) {
        Population pop;
        pop.agents = {{false, 7}};
        const auto next = diffusion_step(pop, task, rng);
        bins[next.agents[0].hypothesis]++;
    }
    for (std::size_t h = 0; h < 10; ++h) {
        CHECK(std::abs(bins[h] / 1e5 - 0.1) < 0.005);
    }
}

TEST_CASE("inactive agents copy with probability m/N") {
    const std::size_t n = 1000, m = 400;
    const BernoulliTask task(0.2, 1000);
    Population pop;
    pop.agents.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        pop.agents[i].active = i < m;
        pop.agents[i].hypothesis = i < m ? 7 : 500;
    }
    RngStream rng(12);
    std::size_t copies = 0, decisions = 0;
    while (decisions < 100000) {
        const auto next = diffusion_step(pop, task, rng);
        for (std::size_t i = m; i < n; ++i) {
            // a copy lands on the shared active hypothesis; a resample lands
            // there only with probability 1/H, inside the tolerance
            copies += next.agents[i].hypothesis == 7;
            ++decisions;
        }
    }
    const double frac = static_cast<double>(copies) / static_cast<double>(decisions);
    CHECK(std::abs(frac - 0.4) < 0.005);
}

TEST_CASE("test_step follows the micro-test law") {
    RngStream rng(8);

    const BernoulliTask task(0.3, 100);
    Population off;
    off.agents = {{true, 55}};
    CHECK_FALSE(test_step(off, task, rng).agents[0].active);

    const BernoulliTask certain(0.0, 100);
    Population on;
    on.agents = {{false, 0}};
    CHECK(test_step(on, certain, rng).agents[0].active);

    const auto string_task = make_string_task(0.5, 10, 1000);
    std::size_t active = 0;
    Population at_best;
    at_best.agents = {{false, string_task.best_position()}};
    for (int trial = 0; trial < 100000; ++trial) {
        active += test_step(at_best, string_task, rng).agents[0].active;
    }
    CHECK(std::abs(active / 1e5 - 0.5) < 0.005);
}

TEST_CASE("first iterate from all-inactive matches the closed form") {
    const BernoulliTask task(0.5, 1000);
    double total = 0.0;
    for (int rep = 0; rep < 10000; ++rep) {
        RngStream rng(static_cast<std::uint64_t>(rep));
        auto pop = init_population(1000, task, rng);
        pop = iterate(pop, task, rng);
        total += static_cast<double>(pop.active_count());
        if (rep == 0) CHECK(pop.iteration == 1);
    }
    CHECK(std::abs(total / 1e4 - 0.5) < 0.05);
}

TEST_CASE("iterate is deterministic under a fixed seed") {
    const BernoulliTask task(0.2, 1000);
    RngStream r1(5), r2(5);
    auto a = init_population(100, task, r1);
    auto b = init_population(100, task, r2);
    for (int t = 0; t < 20; ++t) {
        a = iterate(a, task, r1);
        b = iterate(b, task, r2);
    }
    CHECK(a.iteration == 20);
    for (std::size_t i = 0; i < 100; ++i) {
        CHECK(a.agents[i].active == b.agents[i].active);
        CHECK(a.agents[i].hypothesis == b.agents[i].hypothesis);
    }
}

TEST_CASE("run produces reproducible traces near the model mean") {
    const BernoulliTask task(0.1, 1000);
    const auto t1 = run(task, 1000, 2000, 123);
    const auto t2 = run(task, 1000, 2000, 123);
    REQUIRE(t1.values.size() == 2000);
    CHECK(t1.values == t2.values);
    CHECK(t1.meta.task_kind == "urn");
    CHECK(t1.meta.p_minus == doctest::Approx(0.1));
    CHECK(t1.meta.p_m == doctest::Approx(0.001));

    const auto model = steady_state({1000, 0.1, 0.001});
    const auto st = summarize(t1, 500);
    CHECK(std::abs(st.mean - model.expected_active) < 3.0 * model.std_active);
}

TEST_CASE("active agents always sit on the best set for the urn task") {
    const BernoulliTask task(0.2, 1000);
    RngStream rng(77);
    auto pop = init_population(500, task, rng);
    for (int t = 0; t < 50; ++t) {
        pop = iterate(pop, task, rng);
        CHECK(pop.agents.size() == 500);
        for (const auto& agent : pop.agents) {
            CHECK(agent.hypothesis < task.hypothesis_count());
            if (agent.active) CHECK(task.is_best(agent.hypothesis));
        }
    }
}

TEST_CASE("single-step transition frequencies match the model matrix") {
    const ModelParams params{1000, 0.2, 0.001};
    const BernoulliTask task(0.2, 1000);
    for (std::size_t m : {std::size_t{0}, std::size_t{500}, std::size_t{1000}}) {
        const auto expected = build_transition_matrix(m, params);
        Population pop;
        pop.agents.resize(1000);
        for (std::size_t i = 0; i < 1000; ++i) {
            pop.agents[i].active = i < m;
            pop.agents[i].hypothesis = i < m ? 0 : 500;
        }
        RngStream rng(m + 1);
        std::size_t aa = 0, na = 0, a_total = 0, n_total = 0;
        for (int rep = 0; rep < 100; ++rep) {
            const auto next = iterate(pop, task, rng);
            for (std::size_t i = 0; i < 1000; ++i) {
                if (pop.agents[i].active) {
                    ++a_total;
                    aa += next.agents[i].active;
                } else {
                    ++n_total;
                    na += next.agents[i].active;
                }
            }
        }
        if (a_total > 0) {
            CHECK(std::abs(static_cast<double>(aa) / a_total - expected.aa) < 0.005);
        }
        if (n_total > 0) {
            CHECK(std::abs(static_cast<double>(na) / n_total - expected.na) < 0.005);
        }
    }
}

TEST_CASE("make_string_task builds a noiseless corpus") {
    const auto task = make_string_task(0.5, 10, 1000);
    CHECK(task.hypothesis_count() == 1000);
    CHECK(task.match_count() == 5);
    CHECK(task.implied_p_minus() == doctest::Approx(0.5));
    CHECK(task.implied_p_m() == doctest::Approx(0.001));

    const auto exact = make_string_task(0.0, 10, 1000);
    CHECK(exact.match_count() == 10);
    CHECK(exact.implied_p_minus() == doctest::Approx(0.0));

    CHECK_THROWS_AS(make_string_task(0.97, 10, 1000), std::domain_error);
}

TEST_CASE("string task and urn task agree in the steady regime") {
    const std::size_t n = 1000;
    const auto model = steady_state({n, 0.2, 0.001});

    const auto urn = summarize(run(BernoulliTask(0.2, 1000), n, 2000, 3), 500);
    const auto str = summarize(run(make_string_task(0.2, 10, 1000), n, 2000, 3), 500);
    CHECK(std::abs(urn.mean - str.mean) < 3.0 * model.std_active);
}

TEST_CASE("detect_stability finds the first in-band window") {
    SteadyState model;
    model.expected_active = 750.0;
    model.std_active = 13.69;

    Trace at_mean;
    at_mean.values.assign(100, 750);
    CHECK(detect_stability(at_mean, model, 10) == 1);

    Trace flat;
    flat.values.assign(100, 0);
    CHECK_FALSE(detect_stability(flat, model, 10).has_value());

    Trace late;
    late.values.assign(100, 0);
    for (std::size_t t = 40; t < 100; ++t) late.values[t] = 745;
    CHECK(detect_stability(late, model, 10) == 41);

    CHECK_THROWS_AS(detect_stability(flat, model, 0), std::domain_error);
}

TEST_CASE("stability fires early for an easy parameter set") {
    const auto trace = run(BernoulliTask(0.1, 1000), 1000, 2000, 0);
    const auto model = steady_state({1000, 0.1, 0.001});
    const auto hit = detect_stability(trace, model, 50);
    REQUIRE(hit.has_value());
    // frozen from this simulation: the first 50-iteration window that stays
    // strictly inside the +/-2 sigma band starts at iteration 629
    CHECK(*hit == 629);
}

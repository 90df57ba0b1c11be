#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sds/model.hpp"
#include "sds/rng.hpp"
#include "sds/stats.hpp"

namespace sds {

struct Agent {
    bool active = false;
    std::size_t hypothesis = 0;
};

struct Population {
    std::vector<Agent> agents;
    std::size_t iteration = 0;

    std::size_t active_count() const;
};

/// A search environment: a hypothesis space, a one-shot partial test, and the
/// set of best hypotheses (which fixes the implied p_m = |best|/H).
class SearchTask {
  public:
    virtual ~SearchTask() = default;
    virtual std::size_t hypothesis_count() const = 0;
    virtual bool micro_test(std::size_t hypothesis, RngStream& rng) const = 0;
    virtual bool is_best(std::size_t hypothesis) const = 0;
    virtual std::size_t best_count() const = 0;
    virtual std::string kind() const = 0;
    virtual double implied_p_minus() const = 0;

    double implied_p_m() const {
        return static_cast<double>(best_count()) / static_cast<double>(hypothesis_count());
    }
};

/// Exact realization of the model: the test passes with probability
/// 1 - p_minus on best hypotheses and never elsewhere.
class BernoulliTask : public SearchTask {
  public:
    BernoulliTask(double p_minus, std::size_t hypothesis_count, std::size_t best_size = 1);

    std::size_t hypothesis_count() const override { return hypothesis_count_; }
    bool micro_test(std::size_t hypothesis, RngStream& rng) const override;
    bool is_best(std::size_t hypothesis) const override { return hypothesis < best_size_; }
    std::size_t best_count() const override { return best_size_; }
    std::string kind() const override { return "urn"; }
    double implied_p_minus() const override { return p_minus_; }

  private:
    double p_minus_;
    std::size_t hypothesis_count_;
    std::size_t best_size_;
};

/// Best-fit string search: hypotheses are positions of a template in a longer
/// text; the test compares one uniformly drawn template character.
class StringTask : public SearchTask {
  public:
    StringTask(std::vector<int> text, std::vector<int> tmpl, std::size_t best_position,
               std::size_t match_count);

    std::size_t hypothesis_count() const override;
    bool micro_test(std::size_t hypothesis, RngStream& rng) const override;
    bool is_best(std::size_t hypothesis) const override { return hypothesis == best_position_; }
    std::size_t best_count() const override { return 1; }
    std::string kind() const override { return "string"; }
    double implied_p_minus() const override;

    std::size_t best_position() const { return best_position_; }
    std::size_t match_count() const { return match_count_; }
    std::size_t template_length() const { return tmpl_.size(); }

  private:
    std::vector<int> text_;
    std::vector<int> tmpl_;
    std::size_t best_position_;
    std::size_t match_count_;
};

// Builds a noiseless corpus: template of L distinct symbols, disjoint filler,
// one position matching exactly k = round(L*(1-p_minus_target)) characters and
// every other position matching none (verified by exhaustive scan).
StringTask make_string_task(double p_minus_target, std::size_t template_length,
                            std::size_t hypothesis_count);

// All agents inactive, hypotheses uniform over the task's hypothesis space.
Population init_population(std::size_t n, const SearchTask& task, RngStream& rng);

// Inactive agents poll one agent from the pre-step snapshot (self included):
// copy its hypothesis if it was active, otherwise resample uniformly.
Population diffusion_step(const Population& pop, const SearchTask& task, RngStream& rng);

// Every agent retests its hypothesis; activity flags are replaced.
Population test_step(const Population& pop, const SearchTask& task, RngStream& rng);

// One synchronous iteration: diffusion then test.
Population iterate(const Population& pop, const SearchTask& task, RngStream& rng);

// Full run from a fresh population; records the active count after every
// iteration.
Trace run(const SearchTask& task, std::size_t n, std::size_t iterations, std::uint64_t seed);

// Smallest 1-based t such that values[t .. t+w-1] all lie within
// expected_active +/- 2*std_active; nullopt if the band is never held.
std::optional<std::size_t> detect_stability(const Trace& trace, const SteadyState& model,
                                            std::size_t window);

}  // namespace sds

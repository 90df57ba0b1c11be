#include "sds/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace sds {

std::size_t Population::active_count() const {
    std::size_t m = 0;
    for (const auto& a : agents) m += a.active;
    return m;
}

BernoulliTask::BernoulliTask(double p_minus, std::size_t hypothesis_count, std::size_t best_size)
    : p_minus_(p_minus), hypothesis_count_(hypothesis_count), best_size_(best_size) {
    if (!(p_minus >= 0.0 && p_minus <= 1.0)) {
        throw std::domain_error("p_minus must lie in [0,1]");
    }
    if (best_size < 1 || best_size > hypothesis_count) {
        throw std::domain_error("best_size must lie in [1, hypothesis_count]");
    }
}

bool BernoulliTask::micro_test(std::size_t hypothesis, RngStream& rng) const {
    if (hypothesis >= hypothesis_count_) {
        throw std::domain_error("hypothesis out of range");
    }
    if (!is_best(hypothesis)) return false;
    return rng.bernoulli(1.0 - p_minus_);
}

StringTask::StringTask(std::vector<int> text, std::vector<int> tmpl, std::size_t best_position,
                       std::size_t match_count)
    : text_(std::move(text)),
      tmpl_(std::move(tmpl)),
      best_position_(best_position),
      match_count_(match_count) {
    if (tmpl_.empty() || text_.size() < tmpl_.size()) {
        throw std::domain_error("text shorter than template");
    }
}

std::size_t StringTask::hypothesis_count() const {
    return text_.size() - tmpl_.size() + 1;
}

double StringTask::implied_p_minus() const {
    return 1.0 - static_cast<double>(match_count_) / static_cast<double>(tmpl_.size());
}

bool StringTask::micro_test(std::size_t hypothesis, RngStream& rng) const {
    if (hypothesis >= hypothesis_count()) {
        throw std::domain_error("hypothesis out of range");
    }
    const std::size_t offset = rng.uniform_index(tmpl_.size());
    return text_[hypothesis + offset] == tmpl_[offset];
}

StringTask make_string_task(double p_minus_target, std::size_t template_length,
                            std::size_t hypothesis_count) {
    if (template_length < 1 || hypothesis_count < 1) {
        throw std::domain_error("template_length and hypothesis_count must be >= 1");
    }
    if (!(p_minus_target >= 0.0 && p_minus_target <= 1.0)) {
        throw std::domain_error("p_minus_target must lie in [0,1]");
    }
    const double l = static_cast<double>(template_length);
    const std::size_t k = static_cast<std::size_t>(std::lround(l * (1.0 - p_minus_target)));
    if (k == 0) {
        throw std::domain_error("requested p_minus rounds the match count to 0");
    }

    // Template symbols 0..L-1 are pairwise distinct; the filler symbol L never
    // occurs in the template, so off-best positions match nothing.
    std::vector<int> tmpl(template_length);
    for (std::size_t i = 0; i < template_length; ++i) tmpl[i] = static_cast<int>(i);
    const int filler = static_cast<int>(template_length);

    std::vector<int> text(hypothesis_count + template_length - 1, filler);
    const std::size_t best = hypothesis_count / 2;
    for (std::size_t j = 0; j < k; ++j) text[best + j] = tmpl[j];

    // Exhaustive scan: the best position matches exactly k characters and
    // every other position matches none.
    for (std::size_t pos = 0; pos < hypothesis_count; ++pos) {
        std::size_t matches = 0;
        for (std::size_t off = 0; off < template_length; ++off) {
            if (text[pos + off] == tmpl[off]) ++matches;
        }
        const std::size_t expected = (pos == best) ? k : 0;
        if (matches != expected) {
            throw std::logic_error("string corpus construction violated the noiseless invariant");
        }
    }
    return StringTask(std::move(text), std::move(tmpl), best, k);
}

Population init_population(std::size_t n, const SearchTask& task, RngStream& rng) {
    if (n < 1) {
        throw std::domain_error("population size must be >= 1");
    }
    Population pop;
    pop.agents.resize(n);
    const std::size_t h = task.hypothesis_count();
    for (auto& agent : pop.agents) {
        agent.active = false;
        agent.hypothesis = rng.uniform_index(h);
    }
    pop.iteration = 0;
    return pop;
}

Population diffusion_step(const Population& pop, const SearchTask& task, RngStream& rng) {
    const std::size_t n = pop.agents.size();
    const std::size_t h = task.hypothesis_count();
    Population next = pop;
    for (std::size_t i = 0; i < n; ++i) {
        if (pop.agents[i].active) continue;
        const std::size_t j = rng.uniform_index(n);
        if (pop.agents[j].active) {
            next.agents[i].hypothesis = pop.agents[j].hypothesis;
        } else {
            next.agents[i].hypothesis = rng.uniform_index(h);
        }
    }
    return next;
}

Population test_step(const Population& pop, const SearchTask& task, RngStream& rng) {
    Population next = pop;
    for (auto& agent : next.agents) {
        agent.active = task.micro_test(agent.hypothesis, rng);
    }
    return next;
}

Population iterate(const Population& pop, const SearchTask& task, RngStream& rng) {
    Population next = test_step(diffusion_step(pop, task, rng), task, rng);
    next.iteration = pop.iteration + 1;
    return next;
}

Trace run(const SearchTask& task, std::size_t n, std::size_t iterations, std::uint64_t seed) {
    if (iterations < 1) {
        throw std::domain_error("iterations must be >= 1");
    }
    RngStream rng(seed);
    Population pop = init_population(n, task, rng);
    Trace trace;
    trace.values.reserve(iterations);
    for (std::size_t t = 0; t < iterations; ++t) {
        pop = iterate(pop, task, rng);
        trace.values.push_back(pop.active_count());
    }
    trace.meta.n_agents = n;
    trace.meta.p_minus = task.implied_p_minus();
    trace.meta.p_m = task.implied_p_m();
    trace.meta.iterations = iterations;
    trace.meta.seed = seed;
    trace.meta.rng_algorithm = RngStream::algorithm();
    trace.meta.task_kind = task.kind();
    return trace;
}

std::optional<std::size_t> detect_stability(const Trace& trace, const SteadyState& model,
                                            std::size_t window) {
    if (window < 1) {
        throw std::domain_error("window must be >= 1");
    }
    const auto& v = trace.values;
    if (v.size() < window) return std::nullopt;
    const double lo = model.expected_active - 2.0 * model.std_active;
    const double hi = model.expected_active + 2.0 * model.std_active;
    std::size_t streak = 0;
    for (std::size_t t = 0; t < v.size(); ++t) {
        const double x = static_cast<double>(v[t]);
        streak = (x >= lo && x <= hi) ? streak + 1 : 0;
        if (streak >= window) {
            return t + 2 - window;  // 1-based start of the window
        }
    }
    return std::nullopt;
}

}  // namespace sds

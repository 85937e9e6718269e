#include "mudist/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mudist/rng.hpp"

namespace mudist {

namespace {

struct HistoryTracker {
    std::vector<std::pair<std::size_t, double>> entries;
    double best = kInfValue;

    bool observe(std::size_t evals, double value) {
        if (value < best) {
            best = value;
            entries.emplace_back(evals, value);
            return true;
        }
        return false;
    }

    std::vector<std::pair<std::size_t, double>> decimated(std::size_t cap) const {
        if (entries.size() <= cap || cap < 2) return entries;
        std::vector<std::pair<std::size_t, double>> out;
        out.reserve(cap);
        const std::size_t n = entries.size();
        for (std::size_t k = 0; k + 1 < cap; ++k)
            out.push_back(entries[k * (n - 1) / (cap - 1)]);
        out.push_back(entries.back());
        return out;
    }
};

void repair_to_parent(Vector& v, const Vector& parent) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] < 0.0)
            v[j] = 0.5 * parent[j];
        else if (v[j] > 1.0)
            v[j] = 0.5 * (1.0 + parent[j]);
    }
}

void validate(const OptimizerConfig& config) {
    if (config.dim < 1) throw ConfigError("optimizer: dim must be at least 1");
    if (config.n_min < 2) throw ConfigError("optimizer: n_min must be at least 2");
    if (config.memory_size < 1) throw ConfigError("optimizer: memory_size must be at least 1");
    if (!(config.p_best_rate > 0.0 && config.p_best_rate <= 1.0))
        throw ConfigError("optimizer: p_best_rate must lie in (0,1]");
}

std::size_t resolve_budget(const OptimizerConfig& c) {
    return c.budget ? c.budget : static_cast<std::size_t>(10000) * c.dim;
}

}  // namespace

RunRecord lshade_minimize(const Objective& objective, const OptimizerConfig& config) {
    validate(config);
    const int dim = config.dim;
    const std::size_t budget = resolve_budget(config);
    const int n_init = config.n_init ? config.n_init : 18 * dim;
    const int n_min = config.n_min;
    if (n_init < 4) throw ConfigError("optimizer: initial population must be at least 4");
    if (budget < static_cast<std::size_t>(n_init))
        throw ConfigError("optimizer: budget smaller than the initial population");

    Rng rng(config.seed);
    VectorSet pop(static_cast<std::size_t>(n_init), Vector(static_cast<std::size_t>(dim)));
    Vector fitness(static_cast<std::size_t>(n_init));
    HistoryTracker history;
    std::size_t evals = 0;

    for (auto& x : pop)
        for (double& v : x) v = rng.uniform01();
    Vector best_point = pop[0];
    for (std::size_t i = 0; i < pop.size(); ++i) {
        fitness[i] = objective(pop[i]);
        ++evals;
        if (history.observe(evals, fitness[i])) best_point = pop[i];
    }

    const int mem = config.memory_size;
    Vector memory_f(static_cast<std::size_t>(mem), 0.5);
    Vector memory_cr(static_cast<std::size_t>(mem), 0.5);  // -1 marks the terminal value
    int memory_pos = 0;
    VectorSet archive;

    int generation = 0;
    while (evals < budget) {
        const int n = static_cast<int>(pop.size());
        const auto archive_cap = static_cast<std::size_t>(
            std::round(config.archive_rate * static_cast<double>(n)));
        std::vector<std::size_t> order(pop.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
        const int p_num = std::max(static_cast<int>(std::round(config.p_best_rate * n)), 2);

        VectorSet trials;
        Vector trial_f, trial_cr;
        std::vector<std::size_t> parents;
        trials.reserve(pop.size());
        for (int i = 0; i < n && evals + trials.size() < budget; ++i) {
            const std::size_t r = rng.uniform_index(static_cast<std::size_t>(mem));
            double f;
            do {
                f = rng.cauchy(memory_f[r], 0.1);
            } while (f <= 0.0);
            f = std::min(f, 1.0);
            double cr;
            if (memory_cr[r] < 0.0)
                cr = 0.0;
            else
                cr = std::clamp(rng.normal(memory_cr[r], 0.1), 0.0, 1.0);

            const std::size_t pbest = order[rng.uniform_index(static_cast<std::size_t>(p_num))];
            std::size_t r1;
            do {
                r1 = rng.uniform_index(pop.size());
            } while (r1 == static_cast<std::size_t>(i));
            std::size_t r2;
            do {
                r2 = rng.uniform_index(pop.size() + archive.size());
            } while (r2 == static_cast<std::size_t>(i) || r2 == r1);
            const Vector& x2 = r2 < pop.size() ? pop[r2] : archive[r2 - pop.size()];

            Vector v(static_cast<std::size_t>(dim));
            const Vector& xi = pop[static_cast<std::size_t>(i)];
            for (int j = 0; j < dim; ++j)
                v[j] = xi[j] + f * (pop[pbest][j] - xi[j]) + f * (pop[r1][j] - x2[j]);
            repair_to_parent(v, xi);

            Vector u = xi;
            const int jrand = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(dim)));
            for (int j = 0; j < dim; ++j)
                if (j == jrand || rng.uniform01() < cr) u[j] = v[j];

            trials.push_back(std::move(u));
            trial_f.push_back(f);
            trial_cr.push_back(cr);
            parents.push_back(static_cast<std::size_t>(i));
        }

        Vector s_f, s_cr, s_delta;
        for (std::size_t t = 0; t < trials.size(); ++t) {
            const double fu = objective(trials[t]);
            ++evals;
            if (history.observe(evals, fu)) best_point = trials[t];
            const std::size_t i = parents[t];
            if (fu < fitness[i]) {
                if (archive.size() < archive_cap)
                    archive.push_back(pop[i]);
                else if (archive_cap > 0)
                    archive[rng.uniform_index(archive.size())] = pop[i];
                s_f.push_back(trial_f[t]);
                s_cr.push_back(trial_cr[t]);
                s_delta.push_back(fitness[i] - fu);
            }
            if (fu <= fitness[i]) {
                pop[i] = std::move(trials[t]);
                fitness[i] = fu;
            }
        }

        // success-history update; memories stay untouched on a failed
        // generation, and a memory slot that saw only CR = 0 successes
        // becomes terminal
        if (!s_f.empty()) {
            const double dsum = std::accumulate(s_delta.begin(), s_delta.end(), 0.0);
            double fn = 0.0, fd = 0.0, cn = 0.0, cd = 0.0;
            for (std::size_t k = 0; k < s_f.size(); ++k) {
                const double w = s_delta[k] / dsum;
                fn += w * s_f[k] * s_f[k];
                fd += w * s_f[k];
                cn += w * s_cr[k] * s_cr[k];
                cd += w * s_cr[k];
            }
            memory_f[memory_pos] = fn / fd;
            if (memory_cr[memory_pos] < 0.0 || *std::max_element(s_cr.begin(), s_cr.end()) == 0.0)
                memory_cr[memory_pos] = -1.0;
            else
                memory_cr[memory_pos] = cn / cd;
            memory_pos = (memory_pos + 1) % mem;
        }

        // linear population reduction driven by consumed evaluations
        const int n_next = std::max(
            n_min, static_cast<int>(std::round(
                       n_init - (static_cast<double>(n_init - n_min) * evals) / budget)));
        if (n_next < static_cast<int>(pop.size())) {
            std::vector<std::size_t> keep(pop.size());
            std::iota(keep.begin(), keep.end(), 0);
            std::stable_sort(keep.begin(), keep.end(),
                             [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
            keep.resize(static_cast<std::size_t>(n_next));
            std::sort(keep.begin(), keep.end());
            VectorSet np;
            Vector nf;
            np.reserve(keep.size());
            for (std::size_t k : keep) {
                np.push_back(std::move(pop[k]));
                nf.push_back(fitness[k]);
            }
            pop = std::move(np);
            fitness = std::move(nf);
        }
        const auto next_cap = static_cast<std::size_t>(
            std::round(config.archive_rate * static_cast<double>(pop.size())));
        while (archive.size() > next_cap) {
            const std::size_t victim = rng.uniform_index(archive.size());
            archive[victim] = std::move(archive.back());
            archive.pop_back();
        }

        ++generation;
        if (config.observer)
            config.observer({generation, static_cast<int>(pop.size()), evals, history.best});
    }

    RunRecord rec;
    rec.algorithm = "lshade";
    rec.seed = config.seed;
    rec.evaluations = evals;
    rec.best_value = history.best;
    rec.best_point = std::move(best_point);
    rec.history = history.decimated(config.history_cap);
    return rec;
}

RunRecord de_rand1_minimize(const Objective& objective, const OptimizerConfig& config) {
    validate(config);
    const int dim = config.dim;
    const std::size_t budget = resolve_budget(config);
    const int n = config.de_pop ? config.de_pop : 10 * dim;
    if (n < 4) throw ConfigError("optimizer: population must be at least 4");
    if (budget < static_cast<std::size_t>(n))
        throw ConfigError("optimizer: budget smaller than the population");

    Rng rng(config.seed);
    VectorSet pop(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(dim)));
    Vector fitness(static_cast<std::size_t>(n));
    HistoryTracker history;
    std::size_t evals = 0;
    for (auto& x : pop)
        for (double& v : x) v = rng.uniform01();
    Vector best_point = pop[0];
    for (std::size_t i = 0; i < pop.size(); ++i) {
        fitness[i] = objective(pop[i]);
        ++evals;
        if (history.observe(evals, fitness[i])) best_point = pop[i];
    }

    int generation = 0;
    while (evals < budget) {
        VectorSet trials;
        std::vector<std::size_t> parents;
        for (int i = 0; i < n && evals + trials.size() < budget; ++i) {
            std::size_t r1, r2, r3;
            do {
                r1 = rng.uniform_index(pop.size());
            } while (r1 == static_cast<std::size_t>(i));
            do {
                r2 = rng.uniform_index(pop.size());
            } while (r2 == static_cast<std::size_t>(i) || r2 == r1);
            do {
                r3 = rng.uniform_index(pop.size());
            } while (r3 == static_cast<std::size_t>(i) || r3 == r1 || r3 == r2);
            Vector v(static_cast<std::size_t>(dim));
            for (int j = 0; j < dim; ++j)
                v[j] = pop[r1][j] + config.de_f * (pop[r2][j] - pop[r3][j]);
            repair_to_parent(v, pop[static_cast<std::size_t>(i)]);
            Vector u = pop[static_cast<std::size_t>(i)];
            const int jrand = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(dim)));
            for (int j = 0; j < dim; ++j)
                if (j == jrand || rng.uniform01() < config.de_cr) u[j] = v[j];
            trials.push_back(std::move(u));
            parents.push_back(static_cast<std::size_t>(i));
        }
        for (std::size_t t = 0; t < trials.size(); ++t) {
            const double fu = objective(trials[t]);
            ++evals;
            if (history.observe(evals, fu)) best_point = trials[t];
            const std::size_t i = parents[t];
            if (fu <= fitness[i]) {
                pop[i] = std::move(trials[t]);
                fitness[i] = fu;
            }
        }
        ++generation;
        if (config.observer)
            config.observer({generation, n, evals, history.best});
    }

    RunRecord rec;
    rec.algorithm = "de-rand1";
    rec.seed = config.seed;
    rec.evaluations = evals;
    rec.best_value = history.best;
    rec.best_point = std::move(best_point);
    rec.history = history.decimated(config.history_cap);
    return rec;
}

Objective death_penalty(Objective raw, std::function<double(const Vector&)> violation) {
    return [raw = std::move(raw), violation = std::move(violation)](const Vector& x) {
        if (violation(x) > 0.0) return kInfValue;
        return raw(x);
    };
}

}  // namespace mudist

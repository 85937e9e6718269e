#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "mudist/common.hpp"

namespace mudist {

using Objective = std::function<double(const Vector&)>;

struct GenerationInfo {
    int generation;
    int pop_size;
    std::size_t evaluations;
    double best;
};

struct OptimizerConfig {
    int dim = 0;
    std::uint64_t seed = 1;
    std::size_t budget = 0;  // 0 -> 10^4 * dim

    // success-history adaptive DE with linear population reduction
    int n_init = 0;  // 0 -> 18 * dim
    int n_min = 4;
    int memory_size = 6;
    double p_best_rate = 0.11;
    double archive_rate = 2.6;

    // fixed-parameter baseline
    double de_f = 0.5;
    double de_cr = 0.9;
    int de_pop = 0;  // 0 -> 10 * dim

    std::size_t history_cap = 1024;
    std::function<void(const GenerationInfo&)> observer;
};

struct RunRecord {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
    double best_value = kInfValue;
    Vector best_point;
    // (evaluations-used, best-so-far) at improvements, decimated to the cap
    std::vector<std::pair<std::size_t, double>> history;
};

// Search space is [0,1]^dim; out-of-bounds mutants are repaired to the
// midpoint between the bound and the parent. Terminates exactly at the
// evaluation budget.
RunRecord lshade_minimize(const Objective& objective, const OptimizerConfig& config);
RunRecord de_rand1_minimize(const Objective& objective, const OptimizerConfig& config);

// Wraps an objective so that any point whose violation is positive scores
// the kInfValue sentinel without evaluating the raw objective.
Objective death_penalty(Objective raw, std::function<double(const Vector&)> violation);

}  // namespace mudist

#pragma once

#include <string>
#include <utility>

#include "mudist/common.hpp"
#include "mudist/fronts.hpp"
#include "mudist/indicators.hpp"

namespace mudist {

// Raw values and per-row ranks (1 = best under each indicator's own
// orientation; exact value ties share the average rank).
struct RankTable {
    std::vector<std::string> indicators;
    std::vector<std::string> sets;
    std::vector<Vector> values;
    std::vector<Vector> ranks;
    Vector average_ranks;
};

RankTable rank_sets(const std::vector<std::pair<std::string, IndicatorSpec>>& indicators,
                    const std::vector<std::pair<std::string, VectorSet>>& sets);

// Tie-adjusted rank correlation (the tau-b variant).
double kendall_tau(const Vector& a, const Vector& b);

struct TauMatrix {
    std::vector<std::string> labels;
    std::vector<Vector> tau;  // symmetric, unit diagonal
};

TauMatrix tau_matrix(const RankTable& table);

struct DistributionStats {
    Vector extreme_min_dist;  // per front extreme, over members
    Vector extreme_max_dist;
    double nn_min = 0.0;
    double nn_mean = 0.0;
    double nn_max = 0.0;
    int duplicate_pairs = 0;  // pairwise distance < 1e-9
};

DistributionStats distribution_stats(const VectorSet& set, const FrontShape& front);

}  // namespace mudist

#include "mudist/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mudist {

namespace {

Vector average_ranks_of(const Vector& oriented) {
    const std::size_t n = oriented.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return oriented[a] < oriented[b]; });
    Vector ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && oriented[order[j + 1]] == oriented[order[i]]) ++j;
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

RankTable rank_sets(const std::vector<std::pair<std::string, IndicatorSpec>>& indicators,
                    const std::vector<std::pair<std::string, VectorSet>>& sets) {
    if (indicators.empty()) throw InvalidInput("rank_sets: no indicators");
    if (sets.size() < 2) throw InvalidInput("rank_sets: at least two sets required");
    RankTable table;
    for (const auto& [name, spec] : indicators) table.indicators.push_back(name);
    for (const auto& [name, set] : sets) table.sets.push_back(name);
    for (const auto& [name, spec] : indicators) {
        Vector raw, oriented;
        raw.reserve(sets.size());
        for (const auto& [sname, set] : sets) {
            raw.push_back(evaluate(spec, set));
            oriented.push_back(is_maximizing(spec.kind) ? -raw.back() : raw.back());
        }
        table.ranks.push_back(average_ranks_of(oriented));
        table.values.push_back(std::move(raw));
    }
    table.average_ranks.assign(sets.size(), 0.0);
    for (const auto& row : table.ranks)
        for (std::size_t c = 0; c < row.size(); ++c) table.average_ranks[c] += row[c];
    for (double& v : table.average_ranks) v /= static_cast<double>(table.ranks.size());
    return table;
}

double kendall_tau(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidInput("kendall_tau: length mismatch");
    const std::size_t n = a.size();
    if (n < 2) throw InvalidInput("kendall_tau: at least two items required");
    long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double da = a[i] - a[j];
            const double db = b[i] - b[j];
            if (da == 0.0) ++ties_a;
            if (db == 0.0) ++ties_b;
            const double prod = da * db;
            if (prod > 0.0)
                ++concordant;
            else if (prod < 0.0)
                ++discordant;
        }
    }
    const auto pairs = static_cast<long long>(n) * static_cast<long long>(n - 1) / 2;
    const double denom = std::sqrt(static_cast<double>(pairs - ties_a)) *
                         std::sqrt(static_cast<double>(pairs - ties_b));
    if (denom == 0.0) throw InvalidInput("kendall_tau: a fully tied vector has no ordering");
    return static_cast<double>(concordant - discordant) / denom;
}

TauMatrix tau_matrix(const RankTable& table) {
    const std::size_t n = table.ranks.size();
    TauMatrix out;
    out.labels = table.indicators;
    out.tau.assign(n, Vector(n, 1.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double t = kendall_tau(table.ranks[i], table.ranks[j]);
            out.tau[i][j] = t;
            out.tau[j][i] = t;
        }
    return out;
}

DistributionStats distribution_stats(const VectorSet& set, const FrontShape& front) {
    require_uniform_dimension(set, "distribution_stats");
    if (set.front().size() != static_cast<std::size_t>(front.m))
        throw InvalidInput("distribution_stats: set/front dimension mismatch");
    DistributionStats stats;
    for (const auto& e : front_extremes(front)) {
        double lo = kInfValue, hi = -kInfValue;
        for (const auto& a : set) {
            const double d = euclid(a, e);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        stats.extreme_min_dist.push_back(lo);
        stats.extreme_max_dist.push_back(hi);
    }
    const std::size_t n = set.size();
    if (n >= 2) {
        double total = 0.0, lo = kInfValue, hi = -kInfValue;
        for (std::size_t i = 0; i < n; ++i) {
            double nn = kInfValue;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) nn = std::min(nn, sq_euclid(set[i], set[j]));
            nn = std::sqrt(nn);
            total += nn;
            lo = std::min(lo, nn);
            hi = std::max(hi, nn);
        }
        stats.nn_min = lo;
        stats.nn_mean = total / static_cast<double>(n);
        stats.nn_max = hi;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (euclid(set[i], set[j]) < 1e-9) ++stats.duplicate_pairs;
    }
    return stats;
}

}  // namespace mudist

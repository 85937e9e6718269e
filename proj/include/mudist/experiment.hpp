#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "mudist/analysis.hpp"
#include "mudist/common.hpp"
#include "mudist/fronts.hpp"
#include "mudist/indicators.hpp"
#include "mudist/optimizer.hpp"
#include "mudist/refsets.hpp"

namespace mudist {

struct ExperimentConfig {
    FrontKind front = FrontKind::Concave;
    int m = 3;
    std::vector<int> mu_list = {10, 15, 21, 28, 36, 45};
    std::vector<Indicator> indicators = {Indicator::HV,      Indicator::IGD, Indicator::IGDPlus,
                                         Indicator::R2,      Indicator::NR2, Indicator::EpsPlus,
                                         Indicator::SE,      Indicator::Delta,
                                         Indicator::PD};
    int runs = 31;
    double budget_per_dim = 10000.0;
    std::uint64_t master_seed = 1;

    // 0 -> per-m default (m=3: 44, m=5: 14, m=8: two-layer 7/6)
    int weight_resolution = 0;
    int weight_resolution_inner = -1;  // >= 0 selects a two-layer lattice
    int disconnected_axis = 33;
    int cconcave_resolution = 60;
    double hv_reference = 1.2;

    std::string out_dir = "out";
    int workers = 0;  // 0 -> MUDIST_WORKERS env or hardware concurrency
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

// Shrinks the protocol to a quick desk check: 5 runs, 10^3 * d budget.
void apply_desk_profile(ExperimentConfig& config);

// Lattice resolution achieving exactly the requested weight count, or a
// ConfigError naming the nearest achievable sizes.
int resolve_weight_resolution(int m, std::size_t size);

WeightSet experiment_weights(const ExperimentConfig& config);
VectorSet experiment_refset(const ExperimentConfig& config, const WeightSet& weights);

IndicatorSpec make_indicator_spec(const ExperimentConfig& config, Indicator kind,
                                  const VectorSet& ref, const WeightSet& weights);

// Deterministic per-run seed: depends only on the master seed and the run's
// global index, never on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Full optimization protocol: per (mu, indicator) group runs seeded
// searches, persists run records, best decoded sets, scatter data, rank and
// correlation tables, and an incrementally updated manifest with content
// hashes.
void run_experiment(const ExperimentConfig& config);

// Builds the rank/correlation artifacts for one mu from the best-set CSVs
// in an experiment tree (the `rank` command; also called by
// run_experiment).
RankTable write_rank_artifacts(const ExperimentConfig& config, const std::filesystem::path& dir,
                               int mu);

nlohmann::json eval_set(const ExperimentConfig& config, Indicator kind,
                        const std::filesystem::path& set_csv);

void write_refsets(const ExperimentConfig& config, const std::filesystem::path& dir);

}  // namespace mudist

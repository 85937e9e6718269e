#include "mudist/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "mudist/io.hpp"
#include "mudist/rng.hpp"

namespace fs = std::filesystem;

namespace mudist {

namespace {

// Filesystem-friendly indicator tag: "IGD+" -> "igdplus".
std::string file_tag(Indicator kind) {
    std::string tag;
    for (char c : to_string(kind)) {
        if (c == '+')
            tag += "plus";
        else
            tag += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return tag;
}

int resolve_workers(const ExperimentConfig& config) {
    if (config.workers > 0) return config.workers;
    if (const char* env = std::getenv("MUDIST_WORKERS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && n > 0) return static_cast<int>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known = {
        "front",        "m",           "mu_list",           "indicators",
        "runs",         "budget_per_dim", "master_seed",
        "weight_resolution", "weight_resolution_inner", "disconnected_axis",
        "cconcave_resolution", "hv_reference", "out_dir", "workers"};
    for (const auto& item : j.items()) {
        if (std::find(known.begin(), known.end(), item.key()) == known.end())
            throw ConfigError("unknown config key: " + item.key());
    }

    ExperimentConfig config;
    try {
        if (j.contains("front")) config.front = front_kind_from_string(j.at("front").get<std::string>());
        if (j.contains("m")) config.m = j.at("m").get<int>();
        if (j.contains("mu_list")) config.mu_list = j.at("mu_list").get<std::vector<int>>();
        if (j.contains("indicators")) {
            config.indicators.clear();
            for (const auto& name : j.at("indicators"))
                config.indicators.push_back(indicator_from_string(name.get<std::string>()));
        }
        if (j.contains("runs")) config.runs = j.at("runs").get<int>();
        if (j.contains("budget_per_dim")) config.budget_per_dim = j.at("budget_per_dim").get<double>();
        if (j.contains("master_seed")) config.master_seed = j.at("master_seed").get<std::uint64_t>();
        if (j.contains("weight_resolution")) config.weight_resolution = j.at("weight_resolution").get<int>();
        if (j.contains("weight_resolution_inner"))
            config.weight_resolution_inner = j.at("weight_resolution_inner").get<int>();
        if (j.contains("disconnected_axis")) config.disconnected_axis = j.at("disconnected_axis").get<int>();
        if (j.contains("cconcave_resolution"))
            config.cconcave_resolution = j.at("cconcave_resolution").get<int>();
        if (j.contains("hv_reference")) config.hv_reference = j.at("hv_reference").get<double>();
        if (j.contains("out_dir")) config.out_dir = j.at("out_dir").get<std::string>();
        if (j.contains("workers")) config.workers = j.at("workers").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config value: ") + e.what());
    }

    if (config.m < 2) throw ConfigError("m must be at least 2");
    if (config.mu_list.empty()) throw ConfigError("mu_list must not be empty");
    for (int mu : config.mu_list)
        if (mu < 2) throw ConfigError("every mu must be at least 2");
    if (config.indicators.empty()) throw ConfigError("indicators must not be empty");
    if (config.runs < 1) throw ConfigError("runs must be at least 1");
    if (config.budget_per_dim <= 0.0) throw ConfigError("budget_per_dim must be positive");
    if (config.hv_reference <= 1.0) throw ConfigError("hv_reference must exceed 1");
    if (config.disconnected_axis < 2) throw ConfigError("disconnected_axis must be at least 2");
    if (config.cconcave_resolution < 1) throw ConfigError("cconcave_resolution must be at least 1");
    return config;
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
    nlohmann::json j;
    j["front"] = to_string(config.front);
    j["m"] = config.m;
    j["mu_list"] = config.mu_list;
    std::vector<std::string> names;
    for (Indicator kind : config.indicators) names.push_back(to_string(kind));
    j["indicators"] = names;
    j["runs"] = config.runs;
    j["budget_per_dim"] = config.budget_per_dim;
    j["master_seed"] = config.master_seed;
    j["weight_resolution"] = config.weight_resolution;
    j["weight_resolution_inner"] = config.weight_resolution_inner;
    j["disconnected_axis"] = config.disconnected_axis;
    j["cconcave_resolution"] = config.cconcave_resolution;
    j["hv_reference"] = config.hv_reference;
    j["out_dir"] = config.out_dir;
    return j;
}

void apply_desk_profile(ExperimentConfig& config) {
    config.runs = 5;
    config.budget_per_dim = 1000.0;
}

int resolve_weight_resolution(int m, std::size_t size) {
    int exact = sld_resolution_for_size(m, size);
    if (exact > 0) return exact;
    int below_h = 0;
    std::size_t below = 0;
    int h = 1;
    while (true) {
        std::size_t n = sld_size(m, h);
        if (n > size) {
            std::string msg = "no weight lattice of size " + std::to_string(size) + " for m=" +
                              std::to_string(m) + "; nearest sizes are";
            if (below_h > 0)
                msg += " " + std::to_string(below) + " (resolution " + std::to_string(below_h) +
                       ") and";
            msg += " " + std::to_string(n) + " (resolution " + std::to_string(h) + ")";
            throw ConfigError(msg);
        }
        below = n;
        below_h = h;
        ++h;
    }
}

WeightSet experiment_weights(const ExperimentConfig& config) {
    if (config.weight_resolution_inner >= 0) {
        int h1 = config.weight_resolution > 0 ? config.weight_resolution : 7;
        return sld_two_layer(config.m, h1, config.weight_resolution_inner);
    }
    if (config.weight_resolution > 0) return sld(config.m, config.weight_resolution);
    switch (config.m) {
        case 2: return sld(2, 499);
        case 3: return sld(3, 44);
        case 5: return sld(5, 14);
        case 8: return sld_two_layer(8, 7, 6);
        default:
            throw ConfigError("no default weight resolution for m=" + std::to_string(config.m) +
                              "; set weight_resolution explicitly");
    }
}

VectorSet experiment_refset(const ExperimentConfig& config, const WeightSet& weights) {
    FrontShape front = make_front(config.front, config.m);
    if (config.front == FrontKind::Disconnected)
        return disconnected_reference_set(front, config.disconnected_axis);
    if (config.front == FrontKind::ConstrainedConcave) {
        WeightSet dense = sld(config.m, config.cconcave_resolution);
        return reference_set(front, dense);
    }
    return reference_set(front, weights);
}

IndicatorSpec make_indicator_spec(const ExperimentConfig& config, Indicator kind,
                                  const VectorSet& ref, const WeightSet& weights) {
    IndicatorSpec spec;
    spec.kind = kind;
    switch (kind) {
        case Indicator::HV:
            spec.reference_point.assign(config.m, config.hv_reference);
            break;
        case Indicator::R2:
            spec.utopian.assign(config.m, 0.0);
            spec.weights = weights.points;
            break;
        case Indicator::NR2:
            spec.reference_point.assign(config.m, config.hv_reference);
            spec.weights = weights.points;
            break;
        case Indicator::IGD:
        case Indicator::IGDPlus:
        case Indicator::EpsPlus:
        case Indicator::DCI:
            spec.ref_set = ref;
            break;
        case Indicator::SE:
        case Indicator::Delta:
        case Indicator::PD:
            if (kind == Indicator::Delta) spec.ref_set = ref;
            break;
    }
    return spec;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix{master ^ (0x9E3779B97F4A7C15ULL * (index + 1))};
    return mix.next();
}

namespace {

struct ManifestEntry {
    std::string path;
    std::uintmax_t bytes = 0;
    std::string hash;
};

class Manifest {
  public:
    explicit Manifest(fs::path root) : root_(std::move(root)) {}

    void add(const std::string& rel) {
        ManifestEntry entry;
        entry.path = rel;
        entry.bytes = fs::file_size(root_ / rel);
        entry.hash = file_hash(root_ / rel);
        entries_.push_back(std::move(entry));
    }

    void write(bool complete) const {
        nlohmann::json j;
        j["complete"] = complete;
        j["artifacts"] = nlohmann::json::array();
        for (const auto& entry : entries_) {
            nlohmann::json e;
            e["path"] = entry.path;
            e["bytes"] = entry.bytes;
            e["hash"] = entry.hash;
            j["artifacts"].push_back(std::move(e));
        }
        write_json_file(root_ / "manifest.json", j);
    }

  private:
    fs::path root_;
    std::vector<ManifestEntry> entries_;
};

Objective make_objective(const FrontShape& front, int mu, const IndicatorSpec& spec) {
    bool constrained = front.kind == FrontKind::ConstrainedConcave;
    return [&front, mu, &spec, constrained](const Vector& theta) {
        VectorSet set = decode(front, theta, mu);
        if (constrained && constraint_value(front, set) > 0.0) return kInfValue;
        return evaluate_oriented(spec, set);
    };
}

std::vector<RunRecord> run_group(const ExperimentConfig& config, const FrontShape& front, int mu,
                                 const IndicatorSpec& spec, std::uint64_t first_index) {
    int dim = mu * (config.m - 1);
    std::vector<RunRecord> records(config.runs);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            Objective objective = make_objective(front, mu, spec);
            while (true) {
                int k = next.fetch_add(1);
                if (k >= config.runs) break;
                OptimizerConfig oc;
                oc.dim = dim;
                oc.seed = derive_seed(config.master_seed, first_index + k);
                oc.budget = static_cast<std::size_t>(
                    std::llround(config.budget_per_dim * dim));
                records[k] = lshade_minimize(objective, oc);
            }
        } catch (...) {
            std::scoped_lock lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(config.runs);
        }
    };

    int n = std::min(resolve_workers(config), config.runs);
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

int best_run_index(const std::vector<RunRecord>& records) {
    int best = 0;
    for (int k = 1; k < static_cast<int>(records.size()); ++k)
        if (records[k].best_value < records[best].best_value) best = k;
    return best;
}

}  // namespace

void write_refsets(const ExperimentConfig& config, const fs::path& dir) {
    fs::create_directories(dir / "refsets");
    WeightSet weights = experiment_weights(config);
    VectorSet ref = experiment_refset(config, weights);
    write_objective_set_csv(dir / "refsets" / "weights.csv", weights.points);
    write_objective_set_csv(dir / "refsets" / "reference.csv", ref);
}

RankTable write_rank_artifacts(const ExperimentConfig& config, const fs::path& dir, int mu) {
    FrontShape front = make_front(config.front, config.m);
    WeightSet weights = experiment_weights(config);
    VectorSet ref = experiment_refset(config, weights);

    std::vector<std::pair<std::string, VectorSet>> sets;
    for (Indicator kind : config.indicators) {
        fs::path best = dir / "best" / (file_tag(kind) + "_mu" + std::to_string(mu) + ".csv");
        sets.emplace_back("A_" + std::string(to_string(kind)), read_objective_set_csv(best));
    }
    if (config.front != FrontKind::Disconnected) {
        int h = sld_resolution_for_size(config.m, static_cast<std::size_t>(mu));
        if (h > 0) sets.emplace_back("A_SLD", reference_set(front, sld(config.m, h)));
    }

    std::vector<std::pair<std::string, IndicatorSpec>> specs;
    for (Indicator kind : config.indicators)
        specs.emplace_back(to_string(kind), make_indicator_spec(config, kind, ref, weights));

    RankTable table = rank_sets(specs, sets);
    TauMatrix tau = tau_matrix(table);

    fs::create_directories(dir / "tables");
    std::string suffix = "_mu" + std::to_string(mu);
    write_rank_table_csv(dir / "tables" / ("rank" + suffix + ".csv"), table);
    write_json_file(dir / "tables" / ("rank" + suffix + ".json"), rank_table_to_json(table));
    write_tau_matrix_csv(dir / "tables" / ("tau" + suffix + ".csv"), tau);
    write_json_file(dir / "tables" / ("tau" + suffix + ".json"), tau_matrix_to_json(tau));
    return table;
}

void run_experiment(const ExperimentConfig& config) {
    fs::path dir(config.out_dir);
    fs::create_directories(dir);

    Manifest manifest(dir);
    write_json_file(dir / "config.json", config_to_json(config));
    manifest.add("config.json");

    write_refsets(config, dir);
    manifest.add("refsets/weights.csv");
    manifest.add("refsets/reference.csv");
    manifest.write(false);

    FrontShape front = make_front(config.front, config.m);
    WeightSet weights = experiment_weights(config);
    VectorSet ref = experiment_refset(config, weights);

    std::uint64_t global_index = 0;
    for (int mu : config.mu_list) {
        for (Indicator kind : config.indicators) {
            IndicatorSpec spec = make_indicator_spec(config, kind, ref, weights);
            std::vector<RunRecord> records = run_group(config, front, mu, spec, global_index);
            global_index += static_cast<std::uint64_t>(config.runs);

            std::string tag = file_tag(kind);
            fs::path run_dir = dir / "runs" / tag / ("mu" + std::to_string(mu));
            fs::create_directories(run_dir);
            for (int k = 0; k < config.runs; ++k) {
                fs::path file = run_dir / ("run" + std::to_string(k) + ".json");
                write_json_file(file, run_record_to_json(records[k]));
                manifest.add(fs::relative(file, dir).generic_string());
            }

            int best = best_run_index(records);
            VectorSet best_set = decode(front, records[best].best_point, mu);

            fs::create_directories(dir / "best");
            fs::path best_file =
                dir / "best" / (tag + "_mu" + std::to_string(mu) + ".csv");
            write_objective_set_csv(best_file, best_set);
            manifest.add(fs::relative(best_file, dir).generic_string());

            fs::create_directories(dir / "scatter");
            fs::path scatter_file =
                dir / "scatter" / (tag + "_mu" + std::to_string(mu) + ".csv");
            write_scatter_csv(scatter_file, {{"front", ref}, {"members", best_set}});
            manifest.add(fs::relative(scatter_file, dir).generic_string());
            manifest.write(false);
        }

        write_rank_artifacts(config, dir, mu);
        std::string suffix = "_mu" + std::to_string(mu);
        manifest.add("tables/rank" + suffix + ".csv");
        manifest.add("tables/rank" + suffix + ".json");
        manifest.add("tables/tau" + suffix + ".csv");
        manifest.add("tables/tau" + suffix + ".json");
        manifest.write(false);
    }
    manifest.write(true);
}

nlohmann::json eval_set(const ExperimentConfig& config, Indicator kind,
                        const fs::path& set_csv) {
    VectorSet set = read_objective_set_csv(set_csv);
    if (static_cast<int>(set.front().size()) != config.m)
        throw InvalidInput("set " + set_csv.string() + " has " +
                           std::to_string(set.front().size()) + " columns but config has m=" +
                           std::to_string(config.m));

    FrontShape front = make_front(config.front, config.m);
    WeightSet weights = experiment_weights(config);
    VectorSet ref = experiment_refset(config, weights);
    IndicatorSpec spec = make_indicator_spec(config, kind, ref, weights);

    DistributionStats stats = distribution_stats(set, front);
    nlohmann::json j;
    j["indicator"] = to_string(kind);
    j["mu"] = set.size();
    j["m"] = config.m;
    j["value"] = evaluate(spec, set);
    j["oriented"] = evaluate_oriented(spec, set);
    j["stats"] = {{"extreme_min_dist", stats.extreme_min_dist},
                  {"extreme_max_dist", stats.extreme_max_dist},
                  {"nn_min", stats.nn_min},
                  {"nn_mean", stats.nn_mean},
                  {"nn_max", stats.nn_max},
                  {"duplicate_pairs", stats.duplicate_pairs}};
    return j;
}

}  // namespace mudist

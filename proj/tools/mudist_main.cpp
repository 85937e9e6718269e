#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mudist/experiment.hpp"
#include "mudist/io.hpp"

namespace fs = std::filesystem;
using namespace mudist;

namespace {

ExperimentConfig load_config(const std::string& path) {
    if (path.empty()) return ExperimentConfig{};
    return config_from_json(read_json_file(path));
}

void emit_error(const std::string& type, const std::string& message) {
    nlohmann::json j;
    j["error"] = {{"type", type}, {"message", message}};
    std::cerr << j.dump() << '\n';
}

int cmd_gen_refset(const std::string& config_path, const std::string& front_name, int m,
                   std::size_t size, const std::string& out) {
    ExperimentConfig config = load_config(config_path);
    if (!front_name.empty()) config.front = front_kind_from_string(front_name);
    if (m > 0) config.m = m;
    if (size > 0) config.weight_resolution = resolve_weight_resolution(config.m, size);
    write_refsets(config, out);
    WeightSet weights = experiment_weights(config);
    VectorSet ref = experiment_refset(config, weights);
    nlohmann::json j;
    j["weights"] = weights.points.size();
    j["reference"] = ref.size();
    j["out"] = out;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_eval(const std::string& config_path, const std::string& front_name, int m,
             const std::string& indicator_name, const std::string& set_path) {
    ExperimentConfig config = load_config(config_path);
    if (!front_name.empty()) config.front = front_kind_from_string(front_name);
    if (m > 0) config.m = m;
    Indicator kind = indicator_from_string(indicator_name);
    std::cout << eval_set(config, kind, set_path).dump(2) << '\n';
    return 0;
}

int cmd_optimize(const std::string& config_path, bool desk, const std::string& out,
                 std::uint64_t seed, bool seed_set, int workers) {
    ExperimentConfig config = load_config(config_path);
    if (desk) apply_desk_profile(config);
    if (!out.empty()) config.out_dir = out;
    if (seed_set) config.master_seed = seed;
    if (workers > 0) config.workers = workers;
    run_experiment(config);
    std::cout << "experiment written to " << config.out_dir << '\n';
    return 0;
}

int cmd_rank(const std::string& config_path, const std::string& dir, int mu) {
    std::string effective = config_path;
    if (effective.empty()) {
        fs::path embedded = fs::path(dir) / "config.json";
        if (!fs::exists(embedded))
            throw ConfigError("no --config given and " + embedded.string() + " not found");
        effective = embedded.string();
    }
    ExperimentConfig config = load_config(effective);
    RankTable table = write_rank_artifacts(config, dir, mu);
    std::cout << rank_table_to_json(table).dump(2) << '\n';
    return 0;
}

int cmd_tau(const std::string& table_path) {
    RankTable table = rank_table_from_json(read_json_file(table_path));
    std::cout << tau_matrix_to_json(tau_matrix(table)).dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mu-distribution toolkit: optimal distributions on parametric fronts"};
    app.require_subcommand(1);

    std::string config_path, front_name, indicator_name, set_path, out_dir, table_path, dir;
    int m = 0;
    int mu = 0;
    std::size_t size = 0;
    bool desk = false;
    std::uint64_t seed = 0;
    int workers = 0;

    CLI::App* gen = app.add_subcommand("gen-refset", "write weight and reference sets");
    gen->add_option("--config", config_path, "experiment config JSON");
    gen->add_option("--front", front_name, "front kind");
    gen->add_option("--m", m, "objective count");
    gen->add_option("--size", size, "exact weight count (resolved to a lattice resolution)");
    gen->add_option("--out", out_dir, "output directory")->required();

    CLI::App* ev = app.add_subcommand("eval", "evaluate a stored set under one indicator");
    ev->add_option("--config", config_path, "experiment config JSON");
    ev->add_option("--front", front_name, "front kind");
    ev->add_option("--m", m, "objective count");
    ev->add_option("--indicator", indicator_name, "indicator name")->required();
    ev->add_option("--set", set_path, "objective set CSV")->required();

    CLI::App* opt = app.add_subcommand("optimize", "run the optimization protocol");
    opt->add_option("--config", config_path, "experiment config JSON");
    opt->add_flag("--desk", desk, "desk-scale profile: 5 runs, 10^3 * d budget");
    opt->add_option("--out", out_dir, "output directory (overrides config)");
    CLI::Option* seed_opt = opt->add_option("--seed", seed, "master seed (overrides config)");
    opt->add_option("--workers", workers, "parallel runs per group");

    CLI::App* rank = app.add_subcommand("rank", "rebuild rank and correlation tables for one mu");
    rank->add_option("--config", config_path, "experiment config JSON (default: <dir>/config.json)");
    rank->add_option("--dir", dir, "experiment output directory")->required();
    rank->add_option("--mu", mu, "set size")->required();

    CLI::App* tau = app.add_subcommand("tau", "Kendall correlation matrix from a rank table JSON");
    tau->add_option("--table", table_path, "rank table JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen_refset(config_path, front_name, m, size, out_dir);
        if (ev->parsed()) return cmd_eval(config_path, front_name, m, indicator_name, set_path);
        if (opt->parsed())
            return cmd_optimize(config_path, desk, out_dir, seed, seed_opt->count() > 0, workers);
        if (rank->parsed()) return cmd_rank(config_path, dir, mu);
        if (tau->parsed()) return cmd_tau(table_path);
    } catch (const ConfigError& e) {
        emit_error("config", e.what());
        return 2;
    } catch (const InvalidInput& e) {
        emit_error("input", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 4;
    }
    return 0;
}

// Acceptance suite: one printed line per criterion, [PASS]/[FAIL] plus a
// short detail, exit status 0 only if every criterion holds. Covers the
// hand-checked anchors, the Monte Carlo and exact oracles, the frozen
// correlation values, and desk-scale end-to-end behavior of the optimized
// distributions.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mudist/experiment.hpp"
#include "mudist/io.hpp"
#include "mudist/rng.hpp"

using namespace mudist;
namespace fs = std::filesystem;

namespace {

fs::path g_work;

Vector random_theta(Rng& rng, int n) {
    Vector theta(n);
    for (double& v : theta) v = rng.uniform01();
    return theta;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---------------------------------------------------------------- anchors

bool translation_anchors(std::string& detail) {
    VectorSet b = translate({0.25, 0.5}, 1, 3);
    if (!close(b[0][0], 0.5, 1e-14) || !close(b[0][1], 0.25, 1e-14) ||
        !close(b[0][2], 0.25, 1e-14)) {
        detail = "chunk (0.25,0.5) did not map to (0.5,0.25,0.25)";
        return false;
    }
    if (translate({1.0, 0.0}, 1, 3)[0] != Vector{0.0, 1.0, 0.0} ||
        translate({0.0, 0.0}, 1, 3)[0] != Vector{1.0, 0.0, 0.0} ||
        translate({1.0, 1.0}, 1, 3)[0] != Vector{0.0, 0.0, 1.0}) {
        detail = "corner chunks did not map to simplex vertices";
        return false;
    }
    Rng rng(401);
    for (int m : {2, 3, 5, 8}) {
        for (int rep = 0; rep < 2500; ++rep) {
            VectorSet s = translate(random_theta(rng, m - 1), 1, m);
            double sum = 0.0;
            for (double x : s[0]) {
                if (x < 0.0) {
                    detail = "negative simplex coordinate";
                    return false;
                }
                sum += x;
            }
            if (!close(sum, 1.0, 1e-12)) {
                detail = "simplex sum off by more than 1e-12";
                return false;
            }
        }
    }
    DisconnectedIntervals pinned = disconnected_intervals();
    DisconnectedIntervals scanned = scan_disconnected_intervals(1000000);
    if (!close(pinned.t1, scanned.t1, 2e-6) || !close(pinned.t2, scanned.t2, 2e-6) ||
        !close(pinned.t3, scanned.t3, 2e-6) || !close(pinned.k_max, scanned.k_max, 1e-9)) {
        detail = "pinned disconnected constants drifted from the scan";
        return false;
    }
    detail = "vertex images, 10^4 simplex sums, interval constants";
    return true;
}

bool indicator_anchors(std::string& detail) {
    struct Check {
        const char* name;
        double got;
        double want;
        double tol;
    };
    VectorSet two = {{0.2, 0.6}, {0.6, 0.2}};
    VectorSet ref2 = {{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}};
    VectorSet refv = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    VectorSet spread_a = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.5, 0.5, 0.0}};
    VectorSet pd_fwd = {{0.01, 0.19}, {0.01, 0.19}, {0.37, 0.0}, {0.83, 0.15}};
    VectorSet pd_rev(pd_fwd.rbegin(), pd_fwd.rend());
    const double h = std::sqrt(3.0) / 6.0;

    std::vector<Check> checks = {
        {"HV box", hypervolume({{0.0, 0.0, 0.0}}, {1.2, 1.2, 1.2}), 1.728, 1e-12},
        {"HV pair", hypervolume(two, {1.2, 1.2}), 0.84, 1e-12},
        {"HV single", hypervolume({{0.5, 0.5}}, {1.2, 1.2}), 0.49, 1e-12},
        {"IGD", igd({{0.0, 1.0}}, ref2), (std::sqrt(0.5) + std::sqrt(2.0)) / 3.0, 1e-12},
        {"IGD+ clip", igd_plus({{0.25, 0.25}}, {{0.0, 0.5}}), 0.25, 1e-12},
        {"eps+ ahead", eps_plus({{0.5, 0.5}}, {{0.0, 1.0}, {1.0, 0.0}}), 0.5, 1e-12},
        {"eps+ behind", eps_plus({{0.0, 0.0}}, {{0.5, 0.5}}), -0.5, 1e-12},
        {"R2", r2({{0.5, 0.5}}, {{1.0, 0.0}, {0.0, 1.0}}, {0.0, 0.0}), 0.5, 1e-12},
        {"NR2", nr2({{0.0, 0.0, 0.0}}, {{1.0 / 3, 1.0 / 3, 1.0 / 3}}, {1.2, 1.2, 1.2}), 46.656,
         1e-9},
        {"SE pair", s_energy({{0.0, 0.0}, {1.0, 0.0}}, 1.0), 2.0, 1e-12},
        {"SE triple", s_energy({{0.0, 0.0}, {1.0 / 3, 0.0}, {1.0 / 6, h}}, 1.0), 18.0, 1e-8},
        {"Delta zero", spread_delta({{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}}, {{0.0, 1.0}, {1.0, 0.0}}),
         0.0, 0.0},
        {"Delta", spread_delta(spread_a, refv), 0.9282032302755089, 1e-12},
        {"PD pair", pd_greedy({{0.0, 0.0}, {1.0, 1.0}}), 1024.0, 1e-9},
        {"PD fwd", pd_greedy(pd_fwd), 481.00242319544947, 1e-6},
        {"PD rev", pd_greedy(pd_rev), 476.94772092113715, 1e-6},
    };
    for (const Check& c : checks) {
        if (!close(c.got, c.want, c.tol)) {
            std::ostringstream os;
            os << c.name << ": got " << c.got << ", want " << c.want;
            detail = os.str();
            return false;
        }
    }
    if (s_energy({{0.3, 0.3}, {0.3, 0.3}}, 1.0) != kInfValue) {
        detail = "duplicate members did not trip the SE sentinel";
        return false;
    }
    detail = std::to_string(checks.size()) + " hand values within pinned tolerances";
    return true;
}

bool refset_cardinalities(std::string& detail) {
    if (sld(3, 44).points.size() != 1035) {
        detail = "sld(3,44) != 1035";
        return false;
    }
    if (sld(5, 14).points.size() != 3060) {
        detail = "sld(5,14) != 3060";
        return false;
    }
    WeightSet two = sld_two_layer(8, 7, 6);
    std::set<Vector> uniq(two.points.begin(), two.points.end());
    if (two.points.size() != 5148 || uniq.size() != 5148) {
        detail = "two-layer (7,6) != 5148 unique";
        return false;
    }
    FrontShape disc = make_front(FrontKind::Disconnected, 3);
    if (disconnected_reference_set(disc, 33).size() != 1089) {
        detail = "disconnected 33-grid != 1089";
        return false;
    }
    FrontShape cc = make_front(FrontKind::ConstrainedConcave, 3);
    WeightSet dense = sld(3, 60);
    VectorSet feasible = reference_set(cc, dense);
    if (dense.points.size() != 1891 || feasible.size() != 1087) {
        detail = "constrained lattice: want 1891 -> 1087 feasible, got " +
                 std::to_string(dense.points.size()) + " -> " + std::to_string(feasible.size());
        return false;
    }
    detail = "1035 / 3060 / 5148 / 1089 / 1891->1087";
    return true;
}

// ------------------------------------------------------------- oracles

bool hv_monte_carlo(std::string& detail) {
    Rng rng(777);
    int checked = 0;
    double worst_sigmas = 0.0;
    for (int m : {2, 3, 5}) {
        Vector q(m, 1.2);
        double box = std::pow(1.2, m);
        for (FrontKind kind : {FrontKind::Linear, FrontKind::Concave}) {
            for (int mu : {5, 21}) {
                FrontShape front = make_front(kind == FrontKind::Linear || m != 2
                                                  ? kind
                                                  : FrontKind::TwoDDtlz2,
                                              m);
                VectorSet set = decode(front, random_theta(rng, mu * (m - 1)), mu);
                const int samples = 1000000;
                int hits = 0;
                Vector x(m);
                for (int s = 0; s < samples; ++s) {
                    for (int i = 0; i < m; ++i) x[i] = rng.uniform01() * 1.2;
                    for (const Vector& a : set) {
                        bool dom = true;
                        for (int i = 0; i < m; ++i) {
                            if (a[i] > x[i]) {
                                dom = false;
                                break;
                            }
                        }
                        if (dom) {
                            ++hits;
                            break;
                        }
                    }
                }
                double p = static_cast<double>(hits) / samples;
                double mc = box * p;
                double sigma = box * std::sqrt(std::max(p * (1.0 - p), 1e-12) / samples);
                double exact = hypervolume(set, q);
                double sigmas = std::abs(exact - mc) / sigma;
                worst_sigmas = std::max(worst_sigmas, sigmas);
                ++checked;
                if (sigmas > 4.0) {
                    std::ostringstream os;
                    os << "m=" << m << " mu=" << mu << ": exact " << exact << " vs MC " << mc
                       << " (" << sigmas << " sigma)";
                    detail = os.str();
                    return false;
                }
            }
        }
    }
    std::ostringstream os;
    os << checked << " sets within 4 sigma of 10^6-sample MC (worst " << worst_sigmas
       << " sigma)";
    detail = os.str();
    return true;
}

bool pd_oracle(std::string& detail) {
    Rng rng(888);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 2 + static_cast<int>(rng.uniform_index(6));
        VectorSet set(n, Vector(2));
        for (auto& v : set)
            for (double& x : v) x = rng.uniform01();
        if (rng.uniform01() < 0.3) set[rng.uniform_index(n)] = set[0];  // duplicates allowed

        double exact = pd_exact(set);
        double greedy = pd_greedy(set);
        if (greedy > exact + 1e-9 * std::max(1.0, exact)) {
            detail = "greedy exceeded the exact oracle";
            return false;
        }
        VectorSet shuffled = set;
        for (int s = 0; s < 3; ++s) {
            for (std::size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[rng.uniform_index(i)]);
            if (!close(pd_exact(shuffled), exact, 1e-9 * std::max(1.0, exact))) {
                detail = "exact oracle is order sensitive";
                return false;
            }
        }
    }
    VectorSet fwd = {{0.01, 0.19}, {0.01, 0.19}, {0.37, 0.0}, {0.83, 0.15}};
    VectorSet rev(fwd.rbegin(), fwd.rend());
    if (pd_greedy(fwd) == pd_greedy(rev)) {
        detail = "greedy witness lost its order sensitivity";
        return false;
    }
    detail = "100 sets: exact >= greedy, permutation invariant; witness stays order sensitive";
    return true;
}

bool kendall_anchors(std::string& detail) {
    Vector hv = {1, 10, 3, 5, 2, 7, 4, 8, 9, 6};
    Vector igd = {9, 1, 10, 7, 8, 2, 4, 6, 5, 3};
    Vector nr2r = {2, 10, 3, 5, 1, 7, 4, 8, 9, 6};
    double t_igd = kendall_tau(hv, igd);
    double t_nr2 = kendall_tau(hv, nr2r);
    if (!close(t_igd, -0.60, 0.005)) {
        detail = "tau(HV,IGD) = " + std::to_string(t_igd) + ", want -0.60 +- 0.005";
        return false;
    }
    if (!close(t_nr2, 0.96, 0.005)) {
        detail = "tau(HV,NR2) = " + std::to_string(t_nr2) + ", want 0.96 +- 0.005";
        return false;
    }
    std::ostringstream os;
    os << "tau(HV,IGD) = " << t_igd << ", tau(HV,NR2) = " << t_nr2;
    detail = os.str();
    return true;
}

bool dci_anchors(std::string& detail) {
    FrontShape linear = make_front(FrontKind::Linear, 3);
    VectorSet a21 = reference_set(linear, sld(3, 5));
    VectorSet r28 = reference_set(linear, sld(3, 6));
    double self = dci_unary(a21, a21);
    double sparse = dci_unary(a21, r28);
    if (self != 1.0) {
        detail = "self coverage != 1";
        return false;
    }
    if (!(sparse < 1.0) || !close(sparse, 0.3482142857142857, 1e-12)) {
        detail = "21-vs-28 coverage drifted: " + std::to_string(sparse);
        return false;
    }
    std::ostringstream os;
    os << "self = 1 exactly, 21-vs-28 = " << sparse;
    detail = os.str();
    return true;
}

// --------------------------------------------------- desk-scale protocol

ExperimentConfig desk_config(FrontKind kind, const std::string& out) {
    ExperimentConfig config;
    config.front = kind;
    config.m = 3;
    config.mu_list = {10};
    config.master_seed = 20260815;
    config.out_dir = out;
    apply_desk_profile(config);  // 5 runs, 10^3 * d evaluations
    return config;
}

VectorSet load_best(const fs::path& dir, const std::string& tag) {
    return read_objective_set_csv(dir / "best" / (tag + "_mu10.csv"));
}

bool desk_linear_igd_avoids_extremes(std::string& detail) {
    ExperimentConfig config = desk_config(FrontKind::Linear, (g_work / "desk_linear").string());
    run_experiment(config);

    VectorSet best = load_best(g_work / "desk_linear", "igd");
    VectorSet extremes = front_extremes(make_front(FrontKind::Linear, 3));
    double nearest = kInfValue;
    for (const Vector& a : best)
        for (const Vector& e : extremes) nearest = std::min(nearest, euclid(a, e));
    if (nearest <= 0.05) {
        detail = "an IGD-optimal member sits within 0.05 of a front extreme (" +
                 std::to_string(nearest) + ")";
        return false;
    }
    std::ostringstream os;
    os << "closest member-to-extreme distance " << nearest << " > 0.05";
    detail = os.str();
    return true;
}

bool desk_linear_se_reaches_boundary(std::string& detail) {
    VectorSet best = load_best(g_work / "desk_linear", "se");
    // in-plane distance from a simplex point to edge {a_j = 0} is
    // a_j * sqrt(m/(m-1))
    const double scale = std::sqrt(3.0 / 2.0);
    int near_edge = 0;
    for (const Vector& a : best) {
        double dmin = kInfValue;
        for (double x : a) dmin = std::min(dmin, x * scale);
        if (dmin <= 0.05) ++near_edge;
    }
    if (near_edge < 3) {
        detail = "only " + std::to_string(near_edge) + " members within 0.05 of the boundary";
        return false;
    }
    detail = std::to_string(near_edge) + " of 10 members within 0.05 of the simplex boundary";
    return true;
}

double symmetrized_nn(const VectorSet& x, const VectorSet& y) {
    double total = 0.0;
    for (const Vector& a : x) {
        double d = kInfValue;
        for (const Vector& b : y) d = std::min(d, euclid(a, b));
        total += d;
    }
    for (const Vector& b : y) {
        double d = kInfValue;
        for (const Vector& a : x) d = std::min(d, euclid(a, b));
        total += d;
    }
    return total / static_cast<double>(x.size() + y.size());
}

bool desk_concave_hv_kinship(std::string& detail) {
    ExperimentConfig config = desk_config(FrontKind::Concave, (g_work / "desk_concave").string());
    run_experiment(config);

    fs::path dir = g_work / "desk_concave";
    VectorSet hv = load_best(dir, "hv");
    VectorSet nr2s = load_best(dir, "nr2");
    VectorSet igds = load_best(dir, "igd");
    double to_nr2 = symmetrized_nn(hv, nr2s);
    double to_igd = symmetrized_nn(hv, igds);
    if (!(to_nr2 < to_igd)) {
        std::ostringstream os;
        os << "HV set is not closer to NR2 (" << to_nr2 << ") than to IGD (" << to_igd << ")";
        detail = os.str();
        return false;
    }
    std::ostringstream os;
    os << "mean NN distance HV-NR2 " << to_nr2 << " < HV-IGD " << to_igd;
    detail = os.str();
    return true;
}

bool desk_concave_self_rank(std::string& detail) {
    RankTable table =
        rank_table_from_json(read_json_file(g_work / "desk_concave/tables/rank_mu10.json"));
    if (table.sets.size() != 10) {
        detail = "expected 10 columns (9 optimized + lattice), got " +
                 std::to_string(table.sets.size());
        return false;
    }
    std::vector<std::string> offenders;
    for (std::size_t i = 0; i < table.indicators.size(); ++i) {
        std::string own = "A_" + table.indicators[i];
        std::size_t col = 0;
        while (col < table.sets.size() && table.sets[col] != own) ++col;
        if (table.ranks[i][col] > 2.0 + 1e-12)
            offenders.push_back(table.indicators[i] + " (rank " +
                                std::to_string(table.ranks[i][col]) + ")");
    }
    if (!offenders.empty()) {
        detail = "own set not in top 2 for:";
        for (const std::string& s : offenders) detail += " " + s;
        return false;
    }
    detail = "each of the 9 indicators ranks its own optimized set in its top 2";
    return true;
}

bool desk_concave_tau_pattern(std::string& detail) {
    nlohmann::json j = read_json_file(g_work / "desk_concave/tables/tau_mu10.json");
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    auto index = [&](const std::string& name) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return i;
        return labels.size();
    };
    std::size_t ihv = index("HV"), iigd = index("IGD"), inr2 = index("NR2");
    if (ihv >= labels.size() || iigd >= labels.size() || inr2 >= labels.size()) {
        detail = "tau matrix is missing HV/IGD/NR2 rows";
        return false;
    }
    double t_igd = j.at("tau")[ihv][iigd].get<double>();
    double t_nr2 = j.at("tau")[ihv][inr2].get<double>();
    if (!(t_nr2 > t_igd)) {
        std::ostringstream os;
        os << "tau(HV,NR2) = " << t_nr2 << " not above tau(HV,IGD) = " << t_igd;
        detail = os.str();
        return false;
    }
    std::ostringstream os;
    os << "tau(HV,NR2) = " << t_nr2 << " > tau(HV,IGD) = " << t_igd;
    detail = os.str();
    return true;
}

bool desk_rerun_identical(std::string& detail) {
    ExperimentConfig config = desk_config(FrontKind::Linear, (g_work / "desk_rerun").string());
    run_experiment(config);

    nlohmann::json a = read_json_file(g_work / "desk_linear/manifest.json");
    nlohmann::json b = read_json_file(g_work / "desk_rerun/manifest.json");
    std::map<std::string, std::string> ha, hb;
    for (const auto& e : a.at("artifacts"))
        ha[e.at("path").get<std::string>()] = e.at("hash").get<std::string>();
    for (const auto& e : b.at("artifacts"))
        hb[e.at("path").get<std::string>()] = e.at("hash").get<std::string>();
    ha.erase("config.json");  // embeds the differing out_dir
    hb.erase("config.json");
    if (ha != hb) {
        int diffs = 0;
        std::string first;
        for (const auto& [path, hash] : ha) {
            auto it = hb.find(path);
            if (it == hb.end() || it->second != hash) {
                ++diffs;
                if (first.empty()) first = path;
            }
        }
        detail = std::to_string(diffs) + " artifacts differ, first: " + first;
        return false;
    }
    detail = std::to_string(ha.size()) + " artifacts byte-identical across reruns";
    return true;
}

}  // namespace

int main() {
    g_work = fs::temp_directory_path() / "mudist_acceptance";
    fs::remove_all(g_work);
    fs::create_directories(g_work);

    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> check;
    };
    std::vector<Criterion> criteria = {
        {"translation anchors", translation_anchors},
        {"indicator hand anchors", indicator_anchors},
        {"reference set cardinalities", refset_cardinalities},
        {"hypervolume Monte Carlo oracle", hv_monte_carlo},
        {"diversity exact oracle", pd_oracle},
        {"Kendall correlation anchors", kendall_anchors},
        {"grid coverage anchors", dci_anchors},
        {"desk linear: IGD set avoids extremes", desk_linear_igd_avoids_extremes},
        {"desk linear: SE set reaches the boundary", desk_linear_se_reaches_boundary},
        {"desk concave: HV set closer to NR2 than IGD", desk_concave_hv_kinship},
        {"desk concave: every indicator favors its own set", desk_concave_self_rank},
        {"desk concave: tau(HV,NR2) above tau(HV,IGD)", desk_concave_tau_pattern},
        {"desk rerun: byte-identical artifacts", desk_rerun_identical},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.1fs) - %s\n", ok ? "PASS" : "FAIL", c.name, secs,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}

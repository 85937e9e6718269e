#include "mudist/indicators.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace mudist {

namespace {

double inclusive_volume(const Vector& p, const Vector& q) {
    double v = 1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double e = q[i] - p[i];
        if (e <= 0.0) return 0.0;
        v *= e;
    }
    return v;
}

// Minimal elements under weak dominance; first occurrence of exact
// duplicates survives.
VectorSet nondominated_subset(const VectorSet& pts) {
    VectorSet out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool removed = false;
        for (std::size_t j = 0; j < pts.size() && !removed; ++j) {
            if (j == i) continue;
            if (!weakly_dominates(pts[j], pts[i])) continue;
            if (weakly_dominates(pts[i], pts[j]))
                removed = j < i;  // exact tie: keep the earlier one
            else
                removed = true;
        }
        if (!removed) out.push_back(pts[i]);
    }
    return out;
}

double sweep_2d(VectorSet pts, const Vector& q) {
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double top = q[1];
    for (const auto& p : pts) {
        if (p[1] < top) {
            area += (q[0] - p[0]) * (top - p[1]);
            top = p[1];
        }
    }
    return area;
}

double wfg(VectorSet pts, const Vector& q) {
    if (pts.empty()) return 0.0;
    if (pts.size() == 1) return inclusive_volume(pts[0], q);
    if (q.size() == 2) return sweep_2d(std::move(pts), q);
    const std::size_t m = q.size();
    std::sort(pts.begin(), pts.end(), [m](const Vector& a, const Vector& b) {
        if (a[m - 1] != b[m - 1]) return a[m - 1] < b[m - 1];
        return a < b;
    });
    double total = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        VectorSet limit;
        limit.reserve(pts.size() - k - 1);
        for (std::size_t j = k + 1; j < pts.size(); ++j) {
            Vector w(m);
            for (std::size_t i = 0; i < m; ++i) w[i] = std::max(pts[k][i], pts[j][i]);
            limit.push_back(std::move(w));
        }
        total += inclusive_volume(pts[k], q) - wfg(nondominated_subset(limit), q);
    }
    return total;
}

void check_set_ref(const VectorSet& set, const VectorSet& ref, const char* name) {
    require_uniform_dimension(set, name);
    require_uniform_dimension(ref, name);
    if (set.front().size() != ref.front().size())
        throw InvalidInput(std::string(name) + ": set and reference dimensions differ");
}

double quasi_norm_dist(const Vector& a, const Vector& b, double p) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::fabs(a[i] - b[i]), p);
    return std::pow(s, 1.0 / p);
}

}  // namespace

Indicator indicator_from_string(std::string_view name) {
    std::string n(name);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == "hv") return Indicator::HV;
    if (n == "igd") return Indicator::IGD;
    if (n == "igd+" || n == "igdplus" || n == "igd-plus") return Indicator::IGDPlus;
    if (n == "r2") return Indicator::R2;
    if (n == "nr2") return Indicator::NR2;
    if (n == "eps+" || n == "epsplus" || n == "eps-plus") return Indicator::EpsPlus;
    if (n == "se") return Indicator::SE;
    if (n == "delta" || n == "spread") return Indicator::Delta;
    if (n == "pd") return Indicator::PD;
    if (n == "dci") return Indicator::DCI;
    throw InvalidInput("unknown indicator: " + std::string(name));
}

std::string to_string(Indicator kind) {
    switch (kind) {
        case Indicator::HV: return "HV";
        case Indicator::IGD: return "IGD";
        case Indicator::IGDPlus: return "IGD+";
        case Indicator::R2: return "R2";
        case Indicator::NR2: return "NR2";
        case Indicator::EpsPlus: return "EPS+";
        case Indicator::SE: return "SE";
        case Indicator::Delta: return "Delta";
        case Indicator::PD: return "PD";
        case Indicator::DCI: return "DCI";
    }
    throw InvalidInput("unknown indicator");
}

bool is_maximizing(Indicator kind) {
    return kind == Indicator::HV || kind == Indicator::NR2 || kind == Indicator::PD ||
           kind == Indicator::DCI;
}

double hypervolume(const VectorSet& set, const Vector& q) {
    require_uniform_dimension(set, "hypervolume");
    const std::size_t m = set.front().size();
    if (q.size() != m) throw InvalidInput("hypervolume: reference point dimension mismatch");
    if (m < 2) throw InvalidInput("hypervolume: m must be at least 2");
    VectorSet pts;
    for (const auto& a : set) {
        bool inside = true;
        for (std::size_t i = 0; i < m && inside; ++i) inside = a[i] < q[i];
        if (inside) pts.push_back(a);
    }
    if (pts.empty()) return 0.0;
    if (m == 2) return sweep_2d(std::move(pts), q);
    // Heuristic: put the highest-variance objective last so the recursion
    // sorts on the most discriminating coordinate.
    Vector mean(m, 0.0), var(m, 0.0);
    for (const auto& p : pts)
        for (std::size_t i = 0; i < m; ++i) mean[i] += p[i];
    for (double& v : mean) v /= static_cast<double>(pts.size());
    for (const auto& p : pts)
        for (std::size_t i = 0; i < m; ++i) var[i] += (p[i] - mean[i]) * (p[i] - mean[i]);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return var[a] < var[b]; });
    VectorSet perm(pts.size(), Vector(m));
    Vector qperm(m);
    for (std::size_t i = 0; i < m; ++i) qperm[i] = q[order[i]];
    for (std::size_t k = 0; k < pts.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) perm[k][i] = pts[k][order[i]];
    return wfg(nondominated_subset(perm), qperm);
}

double igd(const VectorSet& set, const VectorSet& ref) {
    check_set_ref(set, ref, "igd");
    double total = 0.0;
    for (const auto& r : ref) {
        double best = kInfValue;
        for (const auto& a : set) best = std::min(best, sq_euclid(a, r));
        total += std::sqrt(best);
    }
    return total / static_cast<double>(ref.size());
}

double igd_plus(const VectorSet& set, const VectorSet& ref) {
    check_set_ref(set, ref, "igd_plus");
    double total = 0.0;
    for (const auto& r : ref) {
        double best = kInfValue;
        for (const auto& a : set) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) {
                const double d = std::max(a[i] - r[i], 0.0);
                s += d * d;
            }
            best = std::min(best, s);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(ref.size());
}

double eps_plus(const VectorSet& set, const VectorSet& ref) {
    check_set_ref(set, ref, "eps_plus");
    double worst = -kInfValue;
    for (const auto& r : ref) {
        double best = kInfValue;
        for (const auto& a : set) {
            double top = -kInfValue;
            for (std::size_t i = 0; i < r.size(); ++i) top = std::max(top, a[i] - r[i]);
            best = std::min(best, top);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double r2(const VectorSet& set, const VectorSet& weights, const Vector& utopian) {
    check_set_ref(set, weights, "r2");
    const std::size_t m = set.front().size();
    Vector z = utopian.empty() ? Vector(m, 0.0) : utopian;
    if (z.size() != m) throw InvalidInput("r2: utopian point dimension mismatch");
    double total = 0.0;
    for (const auto& w : weights) {
        double best = kInfValue;
        for (const auto& a : set) {
            double top = -kInfValue;
            for (std::size_t i = 0; i < m; ++i)
                top = std::max(top, w[i] * std::fabs(a[i] - z[i]));
            best = std::min(best, top);
        }
        total += best;
    }
    return total / static_cast<double>(weights.size());
}

double nr2(const VectorSet& set, const VectorSet& weights, const Vector& q) {
    check_set_ref(set, weights, "nr2");
    const std::size_t m = set.front().size();
    if (q.size() != m) throw InvalidInput("nr2: reference point dimension mismatch");
    // For each weight direction, the score is the length of the ray from q
    // (scaled per axis by 1/w_i) that stays inside the region dominated by
    // the set: min over axes gives the exit face of one member's box, max
    // over members takes the union.  Raising to the m-th power makes the
    // per-direction term proportional to the dominated volume along that
    // ray, so large values track large hypervolume.
    double total = 0.0;
    for (const auto& w : weights) {
        double best = -kInfValue;
        for (const auto& a : set) {
            double reach = kInfValue;
            for (std::size_t i = 0; i < m; ++i) {
                const double wi = w[i] == 0.0 ? 1e-6 : w[i];
                reach = std::min(reach, std::fabs(q[i] - a[i]) / wi);
            }
            best = std::max(best, reach);
        }
        total += std::pow(best, static_cast<double>(m));
    }
    return total / static_cast<double>(weights.size());
}

double s_energy(const VectorSet& set, double s) {
    require_uniform_dimension(set, "s_energy");
    if (!(s > 0.0)) throw ConfigError("s_energy: exponent must be positive");
    double total = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const double d2 = sq_euclid(set[i], set[j]);
            if (d2 == 0.0) return kInfValue;
            total += 2.0 * std::pow(d2, -0.5 * s);
        }
    }
    return total;
}

double spread_delta(const VectorSet& set, const VectorSet& ref) {
    check_set_ref(set, ref, "spread_delta");
    const std::size_t n = set.size();
    const std::size_t m = set.front().size();
    if (n < 2) throw InvalidInput("spread_delta: at least two members required");
    Vector nn(n, kInfValue);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) nn[i] = std::min(nn[i], sq_euclid(set[i], set[j]));
    for (double& v : nn) v = std::sqrt(v);
    const double d_avg = std::accumulate(nn.begin(), nn.end(), 0.0) / static_cast<double>(n);
    double d_ext = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t arg = 0;
        for (std::size_t r = 1; r < ref.size(); ++r)
            if (ref[r][i] > ref[arg][i]) arg = r;
        double best = kInfValue;
        for (const auto& a : set) best = std::min(best, sq_euclid(ref[arg], a));
        d_ext += std::sqrt(best);
    }
    double dev = 0.0;
    for (double v : nn) dev += std::fabs(v - d_avg);
    const double num = d_ext + dev;
    const double den = d_ext + d_avg * (static_cast<double>(n) - static_cast<double>(m));
    if (den == 0.0) return num == 0.0 ? 0.0 : kInfValue;
    return num / den;
}

double pd_greedy(const VectorSet& set, double p) {
    require_uniform_dimension(set, "pd_greedy");
    if (!(p > 0.0)) throw ConfigError("pd_greedy: power must be positive");
    const std::size_t n = set.size();
    if (n < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double best = kInfValue;
        for (std::size_t j = i + 1; j < n; ++j)
            best = std::min(best, quasi_norm_dist(set[i], set[j], p));
        total += best;
    }
    return total;
}

double pd_exact(const VectorSet& set, double p) {
    require_uniform_dimension(set, "pd_exact");
    if (!(p > 0.0)) throw ConfigError("pd_exact: power must be positive");
    const std::size_t n = set.size();
    if (n > 9) throw InvalidInput("pd_exact: guarded to mu <= 9");
    if (n < 2) return 0.0;
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            dist[i * n + j] = dist[j * n + i] = quasi_norm_dist(set[i], set[j], p);
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<double> memo(full + 1, -1.0);
    for (std::size_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(static_cast<unsigned long long>(mask)) < 2) {
            memo[mask] = 0.0;
            continue;
        }
        double best = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
            if (!(mask >> a & 1)) continue;
            double dmin = kInfValue;
            for (std::size_t b = 0; b < n; ++b)
                if (b != a && (mask >> b & 1)) dmin = std::min(dmin, dist[a * n + b]);
            best = std::max(best, memo[mask ^ (std::size_t{1} << a)] + dmin);
        }
        memo[mask] = best;
    }
    return memo[full];
}

double dci_unary(const VectorSet& set, const VectorSet& ref, int divisions) {
    check_set_ref(set, ref, "dci_unary");
    if (divisions < 1) throw InvalidInput("dci_unary: divisions must be at least 1");
    const std::size_t m = set.front().size();
    if (std::pow(static_cast<double>(divisions), static_cast<double>(m)) >= 9.2e18)
        throw InvalidInput("dci_unary: grid too fine to index");
    Vector lo(m, kInfValue), hi(m, -kInfValue);
    auto stretch = [&](const VectorSet& s) {
        for (const auto& v : s)
            for (std::size_t i = 0; i < m; ++i) {
                lo[i] = std::min(lo[i], v[i]);
                hi[i] = std::max(hi[i], v[i]);
            }
    };
    stretch(set);
    stretch(ref);
    Vector origin(m), width(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double w = (hi[i] - lo[i]) / divisions;
        origin[i] = lo[i] - 0.5 * w;
        width[i] = w > 0.0 ? (hi[i] - lo[i] + w) / divisions : 1.0;
    }
    auto cell_of = [&](const Vector& v) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < m; ++i) {
            auto g = static_cast<long long>(std::floor((v[i] - origin[i]) / width[i]));
            g = std::clamp(g, 0LL, static_cast<long long>(divisions - 1));
            code = code * static_cast<std::uint64_t>(divisions) + static_cast<std::uint64_t>(g);
        }
        return code;
    };
    auto decode_cells = [&](const VectorSet& s) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Vector> cells;
        for (const auto& v : s) {
            const std::uint64_t code = cell_of(v);
            if (!seen.insert(code).second) continue;
            Vector g(m);
            std::uint64_t c = code;
            for (std::size_t i = m; i-- > 0;) {
                g[i] = static_cast<double>(c % divisions);
                c /= divisions;
            }
            cells.push_back(std::move(g));
        }
        return cells;
    };
    const auto set_cells = decode_cells(set);
    const auto ref_cells = decode_cells(ref);
    const double limit = static_cast<double>(m) + 1.0;
    double total = 0.0;
    for (const auto& h : ref_cells) {
        double gd2 = kInfValue;
        for (const auto& c : set_cells) gd2 = std::min(gd2, sq_euclid(h, c));
        total += gd2 < limit ? 1.0 - gd2 / limit : 0.0;
    }
    return total / static_cast<double>(ref_cells.size());
}

double evaluate(const IndicatorSpec& spec, const VectorSet& set) {
    require_uniform_dimension(set, "evaluate");
    const std::size_t m = set.front().size();
    auto need_point = [&](const Vector& v, const char* field) -> const Vector& {
        if (v.empty())
            throw ConfigError(std::string(to_string(spec.kind)) + ": missing " + field);
        if (v.size() != m)
            throw ConfigError(std::string(to_string(spec.kind)) + ": " + field +
                              " dimension mismatch");
        return v;
    };
    auto need_set = [&](const VectorSet& v, const char* field) -> const VectorSet& {
        if (v.empty())
            throw ConfigError(std::string(to_string(spec.kind)) + ": missing " + field);
        return v;
    };
    switch (spec.kind) {
        case Indicator::HV: return hypervolume(set, need_point(spec.reference_point, "reference_point"));
        case Indicator::IGD: return igd(set, need_set(spec.ref_set, "ref_set"));
        case Indicator::IGDPlus: return igd_plus(set, need_set(spec.ref_set, "ref_set"));
        case Indicator::R2: return r2(set, need_set(spec.weights, "weights"), spec.utopian);
        case Indicator::NR2:
            return nr2(set, need_set(spec.weights, "weights"),
                       need_point(spec.reference_point, "reference_point"));
        case Indicator::EpsPlus: return eps_plus(set, need_set(spec.ref_set, "ref_set"));
        case Indicator::SE:
            return s_energy(set, spec.s_exponent < 0.0 ? static_cast<double>(m) - 1.0
                                                       : spec.s_exponent);
        case Indicator::Delta: return spread_delta(set, need_set(spec.ref_set, "ref_set"));
        case Indicator::PD: return pd_greedy(set, spec.pd_power);
        case Indicator::DCI:
            return dci_unary(set, need_set(spec.ref_set, "ref_set"), spec.dci_divisions);
    }
    throw ConfigError("evaluate: unknown indicator");
}

double evaluate_oriented(const IndicatorSpec& spec, const VectorSet& set) {
    const double v = evaluate(spec, set);
    return is_maximizing(spec.kind) ? -v : v;
}

}  // namespace mudist

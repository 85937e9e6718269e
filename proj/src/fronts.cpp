#include "mudist/fronts.hpp"

#include <algorithm>
#include <cmath>

namespace mudist {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// Pinned endpoints of the per-coordinate optimal intervals (see
// scan_disconnected_intervals and tools/front-scan).
constexpr double kT1 = 0.25141183608891712;
constexpr double kT2 = 0.6316265307000612;
constexpr double kT3 = 0.85940085664472392;
constexpr double kKMax = 1.6929956344984224;

double coord_tradeoff(double x) { return x * (1.0 + std::sin(3.0 * kPi * x)); }

Vector unit_sphere(const Vector& b) {
    double n = 0.0;
    for (double v : b) n += v * v;
    n = std::sqrt(n);
    Vector a(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = b[i] / n;
    return a;
}

Vector convex_map(const Vector& b) {
    Vector s = unit_sphere(b);
    const std::size_t m = s.size();
    Vector a(m);
    for (std::size_t i = 0; i + 1 < m; ++i) a[i] = s[i] * s[i] * s[i] * s[i];
    a[m - 1] = s[m - 1] * s[m - 1];
    return a;
}

void check_theta(const Vector& theta, int mu, int m) {
    if (m < 2) throw InvalidInput("theta: m must be at least 2");
    if (mu < 1) throw InvalidInput("theta: mu must be at least 1");
    if (theta.size() != static_cast<std::size_t>(mu) * (m - 1))
        throw InvalidInput("theta: size must be mu*(m-1)");
    for (double v : theta)
        if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("theta: values must lie in [0,1]");
}

// C2 constraint of the constrained concave family: feasible points lie
// within radius r of one of the axis extremes or of the simplex center
// direction on the sphere.
double c2_violation(const Vector& a, double r) {
    const std::size_t m = a.size();
    double sq = 0.0;
    for (double v : a) sq += v * v;
    double best = kInfValue;
    for (std::size_t i = 0; i < m; ++i) {
        const double t = sq - a[i] * a[i] + (a[i] - 1.0) * (a[i] - 1.0) - r * r;
        best = std::min(best, t);
    }
    const double c = 1.0 / std::sqrt(static_cast<double>(m));
    double t = 0.0;
    for (double v : a) t += (v - c) * (v - c);
    best = std::min(best, t - r * r);
    return best;
}

}  // namespace

FrontKind front_kind_from_string(std::string_view name) {
    if (name == "linear") return FrontKind::Linear;
    if (name == "concave") return FrontKind::Concave;
    if (name == "convex") return FrontKind::Convex;
    if (name == "i-linear") return FrontKind::InvLinear;
    if (name == "i-concave") return FrontKind::InvConcave;
    if (name == "i-convex") return FrontKind::InvConvex;
    if (name == "disconnected") return FrontKind::Disconnected;
    if (name == "c-concave") return FrontKind::ConstrainedConcave;
    if (name == "2d-dtlz1") return FrontKind::TwoDDtlz1;
    if (name == "2d-dtlz2") return FrontKind::TwoDDtlz2;
    if (name == "2d-zdt1") return FrontKind::TwoDZdt1;
    throw InvalidInput("unknown front kind: " + std::string(name));
}

std::string to_string(FrontKind kind) {
    switch (kind) {
        case FrontKind::Linear: return "linear";
        case FrontKind::Concave: return "concave";
        case FrontKind::Convex: return "convex";
        case FrontKind::InvLinear: return "i-linear";
        case FrontKind::InvConcave: return "i-concave";
        case FrontKind::InvConvex: return "i-convex";
        case FrontKind::Disconnected: return "disconnected";
        case FrontKind::ConstrainedConcave: return "c-concave";
        case FrontKind::TwoDDtlz1: return "2d-dtlz1";
        case FrontKind::TwoDDtlz2: return "2d-dtlz2";
        case FrontKind::TwoDZdt1: return "2d-zdt1";
    }
    throw InvalidInput("unknown front kind");
}

FrontShape make_front(FrontKind kind, int m, double constraint_radius) {
    const bool two_d = kind == FrontKind::TwoDDtlz1 || kind == FrontKind::TwoDDtlz2 ||
                       kind == FrontKind::TwoDZdt1;
    if (two_d && m != 2) throw ConfigError(to_string(kind) + " requires m = 2");
    if (m < 2) throw ConfigError("fronts require m >= 2");
    if (kind == FrontKind::ConstrainedConcave && constraint_radius <= 0.0)
        throw ConfigError("c-concave requires a positive constraint radius");
    return FrontShape{kind, m, constraint_radius};
}

VectorSet translate(const Vector& theta, int mu, int m) {
    check_theta(theta, mu, m);
    VectorSet out(static_cast<std::size_t>(mu));
    for (int c = 0; c < mu; ++c) {
        const double* y = theta.data() + static_cast<std::size_t>(c) * (m - 1);
        Vector b(static_cast<std::size_t>(m));
        double used = 0.0;
        for (int j = 0; j < m - 1; ++j) {
            const double frac = 1.0 - std::pow(y[j], 1.0 / static_cast<double>(m - 1 - j));
            b[j] = (1.0 - used) * frac;
            used += b[j];
        }
        b[m - 1] = std::max(0.0, 1.0 - used);
        out[c] = std::move(b);
    }
    return out;
}

Vector map_front_point(const FrontShape& front, const Vector& b) {
    if (b.size() != static_cast<std::size_t>(front.m))
        throw InvalidInput("map_front: simplex vector dimension mismatch");
    switch (front.kind) {
        case FrontKind::Linear: return b;
        case FrontKind::Concave:
        case FrontKind::ConstrainedConcave: return unit_sphere(b);
        case FrontKind::Convex: return convex_map(b);
        case FrontKind::InvLinear: {
            Vector a(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) a[i] = 1.0 - b[i];
            return a;
        }
        case FrontKind::InvConvex: {
            Vector a = unit_sphere(b);
            for (double& v : a) v = 1.0 - v;
            return a;
        }
        case FrontKind::InvConcave: {
            Vector a = convex_map(b);
            for (double& v : a) v = 1.0 - v;
            return a;
        }
        case FrontKind::TwoDDtlz1: {
            // Native domain theta' in [0, 0.5], F = 0.5 - theta'; the
            // normalization by the 0.5 nadir collapses to the linear m=2 map.
            const double t = b[1];
            return Vector{t, 1.0 - t};
        }
        case FrontKind::TwoDDtlz2: {
            const double t = b[1];
            return Vector{t, std::sqrt(std::max(0.0, 1.0 - t * t))};
        }
        case FrontKind::TwoDZdt1: {
            const double t = b[1];
            return Vector{t, 1.0 - std::sqrt(t)};
        }
        case FrontKind::Disconnected:
            throw InvalidInput("map_front: disconnected kind is parameterized directly");
    }
    throw InvalidInput("map_front: unknown kind");
}

VectorSet map_front(const FrontShape& front, const VectorSet& simplex) {
    VectorSet out;
    out.reserve(simplex.size());
    for (const auto& b : simplex) out.push_back(map_front_point(front, b));
    return out;
}

VectorSet map_disconnected(const FrontShape& front, const Vector& theta, int mu) {
    const int m = front.m;
    check_theta(theta, mu, m);
    const double len1 = kT1;
    const double len2 = kT3 - kT2;
    const double total = len1 + len2;
    const double f_last_nadir = 2.0 * m;
    const double f_last_ideal = 2.0 * m - (m - 1) * kKMax;
    VectorSet out(static_cast<std::size_t>(mu));
    for (int c = 0; c < mu; ++c) {
        const double* y = theta.data() + static_cast<std::size_t>(c) * (m - 1);
        Vector a(static_cast<std::size_t>(m));
        double ksum = 0.0;
        for (int j = 0; j < m - 1; ++j) {
            const double s = y[j] * total;
            const double x = s <= len1 ? s : kT2 + (s - len1);
            ksum += coord_tradeoff(x);
            a[j] = x / kT3;
        }
        const double f_last = 2.0 * m - ksum;
        a[m - 1] = (f_last - f_last_ideal) / (f_last_nadir - f_last_ideal);
        out[c] = std::move(a);
    }
    return out;
}

VectorSet decode(const FrontShape& front, const Vector& theta, int mu) {
    if (front.kind == FrontKind::Disconnected) return map_disconnected(front, theta, mu);
    return map_front(front, translate(theta, mu, front.m));
}

VectorSet decode(const FrontShape& front, const ThetaVector& theta) {
    if (theta.m != front.m) throw InvalidInput("decode: theta/front dimension mismatch");
    return decode(front, theta.values, theta.mu);
}

double constraint_value_point(const FrontShape& front, const Vector& a) {
    if (front.kind != FrontKind::ConstrainedConcave) return 0.0;
    if (a.size() != static_cast<std::size_t>(front.m))
        throw InvalidInput("constraint_value: dimension mismatch");
    return c2_violation(a, front.constraint_radius);
}

double constraint_value(const FrontShape& front, const VectorSet& set) {
    if (front.kind != FrontKind::ConstrainedConcave) return 0.0;
    if (set.empty()) throw InvalidInput("constraint_value: empty set");
    double worst = -kInfValue;
    for (const auto& a : set) worst = std::max(worst, constraint_value_point(front, a));
    return worst;
}

double front_residual(const FrontShape& front, const Vector& a) {
    const std::size_t m = a.size();
    if (m != static_cast<std::size_t>(front.m))
        throw InvalidInput("front_residual: dimension mismatch");
    auto sum = [&](auto f) {
        double s = 0.0;
        for (double v : a) s += f(v);
        return s;
    };
    switch (front.kind) {
        case FrontKind::Linear:
        case FrontKind::TwoDDtlz1: return std::fabs(sum([](double v) { return v; }) - 1.0);
        case FrontKind::Concave:
        case FrontKind::ConstrainedConcave:
        case FrontKind::TwoDDtlz2: return std::fabs(sum([](double v) { return v * v; }) - 1.0);
        case FrontKind::Convex: {
            double s = a[m - 1];
            for (std::size_t i = 0; i + 1 < m; ++i) s += std::sqrt(a[i]);
            return std::fabs(s - 1.0);
        }
        case FrontKind::InvLinear:
            return std::fabs(sum([](double v) { return 1.0 - v; }) - 1.0);
        case FrontKind::InvConvex:
            return std::fabs(sum([](double v) { return (1.0 - v) * (1.0 - v); }) - 1.0);
        case FrontKind::InvConcave: {
            double s = 1.0 - a[m - 1];
            for (std::size_t i = 0; i + 1 < m; ++i) s += std::sqrt(std::max(0.0, 1.0 - a[i]));
            return std::fabs(s - 1.0);
        }
        case FrontKind::TwoDZdt1: return std::fabs(a[1] - (1.0 - std::sqrt(a[0])));
        case FrontKind::Disconnected: {
            const int mm = front.m;
            double worst = 0.0;
            double ksum = 0.0;
            for (int i = 0; i < mm - 1; ++i) {
                const double x = a[i] * kT3;
                double gap = 0.0;
                if (x > kT1 && x < kT2) gap = std::min(x - kT1, kT2 - x);
                if (x > kT3) gap = x - kT3;
                if (x < 0.0) gap = -x;
                worst = std::max(worst, gap);
                ksum += coord_tradeoff(x);
            }
            const double f_last_ideal = 2.0 * mm - (mm - 1) * kKMax;
            const double f_last = f_last_ideal + a[mm - 1] * (2.0 * mm - f_last_ideal);
            worst = std::max(worst, std::fabs(f_last - (2.0 * mm - ksum)));
            return worst;
        }
    }
    throw InvalidInput("front_residual: unknown kind");
}

VectorSet front_extremes(const FrontShape& front) {
    const int m = front.m;
    VectorSet out;
    out.reserve(static_cast<std::size_t>(m));
    if (front.kind == FrontKind::Disconnected) {
        // Parameter-space corners: axis i at the far interval end, the rest
        // at zero; the last extreme is the all-zero chunk.
        for (int i = 0; i < m - 1; ++i) {
            Vector theta(static_cast<std::size_t>(m - 1), 0.0);
            theta[i] = 1.0;
            out.push_back(map_disconnected(front, theta, 1).front());
        }
        out.push_back(map_disconnected(front, Vector(static_cast<std::size_t>(m - 1), 0.0), 1).front());
        return out;
    }
    for (int i = 0; i < m; ++i) {
        Vector corner(static_cast<std::size_t>(m), 0.0);
        corner[static_cast<std::size_t>(i)] = 1.0;
        out.push_back(map_front_point(front, corner));
    }
    return out;
}

DisconnectedIntervals disconnected_intervals() { return {kT1, kT2, kT3, kKMax}; }

DisconnectedIntervals scan_disconnected_intervals(int samples) {
    if (samples < 100) throw InvalidInput("scan requires at least 100 samples");
    // Dense 1-D nondominance scan of the pair (x, k(x)): x is optimal iff
    // k(x) reaches a new running maximum.
    double run_max = -1.0;
    bool inside = false;
    double t1 = 0.0, t2 = 0.0, t3 = 0.0, k_max = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = static_cast<double>(i) / (samples - 1);
        const double k = coord_tradeoff(x);
        if (k > run_max) {
            run_max = k;
            if (!inside && i > 0) t2 = x;
            inside = true;
            if (x <= 0.5)
                t1 = x;
            else
                t3 = x;
            k_max = k;
        } else {
            inside = false;
        }
    }
    return {t1, t2, t3, k_max};
}

}  // namespace mudist

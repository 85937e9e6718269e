#include "mudist/refsets.hpp"

#include <algorithm>

namespace mudist {

namespace {

void compositions(int m, int resolution, std::vector<int>& prefix, int left, VectorSet& out) {
    if (static_cast<int>(prefix.size()) == m - 1) {
        Vector w(static_cast<std::size_t>(m));
        for (int i = 0; i < m - 1; ++i) w[i] = static_cast<double>(prefix[i]) / resolution;
        w[m - 1] = static_cast<double>(left) / resolution;
        out.push_back(std::move(w));
        return;
    }
    for (int i = 0; i <= left; ++i) {
        prefix.push_back(i);
        compositions(m, resolution, prefix, left - i, out);
        prefix.pop_back();
    }
}

}  // namespace

WeightSet sld(int m, int resolution) {
    if (m < 2) throw InvalidInput("sld: m must be at least 2");
    if (resolution < 1) throw InvalidInput("sld: resolution must be at least 1");
    WeightSet ws;
    ws.m = m;
    ws.h1 = resolution;
    std::vector<int> prefix;
    compositions(m, resolution, prefix, resolution, ws.points);
    return ws;
}

WeightSet sld_two_layer(int m, int h1, int h2) {
    if (h2 < 0) throw InvalidInput("sld_two_layer: inner resolution must be non-negative");
    WeightSet ws = sld(m, h1);
    ws.h2 = h2;
    if (h2 == 0) return ws;
    const WeightSet inner = sld(m, h2);
    const double center = 1.0 / (2.0 * m);
    for (const auto& w : inner.points) {
        Vector v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = 0.5 * w[i] + center;
        if (std::find(ws.points.begin(), ws.points.end(), v) == ws.points.end())
            ws.points.push_back(std::move(v));
    }
    return ws;
}

std::size_t sld_size(int m, int resolution) {
    // C(resolution + m - 1, m - 1)
    std::size_t n = 1;
    for (int i = 1; i < m; ++i)
        n = n * static_cast<std::size_t>(resolution + i) / static_cast<std::size_t>(i);
    return n;
}

int sld_resolution_for_size(int m, std::size_t size) {
    for (int h = 1;; ++h) {
        const std::size_t s = sld_size(m, h);
        if (s == size) return h;
        if (s > size) return -1;
    }
}

VectorSet reference_set(const FrontShape& front, const WeightSet& weights) {
    if (weights.m != front.m)
        throw InvalidInput("reference_set: weight/front dimension mismatch");
    if (front.kind == FrontKind::Disconnected)
        throw ConfigError("reference_set: disconnected fronts use disconnected_reference_set");
    VectorSet out = map_front(front, weights.points);
    if (front.kind == FrontKind::ConstrainedConcave) {
        VectorSet feasible;
        feasible.reserve(out.size());
        for (auto& a : out)
            if (constraint_value_point(front, a) <= 0.0) feasible.push_back(std::move(a));
        out = std::move(feasible);
    }
    return out;
}

VectorSet disconnected_reference_set(const FrontShape& front, int per_axis) {
    if (front.kind != FrontKind::Disconnected)
        throw ConfigError("disconnected_reference_set: front kind mismatch");
    if (per_axis < 2) throw InvalidInput("disconnected_reference_set: per_axis must be >= 2");
    const int axes = front.m - 1;
    VectorSet out;
    std::vector<int> idx(static_cast<std::size_t>(axes), 0);
    Vector theta(static_cast<std::size_t>(axes));
    while (true) {
        for (int i = 0; i < axes; ++i)
            theta[i] = static_cast<double>(idx[i]) / (per_axis - 1);
        out.push_back(map_disconnected(front, theta, 1).front());
        int i = axes - 1;
        while (i >= 0 && ++idx[i] == per_axis) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace mudist

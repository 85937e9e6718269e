#include <doctest.h>

#include <cmath>

#include "mudist/fronts.hpp"
#include "mudist/indicators.hpp"
#include "mudist/rng.hpp"

using namespace mudist;

namespace {

// Monte Carlo hypervolume: fraction of the [0,q] box dominated by the set.
struct McEstimate {
    double value;
    double sigma;
};

McEstimate mc_hypervolume(const VectorSet& set, const Vector& q, int samples, Rng& rng) {
    const std::size_t m = q.size();
    double box = 1.0;
    for (double v : q) box *= v;
    int hits = 0;
    Vector x(m);
    for (int s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < m; ++i) x[i] = rng.uniform01() * q[i];
        for (const Vector& a : set) {
            bool dom = true;
            for (std::size_t i = 0; i < m; ++i) {
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
    const double p = static_cast<double>(hits) / samples;
    return {box * p, box * std::sqrt(std::max(p * (1.0 - p), 1e-12) / samples)};
}

Vector random_theta(Rng& rng, int n) {
    Vector theta(n);
    for (double& v : theta) v = rng.uniform01();
    return theta;
}

void check_against_mc(const VectorSet& set, const Vector& q, Rng& rng) {
    const int samples = 200000;
    McEstimate mc = mc_hypervolume(set, q, samples, rng);
    double exact = hypervolume(set, q);
    CHECK(std::abs(exact - mc.value) <= 4.0 * mc.sigma + 1e-9);
}

}  // namespace

TEST_CASE("hypervolume matches Monte Carlo on decoded front sets") {
    Rng rng(2024);
    for (FrontKind kind : {FrontKind::Linear, FrontKind::Concave, FrontKind::Convex}) {
        for (int mu : {5, 21}) {
            FrontShape front = make_front(kind, 3);
            VectorSet set = decode(front, random_theta(rng, mu * 2), mu);
            check_against_mc(set, {1.2, 1.2, 1.2}, rng);
        }
    }
}

TEST_CASE("hypervolume matches Monte Carlo on raw random sets (m = 2, 3, 5)") {
    Rng rng(9001);
    for (int m : {2, 3, 5}) {
        for (int mu : {5, 12}) {
            VectorSet set(mu, Vector(m));
            for (auto& a : set)
                for (double& v : a) v = rng.uniform01();
            check_against_mc(set, Vector(m, 1.2), rng);
        }
    }
}

TEST_CASE("hypervolume matches Monte Carlo with dominated and duplicate members") {
    Rng rng(515);
    VectorSet set(9, Vector(3));
    for (auto& a : set)
        for (double& v : a) v = rng.uniform01();
    set.push_back(set[0]);
    set.push_back({1.1, 1.1, 1.1});  // dominated by nearly everything
    check_against_mc(set, {1.2, 1.2, 1.2}, rng);
}

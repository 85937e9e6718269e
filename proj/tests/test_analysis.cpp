#include <doctest.h>

#include <cmath>

#include "mudist/analysis.hpp"

using namespace mudist;

TEST_CASE("kendall_tau: frozen anchors from published rank rows") {
    Vector hv = {1, 10, 3, 5, 2, 7, 4, 8, 9, 6};
    Vector igd = {9, 1, 10, 7, 8, 2, 4, 6, 5, 3};
    Vector nr2 = {2, 10, 3, 5, 1, 7, 4, 8, 9, 6};
    CHECK(kendall_tau(hv, igd) == doctest::Approx(-0.60).epsilon(1e-12));
    CHECK(kendall_tau(hv, nr2) == doctest::Approx(43.0 / 45.0).epsilon(1e-12));
    CHECK(kendall_tau(hv, hv) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kendall_tau: tie adjustment and degenerate input") {
    Vector a = {1, 1, 2};
    Vector b = {1, 2, 3};
    CHECK(kendall_tau(a, b) == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-12));

    Vector flat = {4, 4, 4};
    CHECK_THROWS_AS(kendall_tau(flat, b), InvalidInput);
    CHECK_THROWS_AS(kendall_tau(a, {1.0, 2.0}), InvalidInput);  // length mismatch
}

TEST_CASE("rank_sets: orientation-aware ranks with tie averaging") {
    IndicatorSpec hv;
    hv.kind = Indicator::HV;
    hv.reference_point = {1.2, 1.2};
    IndicatorSpec se;
    se.kind = Indicator::SE;

    // three candidate sets of increasing quality under HV
    VectorSet coarse = {{0.9, 0.9}, {0.8, 0.85}};
    VectorSet mid = {{0.5, 0.5}, {0.45, 0.55}};
    VectorSet fine = {{0.2, 0.6}, {0.6, 0.2}};

    RankTable table = rank_sets({{"HV", hv}, {"SE", se}},
                                {{"coarse", coarse}, {"mid", mid}, {"fine", fine}});
    REQUIRE(table.indicators == std::vector<std::string>{"HV", "SE"});
    REQUIRE(table.sets == std::vector<std::string>{"coarse", "mid", "fine"});

    // HV maximizes: fine > mid > coarse
    CHECK(table.ranks[0] == Vector{3, 2, 1});
    // SE minimizes energy: the widest-spread pair wins
    CHECK(table.values[1][2] < table.values[1][1]);
    CHECK(table.ranks[1][2] == 1);

    // average over indicator rows
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(table.average_ranks[j] ==
              doctest::Approx((table.ranks[0][j] + table.ranks[1][j]) / 2.0));

    // exact value ties share the average rank
    RankTable tied = rank_sets({{"HV", hv}}, {{"a", fine}, {"b", fine}, {"c", mid}});
    CHECK(tied.ranks[0][0] == doctest::Approx(1.5));
    CHECK(tied.ranks[0][1] == doctest::Approx(1.5));
    CHECK(tied.ranks[0][2] == doctest::Approx(3.0));
}

TEST_CASE("rank_sets: input validation") {
    IndicatorSpec hv;
    hv.kind = Indicator::HV;
    hv.reference_point = {1.2, 1.2};
    VectorSet one = {{0.5, 0.5}};
    CHECK_THROWS_AS(rank_sets({{"HV", hv}}, {{"only", one}}), InvalidInput);
    CHECK_THROWS_AS(rank_sets({}, {{"a", one}, {"b", one}}), InvalidInput);
}

TEST_CASE("tau_matrix: symmetric with unit diagonal, consistent with rows") {
    IndicatorSpec hv;
    hv.kind = Indicator::HV;
    hv.reference_point = {1.2, 1.2};
    IndicatorSpec se;
    se.kind = Indicator::SE;
    IndicatorSpec pd;
    pd.kind = Indicator::PD;

    VectorSet a = {{0.1, 0.9}, {0.9, 0.1}};
    VectorSet b = {{0.3, 0.6}, {0.6, 0.3}};
    VectorSet c = {{0.5, 0.5}, {0.45, 0.52}};
    VectorSet d = {{0.2, 0.7}, {0.7, 0.2}};

    RankTable table = rank_sets({{"HV", hv}, {"SE", se}, {"PD", pd}},
                                {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
    TauMatrix tau = tau_matrix(table);
    REQUIRE(tau.labels == table.indicators);
    // correlation is taken over the orientation-corrected rank rows, so a
    // maximizer and a minimizer that prefer the same sets correlate
    // positively
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(tau.tau[i][i] == 1.0);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(tau.tau[i][j] == tau.tau[j][i]);
            CHECK(tau.tau[i][j] ==
                  doctest::Approx(kendall_tau(table.ranks[i], table.ranks[j])).epsilon(1e-12));
        }
    }
}

TEST_CASE("distribution_stats: extremes, neighbors, duplicates") {
    FrontShape front = make_front(FrontKind::Linear, 2);
    VectorSet set = {{0.0, 1.0}, {1.0, 0.0}, {0.5, 0.5}};
    DistributionStats stats = distribution_stats(set, front);

    REQUIRE(stats.extreme_min_dist.size() == 2);
    CHECK(stats.extreme_min_dist[0] == doctest::Approx(0.0));
    CHECK(stats.extreme_min_dist[1] == doctest::Approx(0.0));
    const double s2 = std::sqrt(0.5);
    CHECK(stats.nn_min == doctest::Approx(s2));
    CHECK(stats.nn_mean == doctest::Approx(s2));
    CHECK(stats.nn_max == doctest::Approx(s2));
    CHECK(stats.duplicate_pairs == 0);

    VectorSet dup = {{0.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}};
    DistributionStats dstats = distribution_stats(dup, front);
    CHECK(dstats.duplicate_pairs == 1);
    CHECK(dstats.nn_min == 0.0);
}

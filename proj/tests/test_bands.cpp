#include "uan/band_plan.hpp"
#include "uan/netsim.hpp"
#include "uan/scaling.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace uan;

TEST_CASE("plans tile the interval") {
    SUBCASE("even split") {
        const BandPlan plan = make_plan(0.0, 100.0, 10.0);
        REQUIRE(plan.bands.size() == 10);
        for (const Band& b : plan.bands)
            CHECK(b.width() == doctest::Approx(10.0).epsilon(1e-12));
        CHECK(plan.f_lo() == 0.0);
        CHECK(plan.f_hi() == 100.0);
    }
    SUBCASE("remainder band") {
        const BandPlan plan = make_plan(0.0, 95.0, 10.0);
        REQUIRE(plan.bands.size() == 10);
        CHECK(plan.bands.back().width() == doctest::Approx(5.0).epsilon(1e-12));
    }
    SUBCASE("interior edges are shared by exactly two bands") {
        const BandPlan plan = make_plan(5.0, 85.0, 7.5);
        for (std::size_t i = 0; i + 1 < plan.bands.size(); ++i)
            CHECK(plan.bands[i].f_max == plan.bands[i + 1].f_min);
    }
    SUBCASE("invalid intervals are rejected") {
        CHECK_THROWS_AS(make_plan(10.0, 10.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(make_plan(10.0, 5.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(make_plan(0.0, 10.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(make_plan(0.0, 10.0, 20.0), std::domain_error);
    }
}

TEST_CASE("band location uses half-open intervals with a closed top band") {
    const BandPlan plan = make_plan(0.0, 100.0, 10.0);
    CHECK(locate_band(5.0, plan).index == 0);
    // an interior edge belongs to the band that starts at it
    CHECK(locate_band(10.0, plan).index == 1);
    CHECK(locate_band(90.0, plan).index == 9);
    CHECK(locate_band(100.0, plan).index == 9);
    CHECK_FALSE(locate_band(100.0, plan).clamped);
    CHECK(locate_band(100.1, plan).clamped);
    CHECK(locate_band(-1.0, plan).clamped);
    CHECK(locate_band(-1.0, plan).index == 0);
}

TEST_CASE("longer links are assigned lower bands") {
    const ChannelParams params{};
    const BandPlan plan = make_plan(0.1, 60.0, 2.0);
    std::size_t prev_index = plan.bands.size() - 1;
    bool first = true;
    for (double l : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
        const BandAssignment a = assign_band(l, plan, params);
        if (!first)
            CHECK(a.index <= prev_index);
        prev_index = a.index;
        first = false;
    }
}

TEST_CASE("assignment depends on the link only through f_c") {
    const ChannelParams params{};
    const BandPlan plan = make_plan(0.1, 60.0, 2.0);
    const double l = 7.0;
    const CenterFrequency fc = optimal_center_frequency(l, params);
    CHECK(assign_band(l, plan, params).index == locate_band(fc.f_khz, plan).index);
}

TEST_CASE("out-of-plan distances clamp to the nearest edge band") {
    const ChannelParams params{};
    const BandPlan plan = make_plan(30.0, 50.0, 5.0);
    // f_c(100 km) is far below 30 kHz
    const BandAssignment a = assign_band(100.0, plan, params);
    CHECK(a.clamped);
    CHECK(a.index == 0);
}

TEST_CASE("every in-range distance maps to exactly one band") {
    const ChannelParams params{};
    const BandPlan plan = make_plan(0.1, 60.0, 2.0);
    for (double l = 0.2; l <= 100.0; l *= 1.7) {
        const BandAssignment a = assign_band(l, plan, params);
        const CenterFrequency fc = optimal_center_frequency(l, params);
        if (!a.clamped) {
            CHECK(fc.f_khz >= plan.bands[a.index].f_min);
            if (a.index + 1 < plan.bands.size())
                CHECK(fc.f_khz < plan.bands[a.index].f_max);
        }
    }
}

TEST_CASE("a deployment partitions into per-band populations") {
    const ChannelParams params{};
    const BandPlan plan = make_plan(0.1, 60.0, 5.0);
    const Deployment d = deploy(40, DeployMode::UniformRandom, 99);

    std::vector<double> counts(plan.bands.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i)
        counts[assign_band(d.distance(i, d.dest[i]), plan, params).index] += 1.0;

    DirectScenario sc;
    sc.alpha = params.alpha;
    sc.beta = 2.0;
    sc.delta_w = 5.0 * std::log2(3.0);
    double total = 0.0;
    for (std::size_t b = 0; b < plan.bands.size(); ++b) {
        const double fm = 0.5 * (plan.bands[b].f_min + plan.bands[b].f_max);
        sc.per_band.push_back({absorption_linear(fm), counts[b]});
        total += counts[b];
    }
    CHECK(total == 40.0);

    const std::vector<BoundResult> bounds = bound_direct_per_band(sc);
    REQUIRE(bounds.size() == plan.bands.size());
    for (std::size_t b = 0; b < bounds.size(); ++b) {
        if (counts[b] == 0.0)
            CHECK(bounds[b].transport_bound == 0.0);
        else
            CHECK(bounds[b].transport_bound > 0.0);
    }
}

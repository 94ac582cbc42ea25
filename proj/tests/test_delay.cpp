#include <doctest.h>

#include <cmath>

#include "routelab/common.hpp"
#include "routelab/delay.hpp"
#include "routelab/sweep.hpp"
#include "test_support.hpp"

using namespace routelab;

TEST_CASE("delay: M/M/1 curve with hand-computed values") {
    CHECK(link_delay(10.0, 0.0) == doctest::Approx(0.1));
    CHECK(link_delay(10.0, 5.0) == doctest::Approx(0.2));
    CHECK(link_delay(10.0, 9.0) == doctest::Approx(1.0));
    // exactly at the knee (99% utilization): still the M/M/1 value
    CHECK(link_delay(10.0, 9.9) == doctest::Approx(10.0));
    // past the knee the linear extension takes over: at full load,
    // 1/(0.01*10) + (10-9.9)/(0.01*10)^2 = 10 + 10 = 20
    CHECK(link_delay(10.0, 10.0) == doctest::Approx(20.0));
    CHECK(link_delay(10.0, 20.0) == doctest::Approx(10.0 + 10.1 / 0.01));
}

TEST_CASE("delay: the extension is continuous and slope-matched at the knee") {
    const double cap = 7.3;
    const double knee = 0.99 * cap;
    const double eps = 1e-7;
    const double below = link_delay(cap, knee - eps);
    const double above = link_delay(cap, knee + eps);
    CHECK(std::abs(above - below) < 1e-4);
    // slopes on both sides of the knee agree to first order
    const double slope_below = (link_delay(cap, knee) - link_delay(cap, knee - eps)) / eps;
    const double slope_above = (link_delay(cap, knee + eps) - link_delay(cap, knee)) / eps;
    CHECK(slope_below == doctest::Approx(slope_above).epsilon(1e-3));
}

TEST_CASE("delay: overload ordering stays monotone") {
    double prev = 0.0;
    for (double load = 0.0; load <= 30.0; load += 0.5) {
        const double d = link_delay(10.0, load);
        CHECK(d > prev);
        CHECK(std::isfinite(d));
        prev = d;
    }
}

TEST_CASE("delay: invalid inputs are rejected") {
    CHECK_THROWS_AS(link_delay(0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(link_delay(-5.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(link_delay(10.0, -0.1), InvalidInput);
}

TEST_CASE("delay: loads and mean delay on a hand-checked line topology") {
    Topology t;
    t.n = 3;
    t.links = {{0, 0, 1, 10.0}, {1, 1, 2, 10.0}};
    TrafficMatrix tm(3);
    tm.at(0, 2) = 4.0;

    const RoutingConfig rc = shortest_paths(t, equal_weights(2));
    const LoadVector loads = link_loads(t, tm, rc);
    CHECK(loads[0] == 4.0);  // 0->1 carries the flow
    CHECK(loads[2] == 4.0);  // 1->2 carries the flow
    CHECK(loads[1] == 0.0);  // reverse directions idle
    CHECK(loads[3] == 0.0);

    const DelayReport rep = evaluate_with_routing(t, tm, rc);
    // the only demand-bearing pair crosses two links loaded at 4:
    // 1/(10-4) + 1/(10-4) = 1/3
    CHECK(rep.pair_delay[2] == doctest::Approx(1.0 / 3.0));
    CHECK(rep.mean_delay == doctest::Approx(1.0 / 3.0));
    CHECK(rep.max_utilization == doctest::Approx(0.4));
}

TEST_CASE("delay: zero traffic degenerates to the per-pair mean") {
    Topology t;
    t.n = 3;
    t.links = {{0, 0, 1, 10.0}, {1, 1, 2, 10.0}};
    const DelayReport rep = evaluate(t, TrafficMatrix(3), equal_weights(2));
    // idle links all cost 0.1; pairs (0,1),(1,0),(1,2),(2,1) see 0.1 and
    // (0,2),(2,0) see 0.2 -> mean (4*0.1 + 2*0.2) / 6
    CHECK(rep.mean_delay == doctest::Approx(0.8 / 6.0));
}

TEST_CASE("delay: evaluate matches the exhaustive simple-path oracle") {
    Rng rng(20240801);
    for (int trial = 0; trial < 60; ++trial) {
        const Topology t = testsupport::random_connected_graph(rng);
        LinkWeights w;
        for (int l = 0; l < t.link_count(); ++l) w.w.push_back(rng.uniform(0.1, 1.0));
        const double frac = rng.uniform(0.1, 1.3);
        const TrafficMatrix tm = gravity_tm(t, frac * total_capacity(t), rng.next_u64());

        const double lib = evaluate(t, tm, w).mean_delay;
        const double oracle = testsupport::oracle_mean_delay(t, tm, w);
        CHECK(std::abs(lib - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("delay: sweep kernels agree bit-for-bit with the serial reference") {
    const Topology t = generate_scale_free(14, 21, 10.0, 7);
    std::vector<TrafficMatrix> tms;
    std::vector<LinkWeights> weights;
    for (std::uint64_t i = 0; i < 6; ++i)
        tms.push_back(gravity_tm(t, 26.25 * static_cast<double>(i + 1), derive_seed(1, "tm", i)));
    for (std::uint64_t k = 0; k < 17; ++k)
        weights.push_back(random_weights(21, derive_seed(1, "w", k)));

    const std::vector<double> serial = sweep_cross(t, tms, weights, ExecMode::Serial);
    const std::vector<double> parallel = sweep_cross(t, tms, weights, ExecMode::OpenMP);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);

    std::vector<LinkWeights> zipw(tms.size(), weights[0]);
    const std::vector<double> zs = sweep_zip(t, tms, zipw, ExecMode::Serial);
    const std::vector<double> zp = sweep_zip(t, tms, zipw, ExecMode::OpenMP);
    CHECK(zs == zp);
    // zip against cross: first weight column must coincide
    for (std::size_t i = 0; i < tms.size(); ++i)
        CHECK(zs[i] == serial[i * weights.size()]);
}

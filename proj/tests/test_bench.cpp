#include <doctest.h>

#include <algorithm>
#include <vector>

#include "routelab/bench.hpp"
#include "routelab/common.hpp"
#include "routelab/delay.hpp"
#include "routelab/routing.hpp"
#include "routelab/rng.hpp"

using namespace routelab;

TEST_CASE("bench: quartiles follow the interpolating convention") {
    const BoxStats s = box_stats({1.0, 2.0, 3.0, 4.0});
    CHECK(s.q1 == doctest::Approx(1.75));
    CHECK(s.median == doctest::Approx(2.5));
    CHECK(s.q3 == doctest::Approx(3.25));
    CHECK(s.iqr == doctest::Approx(1.5));
    CHECK(s.count == 4);
}

TEST_CASE("bench: singleton sample collapses every statistic") {
    const BoxStats s = box_stats({5.0});
    CHECK(s.q1 == 5.0);
    CHECK(s.median == 5.0);
    CHECK(s.q3 == 5.0);
    CHECK(s.whisker_low == 5.0);
    CHECK(s.whisker_high == 5.0);
}

TEST_CASE("bench: whiskers stop at the 1.5-IQR fences") {
    // q3 = 27.25, iqr = 25.5, high fence = 65.5: the outlier 100 is excluded
    const BoxStats s = box_stats({1.0, 2.0, 3.0, 100.0});
    CHECK(s.whisker_high == 3.0);
    CHECK(s.whisker_low == 1.0);
}

TEST_CASE("bench: box statistics are permutation-invariant and shift-equivariant") {
    const std::vector<double> base{3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0};
    std::vector<double> shuffled = base;
    std::reverse(shuffled.begin(), shuffled.end());
    const BoxStats a = box_stats(base);
    const BoxStats b = box_stats(shuffled);
    CHECK(a.q1 == b.q1);
    CHECK(a.median == b.median);
    CHECK(a.whisker_high == b.whisker_high);

    std::vector<double> shifted = base;
    for (double& v : shifted) v += 10.0;
    const BoxStats c = box_stats(shifted);
    CHECK(c.q1 == doctest::Approx(a.q1 + 10.0));
    CHECK(c.median == doctest::Approx(a.median + 10.0));
    CHECK(c.q3 == doctest::Approx(a.q3 + 10.0));
    CHECK(c.whisker_low == doctest::Approx(a.whisker_low + 10.0));
    CHECK(c.whisker_high == doctest::Approx(a.whisker_high + 10.0));

    CHECK_THROWS_AS(box_stats({}), InvalidInput);
}

TEST_CASE("bench: a single configuration reproduces a direct evaluation") {
    const Topology t = generate_scale_free(14, 21, 10.0, 7);
    const std::vector<IntensityLevel> levels = intensity_levels(t, 0.5, 0.5, 1);
    const TrafficDataset ds = generate_dataset(t, levels, 1, 3);

    const BenchmarkResult r = run_benchmark(t, ds, 1, 11);
    REQUIRE(r.delays.size() == 1);
    REQUIRE(r.delays[0].size() == 1);
    REQUIRE(r.delays[0][0].size() == 1);
    const LinkWeights w = random_weights(t.link_count(), derive_seed(11, "bench_w", 0));
    CHECK(r.delays[0][0][0] == evaluate(t, ds.tms[0][0], w).mean_delay);
}

TEST_CASE("bench: runs are deterministic in the seed") {
    const Topology t = generate_scale_free(14, 21, 10.0, 7);
    const std::vector<IntensityLevel> levels = intensity_levels(t, 0.25, 1.0, 2);
    const TrafficDataset ds = generate_dataset(t, levels, 3, 5);

    const BenchmarkResult a = run_benchmark(t, ds, 10, 11);
    const BenchmarkResult b = run_benchmark(t, ds, 10, 11);
    const BenchmarkResult c = run_benchmark(t, ds, 10, 12);
    CHECK(a.delays == b.delays);
    CHECK(a.delays != c.delays);
    // serial reference agrees bitwise
    const BenchmarkResult s = run_benchmark(t, ds, 10, 11, ExecMode::Serial);
    CHECK(a.delays == s.delays);
}

TEST_CASE("bench: comparison flags react to the agent's position in the cloud") {
    BenchmarkResult bench;
    bench.levels = {{0.25, 1.0}, {0.5, 2.0}};
    bench.configs = 4;
    bench.delays = {{{1.0, 2.0, 3.0, 4.0}}, {{10.0, 20.0, 30.0, 40.0}}};

    SUBCASE("agent at the benchmark minimum wins everywhere") {
        const auto rows = compare(bench, {{1.0}, {10.0}});
        REQUIRE(rows.size() == 2);
        CHECK(*rows[0].within_q1);
        CHECK(*rows[1].within_q1);
    }
    SUBCASE("agent at the median loses where q1 < median") {
        const auto rows = compare(bench, {{2.5}, {25.0}});
        CHECK_FALSE(*rows[0].within_q1);
        CHECK_FALSE(*rows[1].within_q1);
    }
    SUBCASE("without agent delays the flags stay empty") {
        const auto rows = compare(bench);
        CHECK_FALSE(rows[0].agent_mean.has_value());
        CHECK_FALSE(rows[0].within_q1.has_value());
        CHECK(rows[0].pooled.q1 == doctest::Approx(1.75));
    }
    SUBCASE("shape mismatch is rejected") {
        CHECK_THROWS_AS(compare(bench, {{1.0}}), InvalidInput);
    }
}

TEST_CASE("bench: CSV emission carries one row per observation and per level") {
    BenchmarkResult bench;
    bench.levels = {{0.25, 1.0}};
    bench.configs = 2;
    bench.delays = {{{1.5, 2.5}, {3.5, 4.5}}};

    const std::string raw = benchmark_to_csv(bench, "d");
    CHECK(raw.find("level,tm_index,config_index,mean_delay") != std::string::npos);
    CHECK(raw.find("0.25,1,0,3.5") != std::string::npos);

    const std::string stats = comparison_to_csv(compare(bench, {{1.5, 2.0}}), "d");
    CHECK(stats.find("level,q1,median,q3,whisker_low,whisker_high,agent_mean,within_q1") !=
          std::string::npos);
    CHECK(stats.find("0.25,") != std::string::npos);
    CHECK(stats.find(",true") != std::string::npos);
}

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <vector>

#include "routelab/common.hpp"
#include "routelab/routing.hpp"
#include "routelab/rng.hpp"
#include "routelab/topology.hpp"

using namespace routelab;

namespace {

// 0--1, 1--3, 0--2, 2--3, 0--3 (a diamond with a direct chord)
Topology diamond() {
    Topology t;
    t.n = 4;
    t.links = {{0, 0, 1, 10.0}, {1, 1, 3, 10.0}, {2, 0, 2, 10.0}, {3, 2, 3, 10.0},
               {4, 0, 3, 10.0}};
    return t;
}

}  // namespace

TEST_CASE("routing: minimum-weight paths on a hand-checked diamond") {
    const Topology t = diamond();

    SUBCASE("expensive chord forces the two-hop route") {
        const RoutingConfig rc = shortest_paths(t, LinkWeights{{0.3, 0.3, 0.3, 0.3, 0.9}});
        CHECK(rc.path(0, 3) == std::vector<int>{0, 1, 3});  // lex-smallest of the 0.6 ties
        CHECK(rc.path(3, 0) == std::vector<int>{3, 1, 0});
        CHECK(rc.path(1, 2) == std::vector<int>{1, 0, 2});
    }
    SUBCASE("cheap chord wins directly") {
        const RoutingConfig rc = shortest_paths(t, LinkWeights{{0.3, 0.3, 0.3, 0.3, 0.5}});
        CHECK(rc.path(0, 3) == std::vector<int>{0, 3});
    }
    SUBCASE("all-equal weights fall back to hop count with lex ties") {
        const RoutingConfig rc = shortest_paths(t, equal_weights(t.link_count()));
        CHECK(rc.path(0, 3) == std::vector<int>{0, 3});
        CHECK(rc.path(1, 2) == std::vector<int>{1, 0, 2});
    }
}

TEST_CASE("routing: tie-break picks the lexicographically smallest node sequence") {
    // 5-node graph where multiple equal-cost routes exist between 0 and 4
    Topology t;
    t.n = 5;
    t.links = {{0, 0, 1, 10.0}, {1, 0, 2, 10.0}, {2, 1, 4, 10.0}, {3, 2, 4, 10.0},
               {4, 1, 3, 10.0}, {5, 3, 4, 10.0}};
    const RoutingConfig rc = shortest_paths(t, equal_weights(t.link_count()));
    CHECK(rc.path(0, 4) == std::vector<int>{0, 1, 4});
    // determinism: recomputing yields the identical configuration
    CHECK(shortest_paths(t, equal_weights(t.link_count())) == rc);
}

TEST_CASE("routing: every random weight vector yields a valid configuration") {
    const Topology t = generate_scale_free(14, 21, 10.0, 7);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const LinkWeights w = random_weights(t.link_count(), seed);
        for (const double v : w.w) {
            CHECK(v >= 0.1);
            CHECK(v <= 1.0);
        }
        const RoutingConfig rc = shortest_paths(t, w);
        const RoutingReport rep = validate_routing(t, rc);
        if (!rep.ok()) {
            for (const std::string& f : rep.failures) MESSAGE(f);
        }
        REQUIRE(rep.ok());
    }
}

TEST_CASE("routing: next-hop table is consistent with the paths") {
    const Topology t = generate_scale_free(14, 21, 10.0, 7);
    const RoutingConfig rc = shortest_paths(t, random_weights(t.link_count(), 5));
    for (int s = 0; s < t.n; ++s) {
        for (int d = 0; d < t.n; ++d) {
            if (s == d) {
                CHECK(rc.next_hop[static_cast<std::size_t>(s) * t.n + d] == -1);
            } else {
                const std::vector<int>& p = rc.path(s, d);
                REQUIRE(p.size() >= 2);
                CHECK(rc.next_hop[static_cast<std::size_t>(s) * t.n + d] == p[1]);
            }
        }
    }
}

TEST_CASE("routing: subpath consistency of the chosen paths") {
    // any suffix of a chosen path must itself be the chosen path, otherwise
    // hop-by-hop forwarding would diverge from the intended routes
    const Topology t = generate_scale_free(14, 21, 10.0, 11);
    const RoutingConfig rc = shortest_paths(t, random_weights(t.link_count(), 13));
    for (int s = 0; s < t.n; ++s) {
        for (int d = 0; d < t.n; ++d) {
            if (s == d) continue;
            const std::vector<int>& p = rc.path(s, d);
            for (std::size_t k = 1; k + 1 < p.size(); ++k) {
                const std::vector<int> suffix(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
                CHECK(rc.path(p[k], d) == suffix);
            }
        }
    }
}

TEST_CASE("routing: unreachable pairs are reported, not silently routed") {
    Topology t;
    t.n = 4;
    t.links = {{0, 0, 1, 10.0}, {1, 2, 3, 10.0}};  // two components
    const RoutingConfig rc = shortest_paths(t, equal_weights(2));
    const RoutingReport rep = validate_routing(t, rc);
    CHECK_FALSE(rep.all_reachable);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("routing: weight construction and validation") {
    CHECK(equal_weights(3).w == std::vector<double>{0.55, 0.55, 0.55});

    const Topology t = diamond();
    CHECK_NOTHROW(check_weights(t, LinkWeights{{0.1, 0.5, 1.0, 0.3, 0.2}}));
    CHECK_THROWS_AS(check_weights(t, LinkWeights{{0.1, 0.5}}), InvalidInput);
    CHECK_THROWS_AS(check_weights(t, LinkWeights{{0.05, 0.5, 1.0, 0.3, 0.2}}), InvalidInput);
    CHECK_THROWS_AS(check_weights(t, LinkWeights{{1.1, 0.5, 1.0, 0.3, 0.2}}), InvalidInput);
}

TEST_CASE("routing: weights JSON round-trip is exact") {
    const LinkWeights w = random_weights(21, 3);
    const std::string path =
        (std::filesystem::temp_directory_path() / "routelab_weights_test.json").string();
    save_weights(w, path);
    CHECK(load_weights(path) == w);
    std::remove(path.c_str());
}

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "routelab/common.hpp"
#include "routelab/topology.hpp"

using namespace routelab;

TEST_CASE("topology: generator hits the exact node and link counts") {
    for (const std::uint64_t seed : {1ull, 7ull, 99ull}) {
        const Topology t = generate_scale_free(14, 21, 10.0, seed);
        CHECK(t.n == 14);
        CHECK(t.link_count() == 21);
        const TopologyReport rep = validate(t);
        CHECK(rep.ok());
        CHECK(rep.degrees.avg_degree == doctest::Approx(3.0));
        CHECK(total_capacity(t) == doctest::Approx(210.0));
    }
}

TEST_CASE("topology: generation is deterministic in the seed") {
    const Topology a = generate_scale_free(14, 21, 10.0, 5);
    const Topology b = generate_scale_free(14, 21, 10.0, 5);
    const Topology c = generate_scale_free(14, 21, 10.0, 6);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("topology: preferential attachment skews the degree distribution") {
    // early nodes should accumulate clearly more degree than the minimum
    const Topology t = generate_scale_free(30, 45, 10.0, 11);
    const std::vector<int> deg = degrees_of(t);
    const int max_deg = *std::max_element(deg.begin(), deg.end());
    CHECK(max_deg >= 6);  // average is 3; a hub must stand out
}

TEST_CASE("topology: infeasible parameter combinations are rejected") {
    CHECK_THROWS_AS(generate_scale_free(3, 5, 10.0, 1), InvalidInput);   // > n(n-1)/2
    CHECK_THROWS_AS(generate_scale_free(14, 12, 10.0, 1), InvalidInput); // < n-1, can't connect
    CHECK_THROWS_AS(generate_scale_free(1, 0, 10.0, 1), InvalidInput);
    CHECK_THROWS_AS(generate_scale_free(14, 21, 0.0, 1), InvalidInput);
    CHECK_THROWS_AS(generate_scale_free(14, 21, -1.0, 1), InvalidInput);
}

TEST_CASE("topology: validate flags broken structures") {
    Topology t;
    t.n = 3;
    t.links = {{0, 0, 1, 10.0}, {1, 1, 2, 10.0}};

    SUBCASE("valid baseline") { CHECK(validate(t).ok()); }
    SUBCASE("self loop") {
        t.links.push_back({2, 2, 2, 10.0});
        const TopologyReport rep = validate(t);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.no_self_loops);
    }
    SUBCASE("duplicate link") {
        t.links.push_back({2, 0, 1, 10.0});
        CHECK_FALSE(validate(t).no_duplicate_links);
    }
    SUBCASE("non-positive capacity") {
        t.links[0].capacity = 0.0;
        CHECK_FALSE(validate(t).capacities_positive);
    }
    SUBCASE("endpoint out of range") {
        t.links[1].b = 7;
        CHECK_FALSE(validate(t).endpoints_in_range);
    }
    SUBCASE("disconnected") {
        t.n = 4;  // node 3 has no link
        CHECK_FALSE(validate(t).connected);
    }
}

TEST_CASE("topology: directed edge view doubles the links and keeps capacity") {
    const Topology t = generate_scale_free(14, 21, 10.0, 7);
    CHECK(t.edge_count() == 42);
    for (int e = 0; e < t.edge_count(); ++e) CHECK(t.edge_capacity(e) == 10.0);
}

TEST_CASE("topology: JSON round-trip is exact and rejects malformed input") {
    const Topology t = generate_scale_free(14, 21, 10.0, 3);
    const std::string path =
        (std::filesystem::temp_directory_path() / "routelab_topo_test.json").string();
    save_topology(t, path);
    const Topology back = load_topology(path);
    CHECK(back == t);
    std::remove(path.c_str());

    CHECK_THROWS_AS(topology_from_json("{"), InvalidInput);
    CHECK_THROWS_AS(topology_from_json("{\"n\": 2}"), InvalidInput);
    // structurally well-formed but invalid content must also be rejected
    CHECK_THROWS_AS(topology_from_json(
                        R"({"n": 2, "links": [{"a": 0, "b": 0, "capacity": 1.0}]})"),
                    InvalidInput);
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "routelab/topology.hpp"

namespace routelab {

struct WeightBounds {
    double lo = 0.1;
    double hi = 1.0;

    bool operator==(const WeightBounds&) const = default;
};

// One positive weight per physical link, applied to both directions.
struct LinkWeights {
    std::vector<double> w;

    bool operator==(const LinkWeights&) const = default;
};

// Loop-free path for every ordered pair, plus the derived next-hop table.
struct RoutingConfig {
    int n = 0;
    std::vector<std::vector<int>> paths;  // [s*n+d] node sequence, empty for s==d
    std::vector<int> next_hop;            // [s*n+d], -1 for s==d or missing

    const std::vector<int>& path(int s, int d) const { return paths[static_cast<std::size_t>(s) * n + d]; }

    bool operator==(const RoutingConfig&) const = default;
};

struct RoutingReport {
    bool all_reachable = false;
    bool loop_free = false;
    bool edges_exist = false;
    bool next_hop_consistent = false;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Minimum-total-weight path per ordered pair, per-source Dijkstra. Ties
// are broken by the lexicographically smallest node-index sequence, so
// equal weights still map to exactly one configuration.
RoutingConfig shortest_paths(const Topology& t, const LinkWeights& w);

LinkWeights random_weights(int link_count, std::uint64_t seed, WeightBounds bounds = {});

LinkWeights equal_weights(int link_count, WeightBounds bounds = {});

void check_weights(const Topology& t, const LinkWeights& w, WeightBounds bounds = {});

RoutingReport validate_routing(const Topology& t, const RoutingConfig& rc);

// JSON array of link_count numbers
void save_weights(const LinkWeights& w, const std::string& path);
LinkWeights load_weights(const std::string& path);

// debug dump: CSV rows (src, dst, "n0>n1>...")
std::string routing_to_csv(const RoutingConfig& rc);

}  // namespace routelab

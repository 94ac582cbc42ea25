#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace routelab {

// One physical full-duplex link. Endpoints are stored normalized (a < b);
// the directed-edge view gives each direction the full capacity.
struct PhysicalLink {
    int id = 0;
    int a = 0;
    int b = 0;
    double capacity = 0.0;

    bool operator==(const PhysicalLink&) const = default;
};

struct Topology {
    int n = 0;
    std::vector<PhysicalLink> links;

    bool operator==(const Topology&) const = default;

    int link_count() const { return static_cast<int>(links.size()); }
    // directed edges: 2*id is a->b, 2*id+1 is b->a
    int edge_count() const { return 2 * link_count(); }
    double edge_capacity(int e) const { return links[static_cast<std::size_t>(e / 2)].capacity; }
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    double avg_degree = 0.0;
};

struct TopologyReport {
    bool connected = false;
    bool no_self_loops = false;
    bool no_duplicate_links = false;
    bool capacities_positive = false;
    bool endpoints_in_range = false;
    DegreeStats degrees;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Preferential-attachment generator with exact link-count control: new
// nodes attach to existing nodes with probability proportional to degree,
// taking 1 or 2 edges in an alternating pattern until the edge budget
// works out; any shortfall is filled with preferential edges between
// existing non-adjacent pairs. Uniform capacity on every link.
Topology generate_scale_free(int n, int target_links, double capacity, std::uint64_t seed);

double total_capacity(const Topology& t);

std::vector<int> degrees_of(const Topology& t);

TopologyReport validate(const Topology& t);

// JSON file: {"n": int, "links": [{"a": int, "b": int, "capacity": number}, ...]}
// (plus a "digest" provenance key, ignored on load)
void save_topology(const Topology& t, const std::string& path);
Topology load_topology(const std::string& path);

std::string topology_to_json(const Topology& t);
Topology topology_from_json(const std::string& text);

}  // namespace routelab

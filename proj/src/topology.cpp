#include "routelab/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include <json.hpp>

#include "routelab/common.hpp"
#include "routelab/io.hpp"
#include "routelab/rng.hpp"

namespace routelab {

namespace {

// weighted pick over candidate node indices, weight = current degree
int pick_by_degree(const std::vector<int>& candidates, const std::vector<int>& degree, Rng& rng) {
    std::int64_t total = 0;
    for (const int c : candidates) total += degree[static_cast<std::size_t>(c)];
    if (total <= 0) {
        return candidates[rng.uniform_int(candidates.size())];
    }
    std::int64_t r = static_cast<std::int64_t>(rng.uniform_int(static_cast<std::uint64_t>(total)));
    for (const int c : candidates) {
        r -= degree[static_cast<std::size_t>(c)];
        if (r < 0) return c;
    }
    return candidates.back();
}

}  // namespace

Topology generate_scale_free(int n, int target_links, double capacity, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("scale-free generation needs n >= 3");
    if (capacity <= 0.0) throw InvalidInput("capacity must be positive");
    const long max_links = static_cast<long>(n) * (n - 1) / 2;
    if (target_links < n - 1 || target_links > max_links)
        throw InvalidInput("target_links out of range [n-1, n(n-1)/2]");

    Rng rng = substream(seed, "topology");
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;

    auto add_edge = [&](int u, int v) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    };

    add_edge(0, 1);

    // decide which new nodes take 2 edges instead of 1 (alternating scan)
    const int new_nodes = n - 2;
    int extra = target_links - (n - 1);
    std::vector<int> attach_count(static_cast<std::size_t>(new_nodes), 1);
    for (int pass = 0; pass < 2 && extra > 0; ++pass) {
        for (int i = pass; i < new_nodes && extra > 0; i += 2) {
            attach_count[static_cast<std::size_t>(i)] = 2;
            --extra;
        }
    }

    for (int v = 2; v < n; ++v) {
        const int existing = v;
        int m = std::min(attach_count[static_cast<std::size_t>(v - 2)], existing);
        for (int k = 0; k < m; ++k) {
            std::vector<int> candidates;
            for (int u = 0; u < existing; ++u)
                if (!adj[static_cast<std::size_t>(v)].contains(u)) candidates.push_back(u);
            if (candidates.empty()) break;
            add_edge(pick_by_degree(candidates, degree, rng), v);
        }
    }

    // shortfall: preferential edges between existing non-adjacent pairs
    while (static_cast<int>(edges.size()) < target_links) {
        std::vector<int> open;
        for (int u = 0; u < n; ++u)
            if (static_cast<int>(adj[static_cast<std::size_t>(u)].size()) < n - 1) open.push_back(u);
        const int u = pick_by_degree(open, degree, rng);
        std::vector<int> candidates;
        for (int w = 0; w < n; ++w)
            if (w != u && !adj[static_cast<std::size_t>(u)].contains(w)) candidates.push_back(w);
        add_edge(u, pick_by_degree(candidates, degree, rng));
    }

    Topology t;
    t.n = n;
    t.links.reserve(edges.size());
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i)
        t.links.push_back({static_cast<int>(i), edges[i].first, edges[i].second, capacity});
    return t;
}

double total_capacity(const Topology& t) {
    double sum = 0.0;
    for (const PhysicalLink& l : t.links) sum += l.capacity;
    return sum;
}

std::vector<int> degrees_of(const Topology& t) {
    std::vector<int> deg(static_cast<std::size_t>(t.n), 0);
    for (const PhysicalLink& l : t.links) {
        if (l.a >= 0 && l.a < t.n) ++deg[static_cast<std::size_t>(l.a)];
        if (l.b >= 0 && l.b < t.n) ++deg[static_cast<std::size_t>(l.b)];
    }
    return deg;
}

TopologyReport validate(const Topology& t) {
    TopologyReport r;

    r.endpoints_in_range = true;
    for (const PhysicalLink& l : t.links)
        if (l.a < 0 || l.a >= t.n || l.b < 0 || l.b >= t.n) r.endpoints_in_range = false;
    if (!r.endpoints_in_range) r.failures.push_back("link endpoint out of node range");

    r.no_self_loops = true;
    for (const PhysicalLink& l : t.links)
        if (l.a == l.b) r.no_self_loops = false;
    if (!r.no_self_loops) r.failures.push_back("self-loop present");

    r.no_duplicate_links = true;
    std::set<std::pair<int, int>> seen;
    for (const PhysicalLink& l : t.links) {
        auto key = std::minmax(l.a, l.b);
        if (!seen.insert({key.first, key.second}).second) r.no_duplicate_links = false;
    }
    if (!r.no_duplicate_links) r.failures.push_back("duplicate link between a node pair");

    r.capacities_positive = true;
    for (const PhysicalLink& l : t.links)
        if (!(l.capacity > 0.0)) r.capacities_positive = false;
    if (!r.capacities_positive) r.failures.push_back("non-positive link capacity");

    // connectivity over the undirected view (only meaningful if endpoints are sane)
    r.connected = false;
    if (t.n > 0 && r.endpoints_in_range) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.n));
        for (const PhysicalLink& l : t.links) {
            adj[static_cast<std::size_t>(l.a)].push_back(l.b);
            adj[static_cast<std::size_t>(l.b)].push_back(l.a);
        }
        std::vector<char> visited(static_cast<std::size_t>(t.n), 0);
        std::vector<int> stack{0};
        visited[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const int v : adj[static_cast<std::size_t>(u)]) {
                if (!visited[static_cast<std::size_t>(v)]) {
                    visited[static_cast<std::size_t>(v)] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        r.connected = (count == t.n);
    }
    if (!r.connected) r.failures.push_back("graph is not connected");

    const std::vector<int> deg = degrees_of(t);
    if (!deg.empty()) {
        r.degrees.min_degree = *std::min_element(deg.begin(), deg.end());
        r.degrees.max_degree = *std::max_element(deg.begin(), deg.end());
        r.degrees.avg_degree =
            static_cast<double>(std::accumulate(deg.begin(), deg.end(), 0)) / static_cast<double>(t.n);
    }
    return r;
}

std::string topology_to_json(const Topology& t) {
    nlohmann::json j;
    j["n"] = t.n;
    nlohmann::json links = nlohmann::json::array();
    for (const PhysicalLink& l : t.links) {
        links.push_back({{"a", l.a}, {"b", l.b}, {"capacity", l.capacity}});
    }
    j["links"] = links;
    j["digest"] = digest_of("topology|n=" + std::to_string(t.n) +
                            "|links=" + std::to_string(t.links.size()));
    return j.dump(2) + "\n";
}

Topology topology_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("topology parse error: ") + e.what());
    }
    Topology t;
    try {
        t.n = j.at("n").get<int>();
        int id = 0;
        for (const auto& lj : j.at("links")) {
            PhysicalLink l;
            l.id = id++;
            l.a = lj.at("a").get<int>();
            l.b = lj.at("b").get<int>();
            if (l.a > l.b) std::swap(l.a, l.b);
            l.capacity = lj.at("capacity").get<double>();
            t.links.push_back(l);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("topology schema error: ") + e.what());
    }
    const TopologyReport report = validate(t);
    if (!report.ok()) {
        std::string msg = "topology invariants violated:";
        for (const std::string& f : report.failures) msg += " " + f + ";";
        throw InvalidInput(msg);
    }
    return t;
}

void save_topology(const Topology& t, const std::string& path) {
    write_text_file(path, topology_to_json(t));
}

Topology load_topology(const std::string& path) {
    return topology_from_json(read_text_file(path));
}

}  // namespace routelab

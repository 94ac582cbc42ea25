#include "routelab/routing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "routelab/common.hpp"
#include "routelab/io.hpp"
#include "routelab/rng.hpp"

namespace routelab {

namespace {

struct AdjEntry {
    int neighbor;
    int link;
};

// adjacency sorted by neighbor index, so relaxation order is stable
std::vector<std::vector<AdjEntry>> build_adjacency(const Topology& t) {
    std::vector<std::vector<AdjEntry>> adj(static_cast<std::size_t>(t.n));
    for (const PhysicalLink& l : t.links) {
        adj[static_cast<std::size_t>(l.a)].push_back({l.b, l.id});
        adj[static_cast<std::size_t>(l.b)].push_back({l.a, l.id});
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end(),
                  [](const AdjEntry& x, const AdjEntry& y) { return x.neighbor < y.neighbor; });
    return adj;
}

}  // namespace

RoutingConfig shortest_paths(const Topology& t, const LinkWeights& w) {
    if (static_cast<int>(w.w.size()) != t.link_count())
        throw InvalidInput("weight vector size does not match link count");
    for (const double x : w.w)
        if (!(x > 0.0)) throw InvalidInput("link weights must be positive");

    const auto adj = build_adjacency(t);
    const int n = t.n;
    RoutingConfig rc;
    rc.n = n;
    rc.paths.assign(static_cast<std::size_t>(n) * n, {});
    rc.next_hop.assign(static_cast<std::size_t>(n) * n, -1);

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<char> done(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));

    auto path_at = [&](int s2, int d2) -> std::vector<int>& {
        return rc.paths[static_cast<std::size_t>(s2) * n + d2];
    };

    std::vector<int> candidate;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(done.begin(), done.end(), 0);
        dist[static_cast<std::size_t>(s)] = 0.0;

        // dense Dijkstra; n is small
        int settled = 0;
        while (true) {
            int u = -1;
            double best = kInf;
            for (int v = 0; v < n; ++v) {
                if (!done[static_cast<std::size_t>(v)] && dist[static_cast<std::size_t>(v)] < best) {
                    best = dist[static_cast<std::size_t>(v)];
                    u = v;
                }
            }
            if (u < 0) break;
            done[static_cast<std::size_t>(u)] = 1;
            order[static_cast<std::size_t>(settled++)] = u;
            for (const AdjEntry& e : adj[static_cast<std::size_t>(u)]) {
                const double cand = dist[static_cast<std::size_t>(u)] + w.w[static_cast<std::size_t>(e.link)];
                if (cand < dist[static_cast<std::size_t>(e.neighbor)])
                    dist[static_cast<std::size_t>(e.neighbor)] = cand;
            }
        }

        // settle paths in distance order: the lexicographically smallest
        // minimum-weight path to d extends the already-chosen path of one
        // of its tight predecessors
        for (int round = 0; round < settled; ++round) {
            const int d = order[static_cast<std::size_t>(round)];
            if (d == s) continue;
            std::vector<int>& chosen = path_at(s, d);
            for (const AdjEntry& e : adj[static_cast<std::size_t>(d)]) {
                const int u = e.neighbor;
                if (dist[static_cast<std::size_t>(u)] + w.w[static_cast<std::size_t>(e.link)] !=
                    dist[static_cast<std::size_t>(d)])
                    continue;
                candidate.clear();
                if (u == s) {
                    candidate.push_back(s);
                } else {
                    if (path_at(s, u).empty()) continue;
                    candidate = path_at(s, u);
                }
                candidate.push_back(d);
                if (chosen.empty() ||
                    std::lexicographical_compare(candidate.begin(), candidate.end(),
                                                 chosen.begin(), chosen.end())) {
                    chosen = candidate;
                }
            }
            if (!chosen.empty())
                rc.next_hop[static_cast<std::size_t>(s) * n + d] = chosen[1];
        }
    }
    return rc;
}

LinkWeights random_weights(int link_count, std::uint64_t seed, WeightBounds bounds) {
    if (link_count < 1) throw InvalidInput("link count must be >= 1");
    if (!(bounds.lo > 0.0) || bounds.lo > bounds.hi) throw InvalidInput("bad weight bounds");
    Rng rng(seed);
    LinkWeights w;
    w.w.resize(static_cast<std::size_t>(link_count));
    for (double& x : w.w) x = rng.uniform(bounds.lo, bounds.hi);
    return w;
}

LinkWeights equal_weights(int link_count, WeightBounds bounds) {
    LinkWeights w;
    w.w.assign(static_cast<std::size_t>(link_count), 0.5 * (bounds.lo + bounds.hi));
    return w;
}

void check_weights(const Topology& t, const LinkWeights& w, WeightBounds bounds) {
    if (static_cast<int>(w.w.size()) != t.link_count())
        throw InvalidInput("weight vector size does not match link count");
    for (const double x : w.w)
        if (!(x >= bounds.lo && x <= bounds.hi))
            throw InvalidInput("link weight outside [" + format_double(bounds.lo) + ", " +
                               format_double(bounds.hi) + "]");
}

RoutingReport validate_routing(const Topology& t, const RoutingConfig& rc) {
    RoutingReport r;
    const int n = t.n;
    r.all_reachable = true;
    r.loop_free = true;
    r.edges_exist = true;
    r.next_hop_consistent = true;

    if (rc.n != n || static_cast<int>(rc.paths.size()) != n * n) {
        r.all_reachable = false;
        r.failures.push_back("routing table shape mismatch");
        return r;
    }

    std::vector<std::vector<char>> adjacent(static_cast<std::size_t>(n),
                                            std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const PhysicalLink& l : t.links) {
        adjacent[static_cast<std::size_t>(l.a)][static_cast<std::size_t>(l.b)] = 1;
        adjacent[static_cast<std::size_t>(l.b)][static_cast<std::size_t>(l.a)] = 1;
    }

    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            const std::vector<int>& p = rc.path(s, d);
            if (p.size() < 2 || p.front() != s || p.back() != d) {
                r.all_reachable = false;
                r.failures.push_back("missing or malformed path " + std::to_string(s) + "->" +
                                     std::to_string(d));
                continue;
            }
            std::fill(seen.begin(), seen.end(), 0);
            bool repeated = false;
            for (const int v : p) {
                if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
                    repeated = true;
                    break;
                }
                seen[static_cast<std::size_t>(v)] = 1;
            }
            if (repeated) {
                r.loop_free = false;
                r.failures.push_back("loop in path " + std::to_string(s) + "->" + std::to_string(d));
            }
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if (p[i] < 0 || p[i] >= n || p[i + 1] < 0 || p[i + 1] >= n ||
                    !adjacent[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[i + 1])]) {
                    r.edges_exist = false;
                    r.failures.push_back("non-adjacent hop in path " + std::to_string(s) + "->" +
                                         std::to_string(d));
                    break;
                }
            }
            // every suffix must be the stored path of its own pair
            if (!repeated) {
                for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                    const std::vector<int>& sub = rc.path(p[i], d);
                    if (sub.size() != p.size() - i ||
                        !std::equal(sub.begin(), sub.end(), p.begin() + static_cast<std::ptrdiff_t>(i))) {
                        r.next_hop_consistent = false;
                        r.failures.push_back("suffix mismatch in path " + std::to_string(s) + "->" +
                                             std::to_string(d));
                        break;
                    }
                }
            }
        }
    }
    return r;
}

void save_weights(const LinkWeights& w, const std::string& path) {
    nlohmann::json j = nlohmann::json::array();
    for (const double x : w.w) j.push_back(x);
    write_text_file(path, j.dump() + "\n");
}

LinkWeights load_weights(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("weights parse error: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("weights file must be a JSON array");
    LinkWeights w;
    for (const auto& v : j) {
        if (!v.is_number()) throw InvalidInput("weights file must contain only numbers");
        w.w.push_back(v.get<double>());
    }
    return w;
}

std::string routing_to_csv(const RoutingConfig& rc) {
    CsvBuilder csv;
    csv.row({"src", "dst", "path"});
    for (int s = 0; s < rc.n; ++s) {
        for (int d = 0; d < rc.n; ++d) {
            if (s == d) continue;
            std::string joined;
            for (const int v : rc.path(s, d)) {
                if (!joined.empty()) joined += '>';
                joined += std::to_string(v);
            }
            csv.row({std::to_string(s), std::to_string(d), joined});
        }
    }
    return csv.str();
}

}  // namespace routelab

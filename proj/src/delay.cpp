#include "routelab/delay.hpp"

#include <algorithm>

#include <json.hpp>

#include "routelab/common.hpp"

namespace routelab {

double link_delay(double capacity, double load) {
    if (!(capacity > 0.0)) throw InvalidInput("link capacity must be positive");
    if (load < 0.0) throw InvalidInput("link load cannot be negative");
    const double knee = kUtilizationKnee * capacity;
    if (load <= knee) return 1.0 / (capacity - load);
    const double headroom = capacity - knee;  // capacity * (1 - rho*)
    return 1.0 / headroom + (load - knee) / (headroom * headroom);
}

namespace {

// directed edge lookup: edge_of[u*n+v] = directed edge id or -1
std::vector<int> build_edge_index(const Topology& t) {
    std::vector<int> edge_of(static_cast<std::size_t>(t.n) * t.n, -1);
    for (const PhysicalLink& l : t.links) {
        edge_of[static_cast<std::size_t>(l.a) * t.n + l.b] = 2 * l.id;
        edge_of[static_cast<std::size_t>(l.b) * t.n + l.a] = 2 * l.id + 1;
    }
    return edge_of;
}

void accumulate_loads(const Topology& t, const TrafficMatrix& tm, const RoutingConfig& rc,
                      const std::vector<int>& edge_of, LoadVector& loads) {
    const int n = t.n;
    loads.assign(static_cast<std::size_t>(t.edge_count()), 0.0);
    for (int s = 0; s < n; ++s) {
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            const double demand = tm.at(s, d);
            if (demand == 0.0) continue;
            const std::vector<int>& p = rc.path(s, d);
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                const int e = edge_of[static_cast<std::size_t>(p[i]) * n + p[i + 1]];
                if (e < 0) throw InvalidInput("routing path uses a non-existent edge");
                loads[static_cast<std::size_t>(e)] += demand;
            }
        }
    }
}

}  // namespace

LoadVector link_loads(const Topology& t, const TrafficMatrix& tm, const RoutingConfig& rc) {
    if (tm.n != t.n || rc.n != t.n) throw InvalidInput("traffic/routing dimensions do not match topology");
    const std::vector<int> edge_of = build_edge_index(t);
    LoadVector loads;
    accumulate_loads(t, tm, rc, edge_of, loads);
    return loads;
}

DelayReport evaluate_with_routing(const Topology& t, const TrafficMatrix& tm,
                                  const RoutingConfig& rc) {
    if (tm.n != t.n || rc.n != t.n) throw InvalidInput("traffic/routing dimensions do not match topology");
    const int n = t.n;
    const std::vector<int> edge_of = build_edge_index(t);

    DelayReport report;
    accumulate_loads(t, tm, rc, edge_of, report.loads);

    const std::size_t edges = report.loads.size();
    report.utilization.resize(edges);
    std::vector<double> edge_delay(edges);
    for (std::size_t e = 0; e < edges; ++e) {
        const double cap = t.edge_capacity(static_cast<int>(e));
        report.utilization[e] = report.loads[e] / cap;
        edge_delay[e] = link_delay(cap, report.loads[e]);
        report.max_utilization = std::max(report.max_utilization, report.utilization[e]);
    }

    report.pair_delay.assign(static_cast<std::size_t>(n) * n, 0.0);
    double weighted = 0.0;
    double total_demand = 0.0;
    double unweighted = 0.0;
    int pair_count = 0;
    for (int s = 0; s < n; ++s) {
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            const std::vector<int>& p = rc.path(s, d);
            double delay = 0.0;
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                delay += edge_delay[static_cast<std::size_t>(
                    edge_of[static_cast<std::size_t>(p[i]) * n + p[i + 1]])];
            report.pair_delay[static_cast<std::size_t>(s) * n + d] = delay;
            const double demand = tm.at(s, d);
            weighted += demand * delay;
            total_demand += demand;
            unweighted += delay;
            ++pair_count;
        }
    }
    // a zero-demand matrix degenerates to the plain per-pair mean
    report.mean_delay = total_demand > 0.0 ? weighted / total_demand
                                           : (pair_count > 0 ? unweighted / pair_count : 0.0);
    return report;
}

DelayReport evaluate(const Topology& t, const TrafficMatrix& tm, const LinkWeights& w) {
    return evaluate_with_routing(t, tm, shortest_paths(t, w));
}

std::string delay_report_to_json(const DelayReport& report) {
    nlohmann::json j;
    j["loads"] = report.loads;
    j["utilization"] = report.utilization;
    j["mean_delay"] = report.mean_delay;
    j["max_utilization"] = report.max_utilization;
    return j.dump(2) + "\n";
}

}  // namespace routelab

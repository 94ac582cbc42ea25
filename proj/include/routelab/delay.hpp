#pragma once

#include <string>
#include <vector>

#include "routelab/routing.hpp"
#include "routelab/topology.hpp"
#include "routelab/traffic.hpp"

namespace routelab {

// Per directed edge, indexed like Topology's directed-edge view.
using LoadVector = std::vector<double>;

struct DelayReport {
    LoadVector loads;                 // 2L entries
    std::vector<double> utilization;  // load / capacity
    std::vector<double> pair_delay;   // n*n row-major, 0 on the diagonal
    double mean_delay = 0.0;          // traffic-weighted over pairs
    double max_utilization = 0.0;
};

// M/M/1 latency 1/(capacity - load) up to utilization rho* = 0.99, then a
// linear extrapolation matched in value and slope, so overload yields
// finite ordered penalties instead of infinities.
inline constexpr double kUtilizationKnee = 0.99;

double link_delay(double capacity, double load);

LoadVector link_loads(const Topology& t, const TrafficMatrix& tm, const RoutingConfig& rc);

DelayReport evaluate_with_routing(const Topology& t, const TrafficMatrix& tm,
                                  const RoutingConfig& rc);

DelayReport evaluate(const Topology& t, const TrafficMatrix& tm, const LinkWeights& w);

inline double reward(const DelayReport& report) { return -report.mean_delay; }

std::string delay_report_to_json(const DelayReport& report);

}  // namespace routelab

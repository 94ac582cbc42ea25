#pragma once

#include <span>
#include <vector>

#include "routelab/common.hpp"
#include "routelab/delay.hpp"

namespace routelab {

// Data-parallel evaluation kernels. The Serial variants are the plain
// reference (direct composition of shortest_paths + evaluate per item);
// the OpenMP variants reuse routing configurations across traffic
// matrices and parallelize over independent items. Both produce
// bit-identical results regardless of thread count, gathered in index
// order.

// Cross product: result[tm_idx * weight_count + w_idx] = mean delay of
// (tms[tm_idx], weights[w_idx]).
std::vector<double> sweep_cross(const Topology& t, std::span<const TrafficMatrix> tms,
                                std::span<const LinkWeights> weights,
                                ExecMode exec = ExecMode::OpenMP);

// Zip: result[i] = mean delay of (tms[i], weights[i]).
std::vector<double> sweep_zip(const Topology& t, std::span<const TrafficMatrix> tms,
                              std::span<const LinkWeights> weights,
                              ExecMode exec = ExecMode::OpenMP);

}  // namespace routelab

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "routelab/common.hpp"
#include "routelab/topology.hpp"

namespace routelab {

// Bandwidth demand between every ordered source-destination pair.
// Row = source, column = destination, zero diagonal.
struct TrafficMatrix {
    int n = 0;
    std::vector<double> demand;  // n*n row-major

    TrafficMatrix() = default;
    explicit TrafficMatrix(int nodes) : n(nodes), demand(static_cast<std::size_t>(nodes) * nodes, 0.0) {}

    double& at(int i, int j) { return demand[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return demand[static_cast<std::size_t>(i) * n + j]; }

    double total() const;

    bool operator==(const TrafficMatrix&) const = default;
};

struct IntensityLevel {
    double fraction = 0.0;  // of total network capacity
    double absolute = 0.0;  // bandwidth units

    bool operator==(const IntensityLevel&) const = default;
};

enum class MassMode { Exponential, Uniform, Constant };

MassMode mass_mode_from_string(const std::string& s);
std::string to_string(MassMode m);

struct TrafficDataset {
    std::vector<IntensityLevel> levels;
    std::vector<std::vector<TrafficMatrix>> tms;  // [level][index]
    std::string split = "test";

    std::size_t size() const;
};

// `count` equally spaced fractions inclusive of both endpoints.
std::vector<double> intensity_fractions(double min_fraction, double max_fraction, int count);

std::vector<IntensityLevel> intensity_levels(const Topology& t, double min_fraction,
                                             double max_fraction, int count);

// Gravity matrix from explicit per-node masses (also the test hook).
TrafficMatrix gravity_tm_from_masses(const Topology& t, double total,
                                     const std::vector<double>& masses);

// Masses drawn i.i.d. (unit-mean exponential by default), then
// demand[i][j] = total * w_i * w_j / sum_{k!=l} w_k w_l, renormalized so
// the grand total matches `total` exactly.
TrafficMatrix gravity_tm(const Topology& t, double total, std::uint64_t seed,
                         MassMode mode = MassMode::Exponential);

TrafficDataset generate_dataset(const Topology& t, const std::vector<IntensityLevel>& levels,
                                int tms_per_level, std::uint64_t seed,
                                MassMode mode = MassMode::Exponential,
                                ExecMode exec = ExecMode::OpenMP);

// JSON lines, one record per TM:
// {"level": fraction, "index": int, "total": number, "demand": [[...]]}
std::string dataset_to_jsonl(const TrafficDataset& d, const std::string& digest);
TrafficDataset dataset_from_jsonl(const std::string& text);
void save_dataset(const TrafficDataset& d, const std::string& path, const std::string& digest);
TrafficDataset load_dataset(const std::string& path);

}  // namespace routelab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "routelab/common.hpp"
#include "routelab/topology.hpp"
#include "routelab/traffic.hpp"

namespace routelab {

// Mean delays of K shared random routing configurations applied to every
// TM of a dataset; the random-search baseline the agent is compared to.
struct BenchmarkResult {
    std::vector<IntensityLevel> levels;
    std::vector<std::vector<std::vector<double>>> delays;  // [level][tm][config]
    int configs = 0;
    std::uint64_t seed = 0;
};

// Five-number summary with 1.5-IQR whiskers; quantiles linearly
// interpolate between order statistics (quantile p at rank p*(n-1)).
struct BoxStats {
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    std::size_t count = 0;
};

BoxStats box_stats(std::vector<double> samples);

// The same K weight vectors, derived from the seed, evaluated against
// every TM of the dataset.
BenchmarkResult run_benchmark(const Topology& t, const TrafficDataset& dataset, int configs,
                              std::uint64_t seed, ExecMode exec = ExecMode::OpenMP);

struct TiComparison {
    IntensityLevel level;
    BoxStats pooled;                  // over the level's TMs and configs jointly
    std::optional<double> agent_mean;  // mean agent delay at this level, if supplied
    std::optional<bool> within_q1;     // agent_mean <= pooled.q1
};

// agent_delays may be empty (benchmark-only stats) or must match the
// benchmark's level/TM shape.
std::vector<TiComparison> compare(const BenchmarkResult& bench,
                                  const std::vector<std::vector<double>>& agent_delays = {});

std::string benchmark_to_csv(const BenchmarkResult& bench, const std::string& digest);
std::string comparison_to_csv(const std::vector<TiComparison>& rows, const std::string& digest);

}  // namespace routelab

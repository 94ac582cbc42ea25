#include "routelab/sweep.hpp"

#include <algorithm>

namespace routelab {

namespace {

// bound memory for precomputed routing tables at large config counts
constexpr std::size_t kConfigChunk = 1024;

std::vector<double> cross_serial(const Topology& t, std::span<const TrafficMatrix> tms,
                                 std::span<const LinkWeights> weights) {
    std::vector<double> result(tms.size() * weights.size());
    for (std::size_t ti = 0; ti < tms.size(); ++ti)
        for (std::size_t wi = 0; wi < weights.size(); ++wi)
            result[ti * weights.size() + wi] = evaluate(t, tms[ti], weights[wi]).mean_delay;
    return result;
}

std::vector<double> cross_openmp(const Topology& t, std::span<const TrafficMatrix> tms,
                                 std::span<const LinkWeights> weights) {
    std::vector<double> result(tms.size() * weights.size());
    std::vector<RoutingConfig> configs(std::min(kConfigChunk, weights.size()));
    for (std::size_t base = 0; base < weights.size(); base += kConfigChunk) {
        const std::int64_t chunk =
            static_cast<std::int64_t>(std::min(kConfigChunk, weights.size() - base));

        #pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < chunk; ++c)
            configs[static_cast<std::size_t>(c)] =
                shortest_paths(t, weights[base + static_cast<std::size_t>(c)]);

        const std::int64_t jobs = static_cast<std::int64_t>(tms.size()) * chunk;
        #pragma omp parallel for schedule(static)
        for (std::int64_t job = 0; job < jobs; ++job) {
            const std::size_t ti = static_cast<std::size_t>(job) / static_cast<std::size_t>(chunk);
            const std::size_t c = static_cast<std::size_t>(job) % static_cast<std::size_t>(chunk);
            result[ti * weights.size() + base + c] =
                evaluate_with_routing(t, tms[ti], configs[c]).mean_delay;
        }
    }
    return result;
}

}  // namespace

std::vector<double> sweep_cross(const Topology& t, std::span<const TrafficMatrix> tms,
                                std::span<const LinkWeights> weights, ExecMode exec) {
    if (tms.empty() || weights.empty()) return {};
    return exec == ExecMode::Serial ? cross_serial(t, tms, weights) : cross_openmp(t, tms, weights);
}

std::vector<double> sweep_zip(const Topology& t, std::span<const TrafficMatrix> tms,
                              std::span<const LinkWeights> weights, ExecMode exec) {
    if (tms.size() != weights.size()) throw InvalidInput("sweep_zip size mismatch");
    std::vector<double> result(tms.size());
    if (exec == ExecMode::Serial) {
        for (std::size_t i = 0; i < tms.size(); ++i)
            result[i] = evaluate(t, tms[i], weights[i]).mean_delay;
        return result;
    }
    const std::int64_t jobs = static_cast<std::int64_t>(tms.size());
    #pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < jobs; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        result[idx] = evaluate(t, tms[idx], weights[idx]).mean_delay;
    }
    return result;
}

}  // namespace routelab

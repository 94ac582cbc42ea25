#include "routelab/bench.hpp"

#include <algorithm>
#include <cmath>

#include "routelab/io.hpp"
#include "routelab/log.hpp"
#include "routelab/routing.hpp"
#include "routelab/rng.hpp"
#include "routelab/sweep.hpp"

namespace routelab {

namespace {

// quantile p of a sorted sample at fractional rank p*(n-1)
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

BoxStats box_stats(std::vector<double> samples) {
    if (samples.empty()) throw InvalidInput("box_stats: empty sample");
    std::sort(samples.begin(), samples.end());
    BoxStats s;
    s.count = samples.size();
    s.q1 = quantile_sorted(samples, 0.25);
    s.median = quantile_sorted(samples, 0.5);
    s.q3 = quantile_sorted(samples, 0.75);
    s.iqr = s.q3 - s.q1;
    const double low_fence = s.q1 - 1.5 * s.iqr;
    const double high_fence = s.q3 + 1.5 * s.iqr;
    // most extreme observations within the fences
    s.whisker_low = samples.back();
    for (const double v : samples) {
        if (v >= low_fence) {
            s.whisker_low = v;
            break;
        }
    }
    s.whisker_high = samples.front();
    for (std::size_t i = samples.size(); i-- > 0;) {
        if (samples[i] <= high_fence) {
            s.whisker_high = samples[i];
            break;
        }
    }
    return s;
}

BenchmarkResult run_benchmark(const Topology& t, const TrafficDataset& dataset, int configs,
                              std::uint64_t seed, ExecMode exec) {
    if (configs < 1) throw InvalidInput("run_benchmark: need at least one configuration");
    if (dataset.tms.empty()) throw InvalidInput("run_benchmark: empty dataset");

    std::vector<LinkWeights> weights;
    weights.reserve(static_cast<std::size_t>(configs));
    for (int k = 0; k < configs; ++k)
        weights.push_back(
            random_weights(t.link_count(), derive_seed(seed, "bench_w", static_cast<std::uint64_t>(k))));

    BenchmarkResult out;
    out.levels = dataset.levels;
    out.configs = configs;
    out.seed = seed;
    out.delays.resize(dataset.tms.size());
    for (std::size_t li = 0; li < dataset.tms.size(); ++li) {
        const std::vector<TrafficMatrix>& tms = dataset.tms[li];
        const std::vector<double> flat = sweep_cross(t, tms, weights, exec);
        out.delays[li].resize(tms.size());
        for (std::size_t mi = 0; mi < tms.size(); ++mi) {
            auto first = flat.begin() + static_cast<std::ptrdiff_t>(mi * static_cast<std::size_t>(configs));
            out.delays[li][mi].assign(first, first + configs);
        }
        log_info("bench: level " + std::to_string(li + 1) + "/" +
                 std::to_string(dataset.tms.size()) + " done");
    }
    return out;
}

std::vector<TiComparison> compare(const BenchmarkResult& bench,
                                  const std::vector<std::vector<double>>& agent_delays) {
    if (!agent_delays.empty() && agent_delays.size() != bench.delays.size())
        throw InvalidInput("compare: agent delays do not match the benchmark levels");

    std::vector<TiComparison> rows;
    rows.reserve(bench.levels.size());
    for (std::size_t li = 0; li < bench.levels.size(); ++li) {
        TiComparison row;
        row.level = bench.levels[li];
        std::vector<double> pooled;
        for (const std::vector<double>& per_tm : bench.delays[li])
            pooled.insert(pooled.end(), per_tm.begin(), per_tm.end());
        row.pooled = box_stats(std::move(pooled));
        if (!agent_delays.empty()) {
            const std::vector<double>& agent = agent_delays[li];
            if (agent.empty()) throw InvalidInput("compare: level without agent delays");
            double sum = 0.0;
            for (const double d : agent) sum += d;
            row.agent_mean = sum / static_cast<double>(agent.size());
            row.within_q1 = *row.agent_mean <= row.pooled.q1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string benchmark_to_csv(const BenchmarkResult& bench, const std::string& digest) {
    CsvBuilder csv;
    csv.comment("routelab benchmark results digest=" + digest);
    csv.row({"level", "tm_index", "config_index", "mean_delay"});
    for (std::size_t li = 0; li < bench.delays.size(); ++li) {
        const std::string level = format_double(bench.levels[li].fraction);
        for (std::size_t mi = 0; mi < bench.delays[li].size(); ++mi) {
            for (std::size_t k = 0; k < bench.delays[li][mi].size(); ++k) {
                csv.row({level, std::to_string(mi), std::to_string(k),
                         format_double(bench.delays[li][mi][k])});
            }
        }
    }
    return csv.str();
}

std::string comparison_to_csv(const std::vector<TiComparison>& rows, const std::string& digest) {
    CsvBuilder csv;
    csv.comment("routelab benchmark statistics digest=" + digest);
    csv.row({"level", "q1", "median", "q3", "whisker_low", "whisker_high", "agent_mean",
             "within_q1"});
    for (const TiComparison& row : rows) {
        csv.row({format_double(row.level.fraction), format_double(row.pooled.q1),
                 format_double(row.pooled.median), format_double(row.pooled.q3),
                 format_double(row.pooled.whisker_low), format_double(row.pooled.whisker_high),
                 row.agent_mean ? format_double(*row.agent_mean) : "",
                 row.within_q1 ? (*row.within_q1 ? "true" : "false") : ""});
    }
    return csv.str();
}

}  // namespace routelab

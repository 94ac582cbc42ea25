#include "routelab/traffic.hpp"

#include <cmath>

#include <json.hpp>

#include "routelab/io.hpp"
#include "routelab/rng.hpp"

namespace routelab {

double TrafficMatrix::total() const {
    double sum = 0.0;
    for (const double d : demand) sum += d;
    return sum;
}

std::size_t TrafficDataset::size() const {
    std::size_t count = 0;
    for (const auto& level : tms) count += level.size();
    return count;
}

MassMode mass_mode_from_string(const std::string& s) {
    if (s == "exponential") return MassMode::Exponential;
    if (s == "uniform") return MassMode::Uniform;
    if (s == "constant") return MassMode::Constant;
    throw InvalidInput("unknown mass mode: " + s);
}

std::string to_string(MassMode m) {
    switch (m) {
        case MassMode::Exponential: return "exponential";
        case MassMode::Uniform: return "uniform";
        default: return "constant";
    }
}

std::vector<double> intensity_fractions(double min_fraction, double max_fraction, int count) {
    if (!(min_fraction > 0.0) || min_fraction > max_fraction)
        throw InvalidInput("intensity fractions need 0 < min <= max");
    if (count < 1) throw InvalidInput("intensity level count must be >= 1");
    if (count == 1) {
        if (min_fraction != max_fraction)
            throw InvalidInput("a single level cannot span a non-degenerate range");
        return {min_fraction};
    }
    std::vector<double> fractions(static_cast<std::size_t>(count));
    const double step = (max_fraction - min_fraction) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) fractions[static_cast<std::size_t>(i)] = min_fraction + step * i;
    fractions.back() = max_fraction;
    return fractions;
}

std::vector<IntensityLevel> intensity_levels(const Topology& t, double min_fraction,
                                             double max_fraction, int count) {
    const double capacity = total_capacity(t);
    std::vector<IntensityLevel> levels;
    for (const double f : intensity_fractions(min_fraction, max_fraction, count))
        levels.push_back({f, f * capacity});
    return levels;
}

TrafficMatrix gravity_tm_from_masses(const Topology& t, double total,
                                     const std::vector<double>& masses) {
    if (!(total > 0.0)) throw InvalidInput("traffic total must be positive");
    if (static_cast<int>(masses.size()) != t.n) throw InvalidInput("mass vector size mismatch");

    TrafficMatrix tm(t.n);
    double denom = 0.0;
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            if (i != j) denom += masses[static_cast<std::size_t>(i)] * masses[static_cast<std::size_t>(j)];
    if (!(denom > 0.0)) throw InvalidInput("gravity masses must have positive pair products");

    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            if (i != j)
                tm.at(i, j) = total * masses[static_cast<std::size_t>(i)] *
                              masses[static_cast<std::size_t>(j)] / denom;

    // squeeze out the last ulps so total() hits the requested value
    const double sum = tm.total();
    if (sum > 0.0 && sum != total) {
        const double scale = total / sum;
        for (double& d : tm.demand) d *= scale;
    }
    return tm;
}

TrafficMatrix gravity_tm(const Topology& t, double total, std::uint64_t seed, MassMode mode) {
    Rng rng(seed);
    std::vector<double> masses(static_cast<std::size_t>(t.n));
    for (double& m : masses) {
        switch (mode) {
            case MassMode::Exponential: m = rng.exponential(); break;
            case MassMode::Uniform: m = rng.uniform01(); break;
            case MassMode::Constant: m = 1.0; break;
        }
        if (m <= 0.0) m = 1e-12;
    }
    return gravity_tm_from_masses(t, total, masses);
}

TrafficDataset generate_dataset(const Topology& t, const std::vector<IntensityLevel>& levels,
                                int tms_per_level, std::uint64_t seed, MassMode mode,
                                ExecMode exec) {
    if (tms_per_level < 1) throw InvalidInput("tms_per_level must be >= 1");
    TrafficDataset d;
    d.levels = levels;
    d.tms.assign(levels.size(), std::vector<TrafficMatrix>(static_cast<std::size_t>(tms_per_level)));

    const std::int64_t n_levels = static_cast<std::int64_t>(levels.size());
    const std::int64_t total_jobs = n_levels * tms_per_level;
    // one derived sub-seed per matrix, so output is independent of scheduling
    #pragma omp parallel for schedule(static) if (exec == ExecMode::OpenMP)
    for (std::int64_t job = 0; job < total_jobs; ++job) {
        const std::int64_t li = job / tms_per_level;
        const std::int64_t mi = job % tms_per_level;
        const std::uint64_t sub =
            derive_seed(seed, "traffic", static_cast<std::uint64_t>(li), static_cast<std::uint64_t>(mi));
        d.tms[static_cast<std::size_t>(li)][static_cast<std::size_t>(mi)] =
            gravity_tm(t, levels[static_cast<std::size_t>(li)].absolute, sub, mode);
    }
    return d;
}

std::string dataset_to_jsonl(const TrafficDataset& d, const std::string& digest) {
    std::string out = "# routelab traffic dataset digest=" + digest + "\n";
    for (std::size_t li = 0; li < d.levels.size(); ++li) {
        for (std::size_t mi = 0; mi < d.tms[li].size(); ++mi) {
            const TrafficMatrix& tm = d.tms[li][mi];
            nlohmann::json rec;
            rec["level"] = d.levels[li].fraction;
            rec["index"] = mi;
            rec["total"] = tm.total();
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < tm.n; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int j = 0; j < tm.n; ++j) row.push_back(tm.at(i, j));
                rows.push_back(row);
            }
            rec["demand"] = rows;
            out += rec.dump();
            out += '\n';
        }
    }
    return out;
}

TrafficDataset dataset_from_jsonl(const std::string& text) {
    TrafficDataset d;
    for (const std::string& line : split_lines(text)) {
        if (line.empty() || line.front() == '#') continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("dataset parse error: ") + e.what());
        }
        double fraction = 0.0;
        TrafficMatrix tm;
        try {
            fraction = rec.at("level").get<double>();
            const auto& rows = rec.at("demand");
            tm.n = static_cast<int>(rows.size());
            tm.demand.reserve(static_cast<std::size_t>(tm.n) * tm.n);
            for (const auto& row : rows) {
                if (static_cast<int>(row.size()) != tm.n)
                    throw InvalidInput("dataset demand matrix is not square");
                for (const auto& v : row) tm.demand.push_back(v.get<double>());
            }
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("dataset schema error: ") + e.what());
        }
        std::size_t li = 0;
        for (; li < d.levels.size(); ++li)
            if (d.levels[li].fraction == fraction) break;
        if (li == d.levels.size()) {
            d.levels.push_back({fraction, 0.0});
            d.tms.emplace_back();
        }
        d.levels[li].absolute = std::max(d.levels[li].absolute, tm.total());
        d.tms[li].push_back(std::move(tm));
    }
    return d;
}

void save_dataset(const TrafficDataset& d, const std::string& path, const std::string& digest) {
    write_text_file(path, dataset_to_jsonl(d, digest));
}

TrafficDataset load_dataset(const std::string& path) {
    return dataset_from_jsonl(read_text_file(path));
}

}  // namespace routelab

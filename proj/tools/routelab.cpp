// Command-line front end: generate topologies and traffic, run the random
// benchmark, train and evaluate the agent, and assemble figure-ready CSVs.
//
// Every command takes its parameters from flags, optionally seeded from a
// JSON config file (--config); explicit flags win over config values. All
// outputs are pure functions of (inputs, parameters, seed), so rerunning a
// command reproduces its files byte for byte.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <omp.h>

#include "routelab/agent.hpp"
#include "routelab/bench.hpp"
#include "routelab/common.hpp"
#include "routelab/delay.hpp"
#include "routelab/io.hpp"
#include "routelab/log.hpp"
#include "routelab/routing.hpp"
#include "routelab/sweep.hpp"
#include "routelab/topology.hpp"
#include "routelab/traffic.hpp"

namespace {

using nlohmann::json;
using namespace routelab;

// Post-parse merge of config-file values under "flags win" semantics: a
// variable keeps its parsed value when the flag appeared, otherwise takes
// the config value when present, otherwise keeps its default.
class ConfigMerge {
  public:
    explicit ConfigMerge(CLI::App* cmd) : cmd_(cmd) {
        cmd->add_option("--config", path_, "JSON config file; explicit flags override its values");
    }

    void load() {
        if (path_.empty()) return;
        try {
            cfg_ = json::parse(read_text_file(path_));
        } catch (const json::exception& e) {
            throw InvalidInput("config parse error in " + path_ + ": " + e.what());
        }
        if (!cfg_.is_object()) throw InvalidInput("config file must hold a JSON object");
    }

    template <typename T>
    void merge(const std::string& flag, T& value) {
        const std::string key = key_of(flag);
        if (cmd_->get_option(flag)->count() > 0) return;
        if (!cfg_.contains(key)) return;
        try {
            value = cfg_.at(key).get<T>();
        } catch (const json::exception& e) {
            throw InvalidInput("config key '" + key + "': " + e.what());
        }
    }

    bool provided(const std::string& flag) const {
        return cmd_->get_option(flag)->count() > 0 || cfg_.contains(key_of(flag));
    }

  private:
    static std::string key_of(const std::string& flag) {
        return flag.substr(flag.find_first_not_of('-'));
    }

    CLI::App* cmd_;
    std::string path_;
    json cfg_ = json::object();
};

std::uint64_t require_seed(const ConfigMerge& cm, std::uint64_t seed) {
    if (!cm.provided("--seed"))
        throw InvalidInput("--seed is required (no wall-clock seeding)");
    return seed;
}

// digest of the effective parameters, embedded in every produced file
std::string config_digest(const json& effective) { return digest_of(effective.dump()); }

std::vector<int> parse_hidden(const std::string& spec) {
    std::vector<int> dims;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            dims.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidInput("--hidden expects comma-separated widths, got '" + spec + "'");
        }
    }
    if (dims.empty()) throw InvalidInput("--hidden must name at least one layer");
    return dims;
}

// ---------------------------------------------------------------------------

struct TopoGenArgs {
    int nodes = 14;
    int links = 21;
    double capacity = 10.0;
    std::uint64_t seed = 0;
    std::string output = "topo.json";
};

void cmd_topo_gen(const TopoGenArgs& a, const ConfigMerge& cm) {
    const std::uint64_t seed = require_seed(cm, a.seed);
    const Topology t = generate_scale_free(a.nodes, a.links, a.capacity, seed);
    save_topology(t, a.output);
    const DegreeStats deg = validate(t).degrees;
    log_info("topo gen: " + std::to_string(t.n) + " nodes, " + std::to_string(t.link_count()) +
             " links, avg degree " + format_double(deg.avg_degree) + " -> " + a.output);
}

void cmd_topo_show(const std::string& path) {
    const Topology t = load_topology(path);
    const TopologyReport rep = validate(t);
    std::cout << "nodes: " << t.n << "\n"
              << "links: " << t.link_count() << "\n"
              << "total capacity: " << format_double(total_capacity(t)) << "\n"
              << "degrees: min " << rep.degrees.min_degree << ", max " << rep.degrees.max_degree
              << ", avg " << format_double(rep.degrees.avg_degree) << "\n"
              << "valid: " << (rep.ok() ? "yes" : "no") << "\n";
    for (const std::string& f : rep.failures) std::cout << "  failure: " << f << "\n";
}

struct TrafficGenArgs {
    std::string topology;
    int levels = 10;
    double min_fraction = 0.125;
    double max_fraction = 1.25;
    int per_level = 100;
    std::string mass_mode = "exponential";
    std::uint64_t seed = 0;
    std::string output = "dataset.jsonl";
};

void cmd_traffic_gen(const TrafficGenArgs& a, const ConfigMerge& cm) {
    const std::uint64_t seed = require_seed(cm, a.seed);
    if (a.topology.empty()) throw InvalidInput("--topology is required");
    const Topology t = load_topology(a.topology);
    const std::vector<IntensityLevel> levels =
        intensity_levels(t, a.min_fraction, a.max_fraction, a.levels);
    const TrafficDataset ds = generate_dataset(t, levels, a.per_level, seed,
                                               mass_mode_from_string(a.mass_mode));
    const json effective = {{"command", "traffic gen"}, {"levels", a.levels},
                            {"min", a.min_fraction},   {"max", a.max_fraction},
                            {"per-level", a.per_level}, {"mass-mode", a.mass_mode},
                            {"seed", seed}};
    save_dataset(ds, a.output, config_digest(effective));
    log_info("traffic gen: " + std::to_string(ds.size()) + " TMs over " +
             std::to_string(levels.size()) + " levels -> " + a.output);
}

struct BenchArgs {
    std::string topology;
    std::string dataset;
    int configs = 1000;
    std::uint64_t seed = 0;
    std::string agent;  // optional checkpoint for the comparison columns
    std::string output = "bench.csv";
    std::string stats = "bench_stats.csv";
};

void cmd_bench_run(const BenchArgs& a, const ConfigMerge& cm) {
    const std::uint64_t seed = require_seed(cm, a.seed);
    if (a.topology.empty() || a.dataset.empty())
        throw InvalidInput("--topology and --dataset are required");
    const Topology t = load_topology(a.topology);
    const TrafficDataset ds = load_dataset(a.dataset);
    const BenchmarkResult bench = run_benchmark(t, ds, a.configs, seed);

    std::vector<std::vector<double>> agent_delays;
    if (!a.agent.empty()) {
        const Agent agent = load_agent(a.agent, t);
        agent_delays = evaluate_agent(agent, ds, t).delays;
    }
    const std::vector<TiComparison> rows = compare(bench, agent_delays);

    const json effective = {{"command", "bench run"}, {"configs", a.configs}, {"seed", seed},
                            {"agent", !a.agent.empty()}};
    const std::string digest = config_digest(effective);
    write_text_file(a.output, benchmark_to_csv(bench, digest));
    write_text_file(a.stats, comparison_to_csv(rows, digest));
    log_info("bench run: " + std::to_string(a.configs) + " configs x " +
             std::to_string(ds.size()) + " TMs -> " + a.output + ", " + a.stats);
}

struct TrainArgs {
    std::string topology;
    std::string eval_dataset;  // optional: enables the periodic evaluation curve
    AgentConfig agent;
    int levels = 10;
    double min_fraction = 0.125;
    double max_fraction = 1.25;
    std::string mass_mode = "exponential";
    std::string reward_mode = to_string(AgentConfig{}.reward_mode);
    std::string hidden = "128,64";
    std::string output = "checkpoint.json";
    std::string log = "training_log.csv";
    std::string curve = "eval_curve.csv";
};

void cmd_train(const TrainArgs& a, const ConfigMerge& cm) {
    AgentConfig cfg = a.agent;
    cfg.seed = require_seed(cm, cfg.seed);
    cfg.hidden = parse_hidden(a.hidden);
    cfg.reward_mode = reward_mode_from_string(a.reward_mode);
    if (a.topology.empty()) throw InvalidInput("--topology is required");
    const Topology t = load_topology(a.topology);

    TrainOptions options;
    options.levels = intensity_levels(t, a.min_fraction, a.max_fraction, a.levels);
    options.mass_mode = mass_mode_from_string(a.mass_mode);

    std::optional<TrafficDataset> eval_set;
    if (!a.eval_dataset.empty()) eval_set = load_dataset(a.eval_dataset);

    Agent agent(t, cfg);
    log_info("train: " + std::to_string(cfg.total_steps) + " steps, seed " +
             std::to_string(cfg.seed) + ", reward " + to_string(cfg.reward_mode));
    const TrainLog tl = train(agent, t, options, eval_set ? &*eval_set : nullptr);

    const json effective = {{"command", "train"},
                            {"seed", cfg.seed},
                            {"steps", cfg.total_steps},
                            {"reward-mode", to_string(cfg.reward_mode)},
                            {"levels", a.levels},
                            {"min", a.min_fraction},
                            {"max", a.max_fraction}};
    const std::string digest = config_digest(effective);
    save_agent(agent, a.output);
    write_text_file(a.log, training_log_to_csv(tl, digest));
    if (eval_set) write_text_file(a.curve, eval_curve_to_csv(tl, eval_set->levels, digest));
    log_info("train: checkpoint -> " + a.output);
}

struct EvalArgs {
    std::string topology;
    std::string dataset;
    std::string agent;
    std::string output = "eval.csv";
};

void cmd_eval(const EvalArgs& a) {
    if (a.topology.empty() || a.dataset.empty() || a.agent.empty())
        throw InvalidInput("--topology, --dataset and --agent are required");
    const Topology t = load_topology(a.topology);
    const TrafficDataset ds = load_dataset(a.dataset);
    const Agent agent = load_agent(a.agent, t);
    const AgentEval ev = evaluate_agent(agent, ds, t);

    const json effective = {{"command", "eval"}, {"tms", ds.size()}};
    CsvBuilder csv;
    csv.comment("routelab agent evaluation digest=" + config_digest(effective));
    csv.row({"level", "tm_index", "mean_delay"});
    for (std::size_t li = 0; li < ev.delays.size(); ++li)
        for (std::size_t mi = 0; mi < ev.delays[li].size(); ++mi)
            csv.row({format_double(ev.levels[li].fraction), std::to_string(mi),
                     format_double(ev.delays[li][mi])});
    write_text_file(a.output, csv.str());
    log_info("eval: " + std::to_string(ds.size()) + " TMs -> " + a.output);
}

struct ReportArgs {
    std::string curve;  // eval_curve.csv from train
    std::string bench;  // raw benchmark CSV
    std::string eval;   // per-TM agent delays CSV
    std::string out_curve = "learning_curve.csv";
    std::string out_compare = "comparison.csv";
};

// rebuild the benchmark delay groups from the raw CSV, preserving level order
BenchmarkResult benchmark_from_csv(const std::string& path) {
    BenchmarkResult out;
    const auto rows = read_csv(path);
    if (rows.empty()) throw InvalidInput("empty benchmark CSV: " + path);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 4) throw InvalidInput("benchmark CSV row has wrong arity");
        const double level = std::stod(row[0]);
        const std::size_t tm = static_cast<std::size_t>(std::stoul(row[1]));
        if (out.levels.empty() || out.levels.back().fraction != level) {
            out.levels.push_back({level, 0.0});
            out.delays.emplace_back();
        }
        auto& per_level = out.delays.back();
        if (tm >= per_level.size()) per_level.resize(tm + 1);
        per_level[tm].push_back(std::stod(row[3]));
    }
    for (const auto& per_level : out.delays)
        for (const auto& per_tm : per_level)
            out.configs = std::max<int>(out.configs, static_cast<int>(per_tm.size()));
    return out;
}

std::vector<std::vector<double>> eval_from_csv(const std::string& path,
                                               const std::vector<IntensityLevel>& levels) {
    const auto rows = read_csv(path);
    if (rows.empty()) throw InvalidInput("empty evaluation CSV: " + path);
    std::vector<std::vector<double>> delays(levels.size());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 3) throw InvalidInput("evaluation CSV row has wrong arity");
        const double level = std::stod(row[0]);
        std::size_t li = levels.size();
        for (std::size_t i = 0; i < levels.size(); ++i)
            if (levels[i].fraction == level) { li = i; break; }
        if (li == levels.size())
            throw InvalidInput("evaluation CSV level not present in benchmark: " + row[0]);
        delays[li].push_back(std::stod(row[2]));
    }
    return delays;
}

void cmd_report(const ReportArgs& a) {
    if (a.curve.empty() && a.bench.empty())
        throw InvalidInput("report needs --curve and/or --bench inputs");

    if (!a.curve.empty()) {
        // re-emit the per-TI evaluation curve as the learning-curve figure data
        const auto rows = read_csv(a.curve);
        if (rows.empty()) throw InvalidInput("empty curve CSV: " + a.curve);
        const json effective = {{"command", "report"}, {"figure", "learning_curve"}};
        CsvBuilder csv;
        csv.comment("routelab learning curve digest=" + config_digest(effective));
        for (const auto& row : rows) csv.row(row);
        write_text_file(a.out_curve, csv.str());
        log_info("report: learning curve -> " + a.out_curve);
    }

    if (!a.bench.empty()) {
        const BenchmarkResult bench = benchmark_from_csv(a.bench);
        std::vector<std::vector<double>> agent_delays;
        if (!a.eval.empty()) agent_delays = eval_from_csv(a.eval, bench.levels);
        const std::vector<TiComparison> rows = compare(bench, agent_delays);
        const json effective = {{"command", "report"}, {"figure", "comparison"},
                                {"agent", !a.eval.empty()}};
        write_text_file(a.out_compare, comparison_to_csv(rows, config_digest(effective)));
        log_info("report: comparison boxes -> " + a.out_compare);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"routing-optimizer lab: traffic generation, delay simulation, "
                 "agent training and random-search benchmarks"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads for parallel kernels (default: all)");

    // ---- topo ----
    CLI::App* topo = app.add_subcommand("topo", "generate or inspect topologies");
    topo->require_subcommand(1);
    CLI::App* topo_gen = topo->add_subcommand("gen", "generate a scale-free topology");
    TopoGenArgs tga;
    ConfigMerge topo_cm(topo_gen);
    topo_gen->add_option("--nodes", tga.nodes, "node count");
    topo_gen->add_option("--links", tga.links, "full-duplex link count");
    topo_gen->add_option("--capacity", tga.capacity, "uniform link capacity");
    topo_gen->add_option("--seed", tga.seed, "master seed (required)");
    topo_gen->add_option("-o,--output", tga.output, "output topology JSON");

    CLI::App* topo_show = topo->add_subcommand("show", "print a topology summary");
    std::string topo_show_path;
    topo_show->add_option("file", topo_show_path, "topology JSON")->required();

    // ---- traffic ----
    CLI::App* traffic = app.add_subcommand("traffic", "generate traffic datasets");
    traffic->require_subcommand(1);
    CLI::App* traffic_gen = traffic->add_subcommand("gen", "generate a gravity-model dataset");
    TrafficGenArgs tra;
    ConfigMerge traffic_cm(traffic_gen);
    traffic_gen->add_option("--topology", tra.topology, "topology JSON");
    traffic_gen->add_option("--levels", tra.levels, "number of intensity levels");
    traffic_gen->add_option("--min", tra.min_fraction, "lowest intensity (fraction of capacity)");
    traffic_gen->add_option("--max", tra.max_fraction, "highest intensity");
    traffic_gen->add_option("--per-level", tra.per_level, "TMs per level");
    traffic_gen->add_option("--mass-mode", tra.mass_mode,
                            "node mass law: exponential|uniform|constant");
    traffic_gen->add_option("--seed", tra.seed, "master seed (required)");
    traffic_gen->add_option("-o,--output", tra.output, "output dataset JSONL");

    // ---- bench ----
    CLI::App* bench = app.add_subcommand("bench", "random-configuration benchmark");
    bench->require_subcommand(1);
    CLI::App* bench_run = bench->add_subcommand("run", "evaluate K random configurations");
    BenchArgs ba;
    ConfigMerge bench_cm(bench_run);
    bench_run->add_option("--topology", ba.topology, "topology JSON");
    bench_run->add_option("--dataset", ba.dataset, "dataset JSONL");
    bench_run->add_option("--configs", ba.configs, "number of random configurations K");
    bench_run->add_option("--seed", ba.seed, "master seed (required)");
    bench_run->add_option("--agent", ba.agent, "optional checkpoint for comparison columns");
    bench_run->add_option("-o,--output", ba.output, "raw per-configuration CSV");
    bench_run->add_option("--stats", ba.stats, "per-level box statistics CSV");

    // ---- train ----
    CLI::App* train_cmd = app.add_subcommand("train", "train the routing agent");
    TrainArgs trn;
    ConfigMerge train_cm(train_cmd);
    train_cmd->add_option("--topology", trn.topology, "topology JSON");
    train_cmd->add_option("--eval-dataset", trn.eval_dataset,
                          "dataset for the periodic evaluation curve");
    train_cmd->add_option("--steps", trn.agent.total_steps, "environment steps");
    train_cmd->add_option("--warmup", trn.agent.warmup_steps, "steps before learning starts");
    train_cmd->add_option("--batch", trn.agent.batch_size, "batch size");
    train_cmd->add_option("--replay", trn.agent.replay_capacity, "replay buffer capacity");
    train_cmd->add_option("--actor-lr", trn.agent.actor_lr, "actor step size");
    train_cmd->add_option("--critic-lr", trn.agent.critic_lr, "critic step size");
    train_cmd->add_option("--tau", trn.agent.tau, "target soft-update rate");
    train_cmd->add_option("--gamma", trn.agent.gamma, "discount (0: one-step episodes)");
    train_cmd->add_option("--sigma-start", trn.agent.sigma_start, "initial Gaussian noise scale");
    train_cmd->add_option("--sigma-end", trn.agent.sigma_end, "final Gaussian noise scale");
    train_cmd->add_option("--epsilon-start", trn.agent.epsilon_start,
                          "initial full-override probability");
    train_cmd->add_option("--epsilon-end", trn.agent.epsilon_end,
                          "final full-override probability");
    train_cmd->add_option("--eval-every", trn.agent.eval_every, "evaluation cadence in steps");
    train_cmd->add_option("--hidden", trn.hidden, "hidden layer widths, comma separated");
    train_cmd->add_option("--reward-mode", trn.reward_mode,
                          "normalized | log_delay | neg_delay | baseline_relative");
    train_cmd->add_option("--levels", trn.levels, "intensity levels for the TM sampler");
    train_cmd->add_option("--min", trn.min_fraction, "lowest sampled intensity");
    train_cmd->add_option("--max", trn.max_fraction, "highest sampled intensity");
    train_cmd->add_option("--mass-mode", trn.mass_mode,
                          "node mass law: exponential|uniform|constant");
    train_cmd->add_option("--seed", trn.agent.seed, "master seed (required)");
    train_cmd->add_option("-o,--output", trn.output, "output checkpoint JSON");
    train_cmd->add_option("--log", trn.log, "training log CSV");
    train_cmd->add_option("--curve", trn.curve, "evaluation curve CSV (with --eval-dataset)");

    // ---- eval ----
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a checkpoint on a dataset");
    EvalArgs eva;
    ConfigMerge eval_cm(eval_cmd);
    eval_cmd->add_option("--topology", eva.topology, "topology JSON");
    eval_cmd->add_option("--dataset", eva.dataset, "dataset JSONL");
    eval_cmd->add_option("--agent", eva.agent, "checkpoint JSON");
    eval_cmd->add_option("-o,--output", eva.output, "per-TM delay CSV");

    // ---- report ----
    CLI::App* report_cmd = app.add_subcommand("report", "assemble figure-ready CSVs");
    ReportArgs rep;
    ConfigMerge report_cm(report_cmd);
    report_cmd->add_option("--curve", rep.curve, "evaluation curve CSV from train");
    report_cmd->add_option("--bench", rep.bench, "raw benchmark CSV");
    report_cmd->add_option("--eval", rep.eval, "per-TM agent delay CSV");
    report_cmd->add_option("--out-curve", rep.out_curve, "learning-curve figure CSV");
    report_cmd->add_option("--out-compare", rep.out_compare, "comparison figure CSV");

    try {
        app.parse(argc, argv);

        if (threads > 0) omp_set_num_threads(threads);

        if (topo_gen->parsed()) {
            topo_cm.load();
            topo_cm.merge("--nodes", tga.nodes);
            topo_cm.merge("--links", tga.links);
            topo_cm.merge("--capacity", tga.capacity);
            topo_cm.merge("--seed", tga.seed);
            topo_cm.merge("--output", tga.output);
            cmd_topo_gen(tga, topo_cm);
        } else if (topo_show->parsed()) {
            cmd_topo_show(topo_show_path);
        } else if (traffic_gen->parsed()) {
            traffic_cm.load();
            traffic_cm.merge("--topology", tra.topology);
            traffic_cm.merge("--levels", tra.levels);
            traffic_cm.merge("--min", tra.min_fraction);
            traffic_cm.merge("--max", tra.max_fraction);
            traffic_cm.merge("--per-level", tra.per_level);
            traffic_cm.merge("--mass-mode", tra.mass_mode);
            traffic_cm.merge("--seed", tra.seed);
            traffic_cm.merge("--output", tra.output);
            cmd_traffic_gen(tra, traffic_cm);
        } else if (bench_run->parsed()) {
            bench_cm.load();
            bench_cm.merge("--topology", ba.topology);
            bench_cm.merge("--dataset", ba.dataset);
            bench_cm.merge("--configs", ba.configs);
            bench_cm.merge("--seed", ba.seed);
            bench_cm.merge("--agent", ba.agent);
            bench_cm.merge("--output", ba.output);
            bench_cm.merge("--stats", ba.stats);
            cmd_bench_run(ba, bench_cm);
        } else if (train_cmd->parsed()) {
            train_cm.load();
            train_cm.merge("--topology", trn.topology);
            train_cm.merge("--eval-dataset", trn.eval_dataset);
            train_cm.merge("--steps", trn.agent.total_steps);
            train_cm.merge("--warmup", trn.agent.warmup_steps);
            train_cm.merge("--batch", trn.agent.batch_size);
            train_cm.merge("--replay", trn.agent.replay_capacity);
            train_cm.merge("--actor-lr", trn.agent.actor_lr);
            train_cm.merge("--critic-lr", trn.agent.critic_lr);
            train_cm.merge("--tau", trn.agent.tau);
            train_cm.merge("--gamma", trn.agent.gamma);
            train_cm.merge("--sigma-start", trn.agent.sigma_start);
            train_cm.merge("--sigma-end", trn.agent.sigma_end);
            train_cm.merge("--epsilon-start", trn.agent.epsilon_start);
            train_cm.merge("--epsilon-end", trn.agent.epsilon_end);
            train_cm.merge("--eval-every", trn.agent.eval_every);
            train_cm.merge("--hidden", trn.hidden);
            train_cm.merge("--reward-mode", trn.reward_mode);
            train_cm.merge("--levels", trn.levels);
            train_cm.merge("--min", trn.min_fraction);
            train_cm.merge("--max", trn.max_fraction);
            train_cm.merge("--mass-mode", trn.mass_mode);
            train_cm.merge("--seed", trn.agent.seed);
            train_cm.merge("--output", trn.output);
            train_cm.merge("--log", trn.log);
            train_cm.merge("--curve", trn.curve);
            cmd_train(trn, train_cm);
        } else if (eval_cmd->parsed()) {
            eval_cm.load();
            eval_cm.merge("--topology", eva.topology);
            eval_cm.merge("--dataset", eva.dataset);
            eval_cm.merge("--agent", eva.agent);
            eval_cm.merge("--output", eva.output);
            cmd_eval(eva);
        } else if (report_cmd->parsed()) {
            report_cm.load();
            report_cm.merge("--curve", rep.curve);
            report_cm.merge("--bench", rep.bench);
            report_cm.merge("--eval", rep.eval);
            report_cm.merge("--out-curve", rep.out_curve);
            report_cm.merge("--out-compare", rep.out_compare);
            cmd_report(rep);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

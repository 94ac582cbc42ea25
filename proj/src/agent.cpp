#include "routelab/agent.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <json.hpp>

#include "routelab/io.hpp"
#include "routelab/log.hpp"

namespace routelab {

RewardMode reward_mode_from_string(const std::string& s) {
    if (s == "normalized") return RewardMode::Normalized;
    if (s == "log_delay") return RewardMode::LogDelay;
    if (s == "neg_delay") return RewardMode::NegDelay;
    if (s == "baseline_relative") return RewardMode::BaselineRelative;
    throw InvalidInput("unknown reward mode: " + s);
}

std::string to_string(RewardMode m) {
    switch (m) {
        case RewardMode::Normalized: return "normalized";
        case RewardMode::LogDelay: return "log_delay";
        case RewardMode::NegDelay: return "neg_delay";
        case RewardMode::BaselineRelative: return "baseline_relative";
    }
    return "neg_delay";  // unreachable
}

void AgentConfig::check() const {
    if (actor_lr <= 0.0 || critic_lr <= 0.0) throw InvalidInput("learning rates must be positive");
    if (tau < 0.0 || tau > 1.0) throw InvalidInput("tau must be in [0,1]");
    if (gamma < 0.0 || gamma > 1.0) throw InvalidInput("gamma must be in [0,1]");
    if (batch_size < 1) throw InvalidInput("batch size must be positive");
    if (replay_capacity < static_cast<std::size_t>(batch_size))
        throw InvalidInput("replay capacity must be at least the batch size");
    if (sigma_start < 0.0 || sigma_end < 0.0) throw InvalidInput("sigma must be non-negative");
    if (epsilon_start < 0.0 || epsilon_start > 1.0 || epsilon_end < 0.0 || epsilon_end > 1.0)
        throw InvalidInput("epsilon must be in [0,1]");
    if (total_steps < 0) throw InvalidInput("total steps must be non-negative");
    if (warmup_steps < batch_size)
        throw InvalidInput("warmup must cover at least one batch");
    if (eval_every < 1) throw InvalidInput("eval cadence must be positive");
    if (hidden.empty()) throw InvalidInput("at least one hidden layer is required");
    for (const int h : hidden)
        if (h < 1) throw InvalidInput("hidden widths must be positive");
    if (!(bounds.lo > 0.0) || !(bounds.hi > bounds.lo))
        throw InvalidInput("weight bounds must satisfy 0 < lo < hi");
}

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw InvalidInput("replay capacity must be positive");
    store_.reserve(std::min<std::size_t>(capacity, 1 << 16));
}

void ReplayBuffer::push(Transition tr) {
    if (store_.size() < capacity_) {
        store_.push_back(std::move(tr));
    } else {
        store_[next_] = std::move(tr);
    }
    next_ = (next_ + 1) % capacity_;
    ++inserted_;
}

const std::vector<double>* ReplayBuffer::successor_state(std::size_t i) const {
    if (i >= store_.size()) return nullptr;
    if (store_.size() < capacity_) {
        // still filling: slots are in insertion order
        return i + 1 < store_.size() ? &store_[i + 1].state : nullptr;
    }
    // full ring: slots are written cyclically, so slot i+1 always holds the
    // transition inserted right after slot i — except for the newest slot,
    // whose successor does not exist yet
    const std::size_t newest = (next_ + capacity_ - 1) % capacity_;
    if (i == newest) return nullptr;
    return &store_[(i + 1) % capacity_].state;
}

// ---------------------------------------------------------------------------
// Agent

namespace {

// Fixed chunking of the batch: chunks are computed independently (possibly in
// parallel) and reduced in chunk order, so gradients are bitwise identical for
// any thread count and equal to the serial reference.
constexpr int kGradChunks = 8;

std::vector<nn::Activation> hidden_acts(std::size_t hidden_layers, nn::Activation head) {
    std::vector<nn::Activation> acts(hidden_layers, nn::Activation::Relu);
    acts.push_back(head);
    return acts;
}

std::vector<int> make_dims(int in, const std::vector<int>& hidden, int out) {
    std::vector<int> dims;
    dims.reserve(hidden.size() + 2);
    dims.push_back(in);
    dims.insert(dims.end(), hidden.begin(), hidden.end());
    dims.push_back(out);
    return dims;
}

}  // namespace

struct Agent::Workspace {
    std::vector<std::size_t> indices;
    // one slot per chunk; summed serially in chunk order
    std::vector<nn::Grads> critic_grads, actor_grads;
    std::vector<double> critic_loss_sum, actor_obj_sum;
    std::vector<nn::ForwardCache> critic_cache, actor_cache, target_cache;
    std::vector<std::vector<double>> critic_in, dinput, dy_actor;
    nn::Grads critic_total, actor_total;
};

Agent::Agent(const Topology& t, AgentConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.check();
    const TopologyReport report = validate(t);
    if (!report.ok()) throw InvalidInput("agent requires a valid topology");
    state_dim_ = t.n * t.n;
    action_dim_ = t.link_count();

    actor_ = nn::init_mlp(make_dims(state_dim_, cfg_.hidden, action_dim_),
                          hidden_acts(cfg_.hidden.size(), nn::Activation::Sigmoid),
                          derive_seed(cfg_.seed, "actor_init"));
    critic_ = nn::init_mlp(make_dims(state_dim_ + action_dim_, cfg_.hidden, 1),
                           hidden_acts(cfg_.hidden.size(), nn::Activation::Identity),
                           derive_seed(cfg_.seed, "critic_init"));
    actor_target_ = actor_;
    critic_target_ = critic_;
    actor_opt_.resize_like(actor_);
    critic_opt_.resize_like(critic_);
    ws_ = std::make_unique<Workspace>();
}

Agent::Agent(const Agent& other)
    : steps_done(other.steps_done),
      cfg_(other.cfg_),
      state_dim_(other.state_dim_),
      action_dim_(other.action_dim_),
      actor_(other.actor_),
      critic_(other.critic_),
      actor_target_(other.actor_target_),
      critic_target_(other.critic_target_),
      actor_opt_(other.actor_opt_),
      critic_opt_(other.critic_opt_),
      forward_count_(other.forward_count_.load(std::memory_order_relaxed)),
      ws_(std::make_unique<Workspace>()) {}

Agent::~Agent() = default;

Agent& Agent::operator=(const Agent& other) {
    if (this == &other) return *this;
    steps_done = other.steps_done;
    cfg_ = other.cfg_;
    state_dim_ = other.state_dim_;
    action_dim_ = other.action_dim_;
    actor_ = other.actor_;
    critic_ = other.critic_;
    actor_target_ = other.actor_target_;
    critic_target_ = other.critic_target_;
    actor_opt_ = other.actor_opt_;
    critic_opt_ = other.critic_opt_;
    forward_count_.store(other.forward_count_.load(std::memory_order_relaxed),
                         std::memory_order_relaxed);
    ws_ = std::make_unique<Workspace>();
    return *this;
}

std::vector<double> Agent::act(std::span<const double> state) const {
    forward_count_.fetch_add(1, std::memory_order_relaxed);
    return nn::forward(actor_, state);
}

std::vector<double> Agent::act_explore(std::span<const double> state, Rng& rng, double sigma,
                                       double epsilon) const {
    if (rng.uniform01() < epsilon) {
        std::vector<double> a(static_cast<std::size_t>(action_dim_));
        for (double& v : a) v = rng.uniform01();
        return a;
    }
    std::vector<double> a = act(state);
    if (sigma > 0.0) {
        for (double& v : a) v = std::clamp(v + sigma * rng.normal(), 0.0, 1.0);
    }
    return a;
}

TrainStepDiag Agent::train_step(const ReplayBuffer& buffer, Rng& rng, ExecMode exec) {
    const std::size_t n = buffer.size();
    if (n < static_cast<std::size_t>(cfg_.batch_size))
        throw InvalidInput("train_step: buffer smaller than one batch");

    const int batch = cfg_.batch_size;
    Workspace& ws = *ws_;
    ws.indices.resize(static_cast<std::size_t>(batch));
    for (int i = 0; i < batch; ++i) ws.indices[static_cast<std::size_t>(i)] = rng.uniform_int(n);

    const int chunks = std::min(kGradChunks, batch);
    const int chunk_len = (batch + chunks - 1) / chunks;
    if (static_cast<int>(ws.critic_grads.size()) != chunks) {
        ws.critic_grads.assign(static_cast<std::size_t>(chunks), nn::Grads{});
        ws.actor_grads.assign(static_cast<std::size_t>(chunks), nn::Grads{});
        ws.critic_cache.resize(static_cast<std::size_t>(chunks));
        ws.actor_cache.resize(static_cast<std::size_t>(chunks));
        ws.target_cache.resize(static_cast<std::size_t>(chunks));
        ws.critic_in.resize(static_cast<std::size_t>(chunks));
        ws.dinput.resize(static_cast<std::size_t>(chunks));
        ws.dy_actor.resize(static_cast<std::size_t>(chunks));
        for (int c = 0; c < chunks; ++c) {
            ws.critic_grads[static_cast<std::size_t>(c)].resize_like(critic_);
            ws.actor_grads[static_cast<std::size_t>(c)].resize_like(actor_);
        }
        ws.critic_loss_sum.resize(static_cast<std::size_t>(chunks));
        ws.actor_obj_sum.resize(static_cast<std::size_t>(chunks));
    }

    const double inv_batch = 1.0 / batch;

    #pragma omp parallel for schedule(static) if (exec == ExecMode::OpenMP)
    for (int c = 0; c < chunks; ++c) {
        const std::size_t ci = static_cast<std::size_t>(c);
        nn::Grads& cg = ws.critic_grads[ci];
        nn::Grads& ag = ws.actor_grads[ci];
        cg.zero();
        ag.zero();
        double loss_sum = 0.0;
        double obj_sum = 0.0;
        std::vector<double>& x = ws.critic_in[ci];
        std::vector<double>& dinput = ws.dinput[ci];
        std::vector<double>& dy_actor = ws.dy_actor[ci];
        x.resize(static_cast<std::size_t>(state_dim_ + action_dim_));
        dy_actor.resize(static_cast<std::size_t>(action_dim_));

        const int begin = c * chunk_len;
        const int end = std::min(batch, begin + chunk_len);
        for (int i = begin; i < end; ++i) {
            const std::size_t slot = ws.indices[static_cast<std::size_t>(i)];
            const Transition& tr = buffer.at(slot);

            // critic regression toward the one-step return
            double y = tr.reward;
            if (cfg_.gamma > 0.0) {
                if (const std::vector<double>* s2 = buffer.successor_state(slot)) {
                    const std::vector<double> a2 = nn::forward(actor_target_, *s2);
                    std::copy(s2->begin(), s2->end(), x.begin());
                    std::copy(a2.begin(), a2.end(), x.begin() + state_dim_);
                    y += cfg_.gamma * nn::forward(critic_target_, x, ws.target_cache[ci])[0];
                }
            }
            std::copy(tr.state.begin(), tr.state.end(), x.begin());
            std::copy(tr.action.begin(), tr.action.end(), x.begin() + state_dim_);
            const double q = nn::forward(critic_, x, ws.critic_cache[ci])[0];
            const double err = q - y;
            loss_sum += err * err;
            const double dq[1] = {2.0 * err * inv_batch};
            nn::backward(critic_, ws.critic_cache[ci], dq, cg);

            // actor ascends the critic's value of its own action
            const std::vector<double>& a_pi =
                nn::forward(actor_, tr.state, ws.actor_cache[ci]);
            std::copy(a_pi.begin(), a_pi.end(), x.begin() + state_dim_);
            obj_sum += nn::forward(critic_, x, ws.critic_cache[ci])[0];
            const double dq_one[1] = {1.0};
            nn::backward_input_only(critic_, ws.critic_cache[ci], dq_one, dinput);
            for (int k = 0; k < action_dim_; ++k)
                dy_actor[static_cast<std::size_t>(k)] =
                    -inv_batch * dinput[static_cast<std::size_t>(state_dim_ + k)];
            nn::backward(actor_, ws.actor_cache[ci], dy_actor, ag);
        }
        ws.critic_loss_sum[ci] = loss_sum;
        ws.actor_obj_sum[ci] = obj_sum;
    }

    ws.critic_total.resize_like(critic_);
    ws.actor_total.resize_like(actor_);
    ws.critic_total.zero();
    ws.actor_total.zero();
    double critic_loss = 0.0;
    double actor_obj = 0.0;
    for (int c = 0; c < chunks; ++c) {
        ws.critic_total.add(ws.critic_grads[static_cast<std::size_t>(c)]);
        ws.actor_total.add(ws.actor_grads[static_cast<std::size_t>(c)]);
        critic_loss += ws.critic_loss_sum[static_cast<std::size_t>(c)];
        actor_obj += ws.actor_obj_sum[static_cast<std::size_t>(c)];
    }

    nn::AdamParams critic_hp;
    critic_hp.alpha = cfg_.critic_lr;
    nn::optimizer_step(critic_opt_, critic_, ws.critic_total, critic_hp);
    nn::AdamParams actor_hp;
    actor_hp.alpha = cfg_.actor_lr;
    nn::optimizer_step(actor_opt_, actor_, ws.actor_total, actor_hp);

    nn::soft_update(actor_target_, actor_, cfg_.tau);
    nn::soft_update(critic_target_, critic_, cfg_.tau);

    return {critic_loss * inv_batch, actor_obj * inv_batch};
}

// ---------------------------------------------------------------------------
// Environment coupling

std::vector<double> encode_state(const TrafficMatrix& tm, const Topology& t) {
    if (tm.n != t.n) throw InvalidInput("encode_state: traffic matrix does not match topology");
    const double cap = total_capacity(t);
    if (!(cap > 0.0)) throw InvalidInput("encode_state: topology has no capacity");
    std::vector<double> s(tm.demand.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = tm.demand[i] / cap;
    return s;
}

LinkWeights decode_action(std::span<const double> action, WeightBounds bounds) {
    LinkWeights w;
    w.w.resize(action.size());
    for (std::size_t i = 0; i < action.size(); ++i) {
        const double a = action[i];
        if (a < 0.0 || a > 1.0) throw InvalidInput("decode_action: entry outside [0,1]");
        w.w[i] = bounds.lo + a * (bounds.hi - bounds.lo);
    }
    return w;
}

double schedule_value(double start, double end, std::int64_t step, std::int64_t total_steps) {
    if (total_steps <= 1) return end;
    const double frac =
        std::min(1.0, static_cast<double>(step) / static_cast<double>(total_steps - 1));
    return start + (end - start) * frac;
}

TrainLog train(Agent& agent, const Topology& t, const TrainOptions& options,
               const TrafficDataset* eval_set) {
    const AgentConfig& cfg = agent.config();
    if (options.levels.empty()) throw InvalidInput("train: no intensity levels given");

    ReplayBuffer buffer(cfg.replay_capacity);
    Rng explore_rng = substream(cfg.seed, "exploration");
    Rng level_rng = substream(cfg.seed, "tm_level");
    Rng batch_rng = substream(cfg.seed, "batch");

    // fixed reference routing for the baseline-relative reward: all links
    // weighted equally, so it never depends on the agent
    RoutingConfig ref_routing;
    if (cfg.reward_mode == RewardMode::BaselineRelative)
        ref_routing = shortest_paths(t, equal_weights(t.link_count(), cfg.bounds));

    // per-level running moments of the log-delay for the normalized reward
    // (Welford); standardizing per level gives every intensity level the same
    // gradient weight even though raw delays span orders of magnitude
    struct Moments {
        std::int64_t n = 0;
        double mean = 0.0, m2 = 0.0;
        double update_and_score(double x) {
            ++n;
            const double d1 = x - mean;
            mean += d1 / static_cast<double>(n);
            m2 += d1 * (x - mean);
            const double sd = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
            return sd > 1e-12 ? (x - mean) / sd : 0.0;
        }
    };
    std::vector<Moments> level_moments(options.levels.size());

    TrainLog log;
    log.steps.reserve(static_cast<std::size_t>(cfg.total_steps));

    auto run_eval = [&](std::int64_t step_no) -> double {
        if (eval_set == nullptr) return 0.0;
        const AgentEval ev = evaluate_agent(agent, *eval_set, t, options.exec);
        EvalPoint pt;
        pt.step = step_no;
        double sum = 0.0;
        std::size_t count = 0;
        for (const std::vector<double>& level : ev.delays) {
            double lsum = 0.0;
            for (const double d : level) lsum += d;
            pt.per_level_mean_delay.push_back(level.empty() ? 0.0 : lsum / level.size());
            sum += lsum;
            count += level.size();
        }
        pt.overall_mean_delay = count == 0 ? 0.0 : sum / static_cast<double>(count);
        log.eval_points.push_back(std::move(pt));
        return log.eval_points.back().overall_mean_delay;
    };

    if (eval_set != nullptr) run_eval(0);

    for (std::int64_t step = 0; step < cfg.total_steps; ++step) {
        const std::size_t level_idx = level_rng.uniform_int(options.levels.size());
        const TrafficMatrix tm =
            gravity_tm(t, options.levels[level_idx].absolute,
                       derive_seed(cfg.seed, "train_tm", static_cast<std::uint64_t>(step)),
                       options.mass_mode);

        const double sigma =
            schedule_value(cfg.sigma_start, cfg.sigma_end, step, cfg.total_steps);
        const double epsilon =
            schedule_value(cfg.epsilon_start, cfg.epsilon_end, step, cfg.total_steps);

        std::vector<double> state = encode_state(tm, t);
        std::vector<double> action = agent.act_explore(state, explore_rng, sigma, epsilon);
        const LinkWeights w = decode_action(action, cfg.bounds);
        const DelayReport report = evaluate(t, tm, w);

        double r = reward(report);
        if (cfg.reward_mode == RewardMode::Normalized) {
            r = level_moments[level_idx].update_and_score(-std::log(report.mean_delay));
        } else if (cfg.reward_mode == RewardMode::LogDelay) {
            // delays are strictly positive (every link contributes >= 1/capacity)
            r = -std::log(report.mean_delay);
        } else if (cfg.reward_mode == RewardMode::BaselineRelative) {
            const double ref = evaluate_with_routing(t, tm, ref_routing).mean_delay;
            r = ref > 0.0 ? (ref - report.mean_delay) / ref : 0.0;
        }

        buffer.push(Transition{std::move(state), std::move(action), r});

        StepRecord rec;
        rec.step = step + 1;
        rec.reward = r;
        rec.epsilon = epsilon;
        rec.sigma = sigma;
        if (step + 1 >= cfg.warmup_steps) {
            const TrainStepDiag diag = agent.train_step(buffer, batch_rng, options.exec);
            rec.critic_loss = diag.critic_loss;
        }
        ++agent.steps_done;

        if (eval_set != nullptr &&
            ((step + 1) % cfg.eval_every == 0 || step + 1 == cfg.total_steps)) {
            rec.eval_mean_delay = run_eval(step + 1);
        }
        log.steps.push_back(std::move(rec));

        if ((step + 1) % 10000 == 0)
            log_info("train: step " + std::to_string(step + 1) + "/" +
                     std::to_string(cfg.total_steps));
    }
    return log;
}

AgentEval evaluate_agent(const Agent& agent, const TrafficDataset& dataset, const Topology& t,
                         ExecMode exec) {
    AgentEval out;
    out.levels = dataset.levels;
    out.delays.resize(dataset.tms.size());
    std::vector<std::pair<int, int>> jobs;
    for (std::size_t li = 0; li < dataset.tms.size(); ++li) {
        out.delays[li].resize(dataset.tms[li].size());
        for (std::size_t mi = 0; mi < dataset.tms[li].size(); ++mi)
            jobs.emplace_back(static_cast<int>(li), static_cast<int>(mi));
    }

    const std::int64_t total = static_cast<std::int64_t>(jobs.size());
    #pragma omp parallel for schedule(static) if (exec == ExecMode::OpenMP)
    for (std::int64_t j = 0; j < total; ++j) {
        const auto [li, mi] = jobs[static_cast<std::size_t>(j)];
        const TrafficMatrix& tm = dataset.tms[static_cast<std::size_t>(li)][static_cast<std::size_t>(mi)];
        const std::vector<double> action = agent.act(encode_state(tm, t));
        const LinkWeights w = decode_action(action, agent.config().bounds);
        out.delays[static_cast<std::size_t>(li)][static_cast<std::size_t>(mi)] =
            evaluate(t, tm, w).mean_delay;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

std::string training_log_to_csv(const TrainLog& log, const std::string& digest) {
    CsvBuilder csv;
    csv.comment("routelab training log digest=" + digest);
    csv.row({"step", "reward", "eval_mean_delay", "epsilon", "sigma", "critic_loss"});
    for (const StepRecord& r : log.steps) {
        csv.row({std::to_string(r.step), format_double(r.reward),
                 r.eval_mean_delay ? format_double(*r.eval_mean_delay) : "",
                 format_double(r.epsilon), format_double(r.sigma),
                 r.critic_loss ? format_double(*r.critic_loss) : ""});
    }
    return csv.str();
}

std::string eval_curve_to_csv(const TrainLog& log, const std::vector<IntensityLevel>& levels,
                              const std::string& digest) {
    CsvBuilder csv;
    csv.comment("routelab evaluation curve digest=" + digest);
    std::vector<std::string> header{"step"};
    for (const IntensityLevel& lv : levels) header.push_back("ti_" + format_double(lv.fraction));
    header.push_back("overall");
    csv.row(header);
    for (const EvalPoint& pt : log.eval_points) {
        std::vector<std::string> row{std::to_string(pt.step)};
        for (const double d : pt.per_level_mean_delay) row.push_back(format_double(d));
        row.push_back(format_double(pt.overall_mean_delay));
        csv.row(row);
    }
    return csv.str();
}

nlohmann::json Agent::to_json() const {
    nlohmann::json j;
    j["config"] = {{"actor_lr", cfg_.actor_lr},
                   {"critic_lr", cfg_.critic_lr},
                   {"tau", cfg_.tau},
                   {"gamma", cfg_.gamma},
                   {"batch_size", cfg_.batch_size},
                   {"replay_capacity", cfg_.replay_capacity},
                   {"sigma_start", cfg_.sigma_start},
                   {"sigma_end", cfg_.sigma_end},
                   {"epsilon_start", cfg_.epsilon_start},
                   {"epsilon_end", cfg_.epsilon_end},
                   {"total_steps", cfg_.total_steps},
                   {"warmup_steps", cfg_.warmup_steps},
                   {"eval_every", cfg_.eval_every},
                   {"seed", cfg_.seed},
                   {"hidden", cfg_.hidden},
                   {"weight_lo", cfg_.bounds.lo},
                   {"weight_hi", cfg_.bounds.hi},
                   {"reward_mode", to_string(cfg_.reward_mode)}};
    j["state_dim"] = state_dim_;
    j["action_dim"] = action_dim_;
    j["steps_done"] = steps_done;
    j["actor"] = nn::mlp_to_json(actor_);
    j["critic"] = nn::mlp_to_json(critic_);
    j["actor_target"] = nn::mlp_to_json(actor_target_);
    j["critic_target"] = nn::mlp_to_json(critic_target_);
    return j;
}

Agent Agent::from_json(const nlohmann::json& j, const Topology& t) {
    AgentConfig cfg;
    try {
        const nlohmann::json& c = j.at("config");
        cfg.actor_lr = c.at("actor_lr").get<double>();
        cfg.critic_lr = c.at("critic_lr").get<double>();
        cfg.tau = c.at("tau").get<double>();
        cfg.gamma = c.at("gamma").get<double>();
        cfg.batch_size = c.at("batch_size").get<int>();
        cfg.replay_capacity = c.at("replay_capacity").get<std::size_t>();
        cfg.sigma_start = c.at("sigma_start").get<double>();
        cfg.sigma_end = c.at("sigma_end").get<double>();
        cfg.epsilon_start = c.at("epsilon_start").get<double>();
        cfg.epsilon_end = c.at("epsilon_end").get<double>();
        cfg.total_steps = c.at("total_steps").get<std::int64_t>();
        cfg.warmup_steps = c.at("warmup_steps").get<std::int64_t>();
        cfg.eval_every = c.at("eval_every").get<std::int64_t>();
        cfg.seed = c.at("seed").get<std::uint64_t>();
        cfg.hidden = c.at("hidden").get<std::vector<int>>();
        cfg.bounds.lo = c.at("weight_lo").get<double>();
        cfg.bounds.hi = c.at("weight_hi").get<double>();
        cfg.reward_mode = reward_mode_from_string(c.at("reward_mode").get<std::string>());

        Agent agent(t, cfg);
        if (j.at("state_dim").get<int>() != agent.state_dim_ ||
            j.at("action_dim").get<int>() != agent.action_dim_)
            throw InvalidInput("checkpoint dimensions do not match the topology");
        agent.steps_done = j.at("steps_done").get<std::int64_t>();
        agent.actor_ = nn::mlp_from_json(j.at("actor"));
        agent.critic_ = nn::mlp_from_json(j.at("critic"));
        agent.actor_target_ = nn::mlp_from_json(j.at("actor_target"));
        agent.critic_target_ = nn::mlp_from_json(j.at("critic_target"));
        if (agent.actor_.input_dim() != agent.state_dim_ ||
            agent.actor_.output_dim() != agent.action_dim_ ||
            agent.critic_.input_dim() != agent.state_dim_ + agent.action_dim_ ||
            agent.critic_.output_dim() != 1)
            throw InvalidInput("checkpoint network shapes do not match the topology");
        return agent;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("checkpoint schema error: ") + e.what());
    }
}

void save_agent(const Agent& agent, const std::string& path) {
    nlohmann::json j = agent.to_json();
    j["digest"] = digest_of(j.dump());
    write_text_file(path, j.dump(2) + "\n");
}

Agent load_agent(const std::string& path, const Topology& t) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("checkpoint parse error: ") + e.what());
    }
    return Agent::from_json(j, t);
}

}  // namespace routelab

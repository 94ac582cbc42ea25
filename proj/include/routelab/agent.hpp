#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "routelab/common.hpp"
#include "routelab/delay.hpp"
#include "routelab/nn.hpp"
#include "routelab/routing.hpp"
#include "routelab/rng.hpp"
#include "routelab/topology.hpp"
#include "routelab/traffic.hpp"

namespace routelab {

enum class RewardMode { Normalized, LogDelay, NegDelay, BaselineRelative };

RewardMode reward_mode_from_string(const std::string& s);
std::string to_string(RewardMode m);

struct AgentConfig {
    double actor_lr = 1e-4;
    double critic_lr = 1e-3;
    double tau = 0.01;
    double gamma = 0.0;  // each traffic matrix is an independent one-step episode
    int batch_size = 64;
    std::size_t replay_capacity = 100000;
    double sigma_start = 0.2;  // Gaussian exploration scale, normalized action units
    double sigma_end = 0.02;
    double epsilon_start = 0.1;  // full-override probability
    double epsilon_end = 0.01;
    std::int64_t total_steps = 100000;
    std::int64_t warmup_steps = 1000;
    std::int64_t eval_every = 1000;
    std::uint64_t seed = 1;
    std::vector<int> hidden = {128, 64};
    WeightBounds bounds{};
    // delays span four orders of magnitude between the lightest and heaviest
    // traffic levels; standardizing the log-delay per level keeps every level's
    // reward on the same scale, so no level starves the others of gradient
    RewardMode reward_mode = RewardMode::Normalized;

    void check() const;
};

struct Transition {
    std::vector<double> state;   // normalized flattened TM
    std::vector<double> action;  // normalized, in [0,1]^L
    double reward = 0.0;
};

// FIFO ring store; overwrites oldest first.
class ReplayBuffer {
  public:
    explicit ReplayBuffer(std::size_t capacity);

    void push(Transition tr);
    std::size_t size() const { return store_.size(); }
    std::size_t capacity() const { return capacity_; }
    const Transition& at(std::size_t i) const { return store_[i]; }
    // state inserted right after slot i, if any (used only when gamma > 0)
    const std::vector<double>* successor_state(std::size_t i) const;

  private:
    std::size_t capacity_;
    std::size_t next_ = 0;  // insertion cursor
    std::uint64_t inserted_ = 0;
    std::vector<Transition> store_;
};

struct TrainStepDiag {
    double critic_loss = 0.0;
    double actor_objective = 0.0;
};

class Agent {
  public:
    Agent(const Topology& t, AgentConfig cfg);

    Agent(const Agent& other);
    Agent& operator=(const Agent& other);
    ~Agent();

    const AgentConfig& config() const { return cfg_; }
    int state_dim() const { return state_dim_; }
    int action_dim() const { return action_dim_; }

    // deterministic policy; counts forward passes for the one-step
    // inference property
    std::vector<double> act(std::span<const double> state) const;

    // with probability epsilon a uniform random action, otherwise the
    // policy plus clipped Gaussian noise
    std::vector<double> act_explore(std::span<const double> state, Rng& rng, double sigma,
                                    double epsilon) const;

    TrainStepDiag train_step(const ReplayBuffer& buffer, Rng& rng,
                             ExecMode exec = ExecMode::OpenMP);

    std::uint64_t actor_forward_count() const { return forward_count_.load(std::memory_order_relaxed); }
    void reset_forward_count() const { forward_count_.store(0, std::memory_order_relaxed); }

    const nn::Mlp& actor() const { return actor_; }
    const nn::Mlp& critic() const { return critic_; }
    const nn::Mlp& actor_target() const { return actor_target_; }
    const nn::Mlp& critic_target() const { return critic_target_; }

    nlohmann::json to_json() const;
    static Agent from_json(const nlohmann::json& j, const Topology& t);

    std::int64_t steps_done = 0;

  private:
    friend struct AgentTestAccess;

    AgentConfig cfg_;
    int state_dim_ = 0;
    int action_dim_ = 0;
    nn::Mlp actor_, critic_, actor_target_, critic_target_;
    nn::AdamState actor_opt_, critic_opt_;
    mutable std::atomic<std::uint64_t> forward_count_{0};

    // per-sample workspaces reused across train steps
    struct Workspace;
    std::unique_ptr<Workspace> ws_;
};

std::vector<double> encode_state(const TrafficMatrix& tm, const Topology& t);
LinkWeights decode_action(std::span<const double> action, WeightBounds bounds = {});

double schedule_value(double start, double end, std::int64_t step, std::int64_t total_steps);

struct TrainOptions {
    std::vector<IntensityLevel> levels;
    MassMode mass_mode = MassMode::Exponential;
    ExecMode exec = ExecMode::OpenMP;
};

struct StepRecord {
    std::int64_t step = 0;
    double reward = 0.0;
    double epsilon = 0.0;
    double sigma = 0.0;
    std::optional<double> critic_loss;
    std::optional<double> eval_mean_delay;
};

struct EvalPoint {
    std::int64_t step = 0;
    std::vector<double> per_level_mean_delay;
    double overall_mean_delay = 0.0;
};

struct TrainLog {
    std::vector<StepRecord> steps;
    std::vector<EvalPoint> eval_points;
};

// One environment interaction per step: fresh gravity TM at a uniformly
// drawn intensity level, exploring action, analytic delay reward; one
// gradient step per environment step after warmup.
TrainLog train(Agent& agent, const Topology& t, const TrainOptions& options,
               const TrafficDataset* eval_set = nullptr);

struct AgentEval {
    std::vector<IntensityLevel> levels;
    std::vector<std::vector<double>> delays;  // [level][tm]
};

// Exactly one actor forward pass per TM, no search.
AgentEval evaluate_agent(const Agent& agent, const TrafficDataset& dataset, const Topology& t,
                         ExecMode exec = ExecMode::OpenMP);

std::string training_log_to_csv(const TrainLog& log, const std::string& digest);
std::string eval_curve_to_csv(const TrainLog& log, const std::vector<IntensityLevel>& levels,
                              const std::string& digest);

void save_agent(const Agent& agent, const std::string& path);
Agent load_agent(const std::string& path, const Topology& t);

}  // namespace routelab

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace routelab::nn {

enum class Activation { Relu, Sigmoid, Identity };

Activation activation_from_string(const std::string& s);
std::string to_string(Activation a);

struct DenseLayer {
    int in = 0;
    int out = 0;
    std::vector<double> W;  // out x in, row-major
    std::vector<double> b;  // out
    Activation act = Activation::Identity;

    bool operator==(const DenseLayer&) const = default;
};

struct Mlp {
    std::vector<DenseLayer> layers;

    int input_dim() const { return layers.empty() ? 0 : layers.front().in; }
    int output_dim() const { return layers.empty() ? 0 : layers.back().out; }
    std::size_t param_count() const;

    bool operator==(const Mlp&) const = default;
};

// Glorot-uniform weights, zero biases, deterministic in the seed.
Mlp init_mlp(const std::vector<int>& dims, const std::vector<Activation>& activations,
             std::uint64_t seed);

// acts[0] is the input, acts[i+1] the output of layer i. The cache is
// caller-owned so hot loops can reuse its buffers.
struct ForwardCache {
    std::vector<std::vector<double>> acts;
};

const std::vector<double>& forward(const Mlp& m, std::span<const double> x, ForwardCache& cache);
std::vector<double> forward(const Mlp& m, std::span<const double> x);

struct Grads {
    std::vector<std::vector<double>> dW;
    std::vector<std::vector<double>> db;

    void resize_like(const Mlp& m);
    void zero();
    void add(const Grads& other);
};

// Exact reverse-mode gradients of the scalar whose output gradient is
// `dy`. Accumulates into `grads` (zero it first when starting a batch);
// writes the gradient w.r.t. the network input to *dx when given.
void backward(const Mlp& m, const ForwardCache& cache, std::span<const double> dy, Grads& grads,
              std::vector<double>* dx = nullptr);

// Input gradient only; parameters of `m` are left out of the chain, so
// this is the cheap path for differentiating one network through another.
void backward_input_only(const Mlp& m, const ForwardCache& cache, std::span<const double> dy,
                         std::vector<double>& dx);

struct ScalarLoss {
    std::function<double(std::span<const double>)> value;
    std::function<std::vector<double>(std::span<const double>)> grad;
};

ScalarLoss squared_norm_loss();

// Central finite differences on every parameter; returns the max over
// parameters of |analytic - numeric| / max(1e-8, |analytic| + |numeric|).
double gradient_check(const Mlp& m, std::span<const double> x, const ScalarLoss& loss,
                      double step = 1e-5);

struct AdamParams {
    double alpha = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    std::vector<std::vector<double>> mW, vW, mb, vb;
    std::int64_t t = 0;

    void resize_like(const Mlp& m);
};

// Bias-corrected adaptive-moment update; the only parameter mutator in
// the training path.
void optimizer_step(AdamState& state, Mlp& m, const Grads& grads, const AdamParams& hp);

// target <- tau * source + (1 - tau) * target
void soft_update(Mlp& target, const Mlp& source, double tau);

nlohmann::json mlp_to_json(const Mlp& m);
Mlp mlp_from_json(const nlohmann::json& j);

}  // namespace routelab::nn

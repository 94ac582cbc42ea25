#include "routelab/nn.hpp"

#include <algorithm>
#include <cmath>

#include "routelab/common.hpp"
#include "routelab/rng.hpp"

namespace routelab::nn {

Activation activation_from_string(const std::string& s) {
    if (s == "relu") return Activation::Relu;
    if (s == "sigmoid") return Activation::Sigmoid;
    if (s == "identity") return Activation::Identity;
    throw InvalidInput("unknown activation: " + s);
}

std::string to_string(Activation a) {
    switch (a) {
        case Activation::Relu: return "relu";
        case Activation::Sigmoid: return "sigmoid";
        default: return "identity";
    }
}

std::size_t Mlp::param_count() const {
    std::size_t count = 0;
    for (const DenseLayer& l : layers) count += l.W.size() + l.b.size();
    return count;
}

Mlp init_mlp(const std::vector<int>& dims, const std::vector<Activation>& activations,
             std::uint64_t seed) {
    if (dims.size() < 2) throw InvalidInput("init_mlp needs at least input and output dims");
    if (activations.size() != dims.size() - 1)
        throw InvalidInput("init_mlp needs one activation per layer");
    for (const int d : dims)
        if (d < 1) throw InvalidInput("layer dims must be positive");

    Rng rng(seed);
    Mlp m;
    m.layers.resize(dims.size() - 1);
    for (std::size_t i = 0; i < m.layers.size(); ++i) {
        DenseLayer& l = m.layers[i];
        l.in = dims[i];
        l.out = dims[i + 1];
        l.act = activations[i];
        l.W.resize(static_cast<std::size_t>(l.out) * l.in);
        l.b.assign(static_cast<std::size_t>(l.out), 0.0);
        const double s = std::sqrt(6.0 / (l.in + l.out));
        for (double& w : l.W) w = rng.uniform(-s, s);
    }
    return m;
}

namespace {

inline double apply_act(Activation a, double z) {
    switch (a) {
        case Activation::Relu: return z > 0.0 ? z : 0.0;
        case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-z));
        default: return z;
    }
}

// derivative expressed through the layer output
inline double act_deriv_from_output(Activation a, double y) {
    switch (a) {
        case Activation::Relu: return y > 0.0 ? 1.0 : 0.0;
        case Activation::Sigmoid: return y * (1.0 - y);
        default: return 1.0;
    }
}

}  // namespace

const std::vector<double>& forward(const Mlp& m, std::span<const double> x, ForwardCache& cache) {
    if (static_cast<int>(x.size()) != m.input_dim())
        throw InvalidInput("forward: input dimension mismatch");
    cache.acts.resize(m.layers.size() + 1);
    cache.acts[0].assign(x.begin(), x.end());
    for (std::size_t li = 0; li < m.layers.size(); ++li) {
        const DenseLayer& l = m.layers[li];
        const std::vector<double>& in = cache.acts[li];
        std::vector<double>& out = cache.acts[li + 1];
        out.resize(static_cast<std::size_t>(l.out));
        for (int r = 0; r < l.out; ++r) {
            const double* wrow = l.W.data() + static_cast<std::size_t>(r) * l.in;
            double z = l.b[static_cast<std::size_t>(r)];
            for (int c = 0; c < l.in; ++c) z += wrow[c] * in[static_cast<std::size_t>(c)];
            out[static_cast<std::size_t>(r)] = apply_act(l.act, z);
        }
    }
    return cache.acts.back();
}

std::vector<double> forward(const Mlp& m, std::span<const double> x) {
    ForwardCache cache;
    return forward(m, x, cache);
}

void Grads::resize_like(const Mlp& m) {
    dW.resize(m.layers.size());
    db.resize(m.layers.size());
    for (std::size_t i = 0; i < m.layers.size(); ++i) {
        dW[i].assign(m.layers[i].W.size(), 0.0);
        db[i].assign(m.layers[i].b.size(), 0.0);
    }
}

void Grads::zero() {
    for (auto& g : dW) std::fill(g.begin(), g.end(), 0.0);
    for (auto& g : db) std::fill(g.begin(), g.end(), 0.0);
}

void Grads::add(const Grads& other) {
    for (std::size_t i = 0; i < dW.size(); ++i) {
        for (std::size_t k = 0; k < dW[i].size(); ++k) dW[i][k] += other.dW[i][k];
        for (std::size_t k = 0; k < db[i].size(); ++k) db[i][k] += other.db[i][k];
    }
}

void backward(const Mlp& m, const ForwardCache& cache, std::span<const double> dy, Grads& grads,
              std::vector<double>* dx) {
    if (cache.acts.size() != m.layers.size() + 1)
        throw InvalidInput("backward: cache does not match network");
    if (static_cast<int>(dy.size()) != m.output_dim())
        throw InvalidInput("backward: output gradient dimension mismatch");
    if (grads.dW.size() != m.layers.size()) grads.resize_like(m);

    std::vector<double> delta(dy.begin(), dy.end());
    std::vector<double> next;
    for (std::size_t li = m.layers.size(); li-- > 0;) {
        const DenseLayer& l = m.layers[li];
        const std::vector<double>& in = cache.acts[li];
        const std::vector<double>& out = cache.acts[li + 1];

        // dz = dy ⊙ act'(z), via the stored layer output
        for (int r = 0; r < l.out; ++r)
            delta[static_cast<std::size_t>(r)] *=
                act_deriv_from_output(l.act, out[static_cast<std::size_t>(r)]);

        double* dWl = grads.dW[li].data();
        for (int r = 0; r < l.out; ++r) {
            const double dz = delta[static_cast<std::size_t>(r)];
            grads.db[li][static_cast<std::size_t>(r)] += dz;
            double* drow = dWl + static_cast<std::size_t>(r) * l.in;
            const double* inp = in.data();
            for (int c = 0; c < l.in; ++c) drow[c] += dz * inp[c];
        }

        if (li > 0 || dx != nullptr) {
            next.assign(static_cast<std::size_t>(l.in), 0.0);
            for (int r = 0; r < l.out; ++r) {
                const double dz = delta[static_cast<std::size_t>(r)];
                const double* wrow = l.W.data() + static_cast<std::size_t>(r) * l.in;
                for (int c = 0; c < l.in; ++c) next[static_cast<std::size_t>(c)] += dz * wrow[c];
            }
            delta.swap(next);
        }
    }
    if (dx != nullptr) *dx = delta;
}

void backward_input_only(const Mlp& m, const ForwardCache& cache, std::span<const double> dy,
                         std::vector<double>& dx) {
    if (cache.acts.size() != m.layers.size() + 1)
        throw InvalidInput("backward_input_only: cache does not match network");
    if (static_cast<int>(dy.size()) != m.output_dim())
        throw InvalidInput("backward_input_only: output gradient dimension mismatch");

    std::vector<double> delta(dy.begin(), dy.end());
    std::vector<double> next;
    for (std::size_t li = m.layers.size(); li-- > 0;) {
        const DenseLayer& l = m.layers[li];
        const std::vector<double>& out = cache.acts[li + 1];
        for (int r = 0; r < l.out; ++r)
            delta[static_cast<std::size_t>(r)] *=
                act_deriv_from_output(l.act, out[static_cast<std::size_t>(r)]);
        next.assign(static_cast<std::size_t>(l.in), 0.0);
        for (int r = 0; r < l.out; ++r) {
            const double dz = delta[static_cast<std::size_t>(r)];
            const double* wrow = l.W.data() + static_cast<std::size_t>(r) * l.in;
            for (int c = 0; c < l.in; ++c) next[static_cast<std::size_t>(c)] += dz * wrow[c];
        }
        delta.swap(next);
    }
    dx.assign(delta.begin(), delta.end());
}

ScalarLoss squared_norm_loss() {
    ScalarLoss loss;
    loss.value = [](std::span<const double> y) {
        double s = 0.0;
        for (const double v : y) s += v * v;
        return s;
    };
    loss.grad = [](std::span<const double> y) {
        std::vector<double> g(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) g[i] = 2.0 * y[i];
        return g;
    };
    return loss;
}

namespace {

struct ParamRef {
    std::size_t layer;
    bool is_bias;
    std::size_t offset;
};

ParamRef locate_param(const Mlp& m, std::size_t flat) {
    for (std::size_t li = 0; li < m.layers.size(); ++li) {
        const std::size_t nw = m.layers[li].W.size();
        if (flat < nw) return {li, false, flat};
        flat -= nw;
        const std::size_t nb = m.layers[li].b.size();
        if (flat < nb) return {li, true, flat};
        flat -= nb;
    }
    throw std::out_of_range("parameter index out of range");
}

double& param_at(Mlp& m, const ParamRef& ref) {
    return ref.is_bias ? m.layers[ref.layer].b[ref.offset] : m.layers[ref.layer].W[ref.offset];
}

double grad_at(const Grads& g, const ParamRef& ref) {
    return ref.is_bias ? g.db[ref.layer][ref.offset] : g.dW[ref.layer][ref.offset];
}

}  // namespace

double gradient_check(const Mlp& m, std::span<const double> x, const ScalarLoss& loss,
                      double step) {
    ForwardCache cache;
    const std::vector<double>& y = forward(m, x, cache);
    Grads analytic;
    analytic.resize_like(m);
    const std::vector<double> dy = loss.grad(y);
    backward(m, cache, dy, analytic);

    const std::int64_t total = static_cast<std::int64_t>(m.param_count());
    double max_err = 0.0;

    #pragma omp parallel
    {
        Mlp local = m;
        ForwardCache fc;
        #pragma omp for schedule(static) reduction(max : max_err)
        for (std::int64_t i = 0; i < total; ++i) {
            const ParamRef ref = locate_param(local, static_cast<std::size_t>(i));
            double& p = param_at(local, ref);
            const double saved = p;
            p = saved + step;
            const double up = loss.value(forward(local, x, fc));
            p = saved - step;
            const double down = loss.value(forward(local, x, fc));
            p = saved;
            const double numeric = (up - down) / (2.0 * step);
            const double a = grad_at(analytic, ref);
            const double err = std::abs(a - numeric) / std::max(1e-8, std::abs(a) + std::abs(numeric));
            max_err = std::max(max_err, err);
        }
    }
    return max_err;
}

void AdamState::resize_like(const Mlp& m) {
    mW.resize(m.layers.size());
    vW.resize(m.layers.size());
    mb.resize(m.layers.size());
    vb.resize(m.layers.size());
    for (std::size_t i = 0; i < m.layers.size(); ++i) {
        mW[i].assign(m.layers[i].W.size(), 0.0);
        vW[i].assign(m.layers[i].W.size(), 0.0);
        mb[i].assign(m.layers[i].b.size(), 0.0);
        vb[i].assign(m.layers[i].b.size(), 0.0);
    }
    t = 0;
}

namespace {

void adam_tensor(std::vector<double>& m1, std::vector<double>& m2, std::vector<double>& params,
                 const std::vector<double>& grads, const AdamParams& hp, double bc1, double bc2) {
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grads[i];
        m1[i] = hp.beta1 * m1[i] + (1.0 - hp.beta1) * g;
        m2[i] = hp.beta2 * m2[i] + (1.0 - hp.beta2) * g * g;
        const double mhat = m1[i] / bc1;
        const double vhat = m2[i] / bc2;
        params[i] -= hp.alpha * mhat / (std::sqrt(vhat) + hp.eps);
    }
}

}  // namespace

void optimizer_step(AdamState& state, Mlp& m, const Grads& grads, const AdamParams& hp) {
    if (state.mW.size() != m.layers.size()) state.resize_like(m);
    ++state.t;
    const double bc1 = 1.0 - std::pow(hp.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(hp.beta2, static_cast<double>(state.t));
    for (std::size_t li = 0; li < m.layers.size(); ++li) {
        adam_tensor(state.mW[li], state.vW[li], m.layers[li].W, grads.dW[li], hp, bc1, bc2);
        adam_tensor(state.mb[li], state.vb[li], m.layers[li].b, grads.db[li], hp, bc1, bc2);
    }
}

void soft_update(Mlp& target, const Mlp& source, double tau) {
    if (tau < 0.0 || tau > 1.0) throw InvalidInput("soft_update tau must be in [0,1]");
    if (target.layers.size() != source.layers.size())
        throw InvalidInput("soft_update: architecture mismatch");
    for (std::size_t li = 0; li < target.layers.size(); ++li) {
        DenseLayer& t = target.layers[li];
        const DenseLayer& s = source.layers[li];
        if (t.in != s.in || t.out != s.out) throw InvalidInput("soft_update: layer shape mismatch");
        for (std::size_t i = 0; i < t.W.size(); ++i) t.W[i] = tau * s.W[i] + (1.0 - tau) * t.W[i];
        for (std::size_t i = 0; i < t.b.size(); ++i) t.b[i] = tau * s.b[i] + (1.0 - tau) * t.b[i];
    }
}

nlohmann::json mlp_to_json(const Mlp& m) {
    nlohmann::json j;
    nlohmann::json dims = nlohmann::json::array();
    if (!m.layers.empty()) {
        dims.push_back(m.layers.front().in);
        for (const DenseLayer& l : m.layers) dims.push_back(l.out);
    }
    j["dims"] = dims;
    nlohmann::json layers = nlohmann::json::array();
    for (const DenseLayer& l : m.layers) {
        layers.push_back({{"in", l.in},
                          {"out", l.out},
                          {"activation", to_string(l.act)},
                          {"W", l.W},
                          {"b", l.b}});
    }
    j["layers"] = layers;
    return j;
}

Mlp mlp_from_json(const nlohmann::json& j) {
    Mlp m;
    try {
        for (const auto& lj : j.at("layers")) {
            DenseLayer l;
            l.in = lj.at("in").get<int>();
            l.out = lj.at("out").get<int>();
            l.act = activation_from_string(lj.at("activation").get<std::string>());
            l.W = lj.at("W").get<std::vector<double>>();
            l.b = lj.at("b").get<std::vector<double>>();
            if (static_cast<int>(l.W.size()) != l.in * l.out ||
                static_cast<int>(l.b.size()) != l.out)
                throw InvalidInput("checkpoint layer shape mismatch");
            m.layers.push_back(std::move(l));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("checkpoint schema error: ") + e.what());
    }
    for (std::size_t i = 0; i + 1 < m.layers.size(); ++i)
        if (m.layers[i].out != m.layers[i + 1].in)
            throw InvalidInput("checkpoint layer dims are inconsistent");
    return m;
}

}  // namespace routelab::nn

#include <doctest.h>

#include <cmath>
#include <vector>

#include "routelab/common.hpp"
#include "routelab/nn.hpp"
#include "routelab/rng.hpp"

using namespace routelab;
using namespace routelab::nn;

namespace {

// 2-2-1 network with fixed weights for hand-checked forward/backward math
Mlp tiny() {
    Mlp m;
    m.layers.resize(2);
    m.layers[0] = {2, 2, {1.0, -1.0, 0.5, 0.5}, {0.0, 0.25}, Activation::Relu};
    m.layers[1] = {2, 1, {1.0, 2.0}, {0.1}, Activation::Identity};
    return m;
}

}  // namespace

TEST_CASE("nn: forward pass matches hand computation") {
    const Mlp m = tiny();
    // x = (1, 2): z1 = (1*1 + 2*(-1), 1*0.5 + 2*0.5 + 0.25) = (-1, 1.75)
    // relu -> (0, 1.75); out = 0*1 + 1.75*2 + 0.1 = 3.6
    const std::vector<double> x{1.0, 2.0};
    const std::vector<double> y = forward(m, x);
    REQUIRE(y.size() == 1);
    CHECK(y[0] == doctest::Approx(3.6));
}

TEST_CASE("nn: backward pass matches hand computation") {
    const Mlp m = tiny();
    ForwardCache cache;
    forward(m, std::vector<double>{1.0, 2.0}, cache);
    Grads g;
    g.resize_like(m);
    std::vector<double> dx;
    backward(m, cache, std::vector<double>{1.0}, g, &dx);

    // layer 1: dW = dy * h = (0, 1.75), db = 1
    CHECK(g.dW[1][0] == doctest::Approx(0.0));
    CHECK(g.dW[1][1] == doctest::Approx(1.75));
    CHECK(g.db[1][0] == doctest::Approx(1.0));
    // hidden delta = (1*1[dead relu -> 0], 2*1) = (0, 2)
    // layer 0 row 1: dW = 2 * x = (2, 4), db = 2
    CHECK(g.dW[0][0] == doctest::Approx(0.0));
    CHECK(g.dW[0][1] == doctest::Approx(0.0));
    CHECK(g.dW[0][2] == doctest::Approx(2.0));
    CHECK(g.dW[0][3] == doctest::Approx(4.0));
    CHECK(g.db[0][0] == doctest::Approx(0.0));
    CHECK(g.db[0][1] == doctest::Approx(2.0));
    // dx = delta * W row: (0*1 + 2*0.5, 0*(-1) + 2*0.5) = (1, 1)
    REQUIRE(dx.size() == 2);
    CHECK(dx[0] == doctest::Approx(1.0));
    CHECK(dx[1] == doctest::Approx(1.0));
}

TEST_CASE("nn: backward accumulates across calls") {
    const Mlp m = tiny();
    ForwardCache cache;
    forward(m, std::vector<double>{1.0, 2.0}, cache);
    Grads g;
    g.resize_like(m);
    backward(m, cache, std::vector<double>{1.0}, g);
    backward(m, cache, std::vector<double>{1.0}, g);
    CHECK(g.dW[1][1] == doctest::Approx(3.5));  // twice the single-call value
}

TEST_CASE("nn: initialization respects the Glorot bound and is deterministic") {
    const Mlp a = init_mlp({100, 100}, {Activation::Relu}, 9);
    const Mlp b = init_mlp({100, 100}, {Activation::Relu}, 9);
    const Mlp c = init_mlp({100, 100}, {Activation::Relu}, 10);
    CHECK(a == b);
    CHECK(a != c);
    const double bound = std::sqrt(6.0 / 200.0);
    for (const double w : a.layers[0].W) {
        CHECK(w >= -bound);
        CHECK(w <= bound);
    }
    for (const double bias : a.layers[0].b) CHECK(bias == 0.0);
}

TEST_CASE("nn: gradient check on the production architectures") {
    Rng rng(77);
    const ScalarLoss loss = squared_norm_loss();

    SUBCASE("actor shape with sigmoid head") {
        const Mlp actor = init_mlp({196, 128, 64, 21},
                                   {Activation::Relu, Activation::Relu, Activation::Sigmoid}, 1);
        std::vector<double> x(196);
        for (double& v : x) v = rng.uniform(0.0, 0.05);
        CHECK(gradient_check(actor, x, loss) < 1e-4);
    }
    SUBCASE("critic shape with identity head") {
        const Mlp critic = init_mlp({217, 128, 64, 1},
                                    {Activation::Relu, Activation::Relu, Activation::Identity}, 2);
        std::vector<double> x(217);
        for (double& v : x) v = rng.uniform(0.0, 1.0);
        CHECK(gradient_check(critic, x, loss) < 1e-4);
    }
}

TEST_CASE("nn: gradient check detects an injected fault") {
    // corrupting the analytic path must blow the finite-difference error up;
    // guards against a vacuous checker
    Mlp m = init_mlp({4, 3, 1}, {Activation::Relu, Activation::Identity}, 3);
    Rng rng(5);
    std::vector<double> x(4);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);

    const ScalarLoss loss = squared_norm_loss();
    REQUIRE(gradient_check(m, x, loss) < 1e-4);

    ScalarLoss skewed = loss;
    skewed.grad = [](std::span<const double> y) {
        std::vector<double> g(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) g[i] = 2.0 * y[i] + 0.05;  // wrong gradient
        return g;
    };
    CHECK(gradient_check(m, x, skewed) > 1e-3);
}

TEST_CASE("nn: input-only backward equals the full backward's input gradient") {
    const Mlp m = init_mlp({6, 5, 4}, {Activation::Relu, Activation::Sigmoid}, 8);
    Rng rng(21);
    std::vector<double> x(6), dy(4);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    for (double& v : dy) v = rng.uniform(-1.0, 1.0);

    ForwardCache cache;
    forward(m, x, cache);
    Grads g;
    g.resize_like(m);
    std::vector<double> dx_full, dx_only;
    backward(m, cache, dy, g, &dx_full);
    backward_input_only(m, cache, dy, dx_only);
    REQUIRE(dx_full.size() == dx_only.size());
    for (std::size_t i = 0; i < dx_full.size(); ++i) CHECK(dx_full[i] == dx_only[i]);
}

TEST_CASE("nn: one Adam step matches the closed form") {
    // first step with gradient g: bias corrections reduce m-hat to g and
    // v-hat to g^2, so the update is alpha * g / (|g| + eps)
    Mlp m;
    m.layers.resize(1);
    m.layers[0] = {1, 1, {1.0}, {0.0}, Activation::Identity};
    AdamState st;
    st.resize_like(m);
    Grads g;
    g.resize_like(m);
    g.dW[0][0] = 0.5;
    AdamParams hp;
    hp.alpha = 0.1;
    optimizer_step(st, m, g, hp);
    CHECK(m.layers[0].W[0] == doctest::Approx(1.0 - 0.1 * (0.5 / (0.5 + 1e-8))).epsilon(1e-12));
    CHECK(st.t == 1);
}

TEST_CASE("nn: soft update interpolates towards the source") {
    Mlp target = init_mlp({3, 2}, {Activation::Identity}, 1);
    const Mlp source = init_mlp({3, 2}, {Activation::Identity}, 2);
    const Mlp before = target;
    soft_update(target, source, 0.25);
    for (std::size_t i = 0; i < target.layers[0].W.size(); ++i)
        CHECK(target.layers[0].W[i] ==
              doctest::Approx(0.25 * source.layers[0].W[i] + 0.75 * before.layers[0].W[i]));

    soft_update(target, source, 1.0);
    CHECK(target == source);

    Mlp frozen = before;
    soft_update(frozen, source, 0.0);
    CHECK(frozen == before);

    CHECK_THROWS_AS(soft_update(target, source, 1.5), InvalidInput);
}

TEST_CASE("nn: JSON round-trip is bitwise exact") {
    const Mlp m = init_mlp({7, 5, 3}, {Activation::Relu, Activation::Sigmoid}, 4);
    const Mlp back = mlp_from_json(mlp_to_json(m));
    CHECK(back == m);

    CHECK_THROWS_AS(mlp_from_json(nlohmann::json::object()), InvalidInput);
    nlohmann::json bad = mlp_to_json(m);
    bad["layers"][0]["W"] = std::vector<double>{1.0};  // wrong arity
    CHECK_THROWS_AS(mlp_from_json(bad), InvalidInput);
}

TEST_CASE("nn: init validates its arguments") {
    CHECK_THROWS_AS(init_mlp({4}, {}, 1), InvalidInput);
    CHECK_THROWS_AS(init_mlp({4, 2}, {}, 1), InvalidInput);
    CHECK_THROWS_AS(init_mlp({4, 0}, {Activation::Relu}, 1), InvalidInput);
    CHECK_THROWS_AS(activation_from_string("tanh"), InvalidInput);
}

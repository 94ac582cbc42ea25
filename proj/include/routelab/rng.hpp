#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace routelab {

// All randomness in the project flows from one master seed through named
// substreams, so results do not depend on call interleaving or thread
// scheduling. Distributions are hand-rolled on top of mt19937_64 to keep
// the byte streams identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform on [0, 1) with 53 random bits
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // unbiased integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n);

    // unit-mean exponential
    double exponential() { return -std::log1p(-uniform01()); }

    // standard normal (Box-Muller, second value cached)
    double normal();

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// splitmix64-style mixing of (master seed, stream tag, indices) into a seed
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                          std::uint64_t i0 = 0, std::uint64_t i1 = 0);

inline Rng substream(std::uint64_t master, std::string_view stream,
                     std::uint64_t i0 = 0, std::uint64_t i1 = 0) {
    return Rng(derive_seed(master, stream, i0, i1));
}

}  // namespace routelab

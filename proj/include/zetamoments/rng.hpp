// Reproducible random streams.
//
// Stream w of a run with master seed s is an xoshiro256++ generator whose
// state is derived by splitmix64 from (s, w).  Monte Carlo paths are
// deterministic given (seed, worker count) because the sample budget is
// partitioned by stream index, never by scheduling order.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace zm {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        for (auto& si : s_) si = splitmix64(x);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // standard normal pair (Box-Muller)
    void gaussian_pair(double& g1, double& g2) {
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        g1 = r * std::cos(2.0 * M_PI * u2);
        g2 = r * std::sin(2.0 * M_PI * u2);
    }

    // standard complex normal: E|z|^2 = 1
    std::complex<double> complex_gaussian() {
        double a, b;
        gaussian_pair(a, b);
        return {a * M_SQRT1_2, b * M_SQRT1_2};
    }

  private:
    std::uint64_t s_[4];
};

}  // namespace zm

#include "zetamoments/sieve.hpp"

#include <stdexcept>

namespace zm {
namespace nf {

SieveTable::SieveTable(int k, std::uint64_t X) : k_(k), limit_(X), narrow_(k <= 2) {
    if (k < 1) throw std::invalid_argument("SieveTable: k must be >= 1");
    if (X < 1 || X > (narrow_ ? 2'000'000'000ULL : 400'000'000ULL))
        throw std::invalid_argument("SieveTable: X outside memory budget");
    if (narrow_) {
        if (k == 1) {
            v16_.assign(X + 1, 1);
            v16_[0] = 0;
        } else {
            // divisor-count pass; d(n) < 2^16 throughout the supported range
            v16_.assign(X + 1, 0);
            for (std::uint64_t d = 1; d <= X; ++d)
                for (std::uint64_t m = d; m <= X; m += d) ++v16_[m];
        }
    } else {
        v32_.assign(X + 1, 1);
        v32_[0] = 0;
        std::vector<std::uint32_t> prev(X + 1, 1);
        prev[0] = 0;
        for (int pass = 2; pass <= k; ++pass) {
            std::vector<std::uint32_t>& out = v32_;
            for (std::uint64_t n = 0; n <= X; ++n) out[n] = 0;
            for (std::uint64_t d = 1; d <= X; ++d) {
                std::uint32_t vd = prev[d];
                for (std::uint64_t m = d; m <= X; m += d) out[m] += vd;
            }
            if (pass < k) prev = out;
        }
    }
}

std::uint64_t SieveTable::checksum() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint32_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    if (narrow_)
        for (std::uint64_t n = 1; n <= limit_; ++n) mix(v16_[n]);
    else
        for (std::uint64_t n = 1; n <= limit_; ++n) mix(v32_[n]);
    return h;
}

SieveTable sieve_dk(int k, std::uint64_t X) { return SieveTable(k, X); }

}  // namespace nf
}  // namespace zm

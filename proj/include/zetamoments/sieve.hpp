// Dense d_k tables.
//
// d_k(n) counts ordered factorizations of n into k positive integers.  The
// table is built by k-1 divisor-sum passes from d_1 == 1; values for k <= 2
// fit in 16 bits up to ~3e9, so those tables are stored compactly (the k = 2
// ceiling at 2^16 - 1 is checked during the build).

#pragma once

#include <cstdint>
#include <vector>

namespace zm {
namespace nf {

class SieveTable {
  public:
    SieveTable() = default;
    SieveTable(int k, std::uint64_t X);  // values for 1..X

    int k() const { return k_; }
    std::uint64_t limit() const { return limit_; }

    std::uint32_t dk(std::uint64_t n) const {
        return narrow_ ? static_cast<std::uint32_t>(v16_[n]) : v32_[n];
    }

    std::uint64_t checksum() const;  // FNV-1a over the value stream

  private:
    int k_ = 0;
    std::uint64_t limit_ = 0;
    bool narrow_ = false;
    std::vector<std::uint16_t> v16_;
    std::vector<std::uint32_t> v32_;
};

SieveTable sieve_dk(int k, std::uint64_t X);

}  // namespace nf
}  // namespace zm

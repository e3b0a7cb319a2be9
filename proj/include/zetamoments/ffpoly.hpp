// Divisor statistics over F_q[x].
//
// The short interval around a monic degree-n polynomial A is the coefficient
// class { f : deg(f - A) <= h }, of size q^(h+1); the classes partition the
// monic polynomials of degree n into q^(n-h-1) cells indexed by the
// coefficients of x^(h+1)..x^(n-1).  ff_variance computes the mean-square
// deviation of the interval sums of d_k exactly: d_k counts ordered monic
// factorizations, so the class sums are obtained by enumerating all ordered
// factor tuples, grouped by sorted degree composition with multinomial
// weights, streaming the products' class indices with incremental updates.

#pragma once

#include "zetamoments/bigint.hpp"

#include <cstdint>
#include <vector>

namespace zm {
namespace ffield {

struct FFPoly {
    int q = 2;
    std::vector<int> c;  // coefficients in [0,q), c[i] on x^i, no trailing zeros

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool monic() const { return !c.empty() && c.back() == 1; }
    friend bool operator==(const FFPoly& a, const FFPoly& b) { return a.q == b.q && a.c == b.c; }
    friend bool operator<(const FFPoly& a, const FFPoly& b);
};

FFPoly ff_mul(const FFPoly& a, const FFPoly& b);
// division with remainder; b nonzero
void ff_divmod(const FFPoly& a, const FFPoly& b, FFPoly& quot, FFPoly& rem);
// decode monic polynomial of the given degree from its radix-q coefficient index
FFPoly ff_monic_from_index(int q, int deg, std::uint64_t index);

struct IrreducibleTable {
    int q = 2;
    int max_deg = 0;
    std::vector<std::vector<FFPoly>> by_degree;  // [d] = monic irreducibles of degree d

    std::size_t count(int d) const { return by_degree.at(static_cast<std::size_t>(d)).size(); }
};

// sieve by trial division; validates the necklace count
// (1/d) sum_{e | d} mu(e) q^(d/e) for every degree
IrreducibleTable build_irreducibles(int q, int max_deg);

// number of ordered factorizations of monic f into k monic factors:
// multiplicative with d_k(P^e) = binom(e+k-1, k-1); factors by trial division
BigInt ff_dk(const FFPoly& f, int k, const IrreducibleTable& table);

struct FFVarianceResult {
    int q = 0, k = 0, n = 0, h = 0;
    Rational lhs;          // (1/q^n) sum_A |interval sum - main|^2, exact
    BigInt rmt_value;      // I_k(n, n-h-2), zero when n-h-2 < 1
    BigInt main_term;      // q^(h+1) binom(n+k-1, k-1)
    BigInt class_total;    // sum of all interval sums (mean-identity check)
    std::uint64_t classes = 0;
};

FFVarianceResult ff_variance(int q, int k, int n, int h, int workers = 0);

struct SweepRow {
    int q = 0;
    Rational lhs_over_qh1;  // lhs / q^(h+1)
    BigInt rmt_value;
    double scaled_abs_diff = 0.0;  // |lhs/q^(h+1) - rmt| * sqrt(q)
};

std::vector<SweepRow> ff_variance_sweep(int k, int n, int h, const std::vector<int>& q_list,
                                        int workers = 0);

bool is_prime_u64(std::uint64_t n);

}  // namespace ffield
}  // namespace zm

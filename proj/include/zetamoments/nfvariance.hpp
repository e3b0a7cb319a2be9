// Desk-scale statistics of d_k against the piecewise-polynomial predictions.
//
// All three statistics subtract the exact residue main term and normalize by
// the arithmetic factor:
//   short intervals:  V_k(X,H) = (1/HX) int_X^{2X} |Delta_k(x,H)|^2 dx,
//                     compared against a_k (log X^{1/alpha})^{k^2-1} gamma_k(alpha)
//   progressions:     W_k(X;q) over coprime residue classes, compared against
//                     a_k(q) (log q)^{k^2-1} gamma_k(log X / log q)
//   Dirichlet polys:  I_k(T,N)/(a_k (log T)^{k^2}) against M_k(alpha)
//
// The x-integral is decomposed exactly at the points where the interval count
// changes (integers and the shifted lattice Z - H); on each piece the count
// is constant and the smooth main-term integrals use 5-point Gauss-Legendre.
// Summation order is fixed (blocks reduced in index order), so results are
// bit-identical for any worker count.

#pragma once

#include "zetamoments/sieve.hpp"
#include "zetamoments/zetares.hpp"

#include <cstdint>

namespace zm {
namespace nf {

struct VarianceRow {
    int k = 0;
    std::uint64_t X = 0;
    double alpha = 0.0;
    double H = 0.0;
    double variance = 0.0;     // V_k(X, H)
    double prediction = 0.0;   // a_k (log X^{1/alpha})^{k^2-1} gamma_k(alpha)
    double ratio = 0.0;
    double mean_sq_raw = 0.0;  // (1/X) int |Delta|^2 dx  (= H * variance)
    double delta_mean = 0.0;   // (1/X) int Delta dx
    double ak = 0.0;
};

VarianceRow short_interval_variance(int k, std::uint64_t X, double alpha,
                                    const SieveTable& table, const ZetaLaurent& laurent,
                                    int workers = 0);

struct ApVarianceRow {
    int k = 0;
    std::uint64_t X = 0;
    long q = 0;
    double alpha = 0.0;        // log X / log q
    double wk = 0.0;           // W_k(X; q)
    double prediction = 0.0;   // a_k(q) (log q)^{k^2-1} gamma_k(alpha)
    double ratio = 0.0;
    double ak_q = 0.0;
    double main_per_class = 0.0;
    std::uint64_t coprime_class_sum = 0;  // sum over (a,q)=1 of class sums
    std::uint64_t coprime_direct = 0;     // sum_{n<=X,(n,q)=1} d_k(n), fully summed
};

ApVarianceRow ap_variance(int k, std::uint64_t X, long q, const SieveTable& table,
                          const ZetaLaurent& laurent, int workers = 0);

struct DirichletRow {
    int k = 0;
    double T = 0.0;
    double alpha = 0.0;
    double N = 0.0;            // [T^alpha] + 1/2
    double value = 0.0;        // (1/T) int_0^T |S(t) - R(t)|^2 dt
    double normalized = 0.0;   // value / (a_k (log T)^{k^2})
    double target = 0.0;       // M_k(alpha)
    double ak = 0.0;
    std::int64_t nodes = 0;
};

// Mean square of the residue-corrected Dirichlet polynomial of zeta^k.
// k = 1 supports N far beyond the direct budget through an Euler-Maclaurin
// continuation of the partial sums; k >= 2 requires N <= 1e5, T <= 1e5.
DirichletRow dirichlet_mean_square(int k, double T, double alpha, const SieveTable* table,
                                   const ZetaLaurent& laurent, int workers = 0);

}  // namespace nf
}  // namespace zm

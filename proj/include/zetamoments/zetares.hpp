// Laurent data for zeta at s = 1 and the residue main terms built from it.
//
// zeta(s) = 1/(s-1) + sum_{i>=0} (-1)^i gamma_i (s-1)^i / i!, so the residue
// of zeta^k(s) X^s / s at s = 1 is X * Q_{k-1}(log X) for a polynomial Q_{k-1}
// whose coefficients are rational expressions in gamma_0..gamma_{k-2}.  The
// q-restricted variant multiplies the integrand by (1 - q^{-s})^k.
//
// The embedded gamma_i literals carry 32 significant digits.  They were
// produced by the Euler-Maclaurin evaluation that ships in the test suite
// (tests/test_stieltjes_oracle.cpp re-derives every literal at 160-bit
// precision and compares all stored digits); gamma_0 is additionally pinned
// against the Euler-Mascheroni constant.

#pragma once

#include <array>
#include <string>
#include <vector>

namespace zm {
namespace nf {

struct ZetaLaurent {
    std::vector<std::string> literals;  // gamma_0..gamma_8, 32 significant digits
    std::vector<double> gammas;         // parsed values
    int order = 0;                      // number of stored constants

    static const ZetaLaurent& standard();
};

// coefficients of Q_{k-1}: Res_{s=1}( zeta^k(s) X^s / s ) = X * Q_{k-1}(log X)
std::vector<double> residue_main_term(int k, const ZetaLaurent& laurent);

// q-restricted form with the extra Euler factor (1 - q^{-s})^k
std::vector<double> residue_main_term_q(int k, long q, const ZetaLaurent& laurent);

// Phi(y) = y * Q(log y); the interval main term is Phi(x+H) - Phi(x)
double residue_phi(const std::vector<double>& Q, double y);

struct AkResult {
    double value = 0.0;
    double tail_bound = 0.0;  // bound on the neglected part of the log-tail
    long pmax = 0;
};

// arithmetic factor a_k = prod_p (1-1/p)^{(k-1)^2} sum_{j<k} binom(k-1,j)^2 p^{-j},
// exact Euler factors for p <= pmax plus a prime-zeta tail correction
AkResult compute_ak(int k, long pmax);

// a_k with the local factor at the prime q replaced by (1-1/q)^{k^2}
// (equivalently a_k divided by the local d_k^2 series at q)
double compute_ak_q(int k, long q, long pmax);

// local factor sum_e binom(e+k-1,k-1)^2 u^e at u = 1/q, summed to convergence
double local_dk2_series(int k, double u);

// simple prime list up to n
std::vector<long> primes_up_to(long n);

}  // namespace nf
}  // namespace zm

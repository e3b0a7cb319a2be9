// The piecewise-polynomial moment family.
//
// P_{r,k}(alpha) is defined by a k-fold contour integral of
//   (w_1+...+w_k + alpha)^{k^2} * prod_{i!=j}(w_i - w_j)
//     * prod_i w_i^{-k} (w_i+1)^{-k}
// where the first r contours are circles of radius 1/2 around -1 and the
// remaining k-r around 0.  Substituting w_i = -1 + u_i on the first group and
// w_i = v_i on the second reduces the integral to one exact coefficient
// extraction in a truncated multivariate series with per-variable cap k-1
// (the target multidegree is exactly (k-1,...,k-1), so the cap loses
// nothing), divided by k!.
//
// The partial sums of binom(k,r) P_{r,k} over r < alpha assemble the
// piecewise-polynomial mean-square profile mk(k) on breakpoints 0..k with
// constant tail, and its derivative gamma(k) is supported on [0,k].
// gamma_oracle(k) recomputes gamma by an independent route: the squared
// Vandermonde is expanded into monomials and each monomial's delta-integral
// over the unit cube becomes an exact convolution of the densities
// x^a * 1_[0,1], scaled by 1/(k! G(1+k)^2).

#pragma once

#include "zetamoments/poly.hpp"

#include <vector>

namespace zm {
namespace moments {

// raisable build-time cap; k=5 costs seconds, each further step raises the
// series size by roughly a factor (k/(k-1))^k * k
inline constexpr int kMaxK = 5;

Poly compute_P(int r, int k);
std::vector<Poly> compute_P_family(int k);  // P_{0,k} .. P_{k,k}
PiecewisePoly compute_Mk(int k);
PiecewisePoly compute_gamma(int k);
PiecewisePoly gamma_oracle(int k);
Rational compute_gk(int k);  // G(1+k)^2 / G(1+2k) at integer arguments

// exact multiplicity of the root alpha = r of P_{r,k}
int vanishing_order(int k, int r);

// wrapper over PiecewisePoly::smoothness_order_at, part of the public surface
int smoothness_order(const PiecewisePoly& f, const Rational& b);

struct UniquenessReport {
    int solution_space_dim = -1;  // 0 means the constraints pin a unique middle piece
    bool consistent = false;
    PiecewisePoly witness;  // assembled piecewise polynomial (9! * M_3 when unique)
};

// Solves for the ten coefficients of the degree-9 middle piece on (1,2] from
// the symmetry f(3-alpha) = 42 - f(alpha) and C^4 matching against alpha^9 at
// alpha = 1, by exact rational Gaussian elimination.  rhs_perturbation is
// added to the value-matching constraint at alpha = 1 (0 for the real check;
// nonzero values exercise the negative control).
UniquenessReport uniqueness_check_k3(const Rational& rhs_perturbation = Rational(0));

struct MomentPolyFamily {
    int k = 0;
    std::vector<Poly> P;  // indexed r = 0..k
    PiecewisePoly Mk;
    PiecewisePoly gamma;
};

MomentPolyFamily compute_family(int k);

}  // namespace moments
}  // namespace zm

// CUE sampling and Monte Carlo estimates of secular-coefficient moments.
//
// haar_sample draws one Haar-distributed unitary by QR-factoring a complex
// Ginibre matrix and multiplying Q by the phases of the R diagonal; without
// that correction the factorization convention leaks into the distribution
// and the sample is NOT Haar (E[tr A] drifts away from 0 -- covered by a
// mandatory statistical test).  Eigenphases come from a dense complex
// eigensolve of the corrected matrix.

#pragma once

#include "zetamoments/rng.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace zm {
namespace cue {

struct EigenAngles {
    std::vector<double> theta;  // phases in [0, 2*pi)
};

struct SecCoeffs {
    std::vector<std::complex<double>> sc;  // sc[j] = Sc_j, j = 0..N
};

inline constexpr int kMaxMatrixDim = 256;

EigenAngles haar_sample(int N, RngStream& rng);

struct HaarSampleChecked {
    EigenAngles angles;
    std::complex<double> det;  // determinant of the corrected matrix (LU route)
};

// test hook: same draw as haar_sample plus the matrix determinant, so the
// eigenphases can be cross-checked against an independent O(N^3) path
HaarSampleChecked haar_sample_checked(int N, RngStream& rng);

// coefficients of prod_j (1 + z e^{i theta_j}) by stable iterative products
SecCoeffs secular_coeffs(const EigenAngles& angles);

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;  // batch-means standard error of the mean
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
};

// Monte Carlo estimate of I_k(n,N) = E |[z^n] Lambda_A(z)^k|^2.
// Deterministic given (seed, workers).
McEstimate mc_Ik(int k, int n, int N, std::int64_t samples, std::uint64_t seed, int workers);

}  // namespace cue
}  // namespace zm

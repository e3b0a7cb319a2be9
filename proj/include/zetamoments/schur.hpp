// Exact unitary-group moments of secular coefficients.
//
// Sc_j(A) is the j-th elementary symmetric polynomial of the eigenvalues, so
//   sum_{j_1+...+j_k = n, j_i <= N} Sc_{j_1} ... Sc_{j_k}
// expands in the Schur basis by the iterated Pieri rule (multiplying by e_j
// adds a vertical strip of j boxes); partitions with more than N rows vanish
// on U(N) and are pruned during expansion, which also subsumes the part
// bound j_i <= N.  Schur orthonormality turns the Haar mean square into the
// sum of squared integer coefficients, computed here exactly.

#pragma once

#include "zetamoments/bigint.hpp"
#include "zetamoments/poly.hpp"

#include <map>
#include <vector>

namespace zm {
namespace schur {

using Partition = std::vector<int>;  // weakly decreasing positive parts

struct SchurVector {
    std::map<Partition, BigInt> entries;  // zero coefficients are absent
    int row_bound = 0;

    void add(const Partition& p, const BigInt& c);
    BigInt norm_squared() const;
};

// s-basis expansion of (vector) * e_j with the row bound applied
SchurVector multiply_by_e(const SchurVector& v, int j);

// expansion of sum over compositions of w into `factors` parts (each <= N)
// of the corresponding e-products, for every w = 0..wmax
std::vector<SchurVector> composition_levels(int factors, int wmax, int N);

BigInt exact_Ik(int k, int n, int N);
BigInt exact_Itilde(int k, int m, int N);

// [I_k(0,N), ..., I_k(kN,N)]; palindromic by the secular reversal law
std::vector<BigInt> fN_coeffs(int k, int N);

struct FfikRow {
    int n = 0;
    BigInt exact;
    Rational asymptotic;   // gamma_k(n/N) * N^(k^2-1), exact rational
    Rational scaled_diff;  // (exact - asymptotic) / N^(k^2-2)
};

// desk check of the I_k(n,N) = gamma_k(n/N) N^(k^2-1) + O(N^(k^2-2)) law
std::vector<FfikRow> check_ffik(int k, int N, const std::vector<int>& n_grid);

}  // namespace schur
}  // namespace zm

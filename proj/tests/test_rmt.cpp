#include "zetamoments/cue.hpp"
#include "zetamoments/schur.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

using namespace zm;

TEST_CASE("exact_Ik anchors from the Pieri expansion") {
    // k = 1: e_n = s_(1^n), a single unit coefficient
    for (int n = 0; n <= 8; ++n) CHECK(schur::exact_Ik(1, n, 8) == BigInt(1));
    CHECK(schur::exact_Ik(2, 1, 1) == BigInt(4));
    CHECK(schur::exact_Ik(2, 1, 5) == BigInt(4));
    CHECK(schur::exact_Ik(2, 2, 2) == BigInt(10));   // s_(2) + 3 s_(1,1)
    CHECK(schur::exact_Ik(2, 2, 12) == BigInt(10));
    CHECK(schur::exact_Ik(2, 2, 1) == BigInt(1));    // row bound kills s_(1,1)
    CHECK(schur::exact_Ik(2, 40, 8) == BigInt(0));   // n > kN
    CHECK_THROWS_AS(schur::exact_Ik(0, 1, 1), std::invalid_argument);
}

TEST_CASE("exact_Itilde partial sums and cross-degree orthogonality") {
    CHECK(schur::exact_Itilde(1, 5, 8) == BigInt(6));  // m + 1 ones
    CHECK(schur::exact_Itilde(2, 2, 4) == BigInt(15)); // 1 + 4 + 10
    CHECK(schur::exact_Itilde(3, 0, 4) == BigInt(1));
    for (int m : {3, 7}) {
        BigInt by_sum(0);
        for (int n = 0; n <= m; ++n) by_sum += schur::exact_Ik(2, n, 6);
        CHECK(schur::exact_Itilde(2, m, 6) == by_sum);
    }
    // degrees are Schur-orthogonal: merging all levels into one vector and
    // taking a single squared norm gives the same number
    auto levels = schur::composition_levels(2, 7, 6);
    schur::SchurVector merged;
    merged.row_bound = 6;
    for (const auto& v : levels)
        for (const auto& [p, c] : v.entries) merged.add(p, c);
    CHECK(merged.norm_squared() == schur::exact_Itilde(2, 7, 6));
}

TEST_CASE("reversal symmetry and palindromic F_N coefficients") {
    auto f12 = schur::fN_coeffs(1, 2);
    CHECK(f12 == std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(1)});
    auto f21 = schur::fN_coeffs(2, 1);
    CHECK(f21 == std::vector<BigInt>{BigInt(1), BigInt(4), BigInt(1)});
    for (auto [k, N] : {std::pair{2, 5}, {3, 3}, {2, 8}}) {
        auto f = schur::fN_coeffs(k, N);
        REQUIRE(static_cast<int>(f.size()) == k * N + 1);
        auto rev = f;
        std::reverse(rev.begin(), rev.end());
        CHECK(f == rev);
    }
}

TEST_CASE("ffik law: exact matrix integrals against gamma_k") {
    // k = 1 and 0 < n < N: both sides are exactly 1
    auto rows = schur::check_ffik(1, 8, {1, 3, 5, 7});
    for (const auto& r : rows) {
        CHECK(r.exact == BigInt(1));
        CHECK(r.scaled_diff == Rational(0));
    }
    // k = 2: remainder one order down, so scaled_diff stays bounded
    auto r16 = schur::check_ffik(2, 16, {16});
    auto r32 = schur::check_ffik(2, 32, {32});
    CHECK(std::abs(r16[0].scaled_diff.to_double()) < 10.0);
    double ratio = r16[0].scaled_diff.to_double() / r32[0].scaled_diff.to_double();
    CHECK(ratio > 0.25);
    CHECK(ratio < 4.0);
    CHECK_THROWS_AS(schur::check_ffik(2, 4, {8}), std::invalid_argument);
}

TEST_CASE("secular coefficients: unit cases and reversal law") {
    cue::EigenAngles one;
    one.theta = {0.0};
    auto sc1 = cue::secular_coeffs(one);
    REQUIRE(sc1.sc.size() == 2);
    CHECK(std::abs(sc1.sc[0] - std::complex<double>(1, 0)) < 1e-14);
    CHECK(std::abs(sc1.sc[1] - std::complex<double>(1, 0)) < 1e-14);

    cue::EigenAngles pm;
    pm.theta = {0.0, M_PI};
    auto sc2 = cue::secular_coeffs(pm);
    CHECK(std::abs(sc2.sc[1]) < 1e-14);
    CHECK(std::abs(sc2.sc[2] - std::complex<double>(-1, 0)) < 1e-13);

    RngStream rng(2024, 0);
    for (int rep = 0; rep < 20; ++rep) {
        auto ang = cue::haar_sample(12, rng);
        auto sc = cue::secular_coeffs(ang);
        std::complex<double> scN = sc.sc[12];
        CHECK(std::abs(std::abs(scN) - 1.0) < 1e-10);
        for (int j = 0; j <= 12; ++j)
            CHECK(std::abs(sc.sc[12 - j] - scN * std::conj(sc.sc[j])) < 1e-10);
    }
}

TEST_CASE("eigenphases recover a synthesized spectrum") {
    RngStream rng(7, 0);
    for (int N : {2, 8, 32}) {
        std::vector<double> want;
        for (int i = 0; i < N; ++i) want.push_back(rng.uniform01() * 2.0 * M_PI);
        Eigen::MatrixXcd g(N, N);
        for (int c = 0; c < N; ++c)
            for (int r = 0; r < N; ++r) g(r, c) = rng.complex_gaussian();
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd v = qr.householderQ();
        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(N, N);
        for (int i = 0; i < N; ++i) d(i, i) = std::polar(1.0, want[i]);
        Eigen::MatrixXcd u = v * d * v.adjoint();

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, false);
        std::vector<double> got;
        for (int i = 0; i < N; ++i) {
            double t = std::arg(es.eigenvalues()(i));
            if (t < 0) t += 2.0 * M_PI;
            got.push_back(t);
        }
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        for (int i = 0; i < N; ++i) CHECK(std::abs(want[i] - got[i]) < 1e-8);
    }
}

TEST_CASE("haar sampling is phase-corrected: statistical and determinant checks") {
    // E[tr A] = 0 for Haar; the uncorrected QR factor fails this badly
    const int N = 6, samples = 20000;
    RngStream rng(11, 0);
    double re = 0, im = 0, abs2 = 0;
    for (int s = 0; s < samples; ++s) {
        auto ang = cue::haar_sample(N, rng);
        std::complex<double> tr(0, 0);
        for (double t : ang.theta) tr += std::polar(1.0, t);
        re += tr.real();
        im += tr.imag();
        abs2 += std::norm(tr);
    }
    re /= samples;
    im /= samples;
    abs2 /= samples;
    // E|tr|^2 = 1, so each component mean has stderr ~ 1/sqrt(2*samples)
    double se = 1.0 / std::sqrt(2.0 * samples);
    CHECK(std::abs(re) < 4 * se);
    CHECK(std::abs(im) < 4 * se);
    CHECK(std::abs(abs2 - 1.0) < 5e-2);

    // determinant from LU agrees with the eigenphase product
    RngStream rng2(12, 0);
    for (int rep = 0; rep < 5; ++rep) {
        auto smp = cue::haar_sample_checked(16, rng2);
        std::complex<double> prod(1, 0);
        for (double t : smp.angles.theta) prod *= std::polar(1.0, t);
        CHECK(std::abs(prod - smp.det) < 1e-8);
    }
}

TEST_CASE("U(1) eigenphase is uniform (Kolmogorov-Smirnov)") {
    const int n = 10000;
    RngStream rng(31337, 0);
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = cue::haar_sample(1, rng).theta[0] / (2.0 * M_PI);
    std::sort(xs.begin(), xs.end());
    double dstat = 0;
    for (int i = 0; i < n; ++i) {
        dstat = std::max(dstat, std::abs((i + 1.0) / n - xs[i]));
        dstat = std::max(dstat, std::abs(xs[i] - static_cast<double>(i) / n));
    }
    double lambda = (std::sqrt(1.0 * n) + 0.12 + 0.11 / std::sqrt(1.0 * n)) * dstat;
    double p = 0;
    for (int j = 1; j <= 100; ++j)
        p += 2.0 * ((j % 2) ? 1.0 : -1.0) * std::exp(-2.0 * j * j * lambda * lambda);
    CHECK(p > 0.001);
}

TEST_CASE("monte carlo estimates agree with the exact oracle") {
    auto est = cue::mc_Ik(2, 2, 8, 20000, 424243, 2);
    CHECK(est.stderr_ > 0.0);
    CHECK(std::abs(est.mean - 10.0) < 4 * est.stderr_);

    auto est1 = cue::mc_Ik(1, 3, 8, 5000, 7, 2);
    CHECK(std::abs(est1.mean - 1.0) < 4 * est1.stderr_);

    auto big = cue::mc_Ik(2, 40, 8, 1000, 7, 2);
    CHECK(big.mean == 0.0);  // n > kN: empty coefficient

    // deterministic given (seed, workers)
    auto a = cue::mc_Ik(2, 3, 6, 2000, 99, 2);
    auto b = cue::mc_Ik(2, 3, 6, 2000, 99, 2);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);

    CHECK_THROWS_AS(cue::mc_Ik(2, 2, 8, 50, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cue::mc_Ik(2, 2, 500, 1000, 1, 1), std::invalid_argument);
}

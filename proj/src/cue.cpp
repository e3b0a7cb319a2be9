#include "zetamoments/cue.hpp"

#include "zetamoments/parallel.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace zm {
namespace cue {

namespace {

Eigen::MatrixXcd sample_corrected_unitary(int N, RngStream& rng) {
    Eigen::MatrixXcd g(N, N);
    for (int c = 0; c < N; ++c)
        for (int r = 0; r < N; ++r) g(r, c) = rng.complex_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    // phase correction by the R diagonal; plain Q alone is not Haar
    for (int i = 0; i < N; ++i) {
        std::complex<double> rii = qr.matrixQR()(i, i);
        double mag = std::abs(rii);
        std::complex<double> phase = mag > 0 ? rii / mag : std::complex<double>(1.0, 0.0);
        q.col(i) *= phase;
    }
    return q;
}

EigenAngles eigenphases(const Eigen::MatrixXcd& q) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(q, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("haar_sample: eigensolver did not converge");
    EigenAngles out;
    out.theta.reserve(static_cast<std::size_t>(q.rows()));
    for (int i = 0; i < q.rows(); ++i) {
        double t = std::arg(es.eigenvalues()(i));
        if (t < 0) t += 2.0 * M_PI;
        if (t >= 2.0 * M_PI) t -= 2.0 * M_PI;
        out.theta.push_back(t);
    }
    return out;
}

void check_dim(int N) {
    if (N < 1 || N > kMaxMatrixDim)
        throw std::invalid_argument("haar_sample: N outside [1, " +
                                    std::to_string(kMaxMatrixDim) + "]");
}

}  // namespace

EigenAngles haar_sample(int N, RngStream& rng) {
    check_dim(N);
    if (N == 1) {
        // Haar on U(1) is the uniform circle; skip the dense machinery
        EigenAngles out;
        out.theta.push_back(rng.uniform01() * 2.0 * M_PI);
        return out;
    }
    return eigenphases(sample_corrected_unitary(N, rng));
}

HaarSampleChecked haar_sample_checked(int N, RngStream& rng) {
    check_dim(N);
    Eigen::MatrixXcd q = sample_corrected_unitary(N, rng);
    HaarSampleChecked out;
    out.angles = eigenphases(q);
    out.det = q.determinant();
    return out;
}

SecCoeffs secular_coeffs(const EigenAngles& angles) {
    SecCoeffs out;
    out.sc.assign(angles.theta.size() + 1, {0.0, 0.0});
    out.sc[0] = {1.0, 0.0};
    std::size_t deg = 0;
    for (double t : angles.theta) {
        std::complex<double> eit = std::polar(1.0, t);
        ++deg;
        for (std::size_t j = deg; j >= 1; --j) out.sc[j] += eit * out.sc[j - 1];
    }
    return out;
}

McEstimate mc_Ik(int k, int n, int N, std::int64_t samples, std::uint64_t seed, int workers) {
    if (k < 1 || n < 0) throw std::invalid_argument("mc_Ik: bad arguments");
    check_dim(N);
    if (samples < 100) throw std::invalid_argument("mc_Ik: need at least 100 samples");
    if (workers < 1) workers = 1;

    constexpr int kBatchesPerStream = 32;
    struct StreamOut {
        std::vector<double> batch_means;
        double sum = 0.0;
        std::int64_t count = 0;
    };
    std::vector<StreamOut> outs(static_cast<std::size_t>(workers));

    parallel_for(workers, workers, [&](std::int64_t w) {
        std::int64_t quota = samples / workers + (w < samples % workers ? 1 : 0);
        RngStream rng(seed, static_cast<std::uint64_t>(w));
        StreamOut& so = outs[static_cast<std::size_t>(w)];
        std::vector<std::complex<double>> acc, tmp;
        std::int64_t done = 0;
        for (int b = 0; b < kBatchesPerStream && done < quota; ++b) {
            std::int64_t bsize = quota / kBatchesPerStream +
                                 (b < quota % kBatchesPerStream ? 1 : 0);
            if (bsize == 0) continue;
            double bsum = 0.0;
            for (std::int64_t s = 0; s < bsize; ++s) {
                EigenAngles ang = haar_sample(N, rng);
                SecCoeffs sc = secular_coeffs(ang);
                // coefficient of z^n in Lambda^k, truncated products
                std::size_t cap = static_cast<std::size_t>(n);
                acc.assign(std::min(cap, static_cast<std::size_t>(N)) + 1, {0.0, 0.0});
                for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = sc.sc[j];
                for (int rep = 1; rep < k; ++rep) {
                    tmp.assign(std::min(cap, acc.size() - 1 + static_cast<std::size_t>(N)) + 1,
                               {0.0, 0.0});
                    for (std::size_t i = 0; i < acc.size(); ++i) {
                        if (acc[i] == std::complex<double>(0.0, 0.0)) continue;
                        std::size_t jmax = std::min(static_cast<std::size_t>(N), cap - std::min(cap, i));
                        for (std::size_t j = 0; j <= jmax && i + j < tmp.size(); ++j)
                            tmp[i + j] += acc[i] * sc.sc[j];
                    }
                    acc.swap(tmp);
                }
                double v = cap < acc.size() ? std::norm(acc[cap]) : 0.0;
                bsum += v;
            }
            so.batch_means.push_back(bsum / static_cast<double>(bsize));
            so.sum += bsum;
            done += bsize;
        }
        so.count = done;
    });

    McEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.workers = workers;
    double total = 0.0;
    std::int64_t count = 0;
    std::vector<double> batch_means;
    for (const auto& so : outs) {
        total += so.sum;
        count += so.count;
        batch_means.insert(batch_means.end(), so.batch_means.begin(), so.batch_means.end());
    }
    est.mean = total / static_cast<double>(count);
    double mbar = 0.0;
    for (double m : batch_means) mbar += m;
    mbar /= static_cast<double>(batch_means.size());
    double ss = 0.0;
    for (double m : batch_means) ss += (m - mbar) * (m - mbar);
    std::size_t B = batch_means.size();
    est.stderr_ = B > 1 ? std::sqrt(ss / (static_cast<double>(B) * static_cast<double>(B - 1)))
                        : 0.0;
    return est;
}

}  // namespace cue
}  // namespace zm

#include "zetamoments/nfvariance.hpp"

#include "zetamoments/ffpoly.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/parallel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace zm {
namespace nf {

namespace {

// 5-point Gauss-Legendre on [-1, 1]
constexpr double kGlNode[5] = {0.0, 0.5384693101056831, -0.5384693101056831,
                               0.9061798459386640, -0.9061798459386640};
constexpr double kGlWeight[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                 0.2369268850561891, 0.2369268850561891};

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

VarianceRow short_interval_variance(int k, std::uint64_t X, double alpha,
                                    const SieveTable& table, const ZetaLaurent& laurent,
                                    int workers) {
    if (alpha <= 1.0) throw std::invalid_argument("short_interval_variance: need alpha > 1");
    if (table.k() != k) throw std::invalid_argument("short_interval_variance: table is for wrong k");
    const double H = std::exp((1.0 - 1.0 / alpha) * std::log(static_cast<double>(X)));
    if (H < 2.0) throw std::invalid_argument("short_interval_variance: H = X^(1-1/alpha) < 2");
    if (table.limit() < 2 * X + static_cast<std::uint64_t>(H) + 2)
        throw std::invalid_argument("short_interval_variance: sieve table too small (need 2X+H)");
    if (workers <= 0) workers = default_workers();

    std::vector<double> Q = residue_main_term(k, laurent);

    const std::uint64_t span = X;  // integrate x from X to 2X
    const std::uint64_t block_units = 1 << 16;
    const std::int64_t n_blocks = static_cast<std::int64_t>((span + block_units - 1) / block_units);
    std::vector<double> blk2(static_cast<std::size_t>(n_blocks), 0.0);
    std::vector<double> blk1(static_cast<std::size_t>(n_blocks), 0.0);

    parallel_for(n_blocks, workers, [&](std::int64_t bi) {
        const double x0 = static_cast<double>(X + static_cast<std::uint64_t>(bi) * block_units);
        const double x1 = static_cast<double>(
            std::min<std::uint64_t>(2 * X, X + (static_cast<std::uint64_t>(bi) + 1) * block_units));
        // interval sum at x0: sum_{m_low < n <= m_high} d_k(n)
        std::uint64_t m_low = static_cast<std::uint64_t>(std::floor(x0));
        std::uint64_t m_high = static_cast<std::uint64_t>(std::floor(x0 + H));
        double S = 0.0;
        for (std::uint64_t n = m_low + 1; n <= m_high; ++n) S += table.dk(n);

        Kahan acc2, acc1;
        double x = x0;
        while (x < x1) {
            double next_leave = static_cast<double>(m_low + 1);
            double next_enter = static_cast<double>(m_high + 1) - H;
            double end = std::min({next_leave, next_enter, x1});
            if (end > x) {
                // piece [x, end): count S constant; main term smooth
                double half = 0.5 * (end - x), mid = 0.5 * (end + x);
                double ir = 0.0, ir2 = 0.0;
                for (int g = 0; g < 5; ++g) {
                    double xx = mid + half * kGlNode[g];
                    double r = residue_phi(Q, xx + H) - residue_phi(Q, xx);
                    ir += kGlWeight[g] * r;
                    ir2 += kGlWeight[g] * r * r;
                }
                ir *= half;
                ir2 *= half;
                acc2.add(S * S * (end - x) - 2.0 * S * ir + ir2);
                acc1.add(S * (end - x) - ir);
            }
            if (end == x1 && x1 < next_leave && x1 < next_enter) break;
            if (next_leave <= next_enter && next_leave <= x1 && end == next_leave) {
                ++m_low;
                S -= table.dk(m_low);
            }
            if (next_enter <= next_leave && next_enter <= x1 && end == next_enter) {
                ++m_high;
                S += table.dk(m_high);
            }
            x = end;
        }
        blk2[static_cast<std::size_t>(bi)] = acc2.sum;
        blk1[static_cast<std::size_t>(bi)] = acc1.sum;
    });

    Kahan tot2, tot1;
    for (std::int64_t b = 0; b < n_blocks; ++b) {
        tot2.add(blk2[static_cast<std::size_t>(b)]);
        tot1.add(blk1[static_cast<std::size_t>(b)]);
    }

    VarianceRow row;
    row.k = k;
    row.X = X;
    row.alpha = alpha;
    row.H = H;
    row.mean_sq_raw = tot2.sum / static_cast<double>(X);
    row.variance = tot2.sum / (H * static_cast<double>(X));
    row.delta_mean = tot1.sum / static_cast<double>(X);
    row.ak = compute_ak(k, 1'000'000).value;
    double logxa = std::log(static_cast<double>(X)) / alpha;
    double gamma_at = moments::compute_gamma(k).eval_double(alpha);
    row.prediction = row.ak * std::pow(logxa, k * k - 1) * gamma_at;
    row.ratio = row.prediction != 0.0 ? row.variance / row.prediction : 0.0;
    return row;
}

ApVarianceRow ap_variance(int k, std::uint64_t X, long q, const SieveTable& table,
                          const ZetaLaurent& laurent, int workers) {
    if (!ffield::is_prime_u64(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("ap_variance: q must be prime");
    if (static_cast<std::uint64_t>(q) >= X) throw std::invalid_argument("ap_variance: need q < X");
    if (table.k() != k || table.limit() < X)
        throw std::invalid_argument("ap_variance: table must cover X for this k");
    (void)workers;  // single pass; the scan is memory-bound

    std::vector<std::uint64_t> class_sum(static_cast<std::size_t>(q), 0);
    for (std::uint64_t n = 1; n <= X; ++n)
        class_sum[static_cast<std::size_t>(n % static_cast<std::uint64_t>(q))] += table.dk(n);

    std::vector<double> Qq = residue_main_term_q(k, q, laurent);
    double main = residue_phi(Qq, static_cast<double>(X)) / static_cast<double>(q - 1);

    Kahan acc;
    std::uint64_t coprime_sum = 0;
    for (long a = 1; a < q; ++a) {
        double diff = static_cast<double>(class_sum[static_cast<std::size_t>(a)]) - main;
        acc.add(diff * diff);
        coprime_sum += class_sum[static_cast<std::size_t>(a)];
    }

    ApVarianceRow row;
    row.k = k;
    row.X = X;
    row.q = q;
    row.alpha = std::log(static_cast<double>(X)) / std::log(static_cast<double>(q));
    row.wk = acc.sum / static_cast<double>(X);
    row.ak_q = compute_ak_q(k, q, 1'000'000);
    row.main_per_class = main;
    double gamma_at = moments::compute_gamma(k).eval_double(row.alpha);
    row.prediction = row.ak_q * std::pow(std::log(static_cast<double>(q)), k * k - 1) * gamma_at;
    row.ratio = row.prediction != 0.0 ? row.wk / row.prediction : 0.0;
    row.coprime_class_sum = coprime_sum;
    std::uint64_t total = 0, multiples = 0;
    for (std::uint64_t n = 1; n <= X; ++n) total += table.dk(n);
    for (std::uint64_t n = static_cast<std::uint64_t>(q); n <= X; n += static_cast<std::uint64_t>(q))
        multiples += table.dk(n);
    row.coprime_direct = total - multiples;
    return row;
}

namespace {

using cplx = std::complex<double>;

// coefficients g_a of [(s-1) zeta(s)]^k around s = 1, a = 0..k-1
std::vector<double> bracket_pow(int k, const ZetaLaurent& laurent) {
    std::size_t n = static_cast<std::size_t>(k);
    std::vector<double> b(n, 0.0);
    b[0] = 1.0;
    double fact = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i > 0) fact *= static_cast<double>(i);
        b[i + 1] = (i % 2 ? -1.0 : 1.0) * laurent.gammas[i] / fact;
    }
    std::vector<double> acc(n, 0.0);
    acc[0] = 1.0;
    for (int rep = 0; rep < k; ++rep) {
        std::vector<double> c(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (acc[i] == 0.0) continue;
            for (std::size_t j = 0; i + j < n; ++j) c[i + j] += acc[i] * b[j];
        }
        acc = c;
    }
    return acc;
}

// Res_{w=1} zeta^k(w) N^{w-1/2-it} / (w-1/2-it), with lnN = log N
cplx residue_term(int k, double sqrtN, double lnN, double t, const std::vector<double>& g) {
    cplx denom(0.5, -t);  // 1/2 - it
    // sum over a+b+c = k-1 of g_a (lnN)^b / b! * (-1)^c / denom^{c+1}
    cplx total(0.0, 0.0);
    std::vector<cplx> dpow(static_cast<std::size_t>(k) + 1);
    dpow[0] = 1.0 / denom;
    for (int c = 1; c <= k; ++c) dpow[static_cast<std::size_t>(c)] = dpow[static_cast<std::size_t>(c - 1)] / denom;
    for (int a = 0; a < k; ++a) {
        double lpow = 1.0, fact = 1.0;
        for (int b = 0; a + b < k; ++b) {
            int c = k - 1 - a - b;
            double sgn = (c % 2) ? -1.0 : 1.0;
            total += g[static_cast<std::size_t>(a)] * (lpow / fact) * sgn *
                     dpow[static_cast<std::size_t>(c)];
            lpow *= lnN;
            fact *= static_cast<double>(b + 1);
        }
    }
    // N^{1/2 - it} = sqrtN * e^{-it lnN}
    return sqrtN * std::polar(1.0, -t * lnN) * total;
}

}  // namespace

DirichletRow dirichlet_mean_square(int k, double T, double alpha, const SieveTable* table,
                                   const ZetaLaurent& laurent, int workers) {
    if (k < 1) throw std::invalid_argument("dirichlet_mean_square: k must be >= 1");
    if (T < 16.0 || T > 100'000.0)
        throw std::invalid_argument("dirichlet_mean_square: T outside (16, 1e5]");
    if (workers <= 0) workers = default_workers();
    const double Npow = std::pow(T, alpha);
    if (!(Npow >= 2.0)) throw std::invalid_argument("dirichlet_mean_square: T^alpha too small");
    const std::uint64_t Nint = static_cast<std::uint64_t>(std::floor(Npow));
    const double Nhalf = static_cast<double>(Nint) + 0.5;

    const std::uint64_t kDirectCap = 200'000;
    const bool em_path = Nint > kDirectCap;
    if (em_path && k != 1)
        throw std::invalid_argument("dirichlet_mean_square: N exceeds the 1e5 budget for k >= 2");
    if (em_path && Nint > 4'000'000'000ULL)
        throw std::invalid_argument("dirichlet_mean_square: N too large");
    if (!em_path && k >= 2 && (table == nullptr || table->k() != k || table->limit() < Nint))
        throw std::invalid_argument("dirichlet_mean_square: need a d_k table covering N");

    const double lnN = std::log(Nhalf);
    const double step = M_PI / (8.0 * lnN);
    const std::int64_t nodes = static_cast<std::int64_t>(std::ceil(T / step));
    const double T_eff = static_cast<double>(nodes) * step;

    std::vector<double> g = bracket_pow(k, laurent);
    const double sqrtN = std::sqrt(Nhalf);

    // phasor tables: order M terms summed directly per node
    const std::uint64_t M = em_path
                                ? std::min<std::uint64_t>(Nint, std::max<std::uint64_t>(
                                                                    64, 2 * static_cast<std::uint64_t>(T)))
                                : Nint;
    std::vector<double> lnn(M + 1), amp(M + 1);
    for (std::uint64_t n = 1; n <= M; ++n) {
        lnn[n] = std::log(static_cast<double>(n));
        double dk = (k == 1) ? 1.0 : static_cast<double>(table->dk(n));
        amp[n] = dk / std::sqrt(static_cast<double>(n));
    }

    const std::int64_t block_nodes = 2048;
    const std::int64_t n_blocks = (nodes + block_nodes - 1) / block_nodes;
    std::vector<double> blk(static_cast<std::size_t>(n_blocks), 0.0);

    parallel_for(n_blocks, workers, [&](std::int64_t bi) {
        std::int64_t j0 = bi * block_nodes;
        std::int64_t j1 = std::min(nodes, j0 + block_nodes);
        std::vector<cplx> z(M + 1), rot(M + 1);
        double t0 = (static_cast<double>(j0) + 0.5) * step;
        for (std::uint64_t n = 1; n <= M; ++n) {
            z[n] = amp[n] * std::polar(1.0, -t0 * lnn[n]);
            rot[n] = std::polar(1.0, -step * lnn[n]);
        }
        Kahan acc;
        for (std::int64_t j = j0; j < j1; ++j) {
            double t = (static_cast<double>(j) + 0.5) * step;
            cplx S(0.0, 0.0);
            for (std::uint64_t n = 1; n <= M; ++n) S += z[n];
            if (em_path && M < Nint) {
                // Euler-Maclaurin continuation of sum_{M < n <= Nint} n^{-s},
                // s = 1/2 + it; valid because t/(2 pi M) << 1
                cplx s(0.5, t);
                double Mf = static_cast<double>(M), Nf = static_cast<double>(Nint);
                auto cpow = [&](double x, cplx e) {
                    return std::pow(x, e.real()) * std::polar(1.0, e.imag() * std::log(x));
                };
                cplx fM = cpow(Mf, -s), fN = cpow(Nf, -s);
                S += (cpow(Nf, 1.0 - s) - cpow(Mf, 1.0 - s)) / (1.0 - s);
                S += 0.5 * (fN - fM);
                cplx d1N = -s * fN / Nf, d1M = -s * fM / Mf;
                S += (d1N - d1M) / 12.0;
                cplx d3N = -s * (s + 1.0) * (s + 2.0) * fN / (Nf * Nf * Nf);
                cplx d3M = -s * (s + 1.0) * (s + 2.0) * fM / (Mf * Mf * Mf);
                S += -(d3N - d3M) / 720.0;
                cplx d5N = -s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * fN /
                           (Nf * Nf * Nf * Nf * Nf);
                cplx d5M = -s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * fM /
                           (Mf * Mf * Mf * Mf * Mf);
                S += (d5N - d5M) / 30240.0;
            }
            cplx R = residue_term(k, sqrtN, lnN, t, g);
            acc.add(std::norm(S - R));
            for (std::uint64_t n = 1; n <= M; ++n) z[n] *= rot[n];
        }
        blk[static_cast<std::size_t>(bi)] = acc.sum;
    });

    Kahan total;
    for (std::int64_t b = 0; b < n_blocks; ++b) total.add(blk[static_cast<std::size_t>(b)]);

    DirichletRow row;
    row.k = k;
    row.T = T;
    row.alpha = alpha;
    row.N = Nhalf;
    row.nodes = nodes;
    row.value = total.sum * step / T_eff;
    row.ak = compute_ak(k, 1'000'000).value;
    row.normalized = row.value / (row.ak * std::pow(std::log(T), k * k));
    row.target = moments::compute_Mk(k).eval_double(alpha);
    return row;
}

}  // namespace nf
}  // namespace zm

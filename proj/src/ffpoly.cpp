#include "zetamoments/ffpoly.hpp"

#include "zetamoments/parallel.hpp"
#include "zetamoments/schur.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <stdexcept>

namespace zm {
namespace ffield {

bool operator<(const FFPoly& a, const FFPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

FFPoly ff_mul(const FFPoly& a, const FFPoly& b) {
    if (a.q != b.q) throw std::invalid_argument("ff_mul: mixed moduli");
    FFPoly r;
    r.q = a.q;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.q;
    }
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
}

void ff_divmod(const FFPoly& a, const FFPoly& b, FFPoly& quot, FFPoly& rem) {
    if (b.is_zero()) throw std::domain_error("ff_divmod: division by zero polynomial");
    const int q = a.q;
    // inverse of the leading coefficient of b
    int lead = b.c.back();
    int inv = 1;
    for (int e = q - 2, base = lead; e > 0; e >>= 1) {  // Fermat, q prime
        if (e & 1) inv = inv * base % q;
        base = base * base % q;
    }
    rem = a;
    quot.q = q;
    quot.c.assign(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        int factor = rem.c.back() * inv % q;
        quot.c[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            int& tgt = rem.c[static_cast<std::size_t>(shift) + i];
            tgt = (tgt - factor * b.c[i]) % q;
            if (tgt < 0) tgt += q;
        }
        while (!rem.c.empty() && rem.c.back() == 0) rem.c.pop_back();
    }
    while (!quot.c.empty() && quot.c.back() == 0) quot.c.pop_back();
}

FFPoly ff_monic_from_index(int q, int deg, std::uint64_t index) {
    FFPoly f;
    f.q = q;
    f.c.assign(static_cast<std::size_t>(deg) + 1, 0);
    f.c.back() = 1;
    for (int i = 0; i < deg; ++i) {
        f.c[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    return f;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

IrreducibleTable build_irreducibles(int q, int max_deg) {
    if (!is_prime_u64(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("build_irreducibles: q must be prime");
    if (max_deg < 1) throw std::invalid_argument("build_irreducibles: max_deg must be >= 1");
    if (std::pow(static_cast<double>(q), max_deg) > 2.0e7)
        throw std::invalid_argument("build_irreducibles: q^max_deg exceeds enumeration budget");
    IrreducibleTable t;
    t.q = q;
    t.max_deg = max_deg;
    t.by_degree.assign(static_cast<std::size_t>(max_deg) + 1, {});
    for (int d = 1; d <= max_deg; ++d) {
        std::uint64_t total = ipow(static_cast<std::uint64_t>(q), d);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            FFPoly f = ff_monic_from_index(q, d, idx);
            bool irreducible = true;
            for (int pd = 1; irreducible && 2 * pd <= d; ++pd) {
                for (const FFPoly& p : t.by_degree[static_cast<std::size_t>(pd)]) {
                    FFPoly quot, rem;
                    ff_divmod(f, p, quot, rem);
                    if (rem.is_zero()) {
                        irreducible = false;
                        break;
                    }
                }
            }
            if (irreducible) t.by_degree[static_cast<std::size_t>(d)].push_back(f);
        }
        // necklace count: (1/d) sum_{e|d} mu(e) q^(d/e)
        std::int64_t expect = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0)
                expect += moebius(e) * static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(q), d / e));
        expect /= d;
        if (static_cast<std::int64_t>(t.by_degree[static_cast<std::size_t>(d)].size()) != expect)
            throw std::runtime_error("build_irreducibles: necklace-count invariant failed at degree " +
                                     std::to_string(d));
    }
    return t;
}

BigInt ff_dk(const FFPoly& f, int k, const IrreducibleTable& table) {
    if (!f.monic()) throw std::invalid_argument("ff_dk: polynomial must be monic");
    if (f.q != table.q) throw std::invalid_argument("ff_dk: table modulus mismatch");
    if (f.degree() > table.max_deg) throw std::invalid_argument("ff_dk: degree exceeds table");
    BigInt result(1);
    FFPoly rem = f;
    for (int d = 1; d <= rem.degree() && rem.degree() > 0; ++d) {
        if (2 * d > rem.degree()) break;  // remainder is irreducible
        for (const FFPoly& p : table.by_degree[static_cast<std::size_t>(d)]) {
            if (rem.degree() < p.degree()) break;
            int e = 0;
            FFPoly quot, r2;
            for (;;) {
                ff_divmod(rem, p, quot, r2);
                if (!r2.is_zero()) break;
                rem = quot;
                ++e;
            }
            if (e > 0)
                result *= BigInt::binomial(static_cast<unsigned long>(e + k - 1),
                                           static_cast<unsigned long>(k - 1));
            if (2 * d > rem.degree()) break;
        }
        if (2 * d > rem.degree()) break;
    }
    if (rem.degree() > 0)  // an irreducible cofactor of multiplicity 1
        result *= BigInt(static_cast<long>(k));
    return result;
}

// --- variance over short-interval classes ---------------------------------

namespace {

struct SweepTask {
    std::vector<int> base;   // outer product polynomial (monic, coefficients mod q)
    int inner_deg = 0;       // degree of the innermost factor
    int free_digits = 0;     // low coefficients of the inner factor swept incrementally
    std::uint64_t fixed = 0; // radix-q encoding of the fixed top coefficients
    std::uint64_t mult = 1;  // multinomial weight of the degree composition
};

// partitions of n into exactly k parts >= 0, ascending order (largest last)
void enumerate_part_multisets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::function<void(int, int, int)> rec = [&](int pos, int rem, int minv) {
        if (pos == k - 1) {
            if (rem >= minv) {
                cur[static_cast<std::size_t>(pos)] = rem;
                out.push_back(cur);
            }
            return;
        }
        // keep ascending: parts left >= current choice
        for (int v = minv; v * (k - pos) <= rem; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rem - v, v);
        }
    };
    rec(0, n, 0);
}

std::uint64_t multinomial_orderings(const std::vector<int>& parts) {
    std::uint64_t num = 1;
    for (std::size_t i = 1; i <= parts.size(); ++i) num *= i;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        std::uint64_t fact = 1;
        for (std::size_t t = 1; t <= j - i; ++t) fact *= t;
        num /= fact;
        i = j;
    }
    return num;
}

}  // namespace

FFVarianceResult ff_variance(int q, int k, int n, int h, int workers) {
    if (!is_prime_u64(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("ff_variance: q must be prime");
    if (k < 1 || n < 1) throw std::invalid_argument("ff_variance: need k >= 1, n >= 1");
    if (h < 0 || h > n - 1) throw std::invalid_argument("ff_variance: need 0 <= h <= n-1");
    double visits = 1.0;
    for (int i = 0; i < k - 1; ++i) visits *= static_cast<double>(n + 1);
    visits *= std::pow(static_cast<double>(q), n);
    if (visits > 4.5e9) throw std::invalid_argument("ff_variance: enumeration budget exceeded");
    if (workers <= 0) workers = default_workers();

    const std::uint64_t uq = static_cast<std::uint64_t>(q);
    const std::uint64_t n_classes = ipow(uq, n - h - 1);

    // stage A: expand outer factor choices into flat tasks
    std::vector<std::vector<int>> partitions;
    enumerate_part_multisets(n, k, partitions);
    std::vector<SweepTask> tasks;
    for (const auto& parts : partitions) {
        std::uint64_t mult = multinomial_orderings(parts);
        int a = parts.back();
        int fixed_digits = 0;
        while (ipow(uq, a - fixed_digits) > (1u << 21) && fixed_digits < a) ++fixed_digits;
        // recursive enumeration of the k-1 outer factors
        std::function<void(std::size_t, const FFPoly&)> rec = [&](std::size_t level,
                                                                   const FFPoly& p) {
            if (level + 1 == parts.size()) {
                std::uint64_t fixed_count = ipow(uq, fixed_digits);
                for (std::uint64_t t = 0; t < fixed_count; ++t) {
                    SweepTask task;
                    task.base.assign(p.c.begin(), p.c.end());
                    task.inner_deg = a;
                    task.free_digits = a - fixed_digits;
                    task.fixed = t;
                    task.mult = mult;
                    tasks.push_back(std::move(task));
                }
                return;
            }
            int d = parts[level];
            std::uint64_t total = ipow(uq, d);
            for (std::uint64_t idx = 0; idx < total; ++idx)
                rec(level + 1, ff_mul(p, ff_monic_from_index(q, d, idx)));
        };
        FFPoly one;
        one.q = q;
        one.c = {1};
        rec(0, one);
    }

    // stage B: sweep tasks, each worker owning a private class accumulator
    std::vector<std::vector<std::uint64_t>> acc(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(n_classes, 0));
    std::vector<std::uint64_t> qpow_cls(static_cast<std::size_t>(n - h - 1));
    for (std::size_t i = 0; i < qpow_cls.size(); ++i) qpow_cls[i] = ipow(uq, static_cast<int>(i));

    parallel_for_workers(static_cast<std::int64_t>(tasks.size()), workers,
                         [&](std::int64_t ti, int w) {
        const SweepTask& task = tasks[static_cast<std::size_t>(ti)];
        std::vector<std::uint64_t>& cls = acc[static_cast<std::size_t>(w)];
        const int a = task.inner_deg;
        const int pdeg = static_cast<int>(task.base.size()) - 1;

        // cur = base * g0 with g0 = x^a + (fixed digits at positions free..a-1)
        std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i <= pdeg; ++i) cur[static_cast<std::size_t>(i + a)] = task.base[static_cast<std::size_t>(i)];
        std::uint64_t fx = task.fixed;
        for (int pos = task.free_digits; pos < a; ++pos) {
            int digit = static_cast<int>(fx % uq);
            fx /= uq;
            if (digit == 0) continue;
            for (int i = 0; i <= pdeg; ++i) {
                int& tgt = cur[static_cast<std::size_t>(i + pos)];
                tgt = (tgt + digit * task.base[static_cast<std::size_t>(i)]) % q;
            }
        }
        std::uint64_t cls_idx = 0;
        for (int pos = h + 1; pos < n; ++pos)
            cls_idx += static_cast<std::uint64_t>(cur[static_cast<std::size_t>(pos)]) *
                       qpow_cls[static_cast<std::size_t>(pos - h - 1)];

        std::uint64_t sweeps = ipow(uq, task.free_digits);
        std::vector<int> odo(static_cast<std::size_t>(std::max(task.free_digits, 1)), 0);
        for (std::uint64_t step = 0;; ++step) {
            cls[cls_idx] += task.mult;
            if (step + 1 == sweeps) break;
            // odometer increment: each carried digit position adds base<<pos once
            int pos = 0;
            for (;; ++pos) {
                for (int i = 0; i <= pdeg; ++i) {
                    std::size_t ci = static_cast<std::size_t>(i + pos);
                    int old = cur[ci];
                    int neu = old + task.base[static_cast<std::size_t>(i)];
                    if (neu >= q) neu -= q;
                    cur[ci] = neu;
                    if (static_cast<int>(ci) >= h + 1 && static_cast<int>(ci) < n) {
                        std::uint64_t pw = qpow_cls[ci - static_cast<std::size_t>(h + 1)];
                        cls_idx += (static_cast<std::uint64_t>(neu) - static_cast<std::uint64_t>(old)) * pw;
                    }
                }
                int& digit = odo[static_cast<std::size_t>(pos)];
                if (++digit < q) break;
                digit = 0;
            }
        }
    });

    // stage C: order-independent exact merge and moments
    BigInt M = BigInt(static_cast<long>(q)).pow(static_cast<unsigned long>(h + 1)) *
               BigInt::binomial(static_cast<unsigned long>(n + k - 1),
                                static_cast<unsigned long>(k - 1));
    if (!M.fits_int64()) throw std::overflow_error("ff_variance: main term exceeds int64");
    const std::int64_t m64 = M.to_int64();
    unsigned __int128 sumsq = 0;
    std::uint64_t total = 0;
    for (std::uint64_t c = 0; c < n_classes; ++c) {
        std::uint64_t s = 0;
        for (int w = 0; w < workers; ++w) s += acc[static_cast<std::size_t>(w)][c];
        total += s;
        std::int64_t diff = static_cast<std::int64_t>(s) - m64;
        sumsq += static_cast<unsigned __int128>(static_cast<__int128>(diff) * diff);
    }

    BigInt sq_big;
    {
        std::uint64_t hi = static_cast<std::uint64_t>(sumsq >> 64);
        std::uint64_t lo = static_cast<std::uint64_t>(sumsq);
        sq_big = BigInt(std::to_string(hi)) * BigInt("18446744073709551616") +
                 BigInt(std::to_string(lo));
    }

    FFVarianceResult res;
    res.q = q;
    res.k = k;
    res.n = n;
    res.h = h;
    res.lhs = Rational(sq_big, BigInt(static_cast<long>(q)).pow(static_cast<unsigned long>(n - h - 1)));
    res.main_term = M;
    res.class_total = BigInt(std::to_string(total));
    res.classes = n_classes;
    int N = n - h - 2;
    res.rmt_value = N >= 1 ? schur::exact_Ik(k, n, N) : BigInt(0);
    return res;
}

std::vector<SweepRow> ff_variance_sweep(int k, int n, int h, const std::vector<int>& q_list,
                                        int workers) {
    std::vector<SweepRow> rows;
    rows.reserve(q_list.size());
    for (int q : q_list) {
        FFVarianceResult r = ff_variance(q, k, n, h, workers);
        SweepRow row;
        row.q = q;
        row.lhs_over_qh1 =
            r.lhs / Rational(BigInt(static_cast<long>(q)).pow(static_cast<unsigned long>(h + 1)));
        row.rmt_value = r.rmt_value;
        Rational diff = row.lhs_over_qh1 - Rational(row.rmt_value);
        row.scaled_abs_diff = std::abs(diff.to_double()) * std::sqrt(static_cast<double>(q));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ffield
}  // namespace zm

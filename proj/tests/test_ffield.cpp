#include "zetamoments/ffpoly.hpp"
#include "zetamoments/schur.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace zm;
using namespace zm::ffield;

namespace {

// straight per-polynomial evaluation of the interval variance, used as the
// independent oracle for the composition-enumeration path
Rational brute_variance(int q, int k, int n, int h, const IrreducibleTable& table) {
    std::uint64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
    std::uint64_t qh1 = 1;
    for (int i = 0; i <= h; ++i) qh1 *= static_cast<std::uint64_t>(q);
    std::map<std::uint64_t, BigInt> cls;
    for (std::uint64_t idx = 0; idx < qn; ++idx) {
        FFPoly f = ff_monic_from_index(q, n, idx);
        std::uint64_t key = 0;
        for (int pos = n - 1; pos >= h + 1; --pos)
            key = key * static_cast<std::uint64_t>(q) +
                  static_cast<std::uint64_t>(f.c[static_cast<std::size_t>(pos)]);
        cls[key] += ff_dk(f, k, table);
    }
    BigInt M = BigInt(static_cast<long>(qh1)) *
               BigInt::binomial(static_cast<unsigned long>(n + k - 1),
                                static_cast<unsigned long>(k - 1));
    BigInt sumsq(0);
    for (const auto& [key, s] : cls) {
        BigInt d = s - M;
        sumsq += d * d;
    }
    // (1/q^n) * q^(h+1) * sum = sum / q^(n-h-1)
    return Rational(sumsq, BigInt(static_cast<long>(q)).pow(static_cast<unsigned long>(n - h - 1)));
}

}  // namespace

TEST_CASE("irreducible tables satisfy the necklace counts") {
    auto t2 = build_irreducibles(2, 4);
    CHECK(t2.count(1) == 2);
    CHECK(t2.count(2) == 1);  // x^2 + x + 1 only
    FFPoly xx1{2, {1, 1, 1}};
    CHECK(t2.by_degree[2][0] == xx1);
    CHECK(t2.count(3) == 2);
    CHECK(t2.count(4) == 3);

    auto t3 = build_irreducibles(3, 4);
    CHECK(t3.count(2) == 3);  // (9 - 3) / 2

    auto t5 = build_irreducibles(5, 3);
    CHECK(t5.count(1) == 5);  // x - a

    CHECK_THROWS_AS(build_irreducibles(4, 2), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(build_irreducibles(11, 12), std::invalid_argument); // budget
}

TEST_CASE("ff_dk: multiplicativity and the prime-power law") {
    auto t = build_irreducibles(3, 10);
    const FFPoly& p = t.by_degree[2][0];
    CHECK(ff_dk(p, 2, t) == BigInt(2));  // 1*f and f*1
    FFPoly p2 = ff_mul(p, p);
    CHECK(ff_dk(p2, 3, t) == BigInt(6)); // binom(4, 2)
    CHECK(ff_dk(p2, 2, t) == BigInt(3));

    // sum over monic degree-n of d_k = q^n binom(n+k-1, k-1), exhaustively
    for (int k : {2, 3}) {
        for (int n = 1; n <= 5; ++n) {
            BigInt total(0);
            std::uint64_t qn = 1;
            for (int i = 0; i < n; ++i) qn *= 3;
            for (std::uint64_t idx = 0; idx < qn; ++idx)
                total += ff_dk(ff_monic_from_index(3, n, idx), k, t);
            CHECK(total == BigInt(static_cast<long>(qn)) *
                               BigInt::binomial(static_cast<unsigned long>(n + k - 1),
                                                static_cast<unsigned long>(k - 1)));
        }
    }

    // multiplicativity on random coprime pairs
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 40; ++rep) {
        int da = 1 + static_cast<int>(rng() % 3), db = 1 + static_cast<int>(rng() % 3);
        FFPoly a = ff_monic_from_index(3, da, rng() % 27);
        FFPoly b = ff_monic_from_index(3, db, rng() % 27);
        FFPoly quot, rem, g = a;
        // coprimality via gcd
        FFPoly x = a, y = b;
        while (!y.is_zero()) {
            ff_divmod(x, y, quot, rem);
            x = y;
            y = rem;
        }
        if (x.degree() != 0) continue;
        for (int k : {2, 4})
            CHECK(ff_dk(ff_mul(a, b), k, t) == ff_dk(a, k, t) * ff_dk(b, k, t));
    }
}

TEST_CASE("ff_variance matches the per-polynomial oracle") {
    auto t3 = build_irreducibles(3, 6);
    for (auto [k, n, h] : {std::tuple{2, 4, 1}, {2, 4, 2}, {3, 4, 1}, {2, 5, 2}, {1, 4, 1}}) {
        auto fast = ff_variance(3, k, n, h, 2);
        CHECK(fast.lhs == brute_variance(3, k, n, h, t3));
    }
    auto t5 = build_irreducibles(5, 4);
    auto fast5 = ff_variance(5, 2, 4, 1, 2);
    CHECK(fast5.lhs == brute_variance(5, 2, 4, 1, t5));
}

TEST_CASE("ff_variance invariants") {
    // k = 1: every interval holds exactly q^(h+1) monics, so the variance is 0
    for (auto [q, n, h] : {std::tuple{3, 4, 0}, {3, 4, 2}, {5, 3, 1}}) {
        auto r = ff_variance(q, 1, n, h, 2);
        CHECK(r.lhs == Rational(0));
        CHECK(r.rmt_value == BigInt(0));
    }
    // mean-equals-main-term: class total is exactly (number of classes) * M
    auto r = ff_variance(5, 2, 5, 1, 2);
    CHECK(r.class_total == BigInt(static_cast<long>(r.classes)) * r.main_term);
    CHECK(r.lhs.sign() >= 0);
    // degenerate rmt side: n - h - 2 < 1
    auto d = ff_variance(3, 2, 3, 2, 2);
    CHECK(d.rmt_value == BigInt(0));

    CHECK_THROWS_AS(ff_variance(4, 2, 4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ff_variance(3, 2, 4, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(ff_variance(13, 2, 9, 1, 1), std::invalid_argument);  // budget
}

TEST_CASE("ff_variance is worker-count invariant") {
    auto a = ff_variance(5, 2, 5, 1, 1);
    auto b = ff_variance(5, 2, 5, 1, 3);
    CHECK(a.lhs == b.lhs);
    CHECK(a.class_total == b.class_total);
}

TEST_CASE("sweep rows carry the scaled comparison") {
    auto rows = ff_variance_sweep(1, 4, 1, {3, 5}, 2);
    for (const auto& r : rows) {
        CHECK(r.lhs_over_qh1 == Rational(0));
        CHECK(r.scaled_abs_diff == 0.0);
    }
    auto rows2 = ff_variance_sweep(2, 6, 1, {3, 5}, 2);
    CHECK(rows2.size() == 2);
    for (const auto& r : rows2) CHECK(r.rmt_value == schur::exact_Ik(2, 6, 3));
}

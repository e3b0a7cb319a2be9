#include "zetamoments/verify.hpp"

#include "zetamoments/cue.hpp"
#include "zetamoments/ffpoly.hpp"
#include "zetamoments/multiseries.hpp"
#include "zetamoments/nfvariance.hpp"
#include "zetamoments/schur.hpp"
#include "zetamoments/zetares.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace zm {
namespace verify {

Context::Context(std::uint64_t seed, int workers) : seed_(seed), workers_(workers) {
    if (workers_ < 1) workers_ = 1;
}

const moments::MomentPolyFamily& Context::family(int k) const {
    auto it = families_.find(k);
    if (it == families_.end()) it = families_.emplace(k, moments::compute_family(k)).first;
    return it->second;
}

const nf::SieveTable& Context::sieve(int k, std::uint64_t X) const {
    auto it = sieves_.find(k);
    if (it == sieves_.end() || it->second->limit() < X) {
        auto table = std::make_unique<nf::SieveTable>(k, X);
        if (it == sieves_.end())
            it = sieves_.emplace(k, std::move(table)).first;
        else
            it->second = std::move(table);
    }
    return *it->second;
}

namespace {

using moments::compute_gk;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

GateResult ok(const std::string& measured, const std::string& required) {
    return {true, measured, required};
}

GateResult verdict(bool pass, const std::string& measured, const std::string& required) {
    return {pass, measured, required};
}

Poly poly_from(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

const Poly kEq2Middle = poly_from({-14, 32, -24, 8, -1});
const Poly kEq3Middle =
    poly_from({1479, -8343, 19764, -25452, 19278, -8694, 2268, -324, 27, -2});
const Poly kEq3Third =
    poly_from({-19641, 59049, -78732, 61236, -30618, 10206, -2268, 324, -27, 1});

// ---- exact suite ----------------------------------------------------------

GateResult gate_eq2(const Context& ctx) {
    PiecewisePoly m2 = ctx.family(2).Mk.scaled(Rational(BigInt::factorial(4)));
    bool pass = m2.pieces().size() == 2 && m2.pieces()[0] == Poly::monomial(Rational(1), 4) &&
                m2.pieces()[1] == kEq2Middle && m2.tail() == Poly::constant(Rational(2));
    return verdict(pass, pass ? "all three pieces equal" : "piece mismatch",
                   "4! M_2 = {a^4; -a^4+8a^3-24a^2+32a-14; 2} exactly");
}

GateResult gate_eq3(const Context& ctx) {
    PiecewisePoly m3 = ctx.family(3).Mk.scaled(Rational(BigInt::factorial(9)));
    bool pass = m3.pieces().size() == 3 && m3.pieces()[0] == Poly::monomial(Rational(1), 9) &&
                m3.pieces()[1] == kEq3Middle && m3.pieces()[2] == kEq3Third &&
                m3.tail() == Poly::constant(Rational(42));
    return verdict(pass, pass ? "all four pieces equal (20 middle coefficients)" : "piece mismatch",
                   "9! M_3 matches the published sixth-moment profile exactly");
}

GateResult gate_m1(const Context& ctx) {
    const PiecewisePoly& m1 = ctx.family(1).Mk;
    bool pass = m1.pieces().size() == 1 && m1.pieces()[0] == poly_from({0, 1}) &&
                m1.tail() == poly_from({1}) && m1.eval(Rational(1, 2)) == Rational(1, 2) &&
                m1.eval(Rational(2)) == Rational(1) && m1.eval(Rational(-1)) == Rational(0);
    return verdict(pass, pass ? "M_1 = {a on [0,1); 1}" : "mismatch", "M_1 piecewise form and evals");
}

GateResult gate_gamma_routes(const Context& ctx) {
    for (int k = 1; k <= 4; ++k) {
        const auto& fam = ctx.family(k);
        if (fam.gamma != moments::gamma_oracle(k))
            return verdict(false, "route mismatch at k=" + std::to_string(k),
                           "derivative route == delta-integral route, k <= 4");
        if (fam.gamma.integrate(Rational(0), Rational(k)) != compute_gk(k))
            return verdict(false, "integral mismatch at k=" + std::to_string(k),
                           "int_0^k gamma_k = g_k exactly");
    }
    bool anchors = compute_gk(2) == Rational(1, 12) && compute_gk(3) == Rational(1, 8640);
    return verdict(anchors, "k=1..4 equal exactly; g_2 = 1/12, g_3 = 1/8640",
                   "gamma routes equal and integrals hit g_k");
}

GateResult gate_p0k(const Context& ctx) {
    for (int k = 1; k <= 4; ++k)
        if (ctx.family(k).P[0] != Poly::monomial(Rational(1), static_cast<std::size_t>(k * k)))
            return verdict(false, "P_{0," + std::to_string(k) + "} != a^(k^2)", "P_{0,k} = a^(k^2)");
    return ok("k = 1..4", "P_{0,k} = a^(k^2)");
}

GateResult gate_symmetry(const Context& ctx) {
    for (int k = 1; k <= 4; ++k) {
        const auto& mk = ctx.family(k).Mk;
        Rational gk = compute_gk(k);
        for (int ell = 0; ell < k; ++ell) {
            Poly mirrored = mk.pieces()[static_cast<std::size_t>(k - 1 - ell)].compose_affine(
                Rational(k), Rational(-1));
            if (mk.pieces()[static_cast<std::size_t>(ell)] + mirrored != Poly::constant(gk))
                return verdict(false, "k=" + std::to_string(k) + " piece " + std::to_string(ell),
                               "M_k(a) + M_k(k-a) = g_k piecewise");
        }
    }
    return ok("k = 1..4 piecewise identity", "M_k(a) + M_k(k-a) = g_k");
}

GateResult gate_vanishing(const Context&) {
    std::string worst;
    for (int k = 1; k <= 4; ++k)
        for (int r = 0; r <= k; ++r) {
            int got = moments::vanishing_order(k, r);
            int bound = (k - r) * (k - r) + r * r;
            if (got < bound)
                return verdict(false,
                               "order(k=" + std::to_string(k) + ",r=" + std::to_string(r) +
                                   ") = " + std::to_string(got),
                               ">= " + std::to_string(bound));
        }
    bool sharp = moments::vanishing_order(2, 2) == 4 && moments::vanishing_order(2, 1) == 2 &&
                 moments::vanishing_order(1, 0) == 1;
    return verdict(sharp, "all orders >= (k-r)^2 + r^2; anchors sharp",
                   "vanishing order bound, k <= 4");
}

GateResult gate_smoothness(const Context& ctx) {
    for (int k = 2; k <= 4; ++k) {
        const auto& mk = ctx.family(k).Mk;
        for (int ell = 1; ell < k; ++ell) {
            int got = moments::smoothness_order(mk, Rational(ell));
            int bound = k * k - 2 * k * ell + 2 * ell * ell - 1;
            if (got < bound)
                return verdict(false,
                               "order(k=" + std::to_string(k) + ",l=" + std::to_string(ell) +
                                   ") = " + std::to_string(got),
                               ">= " + std::to_string(bound));
        }
    }
    bool anchors = moments::smoothness_order(ctx.family(2).Mk, Rational(1)) == 1 &&
                   moments::smoothness_order(ctx.family(2).Mk, Rational(2)) == 3 &&
                   moments::smoothness_order(ctx.family(3).Mk, Rational(1)) == 4;
    return verdict(anchors, "all interior orders >= k^2-2kl+2l^2-1; anchors exact",
                   "smoothness bound at interior integers, k <= 4");
}

GateResult gate_gamma_symmetry(const Context& ctx) {
    for (int k = 1; k <= 4; ++k) {
        const auto& g = ctx.family(k).gamma;
        for (int ell = 0; ell < k; ++ell) {
            Poly mirrored = g.pieces()[static_cast<std::size_t>(k - 1 - ell)].compose_affine(
                Rational(k), Rational(-1));
            if (g.pieces()[static_cast<std::size_t>(ell)] != mirrored)
                return verdict(false, "k=" + std::to_string(k), "gamma_k(a) = gamma_k(k-a)");
        }
    }
    return ok("k = 1..4 piecewise identity", "gamma_k(a) = gamma_k(k-a)");
}

GateResult gate_uniqueness(const Context& ctx) {
    auto rep = moments::uniqueness_check_k3();
    bool pass = rep.consistent && rep.solution_space_dim == 0 &&
                rep.witness == ctx.family(3).Mk.scaled(Rational(BigInt::factorial(9)));
    auto bad = moments::uniqueness_check_k3(Rational(1));
    bool control = !(bad.consistent && bad.solution_space_dim == 0 &&
                     bad.witness.pieces().size() == 3 && bad.witness.pieces()[1] == kEq3Middle);
    return verdict(pass && control,
                   "dim=" + std::to_string(rep.solution_space_dim) +
                       ", witness == 9! M_3; perturbed system rejected",
                   "dim 0, witness equals the published middle piece");
}

GateResult gate_mk_tails(const Context& ctx) {
    for (int k = 1; k <= 4; ++k)
        if (ctx.family(k).Mk.tail() != Poly::constant(compute_gk(k)))
            return verdict(false, "k=" + std::to_string(k), "M_k tail is the constant g_k");
    return ok("k = 1..4", "tail constants equal g_k exactly");
}

GateResult gate_poly_ops(const Context&) {
    bool pass = poly_from({1, 1}) * poly_from({-1, 1}) == poly_from({-1, 0, 1});
    Poly p = poly_from({3, 0, 2});
    pass = pass && (p + Poly() == p);
    Poly am2sq = poly_from({4, -4, 1});
    pass = pass && (am2sq * am2sq == poly_from({16, -32, 24, -8, 1}));
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50 && pass; ++i) {
        std::vector<Rational> ca, cb;
        for (int d = 0; d <= static_cast<int>(rng() % 5); ++d)
            ca.emplace_back(static_cast<long>(rng() % 17) - 8);
        for (int d = 0; d <= static_cast<int>(rng() % 5); ++d)
            cb.emplace_back(static_cast<long>(rng() % 17) - 8);
        Poly a{std::move(ca)}, b{std::move(cb)};
        if (!a.is_zero() && !b.is_zero()) pass = (a * b).degree() == a.degree() + b.degree();
    }
    return verdict(pass, "ring identities + degree additivity", "poly arithmetic exact");
}

GateResult gate_pw_eval(const Context& ctx) {
    const auto& m1 = ctx.family(1).Mk;
    bool pass = m1.eval(Rational(1, 2)) == Rational(1, 2) && m1.eval(Rational(2)) == Rational(1);
    PiecewisePoly f({Rational(0), Rational(1), Rational(2)}, {poly_from({0, 1}), poly_from({5})},
                    Poly());
    pass = pass && f.eval(Rational(1)) == Rational(5) && f.eval(Rational(-7)) == Rational(0);
    return verdict(pass, "M_1 values + right-continuous breakpoints + zero head",
                   "half-open evaluation convention");
}

GateResult gate_pw_diff(const Context& ctx) {
    PiecewisePoly f({Rational(0), Rational(1)}, {Poly::monomial(Rational(1, 24), 4)},
                    Poly::constant(Rational(1, 24)));
    bool pass = f.differentiate().pieces()[0] == Poly::monomial(Rational(1, 6), 3);
    const auto& g2 = ctx.family(2).gamma;
    pass = pass && g2.pieces()[1] == poly_from({8, -12, 6, -1}).scaled(Rational(1, 6));
    pass = pass && g2.tail().is_zero();
    bool threw = false;
    try {
        PiecewisePoly broken({Rational(0), Rational(1)}, {poly_from({0, 1})},
                             Poly::constant(Rational(7)));
        broken.differentiate();
    } catch (const std::domain_error&) {
        threw = true;
    }
    return verdict(pass && threw, "power rule, Eq.(2) middle derivative, discontinuity rejected",
                   "piecewise differentiation contract");
}

GateResult gate_pw_conv(const Context&) {
    PiecewisePoly box = indicator(Rational(0), Rational(1));
    PiecewisePoly tent = convolve(box, box);
    PiecewisePoly expect({Rational(0), Rational(1), Rational(2)},
                         {poly_from({0, 1}), poly_from({2, -1})}, Poly());
    bool pass = tent == expect;
    pass = pass && convolve(tent, box).eval(Rational(3, 2)) == Rational(3, 4);
    pass = pass && convolve(box, PiecewisePoly()).is_zero();
    PiecewisePoly ih = box;
    for (int k = 2; k <= 5 && pass; ++k) {
        ih = convolve(ih, box);
        pass = ih.integrate(Rational(0), Rational(k)) == Rational(1);
    }
    return verdict(pass, "tent, Irwin-Hall(3)(3/2) = 3/4, f*0 = 0, unit mass to k=5",
                   "exact convolution of compact piecewise polynomials");
}

GateResult gate_pw_int(const Context& ctx) {
    PiecewisePoly one({Rational(0), Rational(1)}, {poly_from({1})}, Poly());
    bool pass = one.integrate(Rational(0), Rational(1)) == Rational(1);
    pass = pass && ctx.family(2).gamma.integrate(Rational(0), Rational(2)) == Rational(1, 12);
    pass = pass && ctx.family(3).gamma.integrate(Rational(0), Rational(3)) == Rational(1, 8640);
    return verdict(pass, "int 1 = 1; int gamma_2 = 1/12; int gamma_3 = 1/8640",
                   "exact definite integrals");
}

GateResult gate_series(const Context&) {
    MultiSeries a(1, 1);
    a.add_term({0}, Poly::constant(Rational(1)));
    a.add_term({1}, Poly::constant(Rational(1)));
    bool pass = (a * a).coeff({1}) == Poly::constant(Rational(2));
    MultiSeries geo(1, 3);
    for (int j = 0; j <= 3; ++j) geo.add_term({j}, Poly::constant(Rational(1)));
    MultiSeries inv2 = geo * geo;
    for (int j = 0; j <= 3 && pass; ++j) pass = inv2.coeff({j}) == Poly::constant(Rational(j + 1));
    MultiSeries u(2, 2), v(2, 2);
    u.add_term({0, 0}, Poly::constant(Rational(1)));
    u.add_term({1, 0}, Poly::constant(Rational(5)));
    v.add_term({0, 0}, Poly::constant(Rational(1)));
    v.add_term({0, 1}, Poly::constant(Rational(-3)));
    pass = pass && (u * v).coeff({0, 0}) == Poly::constant(Rational(1));
    return verdict(pass, "(1+u)^2 cap 1; (1-u)^-2 cap 3; unit constant term",
                   "truncated series semantics");
}

GateResult gate_json(const Context& ctx) {
    const auto& g1 = ctx.family(1).gamma;
    bool pass = g1.to_json() == R"({"breakpoints":[0,1],"pieces":[[1]],"tail":[]})";
    for (int k = 1; k <= 3 && pass; ++k) {
        const auto& mk = ctx.family(k).Mk;
        pass = PiecewisePoly::from_json(mk.to_json()) == mk;
    }
    pass = pass && Rational("-7/2").to_string() == "-7/2" && Rational(6, 4).to_string() == "3/2";
    return verdict(pass, "gamma_1 JSON literal + M_k round-trips + num/den strings",
                   "interchange format contract");
}

GateResult gate_p_anchors(const Context&) {
    bool pass = moments::compute_P(0, 1) == poly_from({0, 1}) &&
                moments::compute_P(1, 1) == poly_from({1, -1}) &&
                moments::compute_P(0, 2) == Poly::monomial(Rational(1), 4) &&
                moments::compute_P(1, 2) == poly_from({-7, 16, -12, 4, -1}) &&
                moments::compute_P(2, 2) == poly_from({16, -32, 24, -8, 1}) &&
                moments::compute_P(3, 2).is_zero();
    return verdict(pass, "P_{r,k} closed forms for k <= 2, P_{r>k} = 0",
                   "single-residue anchors");
}

// ---- rmt suite ------------------------------------------------------------

GateResult gate_secular_units(const Context&) {
    cue::EigenAngles one;
    one.theta = {0.0};
    auto sc1 = cue::secular_coeffs(one);
    bool pass = std::abs(sc1.sc[1] - std::complex<double>(1, 0)) < 1e-14;
    cue::EigenAngles pm;
    pm.theta = {0.0, M_PI};
    auto sc2 = cue::secular_coeffs(pm);
    pass = pass && std::abs(sc2.sc[1]) < 1e-14 &&
           std::abs(sc2.sc[2] - std::complex<double>(-1, 0)) < 1e-13;
    return verdict(pass, "1+z and (1+z)(1-z)", "unit secular coefficients");
}

GateResult gate_reversal_law(const Context& ctx) {
    RngStream rng(ctx.seed(), 1);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        auto sc = cue::secular_coeffs(cue::haar_sample(12, rng));
        std::complex<double> scN = sc.sc[12];
        worst = std::max(worst, std::abs(std::abs(scN) - 1.0));
        for (int j = 0; j <= 12; ++j)
            worst = std::max(worst, std::abs(sc.sc[12 - j] - scN * std::conj(sc.sc[j])));
    }
    return verdict(worst < 1e-10, "max residual " + fmt(worst), "|Sc_N| = 1 and reversal to 1e-10");
}

GateResult gate_haar_trace(const Context& ctx) {
    // catches the un-phased QR variant, which is not Haar
    const int N = 8, samples = 100000;
    RngStream rng(ctx.seed(), 2);
    double re = 0, im = 0;
    for (int s = 0; s < samples; ++s) {
        auto ang = cue::haar_sample(N, rng);
        for (double t : ang.theta) {
            re += std::cos(t);
            im += std::sin(t);
        }
    }
    re /= samples;
    im /= samples;
    double se = 1.0 / std::sqrt(2.0 * samples);
    bool pass = std::abs(re) < 4 * se && std::abs(im) < 4 * se;
    return verdict(pass, "E[Sc_1] = (" + fmt(re) + ", " + fmt(im) + ")",
                   "|each component| < 4 stderr = " + fmt(4 * se));
}

GateResult gate_haar_sc1(const Context& ctx) {
    const int N = 8;
    auto est = cue::mc_Ik(1, 1, N, 100000, ctx.seed() + 3, ctx.workers());
    bool pass = std::abs(est.mean - 1.0) < 4 * est.stderr_;
    return verdict(pass, "E|Sc_1|^2 = " + fmt(est.mean) + " +- " + fmt(est.stderr_),
                   "within 4 stderr of exact_Ik(1,1,N) = 1");
}

GateResult gate_u1_uniform(const Context& ctx) {
    const int n = 10000;
    RngStream rng(ctx.seed(), 4);
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
    return verdict(p > 0.001, "KS p = " + fmt(p), "p > 0.001 at 1e4 samples");
}

GateResult gate_eigensolver(const Context& ctx) {
    RngStream rng(ctx.seed(), 5);
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        auto smp = cue::haar_sample_checked(16, rng);
        std::complex<double> prod(1, 0);
        for (double t : smp.angles.theta) prod *= std::polar(1.0, t);
        worst = std::max(worst, std::abs(prod - smp.det));
    }
    return verdict(worst < 1e-8, "max |prod e^(i theta) - det| = " + fmt(worst),
                   "eigenphases consistent with the LU determinant to 1e-8");
}

GateResult gate_exact_anchors(const Context&) {
    bool pass = true;
    for (int n = 0; n <= 6; ++n) pass = pass && schur::exact_Ik(1, n, 6) == BigInt(1);
    pass = pass && schur::exact_Ik(2, 1, 4) == BigInt(4) &&
           schur::exact_Ik(2, 2, 4) == BigInt(10) && schur::exact_Ik(2, 2, 1) == BigInt(1) &&
           schur::exact_Ik(2, 40, 8) == BigInt(0);
    pass = pass && schur::exact_Itilde(1, 5, 8) == BigInt(6) &&
           schur::exact_Itilde(2, 2, 4) == BigInt(15) && schur::exact_Itilde(3, 0, 4) == BigInt(1);
    return verdict(pass, "I_k and Itilde_k anchor values", "Schur-basis oracle anchors");
}

GateResult gate_reversal_exact(const Context&) {
    for (int k = 1; k <= 3; ++k)
        for (int N = 1; N <= 5; ++N)
            for (int n = 0; n <= k * N; ++n)
                if (schur::exact_Ik(k, n, N) != schur::exact_Ik(k, k * N - n, N))
                    return verdict(false, "mismatch at (k,n,N)", "I_k(n,N) = I_k(kN-n,N)");
    return ok("k <= 3, N <= 5, all n", "exact reversal symmetry");
}

GateResult gate_fn_palindrome(const Context&) {
    bool pass = schur::fN_coeffs(1, 2) == std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(1)} &&
                schur::fN_coeffs(2, 1) == std::vector<BigInt>{BigInt(1), BigInt(4), BigInt(1)};
    for (auto [k, N] : {std::pair{2, 6}, {3, 4}}) {
        auto f = schur::fN_coeffs(k, N);
        auto rev = f;
        std::reverse(rev.begin(), rev.end());
        pass = pass && f == rev;
    }
    return verdict(pass, "[1,1,1], [1,4,1], palindromes", "F_N coefficient lists");
}

GateResult gate_mc_grid(const Context& ctx) {
    struct Point {
        int k, n, N;
    };
    const Point grid[] = {{1, 3, 8},  {1, 12, 12}, {2, 2, 8},  {2, 8, 8},   {2, 12, 8},
                          {2, 10, 12}, {2, 20, 12}, {3, 6, 6},  {3, 9, 6},   {3, 12, 12}};
    std::ostringstream meas;
    for (const auto& p : grid) {
        auto est = cue::mc_Ik(p.k, p.n, p.N, 100000, ctx.seed() + 100, ctx.workers());
        double exact = schur::exact_Ik(p.k, p.n, p.N).to_double();
        double dev = std::abs(est.mean - exact);
        if (dev > 4 * est.stderr_) {
            meas << "(k=" << p.k << ",n=" << p.n << ",N=" << p.N << "): |" << est.mean << " - "
                 << exact << "| = " << dev << " > 4*" << est.stderr_;
            return verdict(false, meas.str(), "each grid point within 4 stderr");
        }
    }
    return ok("10 grid points, 1e5 samples each, all within 4 stderr",
              "mc_Ik vs exact_Ik on the regression grid (k<=3, N<=12, n<=20)");
}

GateResult gate_ffik_k1(const Context&) {
    auto rows = schur::check_ffik(1, 8, {1, 2, 3, 4, 5, 6, 7});
    for (const auto& r : rows)
        if (!(r.scaled_diff == Rational(0)))
            return verdict(false, "nonzero at n=" + std::to_string(r.n),
                           "exact - asymptotic = 0 for k=1, 0 < n < N");
    return ok("n = 1..7 at N = 8, exactly zero", "k=1 difference vanishes identically");
}

GateResult gate_ffik_k2(const Context& ctx) {
    Rational g21 = ctx.family(2).gamma.eval(Rational(1));
    double prev = 1e300;
    double mx = 0, mn = 1e300;
    std::ostringstream meas;
    for (int N : {8, 16, 32}) {
        BigInt exact = schur::exact_Ik(2, N, N);
        double diff = std::abs((Rational(exact) / Rational(N).pow(3) - g21).to_double());
        double scaled = diff * N;
        meas << "N=" << N << ": |I/N^3 - 1/6| = " << fmt(diff) << " (scaled " << fmt(scaled)
             << ")  ";
        if (diff >= prev) return verdict(false, meas.str(), "strictly decreasing in N");
        prev = diff;
        mx = std::max(mx, scaled);
        mn = std::min(mn, scaled);
    }
    bool band = mx / mn <= 4.0;
    return verdict(band, meas.str() + "band ratio " + fmt(mx / mn),
                   "decreasing differences, N-scaled remainder within a factor-4 band");
}

GateResult gate_itilde_int(const Context& ctx) {
    Rational g2int = ctx.family(2).gamma.integrate(Rational(0), Rational(1));
    double worst = 0;
    for (int N : {8, 16, 32}) {
        BigInt it = schur::exact_Itilde(2, N, N);
        double diff = std::abs((Rational(it) / Rational(N).pow(4) - g2int).to_double());
        worst = std::max(worst, diff * N);
    }
    return verdict(worst <= 1.0, "max N |Itilde/N^4 - 1/24| = " + fmt(worst),
                   "<= C = 1.0 for N in {8,16,32}");
}

// ---- ffield suite ---------------------------------------------------------

GateResult gate_irreducibles(const Context&) {
    auto t2 = ffield::build_irreducibles(2, 4);
    auto t3 = ffield::build_irreducibles(3, 3);
    auto t5 = ffield::build_irreducibles(5, 2);
    bool pass = t2.count(2) == 1 && t3.count(2) == 3 && t5.count(1) == 5;
    return verdict(pass, "counts 1, 3, 5 at (2,2), (3,2), (5,1)",
                   "necklace counts (also enforced on every build)");
}

GateResult gate_ff_dk(const Context&) {
    auto t = ffield::build_irreducibles(3, 10);
    const auto& p = t.by_degree[2][0];
    bool pass = ffield::ff_dk(p, 2, t) == BigInt(2);
    auto p2 = ffield::ff_mul(p, p);
    pass = pass && ffield::ff_dk(p2, 3, t) == BigInt(6);
    for (int k : {2, 3}) {
        for (int n = 1; n <= 5 && pass; ++n) {
            BigInt total(0);
            std::uint64_t qn = 1;
            for (int i = 0; i < n; ++i) qn *= 3;
            for (std::uint64_t idx = 0; idx < qn; ++idx)
                total += ffield::ff_dk(ffield::ff_monic_from_index(3, n, idx), k, t);
            pass = total == BigInt(static_cast<long>(qn)) *
                                BigInt::binomial(static_cast<unsigned long>(n + k - 1),
                                                 static_cast<unsigned long>(k - 1));
        }
    }
    return verdict(pass, "irreducible/prime-power values + exhaustive total-sum identity",
                   "d_k multiplicative law and zeta-series total");
}

GateResult gate_ff_variance_oracle(const Context& ctx) {
    // the composition enumeration against literal per-polynomial summation
    auto table = ffield::build_irreducibles(3, 5);
    for (auto [k, n, h] : {std::tuple{2, 4, 1}, {3, 4, 2}, {1, 4, 1}}) {
        auto fast = ffield::ff_variance(3, k, n, h, ctx.workers());
        std::map<std::uint64_t, BigInt> cls;
        std::uint64_t qn = 81;
        for (std::uint64_t idx = 0; idx < qn; ++idx) {
            ffield::FFPoly f = ffield::ff_monic_from_index(3, 4, idx);
            std::uint64_t key = 0;
            for (int pos = 3; pos >= h + 1; --pos)
                key = key * 3 + static_cast<std::uint64_t>(f.c[static_cast<std::size_t>(pos)]);
            cls[key] += ffield::ff_dk(f, k, table);
        }
        BigInt M = fast.main_term;
        BigInt sumsq(0);
        for (const auto& [key, s] : cls) {
            BigInt d = s - M;
            sumsq += d * d;
        }
        Rational brute(sumsq, BigInt(3).pow(static_cast<unsigned long>(4 - h - 1)));
        if (fast.lhs != brute)
            return verdict(false, "mismatch at (k,n,h)=(" + std::to_string(k) + ",4," +
                                       std::to_string(h) + ")",
                           "enumeration path == per-polynomial path");
    }
    return ok("q=3, n=4, k in {1,2,3}", "variance enumeration matches the brute-force oracle");
}

GateResult gate_ff_k1_zero(const Context& ctx) {
    for (int q : {3, 5, 7, 11}) {
        auto r = ffield::ff_variance(q, 1, 6, 1, ctx.workers());
        if (!(r.lhs == Rational(0)) || !r.rmt_value.is_zero())
            return verdict(false, "nonzero at q=" + std::to_string(q),
                           "k=1 variance identically zero");
    }
    return ok("q in {3,5,7,11}, n=6, h=1: all zero", "k=1 rows are exact zeros");
}

GateResult gate_ff_mean_identity(const Context& ctx) {
    auto r1 = ffield::ff_variance(5, 2, 5, 1, ctx.workers());
    auto r2 = ffield::ff_variance(7, 2, 4, 1, ctx.workers());
    bool pass = r1.class_total == BigInt(static_cast<long>(r1.classes)) * r1.main_term &&
                r2.class_total == BigInt(static_cast<long>(r2.classes)) * r2.main_term;
    return verdict(pass, "class totals equal classes * main term",
                   "mean-equals-main-term identity (exact)");
}

GateResult gate_kr3_sweep(const Context& ctx) {
    std::ostringstream meas;
    for (int n : {6, 8}) {
        for (int h : {1, 2}) {
            auto rows = ffield::ff_variance_sweep(2, n, h, {3, 5, 7, 11}, ctx.workers());
            double mx = 0, mn = 1e300;
            for (const auto& r : rows) {
                mx = std::max(mx, r.scaled_abs_diff);
                mn = std::min(mn, r.scaled_abs_diff);
            }
            meas << "(n=" << n << ",h=" << h << "): ";
            if (mx == 0.0) {
                meas << "exactly 0  ";
                continue;
            }
            double ratio = mx / mn;
            meas << "max/min = " << fmt(ratio) << "  ";
            if (ratio > 4.0)
                return verdict(false, meas.str(), "sqrt(q)-scaled deviation within a factor-4 band");
        }
    }
    return verdict(true, meas.str(), "bounded across q in {3,5,7,11} (max/min <= 4 or exact 0)");
}

GateResult gate_ff_degenerate(const Context& ctx) {
    auto r = ffield::ff_variance(3, 2, 3, 2, ctx.workers());
    bool pass = r.rmt_value.is_zero() &&
                (r.lhs / Rational(27)).to_double() <= 1.0 / std::sqrt(3.0);
    return verdict(pass, "rmt = 0, lhs/q^(h+1) = " + fmt((r.lhs / Rational(27)).to_double()),
                   "n-h-2 < 1 degenerates to a O(q^(-1/2)) comparison");
}

// ---- nf suite -------------------------------------------------------------

GateResult gate_sieve_anchors(const Context& ctx) {
    const auto& t2 = ctx.sieve(2, 1000000);
    bool pass = t2.dk(1) == 1 && t2.dk(12) == 6 && t2.dk(97) == 2;
    const auto& t3 = ctx.sieve(3, 1000000);
    pass = pass && t3.dk(4) == 6 && t3.dk(30) == 27;
    std::uint64_t lhs = 0, rhs = 0;
    for (std::uint64_t n = 1; n <= 10000; ++n) lhs += t2.dk(n);
    for (std::uint64_t d = 1; d <= 10000; ++d) rhs += 10000 / d;
    pass = pass && lhs == rhs;
    const auto& t4 = ctx.sieve(4, 1000000);
    for (long p : nf::primes_up_to(997)) {
        std::uint64_t pe = static_cast<std::uint64_t>(p);
        unsigned long e = 1;
        while (pass && pe <= 1000000) {
            pass = BigInt(static_cast<long>(t2.dk(pe))) == BigInt::binomial(e + 1, 1) &&
                   BigInt(static_cast<long>(t3.dk(pe))) == BigInt::binomial(e + 2, 2) &&
                   BigInt(static_cast<long>(t4.dk(pe))) == BigInt::binomial(e + 3, 3);
            if (pe > 1000000 / static_cast<std::uint64_t>(p)) break;
            pe *= static_cast<std::uint64_t>(p);
            ++e;
        }
        if (!pass) break;
    }
    return verdict(pass, "hyperbola identity at 1e4, d_k(p^e) law at 1e6 for k=2,3,4",
                   "sieve correctness anchors (exact)");
}

GateResult gate_gamma0_literal(const Context&) {
    const auto& z = nf::ZetaLaurent::standard();
    bool pass = z.order == 9 &&
                z.literals[0].substr(0, 32) == "0.577215664901532860606512090082";
    return verdict(pass, "gamma_0 literal prefix", "matches Euler-Mascheroni to 30 digits");
}

GateResult gate_residue_terms(const Context& ctx) {
    const auto& z = nf::ZetaLaurent::standard();
    auto q1 = nf::residue_main_term(1, z);
    auto q2 = nf::residue_main_term(2, z);
    bool pass = q1.size() == 1 && std::abs(q1[0] - 1.0) < 1e-15 && q2.size() == 2 &&
                std::abs(q2[1] - 1.0) < 1e-15 &&
                std::abs(q2[0] - (2.0 * z.gammas[0] - 1.0)) < 1e-14;
    double cmax = 0;
    for (std::uint64_t X : {100000ULL, 1000000ULL, 10000000ULL}) {
        const auto& t = ctx.sieve(2, X);
        double sum = 0;
        for (std::uint64_t n = 1; n <= X; ++n) sum += t.dk(n);
        double err = std::abs(sum - nf::residue_phi(q2, static_cast<double>(X)));
        cmax = std::max(cmax, err / std::pow(static_cast<double>(X), 0.8));
    }
    return verdict(pass && cmax < 1.0,
                   "Q_0 = 1, Q_1 = L + 2 gamma_0 - 1; divisor-sum error " + fmt(cmax) + " X^0.8",
                   "residue polynomials and the classical error scale (c = 1)");
}

GateResult gate_ak(const Context&) {
    auto a1 = nf::compute_ak(1, 10000);
    auto a2 = nf::compute_ak(2, 1000000);
    auto a3a = nf::compute_ak(3, 1000000);
    auto a3b = nf::compute_ak(3, 2000000);
    double dev2 = std::abs(a2.value - 6.0 / (M_PI * M_PI));
    double dev3 = std::abs(a3a.value - a3b.value);
    bool pass = a1.value == 1.0 && dev2 < 1e-9 && dev3 < 1e-10;
    return verdict(pass,
                   "a_1 = 1; |a_2 - 6/pi^2| = " + fmt(dev2) + "; doubling moves a_3 by " + fmt(dev3),
                   "a_2 within 1e-9 of 6/pi^2; pmax-doubling stability 1e-10");
}

GateResult gate_akq(const Context&) {
    bool pass = std::abs(nf::compute_ak_q(1, 101, 10000) - (1.0 - 1.0 / 101)) < 1e-12;
    double closed = (1.0 + 1.0 / 3.0) / std::pow(1.0 - 1.0 / 3.0, 3);
    pass = pass && std::abs(nf::local_dk2_series(2, 1.0 / 3.0) - closed) < 1e-12;
    double ak = nf::compute_ak(2, 1000000).value;
    double worst = 0;
    for (long q : {101L, 1009L, 10007L})
        worst = std::max(worst, std::abs(nf::compute_ak_q(2, q, 1000000) - ak) * q);
    pass = pass && worst < 5.0;
    return verdict(pass, "a_1(q) exact; local factor closed form; max q|a_2(q)-a_2| = " + fmt(worst),
                   "deleted-prime factor behaves like a_k + O(1/q)");
}

GateResult gate_si_surrogate(const Context& ctx) {
    const std::uint64_t X = 1000000;
    double alpha = 1.0 / (1.0 - std::log(10.5) / std::log(static_cast<double>(X)));
    const auto& ones = ctx.sieve(1, 2 * X + 16);
    auto row = nf::short_interval_variance(1, X, alpha, ones, nf::ZetaLaurent::standard(),
                                           ctx.workers());
    double theta = row.H - std::floor(row.H);
    double dev = std::abs(row.mean_sq_raw - theta * (1.0 - theta));
    bool center = std::abs(row.delta_mean) <= std::sqrt(row.mean_sq_raw) + 1e-12;
    return verdict(dev < 1e-3 && center,
                   "|measured - theta(1-theta)| = " + fmt(dev) + ", centering ok",
                   "k=1 lattice law to 1e-3 at X = 1e6");
}

GateResult gate_ap_partition(const Context& ctx) {
    const auto& t = ctx.sieve(2, 1000000);
    auto row = nf::ap_variance(2, 1000000, 1009, t, nf::ZetaLaurent::standard(), ctx.workers());
    bool pass = row.coprime_class_sum == row.coprime_direct;
    return verdict(pass, "class sums total " + std::to_string(row.coprime_class_sum),
                   "partition identity, exact integer equality");
}

GateResult gate_ap_k1_flat(const Context& ctx) {
    // d_1 is flat: class counts differ from the main term by O(1), so the
    // variance normalized by a_1(q) (log q)^0 is O(q/X)
    const auto& t = ctx.sieve(1, 1000000);
    auto row = nf::ap_variance(1, 1000000, 1009, t, nf::ZetaLaurent::standard(), ctx.workers());
    double normalized = row.wk / row.ak_q;
    return verdict(normalized < 0.05, "W_1/a_1(q) = " + fmt(normalized),
                   "k=1 progression variance normalizes below 0.05");
}

GateResult dirichlet_k1(const Context& ctx, double alpha) {
    auto row = nf::dirichlet_mean_square(1, 1e4, alpha, nullptr, nf::ZetaLaurent::standard(),
                                         ctx.workers());
    double rel = row.normalized / row.target - 1.0;
    return verdict(std::abs(rel) <= 0.15,
                   "normalized " + fmt(row.normalized) + " vs M_1(" + fmt(alpha) + ") = " +
                       fmt(row.target) + " (" + fmt(rel * 100) + "%)",
                   "within 15% at T = 1e4");
}

GateResult gate_dirichlet_k1_a05(const Context& ctx) { return dirichlet_k1(ctx, 0.5); }
GateResult gate_dirichlet_k1_a2(const Context& ctx) { return dirichlet_k1(ctx, 2.0); }

GateResult gate_dirichlet_k2_diag(const Context& ctx) {
    const auto& t = ctx.sieve(2, 1000000);
    auto row = nf::dirichlet_mean_square(2, 1e4, 0.5, &t, nf::ZetaLaurent::standard(),
                                         ctx.workers());
    double ratio = row.normalized / row.target;
    // diagnostic-only: at desk scale the k=2 normalized mean square sits well
    // above the limit value (lower-order log powers dominate); reported, not gated
    return ok("ratio " + fmt(ratio) + " vs limit target " + fmt(row.target),
              "diagnostic report (no gate; limit not reachable at T = 1e4)");
}

GateResult gate_si_k2_band(const Context& ctx) {
    std::ostringstream trend;
    double final_ratio = 0;
    for (std::uint64_t X : {10000000ULL, 30000000ULL, 100000000ULL}) {
        const auto& t = ctx.sieve(2, 2 * X + 600);
        auto row = nf::short_interval_variance(2, X, 1.5, t, nf::ZetaLaurent::standard(),
                                               ctx.workers());
        trend << "X=" << X << ": ratio " << fmt(row.ratio) << "  ";
        final_ratio = row.ratio;
    }
    bool pass = final_ratio >= 0.3 && final_ratio <= 3.0;
    return verdict(pass, trend.str(), "ratio at X = 1e8 within [0.3, 3], trend emitted");
}

GateResult gate_ap_k2_desk(const Context& ctx) {
    // q ~ 1000 and X = q^(3/2): the smallest scale at which the band is useful
    const auto& t = ctx.sieve(2, 32100);
    auto row = nf::ap_variance(2, 32044, 1009, t, nf::ZetaLaurent::standard(), ctx.workers());
    bool pass = row.ratio >= 0.3 && row.ratio <= 3.0;
    return verdict(pass, "q = 1009, X = q^(3/2), ratio " + fmt(row.ratio),
                   "ratio within [0.3, 3]");
}

GateResult gate_ap_k2_band(const Context& ctx) {
    const std::uint64_t X = 100000000;
    long q = 215443;  // prime near X^(2/3), so alpha = log X / log q ~ 3/2
    while (!ffield::is_prime_u64(static_cast<std::uint64_t>(q))) ++q;
    const auto& t = ctx.sieve(2, 2 * X + 600);
    auto row = nf::ap_variance(2, X, q, t, nf::ZetaLaurent::standard(), ctx.workers());
    bool pass = row.ratio >= 0.3 && row.ratio <= 3.0;
    return verdict(pass, "q = " + std::to_string(q) + ", alpha = " + fmt(row.alpha) + ", ratio " +
                             fmt(row.ratio),
                   "ratio at X = 1e8 within [0.3, 3]");
}

}  // namespace

const std::vector<Gate>& all_gates() {
    static const std::vector<Gate> gates = {
        {"exact/eq2", "exact", 1, "4! M_2 equals the published fourth-moment profile", gate_eq2},
        {"exact/eq3", "exact", 2, "9! M_3 equals the published sixth-moment profile", gate_eq3},
        {"exact/m1", "exact", 0, "M_1 piecewise form", gate_m1},
        {"exact/gamma-routes", "exact", 3, "gamma_k two-route equality and g_k integrals",
         gate_gamma_routes},
        {"exact/p0k", "exact", 4, "P_{0,k} = a^(k^2)", gate_p0k},
        {"exact/symmetry", "exact", 4, "M_k reflection symmetry", gate_symmetry},
        {"exact/vanishing", "exact", 4, "vanishing orders of P_{r,k}", gate_vanishing},
        {"exact/smoothness", "exact", 4, "smoothness orders at interior integers", gate_smoothness},
        {"exact/gamma-symmetry", "exact", 4, "gamma_k reflection symmetry", gate_gamma_symmetry},
        {"exact/uniqueness-k3", "exact", 5, "k=3 uniqueness system", gate_uniqueness},
        {"exact/mk-tails", "exact", 0, "M_k tails equal g_k", gate_mk_tails},
        {"exact/poly-ops", "exact", 0, "polynomial ring operations", gate_poly_ops},
        {"exact/pw-eval", "exact", 0, "piecewise evaluation convention", gate_pw_eval},
        {"exact/pw-diff", "exact", 0, "piecewise differentiation", gate_pw_diff},
        {"exact/pw-conv", "exact", 0, "piecewise convolution", gate_pw_conv},
        {"exact/pw-int", "exact", 0, "piecewise integration", gate_pw_int},
        {"exact/series", "exact", 0, "truncated multivariate series", gate_series},
        {"exact/json", "exact", 0, "JSON interchange round-trip", gate_json},
        {"exact/p-anchors", "exact", 0, "P_{r,k} closed-form anchors", gate_p_anchors},
        {"rmt/secular-units", "rmt", 0, "secular coefficients of unit cases", gate_secular_units},
        {"rmt/reversal-law", "rmt", 0, "sampled unitarity reversal law", gate_reversal_law},
        {"rmt/haar-trace", "rmt", 0, "E[Sc_1] = 0 (catches unphased QR)", gate_haar_trace},
        {"rmt/haar-sc1", "rmt", 0, "E|Sc_1|^2 = 1", gate_haar_sc1},
        {"rmt/u1-uniform", "rmt", 0, "U(1) sample is the uniform circle", gate_u1_uniform},
        {"rmt/eigensolver", "rmt", 0, "eigenphases vs determinant", gate_eigensolver},
        {"rmt/exact-anchors", "rmt", 0, "exact_Ik / exact_Itilde anchors", gate_exact_anchors},
        {"rmt/reversal-exact", "rmt", 0, "exact reversal symmetry", gate_reversal_exact},
        {"rmt/fn-palindrome", "rmt", 0, "F_N coefficient palindromes", gate_fn_palindrome},
        {"rmt/mc-grid", "rmt", 6, "Monte Carlo regression grid", gate_mc_grid},
        {"rmt/ffik-k1", "rmt", 7, "ffik law exact at k=1", gate_ffik_k1},
        {"rmt/ffik-k2", "rmt", 7, "ffik remainder decay at k=2", gate_ffik_k2},
        {"rmt/itilde-int", "rmt", 8, "Itilde vs integral of gamma_2", gate_itilde_int},
        {"ffield/irreducibles", "ffield", 0, "irreducible counts", gate_irreducibles},
        {"ffield/dk", "ffield", 0, "d_k on F_q[x]", gate_ff_dk},
        {"ffield/variance-oracle", "ffield", 0, "variance vs per-polynomial oracle",
         gate_ff_variance_oracle},
        {"ffield/k1-zero", "ffield", 9, "k=1 variance vanishes", gate_ff_k1_zero},
        {"ffield/mean-identity", "ffield", 0, "mean equals main term", gate_ff_mean_identity},
        {"ffield/kr3-sweep", "ffield", 9, "KR3 q-sweep boundedness", gate_kr3_sweep},
        {"ffield/degenerate", "ffield", 0, "n-h-2 < 1 degenerate comparison", gate_ff_degenerate},
        {"nf/sieve-anchors", "nf", 10, "sieve exactness anchors", gate_sieve_anchors},
        {"nf/gamma0-literal", "nf", 0, "gamma_0 equals Euler-Mascheroni", gate_gamma0_literal},
        {"nf/residue-terms", "nf", 0, "residue main-term polynomials", gate_residue_terms},
        {"nf/ak", "nf", 10, "arithmetic factor a_k", gate_ak},
        {"nf/akq", "nf", 0, "deleted-prime arithmetic factor", gate_akq},
        {"nf/si-surrogate", "nf", 10, "k=1 short-interval lattice law", gate_si_surrogate},
        {"nf/ap-partition", "nf", 10, "progression partition identity", gate_ap_partition},
        {"nf/ap-k1-flat", "nf", 0, "k=1 progression variance is flat", gate_ap_k1_flat},
        {"nf/dirichlet-k1-a05", "nf", 11, "Dirichlet k=1 at alpha = 1/2", gate_dirichlet_k1_a05},
        {"nf/dirichlet-k1-a2", "nf", 11, "Dirichlet k=1 at alpha = 2", gate_dirichlet_k1_a2},
        {"nf/dirichlet-k2-diag", "nf", 0, "Dirichlet k=2 diagnostic report",
         gate_dirichlet_k2_diag},
        {"nf/ap-k2-desk", "nf", 0, "progression k=2 desk case q = 1009", gate_ap_k2_desk},
        {"nf/si-k2-band", "nf", 12, "short-interval k=2 band at X = 1e8", gate_si_k2_band},
        {"nf/ap-k2-band", "nf", 12, "progression k=2 band at X = 1e8", gate_ap_k2_band},
    };
    return gates;
}

bool known_suite(const std::string& suite) {
    return suite == "all" || suite == "exact" || suite == "rmt" || suite == "ffield" ||
           suite == "nf";
}

SuiteOutcome run_suite(const std::string& suite, const Context& ctx, std::ostream& os) {
    SuiteOutcome outcome;
    for (const auto& gate : all_gates()) {
        if (suite != "all" && gate.suite != suite) continue;
        GateResult res;
        try {
            res = gate.run(ctx);
        } catch (const std::exception& e) {
            res = {false, std::string("exception: ") + e.what(), "no exception"};
        }
        os << (res.pass ? "[PASS] " : "[FAIL] ") << gate.id << " — " << res.measured
           << "  (required: " << res.required << ")\n";
        if (res.pass)
            ++outcome.passed;
        else
            ++outcome.failed;
    }
    return outcome;
}

}  // namespace verify
}  // namespace zm

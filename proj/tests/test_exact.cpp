#include "zetamoments/bigint.hpp"
#include "zetamoments/multiseries.hpp"
#include "zetamoments/poly.hpp"

#include <doctest.h>

#include <random>

using namespace zm;

namespace {

Poly poly_from(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(num(rng), den(rng));
    return Poly(std::move(c));
}

PiecewisePoly random_compact(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> npieces(1, 3);
    std::uniform_int_distribution<long> step(1, 3);
    std::uniform_int_distribution<long> start(-3, 3);
    int m = npieces(rng);
    std::vector<Rational> bps{Rational(start(rng))};
    std::vector<Poly> pieces;
    for (int i = 0; i < m; ++i) {
        bps.push_back(bps.back() + Rational(step(rng), 2));
        pieces.push_back(random_poly(rng, 2));
    }
    return PiecewisePoly(std::move(bps), std::move(pieces), Poly());
}

// cumulative integral from the left edge of the support; continuous by
// construction, constant tail equal to the total mass
PiecewisePoly cumulative(const PiecewisePoly& f) {
    REQUIRE(f.compact_support());
    std::vector<Poly> pieces;
    Rational running(0);
    const auto& bp = f.breakpoints();
    for (std::size_t i = 0; i < f.pieces().size(); ++i) {
        Poly A = f.pieces()[i].antiderivative();
        pieces.push_back(A + Poly::constant(running - A.eval(bp[i])));
        running += A.eval(bp[i + 1]) - A.eval(bp[i]);
    }
    return PiecewisePoly(bp, std::move(pieces), Poly::constant(running));
}

}  // namespace

TEST_CASE("rational arithmetic and canonical form") {
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational("3/6") == Rational(1, 2));
    CHECK(Rational("-7").to_string() == "-7");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5, 8).denominator() == BigInt(8));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
    CHECK(BigInt("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK(BigInt::factorial(25).to_string() == "15511210043330985984000000");
    CHECK(BigInt::barnes_g1p(5) == BigInt(288));  // 1! 2! 3! 4!
}

TEST_CASE("poly ring operations") {
    Poly xp1 = poly_from({1, 1});
    Poly xm1 = poly_from({-1, 1});
    CHECK(xp1 * xm1 == poly_from({-1, 0, 1}));
    Poly p = poly_from({3, 0, 2});
    CHECK(p + Poly() == p);
    Poly am2sq = poly_from({4, -4, 1});  // (a-2)^2
    CHECK(am2sq * am2sq == poly_from({16, -32, 24, -8, 1}));

    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 5);
        Poly b = random_poly(rng, 5);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("poly calculus and composition") {
    Poly p = poly_from({1, 2, 3});
    CHECK(p.derivative() == poly_from({2, 6}));
    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.eval(Rational(1, 2)) == Rational(1) + Rational(1) + Rational(3, 4));
    // Taylor shift: p(x+1)
    CHECK(p.compose_affine(Rational(1), Rational(1)) == poly_from({6, 8, 3}));
}

TEST_CASE("piecewise evaluation follows the half-open convention") {
    PiecewisePoly m1({Rational(0), Rational(1)}, {poly_from({0, 1})},
                     Poly::constant(Rational(1)));
    CHECK(m1.eval(Rational(1, 2)) == Rational(1, 2));
    CHECK(m1.eval(Rational(2)) == Rational(1));
    CHECK(m1.eval(Rational(-3)) == Rational(0));
    // at an interior breakpoint the right-hand piece wins
    PiecewisePoly f({Rational(0), Rational(1), Rational(2)}, {poly_from({0, 1}), poly_from({5})},
                    Poly());
    CHECK(f.eval(Rational(1)) == Rational(5));
}

TEST_CASE("piecewise canonicalization merges equal neighbours") {
    PiecewisePoly f({Rational(0), Rational(1), Rational(2)}, {poly_from({0, 1}), poly_from({0, 1})},
                    Poly());
    CHECK(f.breakpoints().size() == 2);
    CHECK(f.breakpoints()[1] == Rational(2));
    CHECK(f.pieces().size() == 1);
    CHECK_THROWS_AS(PiecewisePoly({Rational(1), Rational(0)}, {poly_from({1})}, Poly()),
                    std::invalid_argument);
}

TEST_CASE("piecewise differentiation") {
    PiecewisePoly f({Rational(0), Rational(1)}, {Poly::monomial(Rational(1, 24), 4)},
                    Poly::constant(Rational(1, 24)));
    PiecewisePoly df = f.differentiate();
    CHECK(df.pieces().at(0) == Poly::monomial(Rational(1, 6), 3));
    CHECK(df.tail().is_zero());

    // Eq.(2)/4! assembled literally; middle derivative is (2-a)^3/6 expanded
    PiecewisePoly m2(
        {Rational(0), Rational(1), Rational(2)},
        {Poly::monomial(Rational(1, 24), 4),
         poly_from({-14, 32, -24, 8, -1}).scaled(Rational(1, 24))},
        Poly::constant(Rational(1, 12)));
    PiecewisePoly g2 = m2.differentiate();
    CHECK(g2.pieces().at(1) == poly_from({8, -12, 6, -1}).scaled(Rational(1, 6)));

    PiecewisePoly broken({Rational(0), Rational(1)}, {poly_from({0, 1})},
                         Poly::constant(Rational(7)));
    CHECK_THROWS_AS(broken.differentiate(), std::domain_error);
}

TEST_CASE("convolution: tent, Irwin-Hall, and algebraic laws") {
    PiecewisePoly box = indicator(Rational(0), Rational(1));
    PiecewisePoly tent = convolve(box, box);
    PiecewisePoly expect({Rational(0), Rational(1), Rational(2)},
                         {poly_from({0, 1}), poly_from({2, -1})}, Poly());
    CHECK(tent == expect);

    PiecewisePoly ih3 = convolve(tent, box);
    CHECK(ih3.eval(Rational(3, 2)) == Rational(3, 4));

    CHECK(convolve(box, PiecewisePoly()).is_zero());

    PiecewisePoly nc({Rational(0), Rational(1)}, {poly_from({1})}, Poly::constant(Rational(2)));
    CHECK_THROWS_AS(convolve(box, nc), std::invalid_argument);

    std::mt19937_64 rng(777);
    for (int i = 0; i < 12; ++i) {
        PiecewisePoly a = random_compact(rng);
        PiecewisePoly b = random_compact(rng);
        PiecewisePoly c = random_compact(rng);
        CHECK(convolve(a, b) == convolve(b, a));
        CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    }

    // k-fold self-convolution of the unit box keeps total mass 1
    PiecewisePoly ih = box;
    for (int k = 2; k <= 5; ++k) {
        ih = convolve(ih, box);
        CHECK(ih.integrate(Rational(0), Rational(k)) == Rational(1));
    }
}

TEST_CASE("definite integration") {
    PiecewisePoly one({Rational(0), Rational(1)}, {poly_from({1})}, Poly());
    CHECK(one.integrate(Rational(0), Rational(1)) == Rational(1));
    CHECK(one.integrate(Rational(-5), Rational(7)) == Rational(1));
    CHECK_THROWS_AS(one.integrate(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("fundamental theorem on random continuous piecewise polynomials") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 25; ++i) {
        PiecewisePoly F = cumulative(random_compact(rng));
        PiecewisePoly dF = F.differentiate();
        std::uniform_int_distribution<long> pt(-8, 8);
        Rational a(pt(rng), 2), b(pt(rng), 2);
        if (b < a) std::swap(a, b);
        CHECK(dF.integrate(a, b) == F.eval(b) - F.eval(a));
    }
}

TEST_CASE("multiseries truncation and product") {
    MultiSeries a(1, 1);
    a.add_term({0}, Poly::constant(Rational(1)));
    a.add_term({1}, Poly::constant(Rational(1)));
    MultiSeries sq = a * a;
    CHECK(sq.coeff({0}) == Poly::constant(Rational(1)));
    CHECK(sq.coeff({1}) == Poly::constant(Rational(2)));

    // (1-u)^-2 to cap 3, via the square of the truncated geometric series
    MultiSeries geo(1, 3);
    for (int j = 0; j <= 3; ++j) geo.add_term({j}, Poly::constant(Rational(1)));
    MultiSeries inv2 = geo * geo;
    for (int j = 0; j <= 3; ++j) CHECK(inv2.coeff({j}) == Poly::constant(Rational(j + 1)));

    MultiSeries u(2, 2), v(2, 2);
    u.add_term({0, 0}, Poly::constant(Rational(1)));
    u.add_term({1, 0}, Poly::constant(Rational(5)));
    v.add_term({0, 0}, Poly::constant(Rational(1)));
    v.add_term({0, 1}, Poly::constant(Rational(-3)));
    CHECK((u * v).coeff({0, 0}) == Poly::constant(Rational(1)));

    MultiSeries wrong(1, 2);
    CHECK_THROWS_AS(a * wrong, std::invalid_argument);
    CHECK_THROWS_AS(a * MultiSeries(2, 1), std::invalid_argument);
}

TEST_CASE("piecewise JSON interchange round-trips") {
    PiecewisePoly g1({Rational(0), Rational(1)}, {poly_from({1})}, Poly());
    CHECK(g1.to_json() == R"({"breakpoints":[0,1],"pieces":[[1]],"tail":[]})");
    CHECK(PiecewisePoly::from_json(g1.to_json()) == g1);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 20; ++i) {
        PiecewisePoly f = random_compact(rng);
        CHECK(PiecewisePoly::from_json(f.to_json()) == f);
    }
}

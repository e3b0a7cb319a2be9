#include "zetamoments/moments.hpp"

#include "zetamoments/multiseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zm {
namespace moments {

namespace {

void check_k(int k) {
    if (k < 1 || k > kMaxK)
        throw std::invalid_argument("moments: k must be in [1, " + std::to_string(kMaxK) + "]");
}

// sparse factor: list of (exponent vector, rational coefficient); entries
// beyond the cap are dropped (they cannot reach the target multidegree)
using Factor = std::vector<std::pair<std::vector<int>, Rational>>;

bool within_cap(const std::vector<int>& e, int cap) {
    for (int x : e)
        if (x > cap) return false;
    return true;
}

MultiSeries series_from(const Factor& f, int vars, int cap) {
    MultiSeries s(vars, cap);
    for (const auto& [e, c] : f)
        if (within_cap(e, cap)) s.add_term(e, Poly::constant(c));
    return s;
}

std::vector<int> unit(int vars, int i) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

}  // namespace

Poly compute_P(int r, int k) {
    check_k(k);
    if (r < 0) throw std::invalid_argument("compute_P: r < 0");
    if (r > k) return Poly();  // P_{r,k} := 0 for r > k
    const int cap = k - 1;
    const int vars = k;
    const std::vector<int> zero(static_cast<std::size_t>(vars), 0);

    // variable i < r carries u_i (w_i = -1 + u_i), variable i >= r carries v_i
    MultiSeries acc = MultiSeries::one(vars, cap);

    // ordered Vandermonde product over all ordered pairs i != j
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            Factor f;
            Rational cst(0);
            if (i < r) cst += Rational(-1);
            if (j < r) cst += Rational(1);
            if (!cst.is_zero()) f.push_back({zero, cst});
            f.push_back({unit(vars, i), Rational(1)});
            f.push_back({unit(vars, j), Rational(-1)});
            acc *= series_from(f, vars, cap);
        }
    }

    // analytic halves of w^-k (w+1)^-k after the substitution:
    //   i < r : (u_i - 1)^-k = (-1)^k sum_j C(k-1+j, j) u_i^j
    //   i >= r: (1 + v_i)^-k =       sum_j (-1)^j C(k-1+j, j) v_i^j
    for (int i = 0; i < k; ++i) {
        Factor f;
        for (int j = 0; j <= cap; ++j) {
            Rational b(BigInt::binomial(static_cast<unsigned long>(k - 1 + j),
                                        static_cast<unsigned long>(j)));
            int sgn = (i < r) ? (k % 2 ? -1 : 1) : (j % 2 ? -1 : 1);
            std::vector<int> e(zero);
            e[static_cast<std::size_t>(i)] = j;
            f.push_back({e, b * Rational(sgn)});
        }
        acc *= series_from(f, vars, cap);
    }

    // (alpha - r + sum u + sum v)^{k^2}, with alpha as the Poly variable
    MultiSeries base(vars, cap);
    base.add_term(zero, Poly(std::vector<Rational>{Rational(-r), Rational(1)}));
    for (int i = 0; i < k && cap >= 1; ++i)
        base.add_term(unit(vars, i), Poly::constant(Rational(1)));
    for (int e = 0; e < k * k; ++e) acc *= base;

    std::vector<int> target(static_cast<std::size_t>(vars), cap);
    Poly p = acc.coeff(target);
    return p.scaled(Rational(BigInt(1), BigInt::factorial(static_cast<unsigned long>(k))));
}

std::vector<Poly> compute_P_family(int k) {
    check_k(k);
    std::vector<Poly> ps;
    ps.reserve(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) ps.push_back(compute_P(r, k));
    return ps;
}

PiecewisePoly compute_Mk(int k) { return compute_family(k).Mk; }

PiecewisePoly compute_gamma(int k) { return compute_family(k).gamma; }

PiecewisePoly gamma_oracle(int k) {
    check_k(k);
    // expand prod_{i<j} (w_i - w_j)^2 into monomials; dense exponent table
    // with per-variable degree at most 2(k-1)
    const int width = 2 * k - 1;
    std::size_t size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<std::size_t>(width);
    std::vector<long> coeffs(size, 0);
    std::vector<std::size_t> stride(static_cast<std::size_t>(k), 1);
    for (int i = k - 2; i >= 0; --i)
        stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i + 1)] *
                                              static_cast<std::size_t>(width);
    coeffs[0] = 1;
    std::vector<long> next(size);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            for (int rep = 0; rep < 2; ++rep) {  // multiply twice by (w_i - w_j)
                std::fill(next.begin(), next.end(), 0L);
                for (std::size_t idx = 0; idx < size; ++idx) {
                    long c = coeffs[idx];
                    if (c == 0) continue;
                    next[idx + stride[static_cast<std::size_t>(i)]] += c;
                    next[idx + stride[static_cast<std::size_t>(j)]] -= c;
                }
                coeffs.swap(next);
            }
        }
    }

    // group monomials by sorted exponent vector: the delta-integral of
    // prod w_i^{a_i} over the unit cube is symmetric in the exponents
    std::map<std::vector<int>, long> groups;
    for (std::size_t idx = 0; idx < size; ++idx) {
        if (coeffs[idx] == 0) continue;
        std::vector<int> exps(static_cast<std::size_t>(k));
        std::size_t rem = idx;
        for (int i = k - 1; i >= 0; --i) {
            exps[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(width));
            rem /= static_cast<std::size_t>(width);
        }
        std::sort(exps.begin(), exps.end());
        groups[exps] += coeffs[idx];
    }

    PiecewisePoly total;
    for (const auto& [exps, c] : groups) {
        if (c == 0) continue;
        PiecewisePoly conv = PiecewisePoly(
            {Rational(0), Rational(1)},
            {Poly::monomial(Rational(1), static_cast<std::size_t>(exps[0]))}, Poly());
        for (std::size_t i = 1; i < exps.size(); ++i) {
            PiecewisePoly density({Rational(0), Rational(1)},
                                  {Poly::monomial(Rational(1), static_cast<std::size_t>(exps[i]))},
                                  Poly());
            conv = convolve(conv, density);
        }
        total = total + conv.scaled(Rational(c));
    }

    BigInt g1p = BigInt::barnes_g1p(static_cast<unsigned long>(k));
    Rational norm(BigInt(1), BigInt::factorial(static_cast<unsigned long>(k)) * g1p * g1p);
    return total.scaled(norm);
}

Rational compute_gk(int k) {
    if (k < 1) throw std::invalid_argument("compute_gk: k must be >= 1");
    BigInt num = BigInt::barnes_g1p(static_cast<unsigned long>(k));
    return Rational(num * num, BigInt::barnes_g1p(static_cast<unsigned long>(2 * k)));
}

int vanishing_order(int k, int r) {
    check_k(k);
    if (r < 0 || r > k) throw std::invalid_argument("vanishing_order: r outside [0, k]");
    Poly p = compute_P(r, k);
    if (p.is_zero()) throw std::domain_error("vanishing_order: zero polynomial");
    Poly shifted = p.compose_affine(Rational(r), Rational(1));  // Taylor shift to alpha = r
    int order = 0;
    while (shifted.coeff(static_cast<std::size_t>(order)).is_zero()) ++order;
    return order;
}

int smoothness_order(const PiecewisePoly& f, const Rational& b) { return f.smoothness_order_at(b); }

UniquenessReport uniqueness_check_k3(const Rational& rhs_perturbation) {
    // Unknowns: coefficients c_0..c_9 of the middle piece m(alpha) on (1,2].
    // Constraints:
    //   (a) m(alpha) + m(3-alpha) - 42 == 0 identically       (10 equations)
    //   (b) m^(j)(1) == d^j/dalpha^j alpha^9 at alpha=1, j=0..4 (5 equations)
    const int n = 10;
    std::vector<std::vector<Rational>> rows;  // each row: n coefficients + rhs

    // (a): coefficient of alpha^t in m(alpha) + m(3-alpha) - 42
    // m(3-alpha) = sum_i c_i (3-alpha)^i; (3-alpha)^i = sum_t C(i,t) 3^{i-t} (-1)^t alpha^t
    for (int t = 0; t < n; ++t) {
        std::vector<Rational> row(n + 1, Rational(0));
        for (int i = 0; i < n; ++i) {
            Rational coef(0);
            if (i == t) coef += Rational(1);
            if (i >= t) {
                Rational binom(BigInt::binomial(static_cast<unsigned long>(i),
                                                static_cast<unsigned long>(t)));
                Rational p3 = Rational(3).pow(i - t);
                coef += binom * p3 * Rational(t % 2 ? -1 : 1);
            }
            row[static_cast<std::size_t>(i)] = coef;
        }
        row[n] = (t == 0) ? Rational(42) : Rational(0);
        rows.push_back(std::move(row));
    }
    // (b): sum_i c_i * i!/(i-j)! == 9!/(9-j)! at alpha = 1
    for (int j = 0; j <= 4; ++j) {
        std::vector<Rational> row(n + 1, Rational(0));
        for (int i = j; i < n; ++i) {
            BigInt falling(1);
            for (int t = 0; t < j; ++t) falling *= BigInt(i - t);
            row[static_cast<std::size_t>(i)] = Rational(falling);
        }
        BigInt rhs(1);
        for (int t = 0; t < j; ++t) rhs *= BigInt(9 - t);
        row[n] = Rational(rhs);
        if (j == 0) row[n] += rhs_perturbation;
        rows.push_back(std::move(row));
    }

    // exact Gaussian elimination on the 15 x 11 augmented system
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][static_cast<std::size_t>(col)];
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank) continue;
            Rational f = rows[r2][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c2 = col; c2 <= n; ++c2)
                rows[r2][static_cast<std::size_t>(c2)] -=
                    f * rows[rank][static_cast<std::size_t>(c2)];
        }
        ++rank;
    }

    UniquenessReport rep;
    rep.consistent = true;
    for (std::size_t r2 = rank; r2 < rows.size(); ++r2)
        if (!rows[r2][n].is_zero()) rep.consistent = false;
    rep.solution_space_dim = n - static_cast<int>(rank);
    if (!rep.consistent || rep.solution_space_dim != 0) return rep;

    // read off the unique solution (after full reduction row i has a lone 1
    // in its pivot column)
    std::vector<Rational> sol(n, Rational(0));
    for (std::size_t r2 = 0; r2 < rank; ++r2) {
        int col = -1;
        for (int c2 = 0; c2 < n; ++c2)
            if (!rows[r2][static_cast<std::size_t>(c2)].is_zero()) {
                col = c2;
                break;
            }
        if (col >= 0) sol[static_cast<std::size_t>(col)] = rows[r2][n];
    }
    Poly middle(std::move(sol));
    Poly first = Poly::monomial(Rational(1), 9);
    // symmetry reflects the alpha^9 piece onto (2,3]: 42 - (3-alpha)^9
    Poly third = Poly::constant(Rational(42)) - first.compose_affine(Rational(3), Rational(-1));
    rep.witness = PiecewisePoly({Rational(0), Rational(1), Rational(2), Rational(3)},
                                {first, middle, third}, Poly::constant(Rational(42)));
    return rep;
}

MomentPolyFamily compute_family(int k) {
    check_k(k);
    MomentPolyFamily fam;
    fam.k = k;
    fam.P = compute_P_family(k);
    Rational inv_fact(BigInt(1), BigInt::factorial(static_cast<unsigned long>(k * k)));
    std::vector<Rational> bps;
    for (int i = 0; i <= k; ++i) bps.push_back(Rational(i));
    std::vector<Poly> pieces;
    Poly partial;
    for (int ell = 0; ell < k; ++ell) {
        partial += fam.P[static_cast<std::size_t>(ell)].scaled(
            Rational(BigInt::binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(ell))));
        pieces.push_back(partial.scaled(inv_fact));
    }
    partial += fam.P[static_cast<std::size_t>(k)];
    fam.Mk = PiecewisePoly(std::move(bps), std::move(pieces), partial.scaled(inv_fact));
    fam.gamma = fam.Mk.differentiate();
    return fam;
}

}  // namespace moments
}  // namespace zm

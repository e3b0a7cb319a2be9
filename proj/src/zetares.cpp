#include "zetamoments/zetares.hpp"

#include "zetamoments/poly.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace zm {
namespace nf {

const ZetaLaurent& ZetaLaurent::standard() {
    static const ZetaLaurent instance = [] {
        ZetaLaurent z;
        // Euler-Maclaurin values (see file header); gamma_0 is the
        // Euler-Mascheroni constant
        z.literals = {
            "0.577215664901532860606512090082402431",
            "-0.072815845483676724860586375874901319",
            "-0.009690363192872318484530386035212529",
            "0.002053834420303345866160046542753384",
            "0.002325370065467300057468170177526068",
            "0.000793323817301062701753334877444445",
            "-0.000238769345430199609872421841908004",
            "-0.000527289567057751046074097505478858",
            "-0.000352123353803039509602052165001209",
        };
        for (const auto& s : z.literals) z.gammas.push_back(std::strtod(s.c_str(), nullptr));
        z.order = static_cast<int>(z.gammas.size());
        return z;
    }();
    return instance;
}

namespace {

// truncated series product, length n (powers 0..n-1 of t)
std::vector<double> trunc_mul(const std::vector<double>& a, const std::vector<double>& b,
                              std::size_t n) {
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<double> laurent_base(int k, const ZetaLaurent& laurent) {
    if (k < 1 || k > 6) throw std::invalid_argument("residue_main_term: k outside [1, 6]");
    if (k - 1 > laurent.order)
        throw std::invalid_argument("residue_main_term: k exceeds stored Laurent order");
    std::size_t n = static_cast<std::size_t>(k);
    // b(t) = (s-1) zeta(s) = 1 + sum_i (-1)^i gamma_i t^{i+1} / i!
    std::vector<double> b(n, 0.0);
    b[0] = 1.0;
    double fact = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i > 0) fact *= static_cast<double>(i);
        b[i + 1] = (i % 2 ? -1.0 : 1.0) * laurent.gammas[i] / fact;
    }
    std::vector<double> acc(n, 0.0);
    acc[0] = 1.0;
    for (int rep = 0; rep < k; ++rep) acc = trunc_mul(acc, b, n);
    // multiply by 1/s = 1/(1+t)
    std::vector<double> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = (i % 2 ? -1.0 : 1.0);
    return trunc_mul(acc, inv, n);
}

std::vector<double> q_factor(int k, long q, std::size_t n) {
    // (1 - q^{-s})^k with q^{-s} = q^{-1} e^{-t ln q}
    std::vector<double> inner(n, 0.0);
    double lq = std::log(static_cast<double>(q));
    double term = -1.0 / static_cast<double>(q);  // -q^{-1} (-ln q)^j / j!
    inner[0] = 1.0 + term;
    for (std::size_t j = 1; j < n; ++j) {
        term *= -lq / static_cast<double>(j);
        inner[j] = term;
    }
    std::vector<double> acc(n, 0.0);
    acc[0] = 1.0;
    for (int rep = 0; rep < k; ++rep) acc = trunc_mul(acc, inner, n);
    return acc;
}

std::vector<double> assemble_Q(const std::vector<double>& base) {
    // Res = X * [t^{k-1}] base(t) e^{tL}; Q(L) = sum_b base[k-1-b] L^b / b!
    std::size_t n = base.size();
    std::vector<double> Q(n, 0.0);
    double fact = 1.0;
    for (std::size_t b = 0; b < n; ++b) {
        if (b > 1) fact *= static_cast<double>(b);
        Q[b] = base[n - 1 - b] / fact;
    }
    return Q;
}

}  // namespace

std::vector<double> residue_main_term(int k, const ZetaLaurent& laurent) {
    return assemble_Q(laurent_base(k, laurent));
}

std::vector<double> residue_main_term_q(int k, long q, const ZetaLaurent& laurent) {
    if (q < 2) throw std::invalid_argument("residue_main_term_q: q must be >= 2");
    std::vector<double> base = laurent_base(k, laurent);
    return assemble_Q(trunc_mul(base, q_factor(k, q, base.size()), base.size()));
}

double residue_phi(const std::vector<double>& Q, double y) {
    double L = std::log(y);
    double r = 0.0;
    for (std::size_t i = Q.size(); i-- > 0;) r = r * L + Q[i];
    return y * r;
}

std::vector<long> primes_up_to(long n) {
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    std::vector<long> out;
    for (long p = 2; p <= n; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (long m = p * p; m <= n; m += p) comp[static_cast<std::size_t>(m)] = true;
    }
    return out;
}

namespace {

// zeta(s) at integer s >= 2 by direct sum + Euler-Maclaurin tail
long double zeta_int(int s) {
    const long M = 20000;
    long double sum = 0.0L;
    for (long nn = M; nn >= 1; --nn) sum += powl(static_cast<long double>(nn), -s);
    long double Mf = static_cast<long double>(M);
    sum += powl(Mf, 1.0L - s) / (s - 1.0L);
    sum -= powl(Mf, static_cast<long double>(-s)) / 2.0L;
    sum += s * powl(Mf, -s - 1.0L) / 12.0L;
    sum -= static_cast<long double>(s) * (s + 1) * (s + 2) * powl(Mf, -s - 3.0L) / 720.0L;
    return sum;
}

// prime zeta P(s) = sum_m mu(m)/m log zeta(ms)
long double prime_zeta(int s) {
    auto mu = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    long double total = 0.0L;
    for (int m = 1; m * s <= 128; ++m) {
        int mm = mu(m);
        if (mm == 0) continue;
        total += mm * logl(zeta_int(m * s)) / m;
    }
    return total;
}

// exact series coefficients c_1..c_J of log[(1-u)^A sum_j binom(k-1,j)^2 u^j]
std::vector<Rational> log_factor_series(int k, int J) {
    auto trunc = [J](const Poly& p) {
        std::vector<Rational> c;
        for (int i = 0; i <= J && i <= p.degree(); ++i) c.push_back(p.coeff(static_cast<std::size_t>(i)));
        return Poly(std::move(c));
    };
    long A = static_cast<long>(k - 1) * (k - 1);
    // log(1-u) = -sum u^j / j
    std::vector<Rational> lc(static_cast<std::size_t>(J) + 1, Rational(0));
    for (int j = 1; j <= J; ++j) lc[static_cast<std::size_t>(j)] = Rational(-1, j);
    Poly result = Poly(std::move(lc)).scaled(Rational(A));
    // T(u) = S(u) - 1, log(1+T) = sum (-1)^{m+1} T^m / m
    std::vector<Rational> tc(static_cast<std::size_t>(std::min(J, k - 1)) + 1, Rational(0));
    for (int j = 1; j <= k - 1 && j <= J; ++j) {
        BigInt b = BigInt::binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j));
        tc[static_cast<std::size_t>(j)] = Rational(b * b);
    }
    Poly T(std::move(tc));
    Poly Tpow = T;
    for (int m = 1; m <= J && !Tpow.is_zero(); ++m) {
        result += Tpow.scaled(Rational(m % 2 ? 1 : -1, m));
        Tpow = trunc(Tpow * T);
    }
    std::vector<Rational> out;
    for (int j = 0; j <= J; ++j) out.push_back(result.coeff(static_cast<std::size_t>(j)));
    return out;
}

}  // namespace

AkResult compute_ak(int k, long pmax) {
    if (k < 1) throw std::invalid_argument("compute_ak: k must be >= 1");
    if (pmax < 1000) throw std::invalid_argument("compute_ak: pmax must be >= 1000");
    AkResult res;
    res.pmax = pmax;
    if (k == 1) {
        res.value = 1.0;
        return res;
    }
    const int J = 10;
    std::vector<long> ps = primes_up_to(pmax);
    long double logsum = 0.0L;
    double A = static_cast<double>(k - 1) * (k - 1);
    for (long p : ps) {
        long double u = 1.0L / static_cast<long double>(p);
        long double s = 0.0L, upow = 1.0L;
        for (int j = 0; j <= k - 1; ++j) {
            double b = static_cast<double>(
                BigInt::binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j))
                    .to_double());
            s += b * b * upow;
            upow *= u;
        }
        logsum += A * logl(1.0L - u) + logl(s);
    }
    // prime-zeta tail: sum_{p > pmax} log f_p = sum_j c_j (P(j) - partial_j)
    std::vector<Rational> c = log_factor_series(k, J);
    long double tail = 0.0L;
    long double last_term = 0.0L;
    for (int j = 2; j <= J; ++j) {
        long double partial = 0.0L;
        for (std::size_t i = ps.size(); i-- > 0;)
            partial += powl(static_cast<long double>(ps[i]), static_cast<long double>(-j));
        long double tj = prime_zeta(j) - partial;
        last_term = static_cast<long double>(c[static_cast<std::size_t>(j)].to_double()) * tj;
        tail += last_term;
    }
    res.value = static_cast<double>(expl(logsum + tail));
    res.tail_bound = static_cast<double>(fabsl(last_term)) * 2.0 + 1e-15;
    return res;
}

double local_dk2_series(int k, double u) {
    if (u <= 0.0 || u >= 1.0) throw std::invalid_argument("local_dk2_series: need 0 < u < 1");
    double sum = 0.0, upow = 1.0;
    for (int e = 0; e < 4096; ++e) {
        double b = BigInt::binomial(static_cast<unsigned long>(e + k - 1),
                                    static_cast<unsigned long>(k - 1))
                       .to_double();
        double term = b * b * upow;
        sum += term;
        if (e > k && term < sum * 1e-18) break;
        upow *= u;
    }
    return sum;
}

double compute_ak_q(int k, long q, long pmax) {
    if (!([](long n) {
            if (n < 2) return false;
            for (long d = 2; d * d <= n; ++d)
                if (n % d == 0) return false;
            return true;
        })(q))
        throw std::invalid_argument("compute_ak_q: q must be prime");
    return compute_ak(k, pmax).value / local_dk2_series(k, 1.0 / static_cast<double>(q));
}

}  // namespace nf
}  // namespace zm

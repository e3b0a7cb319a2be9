#include "zetamoments/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace zm {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& a, std::size_t n) {
    if (a.is_zero()) return Poly();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = a;
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return Poly();
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

double Poly::eval_double(double x) const {
    double r = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(c));
}

Poly Poly::compose_affine(const Rational& a0, const Rational& a1) const {
    // Horner in the affine argument.
    Poly lin(std::vector<Rational>{a0, a1});
    Poly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + Poly::constant(c_[i]);
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational a = c_[i];
        if (!first) os << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) os << "-";
        first = false;
        Rational mag = a.sign() < 0 ? -a : a;
        bool unit = (mag == Rational(1));
        if (i == 0 || !unit) os << mag.to_string();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PiecewisePoly::PiecewisePoly() : bp_{Rational(0)} {}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces, Poly tail)
    : bp_(std::move(breakpoints)), pc_(std::move(pieces)), tail_(std::move(tail)) {
    if (bp_.empty()) throw std::invalid_argument("PiecewisePoly: need at least one breakpoint");
    if (pc_.size() + 1 != bp_.size())
        throw std::invalid_argument("PiecewisePoly: pieces.size()+1 != breakpoints.size()");
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
        if (!(bp_[i] < bp_[i + 1]))
            throw std::invalid_argument("PiecewisePoly: breakpoints not strictly increasing");
    canonicalize();
}

void PiecewisePoly::canonicalize() {
    // merge trailing pieces equal to the tail polynomial
    while (!pc_.empty() && pc_.back() == tail_) {
        pc_.pop_back();
        bp_.pop_back();
    }
    // drop leading zero pieces (merge with the zero head)
    std::size_t lead = 0;
    while (lead < pc_.size() && pc_[lead].is_zero()) ++lead;
    if (lead > 0) {
        pc_.erase(pc_.begin(), pc_.begin() + static_cast<long>(lead));
        bp_.erase(bp_.begin(), bp_.begin() + static_cast<long>(lead));
    }
    // merge adjacent identical pieces
    std::vector<Rational> nbp{bp_[0]};
    std::vector<Poly> npc;
    for (std::size_t i = 0; i < pc_.size(); ++i) {
        if (!npc.empty() && npc.back() == pc_[i]) continue;  // extend previous piece
        if (!npc.empty()) nbp.push_back(bp_[i]);
        npc.push_back(pc_[i]);
    }
    nbp.push_back(bp_.back());
    if (npc.empty()) nbp = {bp_.back()};
    bp_ = std::move(nbp);
    pc_ = std::move(npc);
    if (pc_.empty() && tail_.is_zero()) bp_ = {Rational(0)};  // canonical zero function
}

static const Poly kZeroPoly{};

const Poly& PiecewisePoly::piece_on(const Rational& x) const {
    if (x < bp_.front()) return kZeroPoly;
    // last index i with bp_[i] <= x
    std::size_t lo = std::upper_bound(bp_.begin(), bp_.end(), x) - bp_.begin() - 1;
    if (lo >= pc_.size()) return tail_;
    return pc_[lo];
}

Rational PiecewisePoly::eval(const Rational& x) const { return piece_on(x).eval(x); }

double PiecewisePoly::eval_double(double x) const {
    // breakpoint comparison done in double; fine for diagnostics
    if (bp_.empty()) return 0.0;
    if (x < bp_.front().to_double()) return 0.0;
    std::size_t i = 0;
    while (i + 1 < bp_.size() && x >= bp_[i + 1].to_double()) ++i;
    if (i >= pc_.size() || (i + 1 == bp_.size())) return tail_.eval_double(x);
    return pc_[i].eval_double(x);
}

PiecewisePoly PiecewisePoly::differentiate() const {
    // continuity check: left limit == right value at every breakpoint
    for (std::size_t i = 0; i < bp_.size(); ++i) {
        const Poly& left = (i == 0) ? kZeroPoly : (i - 1 < pc_.size() ? pc_[i - 1] : tail_);
        const Poly& right = (i < pc_.size()) ? pc_[i] : tail_;
        if (left.eval(bp_[i]) != right.eval(bp_[i]))
            throw std::domain_error("PiecewisePoly::differentiate: discontinuity at breakpoint " +
                                    bp_[i].to_string());
    }
    std::vector<Poly> d;
    d.reserve(pc_.size());
    for (const Poly& p : pc_) d.push_back(p.derivative());
    return PiecewisePoly(bp_, std::move(d), tail_.derivative());
}

Rational PiecewisePoly::integrate(const Rational& a, const Rational& b) const {
    if (b < a) throw std::invalid_argument("PiecewisePoly::integrate: a > b");
    Rational total(0);
    auto add_segment = [&](const Poly& p, const Rational& lo, const Rational& hi) {
        if (!(lo < hi)) return;
        Poly F = p.antiderivative();
        total += F.eval(hi) - F.eval(lo);
    };
    // region boundaries: (-inf, b_0): zero; [b_i, b_{i+1}); [b_m, inf): tail
    for (std::size_t i = 0; i < pc_.size(); ++i) {
        Rational lo = std::max(a, bp_[i]);
        Rational hi = std::min(b, bp_[i + 1]);
        add_segment(pc_[i], lo, hi);
    }
    add_segment(tail_, std::max(a, bp_.back()), b);
    return total;
}

PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g) {
    std::vector<Rational> bps = f.bp_;
    bps.insert(bps.end(), g.bp_.begin(), g.bp_.end());
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<Poly> pieces;
    pieces.reserve(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i)
        pieces.push_back(f.piece_on(bps[i]) + g.piece_on(bps[i]));
    Poly tail = f.piece_on(bps.back()) + g.piece_on(bps.back());
    return PiecewisePoly(std::move(bps), std::move(pieces), std::move(tail));
}

PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g) {
    return f + g.scaled(Rational(-1));
}

PiecewisePoly PiecewisePoly::scaled(const Rational& s) const {
    std::vector<Poly> pieces;
    pieces.reserve(pc_.size());
    for (const Poly& p : pc_) pieces.push_back(p.scaled(s));
    return PiecewisePoly(bp_, std::move(pieces), tail_.scaled(s));
}

bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return a.bp_ == b.bp_ && a.pc_ == b.pc_ && a.tail_ == b.tail_;
}

int PiecewisePoly::smoothness_order_at(const Rational& b) const {
    auto it = std::find(bp_.begin(), bp_.end(), b);
    if (it == bp_.end())
        throw std::invalid_argument("smoothness_order_at: " + b.to_string() + " is not a breakpoint");
    std::size_t i = static_cast<std::size_t>(it - bp_.begin());
    Poly left = (i == 0) ? kZeroPoly : (i - 1 < pc_.size() ? pc_[i - 1] : tail_);
    Poly right = (i < pc_.size()) ? pc_[i] : tail_;
    int order = -1;
    int max_deg = std::max(left.degree(), right.degree());
    while (order <= max_deg + 1) {
        if (left.eval(b) != right.eval(b)) break;
        ++order;
        left = left.derivative();
        right = right.derivative();
    }
    return order;
}

// --- convolution ---------------------------------------------------------
//
// For one pair of pieces f_i on [a1,a2) and g_j on [c1,c2) the contribution
// to (f*g)(alpha) is   int f(t) g(alpha-t) dt   over
// t in [max(a1, alpha-c2), min(a2, alpha-c1)].  The candidate breakpoint set
// of the result contains all corner sums a+c, so on each elementary interval
// of that set the active bounds are fixed affine functions of alpha and the
// contribution is a single polynomial.

namespace {

// polynomial in t whose coefficients are polynomials in alpha
using BiPoly = std::vector<Poly>;

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// antiderivative in t, then substitute t = s0 + s1*alpha
Poly eval_antideriv_at(const BiPoly& h, const Rational& s0, const Rational& s1) {
    Poly sub(std::vector<Rational>{s0, s1});
    Poly r;
    for (std::size_t i = h.size(); i-- > 0;) {
        Poly term = h[i].scaled(Rational(1, static_cast<long>(i + 1)));
        r = r * sub + term;
    }
    return r * sub;  // antiderivative has zero constant term: multiply once more
}

}  // namespace

PiecewisePoly convolve(const PiecewisePoly& f, const PiecewisePoly& g) {
    if (!f.compact_support() || !g.compact_support())
        throw std::invalid_argument("convolve: inputs must be compactly supported (zero tail)");
    if (f.is_zero() || g.is_zero()) return PiecewisePoly();

    const auto& fb = f.breakpoints();
    const auto& gb = g.breakpoints();
    std::vector<Rational> bps;
    for (const auto& a : fb)
        for (const auto& c : gb) bps.push_back(a + c);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    std::vector<Poly> pieces(bps.size() - 1);

    for (std::size_t i = 0; i + 1 < fb.size(); ++i) {
        if (f.pieces()[i].is_zero()) continue;
        for (std::size_t j = 0; j + 1 < gb.size(); ++j) {
            if (g.pieces()[j].is_zero()) continue;
            const Rational &a1 = fb[i], &a2 = fb[i + 1];
            const Rational &c1 = gb[j], &c2 = gb[j + 1];

            // f_i(t) * g_j(alpha - t) as a BiPoly in t
            BiPoly ft;
            for (const auto& co : f.pieces()[i].coeffs()) ft.push_back(Poly::constant(co));
            BiPoly gt(1);  // g_j(alpha - t) = sum_d g_d (alpha - t)^d
            {
                const auto& gc = g.pieces()[j].coeffs();
                BiPoly lin{Poly(std::vector<Rational>{Rational(0), Rational(1)}),  // alpha
                           Poly::constant(Rational(-1))};                          // -t
                BiPoly acc{Poly::constant(Rational(1))};
                gt.assign(1, Poly());
                for (std::size_t d = 0; d < gc.size(); ++d) {
                    if (!gc[d].is_zero()) {
                        if (gt.size() < acc.size()) gt.resize(acc.size());
                        for (std::size_t e = 0; e < acc.size(); ++e)
                            gt[e] += acc[e].scaled(gc[d]);
                    }
                    if (d + 1 < gc.size()) acc = bipoly_mul(acc, lin);
                }
            }
            BiPoly integrand = bipoly_mul(ft, gt);

            // distribute over elementary intervals inside [a1+c1, a2+c2)
            for (std::size_t e = 0; e + 1 < bps.size(); ++e) {
                const Rational &u = bps[e], &v = bps[e + 1];
                if (v <= a1 + c1 || u >= a2 + c2) continue;
                // lower bound: alpha - c2 once u >= a1+c2, else a1
                Poly lower = (u >= a1 + c2) ? eval_antideriv_at(integrand, -c2, Rational(1))
                                            : eval_antideriv_at(integrand, a1, Rational(0));
                // upper bound: alpha - c1 while v <= a2+c1, else a2
                Poly upper = (v <= a2 + c1) ? eval_antideriv_at(integrand, -c1, Rational(1))
                                            : eval_antideriv_at(integrand, a2, Rational(0));
                pieces[e] += upper - lower;
            }
        }
    }
    return PiecewisePoly(std::move(bps), std::move(pieces), Poly());
}

PiecewisePoly indicator(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("indicator: need a < b");
    return PiecewisePoly({a, b}, {Poly::constant(Rational(1))}, Poly());
}

// --- JSON interchange -----------------------------------------------------
//
// {"breakpoints":[...], "pieces":[[c0,c1,...],...], "tail":[...]}
// Rationals appear as "num/den" strings; integers that fit a double exactly
// are emitted as plain JSON numbers.

namespace {

nlohmann::json rational_to_json(const Rational& r) {
    if (r.is_integer()) {
        BigInt n = r.numerator();
        if (n.fits_int64()) {
            std::int64_t v = n.to_int64();
            if (v >= -(1LL << 53) && v <= (1LL << 53)) return nlohmann::json(v);
        }
    }
    return nlohmann::json(r.to_string());
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw std::invalid_argument("rational_from_json: expected integer or \"num/den\" string");
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_to_json(c));
    return a;
}

Poly poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Poly(std::move(c));
}

}  // namespace

std::string PiecewisePoly::to_json() const {
    nlohmann::json j;
    j["breakpoints"] = nlohmann::json::array();
    for (const auto& b : bp_) j["breakpoints"].push_back(rational_to_json(b));
    j["pieces"] = nlohmann::json::array();
    for (const auto& p : pc_) j["pieces"].push_back(poly_to_json(p));
    j["tail"] = poly_to_json(tail_);
    return j.dump();
}

PiecewisePoly PiecewisePoly::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Rational> bps;
    for (const auto& e : j.at("breakpoints")) bps.push_back(rational_from_json(e));
    std::vector<Poly> pieces;
    for (const auto& e : j.at("pieces")) pieces.push_back(poly_from_json(e));
    return PiecewisePoly(std::move(bps), std::move(pieces), poly_from_json(j.at("tail")));
}

}  // namespace zm

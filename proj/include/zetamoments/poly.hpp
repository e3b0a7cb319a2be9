// Univariate polynomials over Rational and piecewise polynomials with
// half-open pieces [b_i, b_{i+1}), a polynomial tail on [b_m, inf) and value 0
// on (-inf, b_0).  Evaluation at a breakpoint uses the right-hand piece.
//
// Construction canonicalizes: adjacent pieces with identical polynomials are
// merged (including leading pieces equal to zero and trailing pieces equal to
// the tail), so structural equality is well defined.

#pragma once

#include "zetamoments/bigint.hpp"

#include <string>
#include <vector>

namespace zm {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
    // x^n with coefficient a
    static Poly monomial(const Rational& a, std::size_t n);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& s) const;
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    Poly derivative() const;
    Poly antiderivative() const;  // constant term 0
    // p(a0 + a1*x)
    Poly compose_affine(const Rational& a0, const Rational& a1) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;  // c_[i] multiplies x^i; trailing zeros trimmed
};

class PiecewisePoly {
  public:
    // Zero function.
    PiecewisePoly();
    // breakpoints strictly increasing, pieces.size()+1 == breakpoints.size(),
    // piece i valid on [b_i, b_{i+1}), tail valid on [b_m, inf).
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces, Poly tail);

    const std::vector<Rational>& breakpoints() const { return bp_; }
    const std::vector<Poly>& pieces() const { return pc_; }
    const Poly& tail() const { return tail_; }
    bool is_zero() const { return pc_.empty() && tail_.is_zero(); }
    // tail == 0, i.e. support contained in [b_0, b_m]
    bool compact_support() const { return tail_.is_zero(); }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    // The polynomial in effect on [b_i, b_i+1) / the tail / zero head.
    const Poly& piece_on(const Rational& x) const;

    // Piecewise derivative; requires continuity at every breakpoint
    // (throws std::domain_error naming the breakpoint otherwise).
    PiecewisePoly differentiate() const;
    // Exact definite integral over [a, b]; requires a <= b.
    Rational integrate(const Rational& a, const Rational& b) const;
    // Exact convolution of compactly supported functions.
    friend PiecewisePoly convolve(const PiecewisePoly& f, const PiecewisePoly& g);

    friend PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g);
    friend PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g);
    PiecewisePoly scaled(const Rational& s) const;
    friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b);
    friend bool operator!=(const PiecewisePoly& a, const PiecewisePoly& b) { return !(a == b); }

    // Largest m such that derivative orders 0..m of the two sides agree at
    // breakpoint b; -1 if the values already differ.  b must be a breakpoint.
    int smoothness_order_at(const Rational& b) const;

    std::string to_json() const;
    static PiecewisePoly from_json(const std::string& text);

  private:
    void canonicalize();
    std::vector<Rational> bp_;
    std::vector<Poly> pc_;
    Poly tail_;
};

// indicator of [a, b) as a piecewise polynomial (a < b)
PiecewisePoly indicator(const Rational& a, const Rational& b);

}  // namespace zm

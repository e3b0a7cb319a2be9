#include "zetamoments/bigint.hpp"

#include <limits>
#include <ostream>

namespace zm {

BigInt::BigInt(std::string_view s) {
    std::string buf(s);
    if (mpz_init_set_str(z_, buf.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("BigInt: bad integer literal '" + buf + "'");
    }
}

bool BigInt::fits_int64() const {
    static_assert(sizeof(long) == 8, "LP64 assumed");
    return mpz_fits_slong_p(z_) != 0;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
    return mpz_get_si(z_);
}

std::string BigInt::to_string() const {
    char* raw = mpz_get_str(nullptr, 10, z_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

BigInt BigInt::barnes_g1p(unsigned long n) {
    BigInt r(1);
    BigInt f(1);
    for (unsigned long i = 1; i + 1 <= n; ++i) {
        f *= BigInt(static_cast<long>(i));
        r *= f;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational::Rational(std::string_view s) {
    mpq_init(q_);
    std::string buf(s);
    if (mpq_set_str(q_, buf.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
        mpq_clear(q_);
        throw std::invalid_argument("Rational: bad literal '" + buf + "'");
    }
    mpq_canonicalize(q_);
}

BigInt Rational::numerator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

BigInt Rational::denominator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::domain_error("Rational: 0^negative");
    Rational r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), a);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), a);
    if (e < 0) mpq_inv(r.q_, r.q_);
    // powers of a canonical fraction stay canonical; no reduction needed
    return r;
}

std::string Rational::to_string() const {
    std::string s = numerator().to_string();
    if (!is_integer()) s += "/" + denominator().to_string();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace zm

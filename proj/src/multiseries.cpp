#include "zetamoments/multiseries.hpp"

#include <stdexcept>

namespace zm {

MultiSeries::MultiSeries(int vars, int cap) : vars_(vars), cap_(cap) {
    if (vars < 1 || vars > 8) throw std::invalid_argument("MultiSeries: vars out of range [1,8]");
    if (cap < 0 || cap > 254) throw std::invalid_argument("MultiSeries: cap out of range");
}

std::uint64_t MultiSeries::encode(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != vars_)
        throw std::invalid_argument("MultiSeries: exponent vector has wrong arity");
    std::uint64_t key = 0;
    for (int i = 0; i < vars_; ++i) {
        if (exps[i] < 0 || exps[i] > cap_)
            throw std::out_of_range("MultiSeries: exponent outside [0, cap]");
        key = key * static_cast<std::uint64_t>(cap_ + 1) + static_cast<std::uint64_t>(exps[i]);
    }
    return key;
}

void MultiSeries::add_term(const std::vector<int>& exps, const Poly& coeff) {
    if (coeff.is_zero()) return;
    std::uint64_t key = encode(exps);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly MultiSeries::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(encode(exps));
    return it == terms_.end() ? Poly() : it->second;
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
    if (vars_ != o.vars_ || cap_ != o.cap_)
        throw std::invalid_argument("MultiSeries: mismatched vars/cap");
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    MultiSeries r = a;
    for (const auto& [key, coeff] : b.terms_) {
        auto it = r.terms_.find(key);
        if (it == r.terms_.end()) {
            r.terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    MultiSeries r(a.vars_, a.cap_);
    const std::uint64_t radix = static_cast<std::uint64_t>(a.cap_) + 1;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // componentwise exponent sum with overflow (> cap) terms dropped
            std::uint64_t key = 0, pa = ka, pb = kb;
            bool keep = true;
            std::uint64_t mult = 1;
            for (int i = 0; i < a.vars_; ++i) {
                std::uint64_t e = pa % radix + pb % radix;
                if (e >= radix) {
                    keep = false;
                    break;
                }
                key += e * mult;
                mult *= radix;
                pa /= radix;
                pb /= radix;
            }
            if (!keep) continue;
            Poly prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(key);
            if (it == r.terms_.end()) {
                r.terms_.emplace(key, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.vars_ == b.vars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
}

MultiSeries MultiSeries::one(int vars, int cap) {
    MultiSeries r(vars, cap);
    r.add_term(std::vector<int>(static_cast<std::size_t>(vars), 0), Poly::constant(Rational(1)));
    return r;
}

}  // namespace zm

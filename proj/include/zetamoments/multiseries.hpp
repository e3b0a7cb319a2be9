// Truncated multivariate power series over Poly-in-alpha coefficients.
//
// Fixed variable count k and a per-variable truncation cap: exponent vectors
// with any entry above the cap are discarded by + and *.  Terms are stored in
// a sorted sparse map keyed by the mixed-radix encoding of the exponent
// vector, which keeps iteration order deterministic.

#pragma once

#include "zetamoments/poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace zm {

class MultiSeries {
  public:
    MultiSeries(int vars, int cap);

    int vars() const { return vars_; }
    int cap() const { return cap_; }

    // exps.size() == vars, each entry in [0, cap]; adds coeff to the term
    void add_term(const std::vector<int>& exps, const Poly& coeff);
    Poly coeff(const std::vector<int>& exps) const;
    std::size_t term_count() const { return terms_.size(); }

    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }
    friend bool operator==(const MultiSeries& a, const MultiSeries& b);
    friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

    static MultiSeries one(int vars, int cap);

  private:
    std::uint64_t encode(const std::vector<int>& exps) const;
    void check_compatible(const MultiSeries& o) const;

    int vars_;
    int cap_;
    std::map<std::uint64_t, Poly> terms_;  // key: mixed-radix exponent vector
};

}  // namespace zm

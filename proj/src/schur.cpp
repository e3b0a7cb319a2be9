#include "zetamoments/schur.hpp"

#include "zetamoments/moments.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace zm {
namespace schur {

void SchurVector::add(const Partition& p, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = entries.find(p);
    if (it == entries.end()) {
        entries.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) entries.erase(it);
    }
}

BigInt SchurVector::norm_squared() const {
    BigInt total(0);
    for (const auto& [p, c] : entries) total += c * c;
    return total;
}

namespace {

// enumerate partitions mu obtained from lambda by adding a vertical strip of
// `boxes` boxes (at most one per row), with at most row_bound rows
void vertical_strips(const Partition& lambda, int boxes, int row_bound,
                     const std::function<void(const Partition&)>& emit) {
    Partition mu;
    mu.reserve(lambda.size() + static_cast<std::size_t>(boxes));
    std::function<void(std::size_t, int, int)> dfs = [&](std::size_t row, int rem, int prev) {
        if (rem == 0) {
            // keep the remainder of lambda unchanged
            Partition out = mu;
            for (std::size_t i = row; i < lambda.size(); ++i) out.push_back(lambda[i]);
            emit(out);
            return;
        }
        if (static_cast<int>(row) >= row_bound) return;
        if (rem > row_bound - static_cast<int>(row)) return;  // not enough rows left
        int base = row < lambda.size() ? lambda[row] : 0;
        // add a box in this row
        if (base + 1 <= prev) {
            mu.push_back(base + 1);
            dfs(row + 1, rem - 1, base + 1);
            mu.pop_back();
        }
        // leave this row as is; below the diagram no further boxes can follow
        if (base > 0) {
            mu.push_back(base);
            dfs(row + 1, rem, base);
            mu.pop_back();
        }
    };
    dfs(0, boxes, std::numeric_limits<int>::max());
}

}  // namespace

SchurVector multiply_by_e(const SchurVector& v, int j) {
    SchurVector out;
    out.row_bound = v.row_bound;
    if (j == 0) {
        out.entries = v.entries;
        return out;
    }
    for (const auto& [lambda, c] : v.entries) {
        vertical_strips(lambda, j, v.row_bound,
                        [&](const Partition& mu) { out.add(mu, c); });
    }
    return out;
}

std::vector<SchurVector> composition_levels(int factors, int wmax, int N) {
    if (factors < 1) throw std::invalid_argument("composition_levels: factors must be >= 1");
    if (N < 1) throw std::invalid_argument("composition_levels: N must be >= 1");
    if (wmax < 0 || wmax > 2048)
        throw std::invalid_argument("composition_levels: weight out of supported range");
    // level[i][w] = sum over compositions (j_1..j_i) of w, parts in [0, N],
    // of e_{j_1} ... e_{j_i} in the Schur basis
    std::vector<SchurVector> prev(static_cast<std::size_t>(wmax) + 1);
    for (auto& v : prev) v.row_bound = N;
    prev[0].add({}, BigInt(1));
    for (int i = 1; i <= factors; ++i) {
        std::vector<SchurVector> cur(static_cast<std::size_t>(wmax) + 1);
        for (auto& v : cur) v.row_bound = N;
        for (int w = 0; w <= wmax; ++w) {
            for (int j = 0; j <= std::min(w, N); ++j) {
                if (prev[static_cast<std::size_t>(w - j)].entries.empty()) continue;
                SchurVector term = multiply_by_e(prev[static_cast<std::size_t>(w - j)], j);
                for (const auto& [p, c] : term.entries)
                    cur[static_cast<std::size_t>(w)].add(p, c);
            }
        }
        prev = std::move(cur);
    }
    return prev;
}

BigInt exact_Ik(int k, int n, int N) {
    if (k < 1 || n < 0 || N < 1) throw std::invalid_argument("exact_Ik: bad arguments");
    if (n > static_cast<std::int64_t>(k) * N) return BigInt(0);  // empty index set
    return composition_levels(k, n, N)[static_cast<std::size_t>(n)].norm_squared();
}

BigInt exact_Itilde(int k, int m, int N) {
    if (k < 1 || m < 0 || N < 1) throw std::invalid_argument("exact_Itilde: bad arguments");
    int wmax = static_cast<int>(std::min<std::int64_t>(m, static_cast<std::int64_t>(k) * N));
    std::vector<SchurVector> levels = composition_levels(k, wmax, N);
    BigInt total(0);
    for (const auto& v : levels) total += v.norm_squared();
    return total;
}

std::vector<BigInt> fN_coeffs(int k, int N) {
    if (k < 1 || N < 1) throw std::invalid_argument("fN_coeffs: bad arguments");
    std::vector<SchurVector> levels = composition_levels(k, k * N, N);
    std::vector<BigInt> out;
    out.reserve(levels.size());
    for (const auto& v : levels) out.push_back(v.norm_squared());
    return out;
}

std::vector<FfikRow> check_ffik(int k, int N, const std::vector<int>& n_grid) {
    PiecewisePoly gamma = moments::compute_gamma(k);
    int wmax = 0;
    for (int n : n_grid) {
        if (n <= 0 || n >= k * N)
            throw std::invalid_argument("check_ffik: grid requires 0 < n < kN");
        wmax = std::max(wmax, n);
    }
    std::vector<SchurVector> levels = composition_levels(k, wmax, N);
    Rational Nk2m1 = Rational(N).pow(k * k - 1);
    Rational Nk2m2 = k * k >= 2 ? Rational(N).pow(k * k - 2) : Rational(1);
    std::vector<FfikRow> rows;
    rows.reserve(n_grid.size());
    for (int n : n_grid) {
        FfikRow row;
        row.n = n;
        row.exact = levels[static_cast<std::size_t>(n)].norm_squared();
        row.asymptotic = gamma.eval(Rational(n, N)) * Nk2m1;
        row.scaled_diff = (Rational(row.exact) - row.asymptotic) / Nk2m2;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace schur
}  // namespace zm

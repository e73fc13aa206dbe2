#include "qpl/detform.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qpl::det {

Series BandMatrixSpec::entry(int row, int col, int T) const {
    if (row < 1 || row > size || col < 1 || col > size)
        throw std::invalid_argument("BandMatrixSpec::entry: index out of range");
    Series e = Series::zero(T);
    if (col == row - 1) e = Series::monomial(Coeff(-1), 0, 0, T);
    if (col >= row) {
        auto it = rules.find(col - row);
        if (it != rules.end()) e = add(e, it->second(row, T));
    }
    for (const auto& [r, c, s] : extras) {
        if (r == row && c == col) e = add(e, s.truncated(std::min(T, s.truncation())));
    }
    return e;
}

long long BandMatrixSpec::degree_bound() const {
    /* Row maxima computed at a generous scratch order. */
    const int scratch = 1 << 20;
    long long total = 0;
    for (int r = 1; r <= size; ++r) {
        long long row_max = 0;
        for (const auto& [off, fn] : rules) {
            if (r + off > size) continue;
            row_max = std::max<long long>(row_max, fn(r, scratch).q_degree());
        }
        for (const auto& [er, ec, s] : extras) {
            if (er == r) row_max = std::max<long long>(row_max, s.q_degree());
        }
        total += std::max(row_max, 0LL);
    }
    return total;
}

BandMatrixSpec build_general(int N, int i, int k) {
    if (N < 1) throw std::invalid_argument("build_general: N must be >= 1");
    if (k < 1) throw std::invalid_argument("build_general: k must be >= 1");
    if (i < 0) throw std::invalid_argument("build_general: i must be >= 0");
    BandMatrixSpec spec;
    spec.size = N;
    spec.rules[0] = [](int, int T) { return Series::one(T); };
    spec.rules[1] = [i](int r, int T) {
        return Series::monomial(Coeff(1), r + i, 1, T);
    };
    const int step = 2 * k + 1;
    spec.rules[2 * k] = [i, k, step](int r, int T) {
        long long e = static_cast<long long>(step) * (r + k) + i;
        if (e > T) return Series::zero(T);
        return Series::monomial(Coeff(-1), static_cast<int>(e), step, T);
    };
    return spec;
}

BandMatrixSpec build_tridiagonal(int N) {
    if (N < 1) throw std::invalid_argument("build_tridiagonal: N must be >= 1");
    BandMatrixSpec spec;
    spec.size = N;
    spec.rules[0] = [](int r, int T) {
        Series s = Series::one(T);
        if (r <= T) s = add(s, Series::monomial(Coeff(1), r, 1, T));
        return s;
    };
    spec.rules[1] = [](int r, int T) {
        if (2 * r + 1 > T) return Series::zero(T);
        return Series::monomial(Coeff(-1), 2 * r + 1, 2, T);
    };
    return spec;
}

Series hessenberg_det(const BandMatrixSpec& spec, int T) {
    /* With the -1 subdiagonal, expansion along the last column of the
     * leading s x s minor collapses to D_s = sum_{r<=s} M[r,s] D_{r-1}. */
    std::vector<Series> D;
    D.reserve(spec.size + 1);
    D.push_back(Series::one(T));
    int max_off = 0;
    for (const auto& [off, fn] : spec.rules) max_off = std::max(max_off, off);
    for (const auto& [r, c, s] : spec.extras) max_off = std::max(max_off, c - r);
    for (int s = 1; s <= spec.size; ++s) {
        Series d = Series::zero(T);
        for (int r = std::max(1, s - max_off); r <= s; ++r) {
            Series e = spec.entry(r, s, T);
            if (e.is_zero()) continue;
            d = add(d, mul(e, D[r - 1]));
        }
        D.push_back(std::move(d));
    }
    return D[spec.size];
}

Series hessenberg_det_exact(const BandMatrixSpec& spec) {
    return hessenberg_det(spec, static_cast<int>(spec.degree_bound()));
}

nlohmann::json matrix_to_json(const BandMatrixSpec& spec, int T) {
    nlohmann::json out = nlohmann::json::array();
    for (int r = 1; r <= spec.size; ++r) {
        for (int c = 1; c <= spec.size; ++c) {
            Series e = spec.entry(r, c, T);
            if (e.is_zero()) continue;
            out.push_back({{"row", r}, {"col", c}, {"entry", e.to_json()}});
        }
    }
    return out;
}

}  // namespace qpl::det

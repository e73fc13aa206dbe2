#include "qpl/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpl/qfuncs.hpp"

namespace qpl::fam {

namespace {

long long choose2(long long v) { return v * (v - 1) / 2; }

/* q-exponent of the (m,n) summand, before the binomial brackets. */
long long summand_exponent(int i, int k, int m, int n) {
    long long w = static_cast<long long>(2 * k + 1) * n;
    return choose2(w + 1) + static_cast<long long>(m) * m + w * m +
           static_cast<long long>(i) * (m + n);
}

}  // namespace

Series f_upper(const FamilyParams& p, int truncation) {
    if (truncation < 0) throw std::invalid_argument("f_upper: negative truncation");
    if (p.i < 0 || p.j < 0 || p.k < 0)
        throw std::invalid_argument("f_upper: i, j, k must be non-negative");
    if (p.N < 0) return Series::zero(truncation);

    const int step = 2 * p.k + 1;
    SeriesBuilder acc(truncation, std::min<long long>(p.N + p.j, truncation));
    for (int n = 0;; ++n) {
        /* [N-2kn-m, n] at m = 0 needs (2k+1)n <= N; it only shrinks as m
         * grows, so this bounds n for the whole row. */
        if (static_cast<long long>(step) * n > p.N) break;
        if (summand_exponent(p.i, p.k, 0, n) > truncation) break;
        for (int m = 0;; ++m) {
            if (static_cast<long long>(step) * n + m > p.N) break;            // second bracket
            if (2LL * m + static_cast<long long>(step) * n > p.N + p.j) break; // first bracket
            long long e = summand_exponent(p.i, p.k, m, n);
            if (e > truncation) break;
            int rem = truncation - static_cast<int>(e);
            Series b1 = qbinom(p.N - step * n - m + p.j, m, 1, rem);
            Series b2 = qbinom(p.N - 2 * p.k * n - m, n, step, rem);
            Series prod = mul(b1, b2);
            Coeff sgn((n % 2 == 0) ? 1 : -1);
            acc.add_scaled(prod, static_cast<int>(e), m + step * n, sgn);
        }
    }
    return std::move(acc).build();
}

DegreeBound f_upper_degree(const FamilyParams& p) {
    DegreeBound b;
    if (p.N < 0) return b;
    const int step = 2 * p.k + 1;
    for (int n = 0; static_cast<long long>(step) * n <= p.N; ++n) {
        for (int m = 0; static_cast<long long>(step) * n + m <= p.N &&
                        2LL * m + static_cast<long long>(step) * n <= p.N + p.j;
             ++m) {
            long long d = summand_exponent(p.i, p.k, m, n) +
                          qbinom_degree({p.N - step * n - m + p.j, m, 1}) +
                          qbinom_degree({p.N - 2 * p.k * n - m, n, step});
            b.q = std::max(b.q, d);
            b.x = std::max(b.x, m + step * n);
        }
    }
    return b;
}

Series f_upper_exact(const FamilyParams& p) {
    return f_upper(p, static_cast<int>(f_upper_degree(p).q));
}

Series f_infinite(int i, int k, int truncation, XMode mode, bool extra_shift) {
    if (truncation < 0) throw std::invalid_argument("f_infinite: negative truncation");
    if (i < 0 || k < 0)
        throw std::invalid_argument("f_infinite: i, k must be non-negative");
    const int step = 2 * k + 1;
    auto exponent = [&](int m, int n) {
        long long e = summand_exponent(i, k, m, n);
        if (extra_shift) e += m + static_cast<long long>(step) * n + 1;
        return e;
    };

    SeriesBuilder acc(truncation, mode == XMode::tracked ? truncation : 0);
    /* 1/(q;q)_m, grown one factor per m; same for the q^step base. */
    Series inv_m = Series::one(truncation);
    for (int m = 0;; ++m) {
        if (m > 0) {
            if (m > truncation) break;
            inv_m = div_one_minus(inv_m, m, 0);
        }
        if (exponent(m, 0) > truncation) break;
        Series inv_n = Series::one(truncation);
        for (int n = 0;; ++n) {
            if (n > 0) {
                long long f = static_cast<long long>(step) * n;
                if (f <= truncation) inv_n = div_one_minus(inv_n, static_cast<int>(f), 0);
            }
            long long e = exponent(m, n);
            if (e > truncation) break;
            Series prod = mul(inv_m, inv_n);
            Coeff sgn((n % 2 == 0) ? 1 : -1);
            int xdeg = (mode == XMode::tracked) ? m + step * n : 0;
            acc.add_scaled(prod, static_cast<int>(e), xdeg, sgn);
        }
    }
    return std::move(acc).build();
}

Series f_k0_closed(int i, int j, int N, int truncation, K0Variant variant) {
    if (j < 1) throw std::invalid_argument("f_k0_closed: j must be >= 1");
    if (N < 0) return Series::zero(truncation);
    int n_max = j - 1;
    if (variant == K0Variant::resolved) n_max = std::min(n_max, N);
    SeriesBuilder acc(truncation, std::min(n_max, truncation));
    for (int n = 0; n <= n_max; ++n) {
        long long e = (variant == K0Variant::statement)
                          ? static_cast<long long>(n) * (N + i + j)
                          : static_cast<long long>(n) * (N + i + 1);
        if (e > truncation) continue;
        Series b = qbinom(j - 1, n, 1, truncation - static_cast<int>(e));
        Coeff sgn(1);
        if (variant == K0Variant::proof && n % 2 == 1) sgn = Coeff(-1);
        acc.add_scaled(b, static_cast<int>(e), n, sgn);
    }
    return std::move(acc).build();
}

Series f_small(int N, int truncation, bool alt_poch_reading) {
    if (N < 0) throw std::invalid_argument("f_small: N must be non-negative");
    SeriesBuilder acc(truncation, 0);
    for (int j = 0; 3LL * j <= N; ++j) {
        long long e = 3LL * j * j - 2LL * j;
        if (e > truncation) break;
        int rem = truncation - static_cast<int>(e);
        Series term = qbinom(N, 3 * j, 1, rem);
        if (alt_poch_reading) {
            term = mul(term, mul(poch_finite(2, 1, j, rem), poch_finite(3, 1, j, rem)));
        } else {
            term = mul(term, poch_finite(2, 3, j, rem));
        }
        acc.add_scaled(term, static_cast<int>(e), 0, Coeff(1));
    }
    return std::move(acc).build();
}

long long f_small_degree(int N) {
    long long d = 0;
    for (int j = 0; 3LL * j <= N; ++j) {
        long long poch = 2LL * j + 3LL * j * (j - 1) / 2;
        d = std::max(d, 3LL * j * j - 2 * j + qbinom_degree({N, 3 * j, 1}) + poch);
    }
    return d;
}

Series b_seq(int N, int truncation, int sign) {
    if (N < 0) throw std::invalid_argument("b_seq: N must be non-negative");
    if (sign != 1 && sign != -1) throw std::invalid_argument("b_seq: sign must be +1 or -1");
    if (N == 0) return Series::zero(truncation);
    Series first = eval_x_one(f_upper({0, 1, 1, N - 1}, truncation));
    Series second = eval_x_one(f_upper({0, 1, 1, N - 2}, truncation));
    Series shifted = mul(Series::monomial(Coeff(sign), N - 1, 0, truncation), second);
    return add(first, shifted);
}

int resolve_b_sign(int n_max, int truncation) {
    bool plus_ok = true, minus_ok = true;
    for (int M = 1; M <= n_max && (plus_ok || minus_ok); ++M) {
        Series f = f_small(M, truncation);
        if (plus_ok && f != b_seq(M, truncation, +1)) plus_ok = false;
        if (minus_ok && f != b_seq(M, truncation, -1)) minus_ok = false;
    }
    if (plus_ok == minus_ok) return 0;
    return plus_ok ? +1 : -1;
}

Series overpartition_gf(int i, int k, int truncation) {
    Series num = f_infinite(i, k, truncation, XMode::tracked);
    Series den = poch_infinite(1, 1, truncation, /*x_weight=*/1);
    return mul(num, inverse(den));
}

Series FUpperCache::get(const FamilyParams& p, int truncation) {
    std::tuple<int, int, int, int> key{p.i, p.j, p.k, p.N};
    std::shared_ptr<const Series> val;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) val = it->second;
    }
    if (!val) {
        val = std::make_shared<const Series>(f_upper_exact(p));
        std::lock_guard<std::mutex> lock(mu_);
        val = map_.emplace(key, std::move(val)).first->second;
    }
    if (val->truncation() >= truncation) return val->truncated(truncation);
    return val->as_exact_polynomial(truncation);
}

void FUpperCache::clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
}

std::size_t FUpperCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

}  // namespace qpl::fam

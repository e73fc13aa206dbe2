#include "qpl/recurrence.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qpl/qfuncs.hpp"

namespace qpl::rec {

namespace {

Series::Term leading_term(const Series& s) { return s.terms().front(); }

long long choose2(long long v) { return v * (v - 1) / 2; }

}  // namespace

RecurrenceSchema RecurrenceSchema::merged() const {
    RecurrenceSchema out = *this;
    out.terms.clear();
    for (const RecTerm& t : terms) {
        bool merged_in = false;
        for (RecTerm& u : out.terms) {
            if (u.family == t.family && u.shift == t.shift && u.xsub == t.xsub) {
                auto a = u.coeff;
                auto b = t.coeff;
                u.coeff = [a, b](int N, int T) { return add(a(N, T), b(N, T)); };
                merged_in = true;
                break;
            }
        }
        if (!merged_in) out.terms.push_back(t);
    }
    return out;
}

FamilyFn memoize_family(FamilyFn fn) {
    auto mu = std::make_shared<std::mutex>();
    auto memo = std::make_shared<std::map<std::pair<int, int>, Series>>();
    return [fn, mu, memo](int N, int T) {
        std::pair<int, int> key{N, T};
        {
            std::lock_guard<std::mutex> lock(*mu);
            auto it = memo->find(key);
            if (it != memo->end()) return it->second;
        }
        Series v = fn(N, T);
        std::lock_guard<std::mutex> lock(*mu);
        return memo->emplace(key, std::move(v)).first->second;
    };
}

Report check(const RecurrenceSchema& schema_in, std::optional<int> T_override) {
    RecurrenceSchema schema = schema_in.merged();
    if (schema.families.empty())
        throw std::invalid_argument("check: schema needs at least one family");
    int T;
    if (T_override) {
        T = *T_override;
    } else if (schema.degree_bound) {
        long long b = 0;
        for (int N = schema.lo; N <= schema.hi; ++N)
            b = std::max(b, schema.degree_bound(N));
        T = static_cast<int>(b);
    } else {
        throw std::invalid_argument("check: no truncation order available");
    }

    for (int N = schema.lo; N <= schema.hi; ++N) {
        Series residual = Series::zero(T);
        for (const RecTerm& t : schema.terms) {
            Series member = (N - t.shift < 0)
                                ? Series::zero(T)
                                : schema.families[t.family](N - t.shift, T);
            if (member.is_zero()) continue;
            if (t.xsub > 0) member = subst_x(member, t.xsub);
            residual = add(residual, mul(t.coeff(N, T), member));
        }
        if (!residual.is_zero())
            return Report::failed(schema.name, schema.lo, schema.hi, N,
                                  leading_term(residual));
    }
    return Report::passed(schema.name, schema.lo, schema.hi);
}

FitResult fit_exponent(const std::function<RecurrenceSchema(int delta)>& make,
                       int delta_lo, int delta_hi) {
    FitResult r;
    for (int d = delta_lo; d <= delta_hi; ++d) {
        if (check(make(d)).pass) r.passing.push_back(d);
    }
    if (r.passing.size() == 1) r.resolved = r.passing.front();
    return r;
}

/* ---------------------------------------------------------------- */

namespace {

FamilyFn f_upper_family(int i, int j, int k, std::shared_ptr<fam::FUpperCache> cache) {
    if (cache) {
        return [i, j, k, cache](int N, int T) {
            return cache->get({i, j, k, N}, T);
        };
    }
    return memoize_family([i, j, k](int N, int T) {
        return fam::f_upper({i, j, k, N}, T);
    });
}

/* c * x^xdeg * q^qexp(N). A coefficient whose exponent falls below its
 * x-degree cannot be stored; schema builders pad the whole residual with a
 * power of q so this never triggers on contributing terms. */
std::function<Series(int, int)> monomial_coeff(long long c,
                                               std::function<long long(int)> qexp,
                                               int xdeg) {
    return [c, qexp, xdeg](int N, int T) {
        long long e = qexp(N);
        if (e > T) return Series::zero(T);
        if (e < xdeg)
            throw std::invalid_argument("schema coefficient violates e <= d");
        return Series::monomial(Coeff(c), static_cast<int>(e), xdeg, T);
    };
}

long long f_deg(int i, int j, int k, int N) {
    return N < 0 ? 0 : fam::f_upper_degree({i, j, k, N}).q;
}

}  // namespace

RecurrenceSchema schema_eq21(int i, int j, int k, int delta, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache) {
    RecurrenceSchema s;
    s.name = "eq2.1(i=" + std::to_string(i) + ",j=" + std::to_string(j) +
             ",k=" + std::to_string(k) + ",delta=" + std::to_string(delta) + ")";
    s.families = {f_upper_family(i, j, k, cache)};
    const int step = 2 * k + 1;
    auto mid = [=](int N) { return static_cast<long long>(N) + j + k - 1 + delta; };
    auto last = [=](int N) { return static_cast<long long>(step) * (N - k) + i; };
    /* Residual multiplied by q^pad so every contributing coefficient
     * respects e <= d even for strongly negative candidate offsets. */
    long long pad = 0;
    if (hi >= 2) pad = std::max(pad, 1 - mid(std::max(lo, 2)));
    if (hi >= step) pad = std::max(pad, step - last(std::max(lo, step)));
    const int P = static_cast<int>(pad);
    s.terms = {
        {monomial_coeff(+1, [=](int) { return static_cast<long long>(P); }, 0), 0, 0, 0},
        {monomial_coeff(-1, [=](int) { return static_cast<long long>(P); }, 0), 1, 0, 0},
        {monomial_coeff(-1, [=](int N) { return mid(N) + P; }, 1), 2, 0, 0},
        {monomial_coeff(+1, [=](int N) { return last(N) + P; }, step), step, 0, 0},
    };
    s.lo = lo;
    s.hi = hi;
    s.degree_bound = [=](int N) {
        long long b = f_deg(i, j, k, N);
        b = std::max(b, f_deg(i, j, k, N - 1));
        b = std::max(b, mid(N) + f_deg(i, j, k, N - 2));
        b = std::max(b, last(N) + f_deg(i, j, k, N - step));
        return b + P;
    };
    return s;
}

RecurrenceSchema schema_eq22(int lo, int hi, std::shared_ptr<fam::FUpperCache> cache,
                             int perturb) {
    RecurrenceSchema s;
    s.name = perturb ? "eq2.2(perturbed)" : "eq2.2";
    s.families = {f_upper_family(0, 1, 1, cache)};
    /* residual F_N - (1 + x q^{N+perturb}) F_{N-1} + x^2 q^{2N-1} F_{N-2} */
    auto mid_coeff = [perturb](int N, int T) {
        Series c = Series::monomial(Coeff(-1), 0, 0, T);
        if (N + perturb <= T)
            c = add(c, Series::monomial(Coeff(-1), N + perturb, 1, T));
        return c;
    };
    s.terms = {
        {monomial_coeff(+1, [](int) { return 0LL; }, 0), 0, 0, 0},
        {mid_coeff, 1, 0, 0},
        {monomial_coeff(+1, [](int N) { return 2LL * N - 1; }, 2), 2, 0, 0},
    };
    s.lo = lo;
    s.hi = hi;
    s.degree_bound = [perturb](int N) {
        long long b = f_deg(0, 1, 1, N);
        b = std::max(b, N + perturb + f_deg(0, 1, 1, N - 1));
        b = std::max(b, 2LL * N - 1 + f_deg(0, 1, 1, N - 2));
        return b;
    };
    return s;
}

RecurrenceSchema schema_eq23(int i, int j, int k, int delta, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache) {
    if (j < 1) throw std::invalid_argument("schema_eq23: j must be >= 1");
    RecurrenceSchema s;
    s.name = "eq2.3(i=" + std::to_string(i) + ",j=" + std::to_string(j) +
             ",k=" + std::to_string(k) + ",delta=" + std::to_string(delta) + ")";
    s.families = {f_upper_family(i, j, k, cache), f_upper_family(i, j - 1, k, cache)};
    auto mid = [=](int N) { return static_cast<long long>(N) + i + j - 1 + delta; };
    long long pad = 0;
    if (hi >= 1) pad = std::max(pad, 1 - mid(std::max(lo, 1)));
    const int P = static_cast<int>(pad);
    s.terms = {
        {monomial_coeff(+1, [=](int) { return static_cast<long long>(P); }, 0), 0, 0, 0},
        {monomial_coeff(-1, [=](int) { return static_cast<long long>(P); }, 0), 0, 0, 1},
        {monomial_coeff(-1, [=](int N) { return mid(N) + P; }, 1), 1, 0, 1},
    };
    s.lo = lo;
    s.hi = hi;
    s.degree_bound = [=](int N) {
        long long b = f_deg(i, j, k, N);
        b = std::max(b, f_deg(i, j - 1, k, N));
        b = std::max(b, mid(N) + f_deg(i, j - 1, k, N - 1));
        return b + P;
    };
    return s;
}

RecurrenceSchema schema_eq24(int i, int k, int delta, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache) {
    if (k < 1) throw std::invalid_argument("schema_eq24: k must be >= 1");
    RecurrenceSchema s;
    s.name = "eq2.4(i=" + std::to_string(i) + ",k=" + std::to_string(k) +
             ",delta=" + std::to_string(delta) + ")";
    s.families = {f_upper_family(i, 0, k, cache)};
    const int step = 2 * k + 1;
    const long long last_e = choose2(2 * k + 2) + i;
    const int P = static_cast<int>(std::max(0LL, 1 - (1LL + delta)));
    s.terms = {
        {monomial_coeff(+1, [=](int) { return static_cast<long long>(P); }, 0), 0, 0, 0},
        {monomial_coeff(-1, [=](int) { return static_cast<long long>(P); }, 0), 1, 1, 0},
        {monomial_coeff(-1, [=](int) { return 1LL + delta + P; }, 1), 2, 2, 0},
        {monomial_coeff(+1, [=](int) { return last_e + P; }, step), step, step, 0},
    };
    s.lo = lo;
    s.hi = hi;
    s.degree_bound = [=](int N) {
        auto sub_deg = [=](int M, int p) {
            if (M < 0) return 0LL;
            auto d = fam::f_upper_degree({i, 0, k, M});
            return d.q + static_cast<long long>(p) * d.x;
        };
        long long b = sub_deg(N, 0);
        b = std::max(b, sub_deg(N - 1, 1));
        b = std::max(b, 1 + delta + sub_deg(N - 2, 2));
        b = std::max(b, last_e + sub_deg(N - step, step));
        return b + P;
    };
    return s;
}

RecurrenceSchema schema_eq25(int sign, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache) {
    RecurrenceSchema s;
    s.name = std::string("eq2.5(sign=") + (sign >= 0 ? "+" : "-") + ")";
    s.families = {f_upper_family(0, 1, 1, cache)};
    auto head_coeff = [](int, int T) {
        Series c = Series::monomial(Coeff(-1), 0, 0, T);
        if (1 <= T) c = add(c, Series::monomial(Coeff(-1), 1, 1, T));
        return c;   // -(1 + xq)
    };
    s.terms = {
        {monomial_coeff(+1, [](int) { return 0LL; }, 0), 0, 0, 0},
        {head_coeff, 1, 1, 0},
        {monomial_coeff(-sign, [](int) { return 3LL; }, 2), 2, 2, 0},
    };
    s.lo = lo;
    s.hi = hi;
    s.degree_bound = [](int N) {
        auto sub_deg = [](int M, int p) {
            if (M < 0) return 0LL;
            auto d = fam::f_upper_degree({0, 1, 1, M});
            return d.q + static_cast<long long>(p) * d.x;
        };
        long long b = sub_deg(N, 0);
        b = std::max(b, 1 + sub_deg(N - 1, 1));
        b = std::max(b, 3 + sub_deg(N - 2, 2));
        return b;
    };
    return s;
}

/* ---------------------------------------------------------------- */

Report check_functional_eq_51(int i, int k, int T) {
    if (T < 1) throw std::invalid_argument("check_functional_eq_51: T must be >= 1");
    const std::string name =
        "eq5.1(i=" + std::to_string(i) + ",k=" + std::to_string(k) + ")";
    const int step = 2 * k + 1;
    Series g = fam::overpartition_gf(i, k, T);

    Series inv_1 = inverse(poch_finite(1, 1, 1, T, 1));         // 1/(1-xq)
    Series inv_12 = inverse(poch_finite(1, 1, 2, T, 1));        // 1/((1-xq)(1-xq^2))
    Series inv_step = inverse(poch_finite(1, 1, step, T, 1));   // 1/(xq;q)_{2k+1}

    Series rhs = mul(inv_1, subst_x(g, 1));
    long long mid_exp = i + 1;
    if (mid_exp <= T)
        rhs = add(rhs, mul(Series::monomial(Coeff(1), static_cast<int>(mid_exp), 1, T),
                           mul(inv_12, subst_x(g, 2))));
    long long last_exp = choose2(2 * k + 2) + i;
    if (last_exp <= T)
        rhs = sub(rhs, mul(Series::monomial(Coeff(1), static_cast<int>(last_exp), step, T),
                           mul(inv_step, subst_x(g, step))));

    Series residual = sub(g, rhs);
    if (!residual.is_zero())
        return Report::failed(name, 0, T, residual.order(), leading_term(residual));
    return Report::passed(name, 0, T);
}

namespace {

Report check_second_order_rec(const std::string& name, const FamilyFn& seq, int T,
                              int N_lo, int N_hi, bool perturb_exponent) {
    auto one_minus_q = [T](long long e) {   // (1 - q^e), e >= 0; zero when e == 0
        if (e == 0) return Series::zero(T);
        Series s = Series::one(T);
        if (e <= T) s = sub(s, Series::monomial(Coeff(1), static_cast<int>(e), 0, T));
        return s;
    };
    for (int N = N_lo; N <= N_hi; ++N) {
        Series t0 = mul(one_minus_q(N - 2), seq(N, T));
        Series t1 = mul(one_minus_q(2 * N - 3), seq(N - 1, T));
        Series t2 = Series::zero(T);
        long long e2 = 2LL * N - 4 + (perturb_exponent ? 1 : 0);
        if (e2 <= T)
            t2 = mul(Series::monomial(Coeff(1), static_cast<int>(e2), 0, T),
                     mul(one_minus_q(N - 1), seq(N - 2, T)));
        Series residual = add(sub(t0, t1), t2);
        if (!residual.is_zero())
            return Report::failed(name, N_lo, N_hi, N, leading_term(residual));
    }
    return Report::passed(name, N_lo, N_hi);
}

}  // namespace

Report check_f_small_rec(int T, int Nmax, bool perturb_exponent) {
    if (Nmax < 2) throw std::invalid_argument("check_f_small_rec: Nmax must be >= 2");
    FamilyFn seq = memoize_family(
        [](int N, int T2) { return N < 0 ? Series::zero(T2) : fam::f_small(N, T2); });
    return check_second_order_rec(
        perturb_exponent ? "eq4.3(perturbed)" : "eq4.3", seq, T, 2, Nmax,
        perturb_exponent);
}

Report check_b_seq_rec(int T, int Nmax, int sign) {
    FamilyFn seq = memoize_family([sign](int N, int T2) {
        return N < 0 ? Series::zero(T2) : fam::b_seq(N, T2, sign);
    });
    return check_second_order_rec("eq4.3(on b)", seq, T, 3, Nmax, false);
}

Report check_qgauss_limit(int T, bool alt_reading) {
    const std::string name = alt_reading ? "qgauss-limit(alt reading)" : "qgauss-limit";
    Series alt_prefactor = alt_reading ? poch_infinite(2, 3, T) : Series::one(T);
    SeriesBuilder acc(T, 0);
    Series inv = Series::one(T);   // 1/(q;q)_{3j}, grown three factors per j
    for (int j = 0;; ++j) {
        if (j > 0) {
            for (int t = 3 * j - 2; t <= 3 * j; ++t)
                if (t <= T) inv = div_one_minus(inv, t, 0);
        }
        long long e = 3LL * j * j - 2 * j;
        if (e > T) break;
        Series term = alt_reading ? mul(inv, alt_prefactor)
                                  : mul(inv, poch_finite(2, 3, j, T));
        acc.add_scaled(term, static_cast<int>(e), 0, Coeff(1));
    }
    Series lhs = std::move(acc).build();
    Series rhs = inverse(poch_infinite(1, 3, T));
    Series residual = sub(lhs, rhs);
    if (!residual.is_zero())
        return Report::failed(name, 0, T, residual.order(), leading_term(residual));
    return Report::passed(name, 0, T);
}

Report check_sn_telescoping(int Nmax, std::shared_ptr<fam::FUpperCache> cache) {
    if (Nmax < 2) throw std::invalid_argument("check_sn_telescoping: Nmax must be >= 2");
    if (!cache) cache = std::make_shared<fam::FUpperCache>();
    long long bound = 4;
    for (int N = std::max(2, Nmax - 1); N <= Nmax; ++N) {
        bound = std::max(bound, 2LL * N - 1 + f_deg(0, 1, 1, N - 1) + 2);
        bound = std::max(bound, 3LL * N + f_deg(0, 1, 1, N - 3) + 3);
    }
    const int T = static_cast<int>(bound);

    auto S = [&](int N) {
        Series fN = cache->get({0, 1, 1, N}, T);
        Series f1 = N - 1 < 0 ? Series::zero(T) : cache->get({0, 1, 1, N - 1}, T);
        Series f2 = N - 2 < 0 ? Series::zero(T) : cache->get({0, 1, 1, N - 2}, T);
        Series mid = f1;
        if (N <= T) mid = add(mid, mul(Series::monomial(Coeff(1), N, 1, T), f1));
        Series last = Series::zero(T);
        if (2 * N - 1 >= 2 && 2 * N - 1 <= T)
            last = mul(Series::monomial(Coeff(1), 2 * N - 1, 2, T), f2);
        return add(sub(fN, mid), last);
    };

    for (int N = 2; N <= Nmax; ++N) {
        Series residual = S(N);
        if (N <= T)
            residual = add(residual, mul(Series::monomial(Coeff(1), N, 1, T), S(N - 1)));
        if (!residual.is_zero())
            return Report::failed("S(N)-telescoping", 2, Nmax, N, leading_term(residual));
    }
    return Report::passed("S(N)-telescoping", 2, Nmax);
}

}  // namespace qpl::rec

#include "qpl/contfrac.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpl/family.hpp"
#include "qpl/qfuncs.hpp"

namespace qpl::cf {

namespace {

Series::Term leading_term(const Series& s) { return s.terms().front(); }

}  // namespace

std::pair<Series, Series> convergent(const ContinuedFraction& cf, int depth, int T) {
    if (depth < 0 || depth > static_cast<int>(cf.pairs.size()))
        throw std::invalid_argument("convergent: depth out of range");
    Series P_prev = Series::one(T), P = cf.head.as_exact_polynomial(T);
    Series Q_prev = Series::zero(T), Q = Series::one(T);
    for (int t = 1; t <= depth; ++t) {
        const Series& a = cf.pairs[t - 1].first;
        const Series& b = cf.pairs[t - 1].second;
        Series Pn = add(mul(b, P), mul(a, P_prev));
        Series Qn = add(mul(b, Q), mul(a, Q_prev));
        P_prev = std::move(P);
        P = std::move(Pn);
        Q_prev = std::move(Q);
        Q = std::move(Qn);
    }
    return {std::move(P), std::move(Q)};
}

bool convergent_determinant_ok(const ContinuedFraction& cf, int depth, int T) {
    Series P_prev = Series::one(T), P = cf.head.as_exact_polynomial(T);
    Series Q_prev = Series::zero(T), Q = Series::one(T);
    Series prod = Series::one(T);   // prod_{s<=t} a_s
    /* t = 0: P_0 Q_{-1} - P_{-1} Q_0 = -1. */
    if (sub(mul(P, Q_prev), mul(P_prev, Q)) != neg(Series::one(T))) return false;
    for (int t = 1; t <= depth; ++t) {
        const Series& a = cf.pairs[t - 1].first;
        const Series& b = cf.pairs[t - 1].second;
        Series Pn = add(mul(b, P), mul(a, P_prev));
        Series Qn = add(mul(b, Q), mul(a, Q_prev));
        prod = mul(prod, a);
        Series expected = (t % 2 == 1) ? prod : neg(prod);
        if (sub(mul(Pn, Q), mul(P, Qn)) != expected) return false;
        P_prev = std::move(P);
        P = std::move(Pn);
        Q_prev = std::move(Q);
        Q = std::move(Qn);
    }
    return true;
}

/* ---------------------------------------------------------------- */

namespace {

Series f011(int N, int T, bool at_x_one) {
    Series f = N < 0 ? Series::zero(T) : fam::f_upper({0, 1, 1, N}, T);
    return at_x_one ? eval_x_one(f) : f;
}

/* Degree DP for the convergent polynomials. */
long long convergent_degree(const std::vector<std::pair<long long, long long>>& deg_ab,
                            long long head_deg) {
    long long p2 = 0, p1 = head_deg;
    for (const auto& [da, db] : deg_ab) {
        long long p = std::max(db + p1, da + p2);
        p2 = p1;
        p1 = p;
    }
    return p1;
}

/* Descending fraction of the ratio F_N(0,1,1;x)/F_{N-1}(0,1,1;x):
 * b_0 = 1+xq^N, b_t = 1+xq^{N-t}, a_t per schedule. */
ContinuedFraction fraction_61(int N, NumeratorSchedule sched, int T, bool at_x_one) {
    ContinuedFraction cf;
    auto denom = [&](int e) {
        Series b = Series::one(T);
        if (e <= T) b = add(b, Series::monomial(Coeff(1), e, at_x_one ? 0 : 1, T));
        return b;
    };
    cf.head = denom(N);
    for (int t = 1; t <= N - 1; ++t) {
        int e = (sched == NumeratorSchedule::printed) ? N - t : 2 * (N - t) + 1;
        Series a = (e <= T)
                       ? Series::monomial(Coeff(-1), e, at_x_one ? 0 : 2, T)
                       : Series::zero(T);
        cf.pairs.emplace_back(std::move(a), denom(N - t));
    }
    return cf;
}

}  // namespace

Report verify_61(int N, NumeratorSchedule sched) {
    if (N < 1) throw std::invalid_argument("verify_61: N must be >= 1");
    /* The printed numerator schedule leaves the e <= d cone (its innermost
     * level is x^2 q), so it is evaluated at x = 1; a failure there already
     * disproves the bivariate identity. */
    const bool at_x_one = (sched == NumeratorSchedule::printed);
    const std::string name = std::string("eq6.1") + (at_x_one ? "(printed,x=1)" : "");

    std::vector<std::pair<long long, long long>> deg_ab;
    for (int t = 1; t <= N - 1; ++t)
        deg_ab.push_back({(sched == NumeratorSchedule::printed) ? N - t : 2LL * (N - t) + 1,
                          N - t});
    long long fdeg = fam::f_upper_degree({0, 1, 1, N}).q;
    const int T = static_cast<int>(convergent_degree(deg_ab, N) + fdeg + 2);

    auto [P, Q] = convergent(fraction_61(N, sched, T, at_x_one), N - 1, T);
    Series lhs = mul(P, f011(N - 1, T, at_x_one));
    Series rhs = mul(Q, f011(N, T, at_x_one));
    Series residual = sub(lhs, rhs);
    if (!residual.is_zero())
        return Report::failed(name, N, N, N, leading_term(residual));
    return Report::passed(name, N, N);
}

Report verify_61_range(int N_lo, int N_hi, NumeratorSchedule sched) {
    for (int N = N_lo; N <= N_hi; ++N) {
        Report r = verify_61(N, sched);
        if (!r.pass) {
            r.lo = N_lo;
            r.hi = N_hi;
            return r;
        }
    }
    Report r = Report::passed("eq6.1", N_lo, N_hi);
    if (sched == NumeratorSchedule::printed) r.schema = "eq6.1(printed,x=1)";
    return r;
}

namespace {

int sign_62(int t, int depth, SignSchedule signs) {
    switch (signs) {
        case SignSchedule::all_minus: return -1;
        case SignSchedule::all_plus: return +1;
        case SignSchedule::printed: return (t == 1 || t == depth) ? +1 : -1;
    }
    return -1;
}

}  // namespace

Report verify_62(int N, SignSchedule signs) {
    if (N < 1) throw std::invalid_argument("verify_62: N must be >= 1");
    const std::string name =
        signs == SignSchedule::all_minus
            ? "eq6.2"
            : (signs == SignSchedule::printed ? "eq6.2(printed signs)" : "eq6.2(all plus)");

    std::vector<std::pair<long long, long long>> deg_ab;
    for (int t = 1; t <= N - 1; ++t) deg_ab.push_back({2LL * t + 1, t + 1});
    long long fdeg = fam::f_upper_degree({0, 1, 1, N}).q;
    /* F_{N-1}(xq) has degree fdeg(N-1) + xdeg; the shared bound covers it. */
    const int T = static_cast<int>(convergent_degree(deg_ab, 1) + fdeg +
                                   fam::f_upper_degree({0, 1, 1, N - 1}).x + 2);

    ContinuedFraction cf;
    cf.head = add(Series::one(T), Series::monomial(Coeff(1), 1, 1, T));
    for (int t = 1; t <= N - 1; ++t) {
        Series a = (2 * t + 1 <= T)
                       ? Series::monomial(Coeff(sign_62(t, N - 1, signs)), 2 * t + 1, 2, T)
                       : Series::zero(T);
        Series b = Series::one(T);
        if (t + 1 <= T) b = add(b, Series::monomial(Coeff(1), t + 1, 1, T));
        cf.pairs.emplace_back(std::move(a), std::move(b));
    }

    auto [P, Q] = convergent(cf, N - 1, T);
    Series lhs = mul(P, subst_x(f011(N - 1, T, false), 1));
    Series rhs = mul(Q, f011(N, T, false));
    Series residual = sub(lhs, rhs);
    if (!residual.is_zero())
        return Report::failed(name, N, N, N, leading_term(residual));
    return Report::passed(name, N, N);
}

Report verify_62_range(int N_lo, int N_hi, SignSchedule signs) {
    std::string name = "eq6.2";
    if (signs == SignSchedule::printed) name = "eq6.2(printed signs)";
    if (signs == SignSchedule::all_plus) name = "eq6.2(all plus)";
    for (int N = N_lo; N <= N_hi; ++N) {
        Report r = verify_62(N, signs);
        if (!r.pass) {
            r.schema = name;
            r.lo = N_lo;
            r.hi = N_hi;
            return r;
        }
    }
    return Report::passed(name, N_lo, N_hi);
}

Report check_tends_to_one(int N_max, int T) {
    Report rep = Report::passed("eq6.1-tends-to-1", 1, N_max);
    int prev = -1;
    for (int N = 1; N <= N_max; ++N) {
        auto [P, Q] = convergent(fraction_61(N, NumeratorSchedule::resolved, T, true),
                                 N - 1, T);
        Series value = mul(P, inverse(Q));
        Series dev = sub(value, Series::one(T));
        int ord = dev.order();   // T+1 when the deviation vanishes entirely
        rep.agreement.push_back({N, ord});
        if (ord <= prev) {
            return Report::failed("eq6.1-tends-to-1", 1, N_max, N,
                                  Series::Term{ord, 0, Coeff(1)});
        }
        prev = ord;
    }
    return rep;
}

/* ---------------------------------------------------------------- */

namespace {

/* Agreement order of P_d / Q_d with target: first order where
 * P_d - target * Q_d is nonzero (Q_d has unit constant term). */
int agreement_order(const Series& P, const Series& Q, const Series& target) {
    return sub(P, mul(target, Q)).order();
}

Report agreement_sweep(const std::string& name, const ContinuedFraction& cf,
                       const Series& target, int T_work, int depth_max,
                       int required_order, bool require_strict_increase) {
    Report rep = Report::passed(name, 1, depth_max);
    Series P_prev = Series::one(T_work), P = cf.head;
    Series Q_prev = Series::zero(T_work), Q = Series::one(T_work);
    int prev = -1;
    bool reached = false;
    for (int t = 1; t <= depth_max; ++t) {
        const Series& a = cf.pairs[t - 1].first;
        const Series& b = cf.pairs[t - 1].second;
        Series Pn = add(mul(b, P), mul(a, P_prev));
        Series Qn = add(mul(b, Q), mul(a, Q_prev));
        P_prev = std::move(P);
        P = std::move(Pn);
        Q_prev = std::move(Q);
        Q = std::move(Qn);
        int ord = agreement_order(P, Q, target);
        rep.agreement.push_back({t, ord});
        if (require_strict_increase && ord <= prev) {
            return Report::failed(name, 1, depth_max, t, Series::Term{ord, 0, Coeff(1)});
        }
        prev = ord;
        if (ord >= required_order) {
            reached = true;
            if (!require_strict_increase) break;
        }
    }
    if (!reached)
        return Report::failed(name, 1, depth_max, depth_max,
                              Series::Term{prev < 0 ? 0 : prev, 0, Coeff(1)});
    rep.pass = true;
    return rep;
}

}  // namespace

Report verify_thm63(int T) {
    if (T < 1) throw std::invalid_argument("verify_thm63: T must be >= 1");
    Series shifted = fam::f_infinite(0, 1, T, fam::XMode::one, /*extra_shift=*/true);
    Series lhs = mul(poch_infinite(1, 3, T), shifted);

    ContinuedFraction cf;
    cf.head = Series::zero(T);
    cf.pairs.emplace_back(Series::monomial(Coeff(1), 1, 0, T),
                          add(Series::one(T), Series::monomial(Coeff(1), 1, 0, T)));
    int depth_max = 8;
    while (static_cast<long long>(depth_max) * depth_max < 2LL * T + 20) ++depth_max;
    for (int t = 2; t <= depth_max; ++t) {
        Series a = (2 * t - 1 <= T) ? Series::monomial(Coeff(-1), 2 * t - 1, 0, T)
                                    : Series::zero(T);
        Series b = Series::one(T);
        if (t <= T) b = add(b, Series::monomial(Coeff(1), t, 0, T));
        cf.pairs.emplace_back(std::move(a), std::move(b));
    }
    /* Full agreement through order T: the residual must vanish as a
     * truncated series, i.e. its order must reach T + 1. */
    return agreement_sweep("thm6.3", cf, lhs, T, depth_max, T + 1,
                           /*require_strict_increase=*/false);
}

Report verify_thm65(int T) {
    if (T < 1) throw std::invalid_argument("verify_thm65: T must be >= 1");
    Series lhs = fam::f_infinite(0, 1, T, fam::XMode::one, /*extra_shift=*/true);
    Series rhs = sub(inverse(poch_infinite(1, 3, T)), inverse(poch_infinite(2, 3, T)));
    Series residual = sub(lhs, rhs);
    if (!residual.is_zero())
        return Report::failed("thm6.5", 0, T, residual.order(), leading_term(residual));
    return Report::passed("thm6.5", 0, T);
}

Report verify_final_theorem(int T) {
    if (T < 1) throw std::invalid_argument("verify_final_theorem: T must be >= 1");
    Series unshifted = fam::f_infinite(0, 1, T, fam::XMode::one);
    Series shifted = fam::f_infinite(0, 1, T, fam::XMode::one, /*extra_shift=*/true);
    Series lhs = sub(unshifted, shifted);
    Series rhs = inverse(poch_infinite(2, 3, T));
    Series residual = sub(lhs, rhs);
    if (!residual.is_zero())
        return Report::failed("final-theorem", 0, T, residual.order(),
                              leading_term(residual));
    return Report::passed("final-theorem", 0, T);
}

Report verify_64_agreement(int depth_max, int min_order) {
    const int T_work = depth_max * depth_max + depth_max + 10;
    Series target = mul(poch_infinite(2, 3, T_work),
                        inverse(poch_infinite(1, 3, T_work)));

    ContinuedFraction cf;
    cf.head = Series::zero(T_work);
    cf.pairs.emplace_back(Series::one(T_work), Series::one(T_work));
    cf.pairs.emplace_back(Series::monomial(Coeff(-1), 1, 0, T_work),
                          add(Series::one(T_work), Series::monomial(Coeff(1), 1, 0, T_work)));
    for (int t = 3; t <= depth_max; ++t) {
        cf.pairs.emplace_back(
            Series::monomial(Coeff(-1), 2 * t - 3, 0, T_work),
            add(Series::one(T_work), Series::monomial(Coeff(1), t - 1, 0, T_work)));
    }
    return agreement_sweep("eq6.4", cf, target, T_work, depth_max, min_order,
                           /*require_strict_increase=*/true);
}

}  // namespace qpl::cf

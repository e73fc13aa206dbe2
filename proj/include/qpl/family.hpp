#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <map>

#include "qpl/series.hpp"

namespace qpl::fam {

/* Parameters of the polynomial family F_N(i,j,k;x). Negative N is allowed
 * and yields the zero series. */
struct FamilyParams {
    int i = 0;
    int j = 0;
    int k = 0;
    int N = 0;
};

/* The finite double sum
 *   F_N(i,j,k;x) = sum_{m,n>=0} (-1)^n
 *       q^{ C((2k+1)n+1, 2) + m^2 + (2k+1)mn + i(m+n) } x^{ m + (2k+1)n }
 *       [N-(2k+1)n-m+j, m]_q [N-2kn-m, n]_{q^(2k+1)}
 * with C(v,2) = v(v-1)/2. Summation ranges come from the vanishing of the
 * binomial brackets plus the q-exponent exceeding the truncation order. */
Series f_upper(const FamilyParams& p, int truncation);

/* Exact q-degree and x-degree bounds of the polynomial F_N(i,j,k;x). */
struct DegreeBound {
    long long q = 0;
    int x = 0;
};
DegreeBound f_upper_degree(const FamilyParams& p);

/* F_N at its exact polynomial degree (no truncation loss). */
Series f_upper_exact(const FamilyParams& p);

enum class XMode { tracked, one };

/* The limiting double series
 *   F(i,k;x) = sum_{m,n>=0} (-1)^n
 *       q^{ C((2k+1)n+1,2) + m^2 + (2k+1)mn + i(m+n) } x^{ m + (2k+1)n }
 *       / ( (q;q)_m (q^{2k+1};q^{2k+1})_n ),
 * truncated. Denominator inverses are extended one factor at a time as m
 * and n grow. extra_shift adds m + (2k+1)n + 1 to every exponent (used by
 * the shifted variants), with x still tracking m + (2k+1)n. */
Series f_infinite(int i, int k, int truncation, XMode mode = XMode::one,
                  bool extra_shift = false);

enum class K0Variant {
    statement,   // sum_{n<=j-1} [j-1,n]_q x^n q^{n(N+i+j)}
    proof,       // sum_{n<=j-1} (-1)^n [j-1,n]_q x^n q^{n(N+i+1)}
    resolved,    // sum_{n<=min(j-1,N)} [j-1,n]_q x^n q^{n(N+i+1)}
};

/* Candidate closed forms for F_N(i,j,0;x), j >= 1. The resolved variant is
 * the one that survives comparison against the defining double sum. */
Series f_k0_closed(int i, int j, int N, int truncation, K0Variant variant);

/* f_N = sum_{j>=0} q^{3j^2-2j} [N,3j]_q (q^2;q^3)_j, truncated. The
 * alt_poch_reading flag swaps in (q^2;q)_j (q^3;q)_j, the other way the
 * product notation can be read. */
Series f_small(int N, int truncation, bool alt_poch_reading = false);

long long f_small_degree(int N);

/* b_N = F_{N-1}(0,1,1;1) + sign * q^{N-1} F_{N-2}(0,1,1;1). sign must be
 * +1 or -1; which one is empirically valid is decided by resolve_b_sign. */
Series b_seq(int N, int truncation, int sign);

/* Returns the unique sign in {+1,-1} with f_small(M) == b_seq(M) for all
 * 1 <= M <= n_max, or 0 if none or both match. */
int resolve_b_sign(int n_max, int truncation);

/* F(i,0,k;x)-style generating function with x counting parts:
 * f_infinite(i,k;x) / (xq;q)_infinity. */
Series overpartition_gf(int i, int k, int truncation);

/* Thread-safe memo for f_upper values, shared by the recurrence sweeps.
 * Entries are exact polynomials re-truncated on the way out. */
class FUpperCache {
public:
    /* Value truncated (or exactly extended) to the requested order. */
    Series get(const FamilyParams& p, int truncation);
    void clear();
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::map<std::tuple<int, int, int, int>, std::shared_ptr<const Series>> map_;
};

}  // namespace qpl::fam

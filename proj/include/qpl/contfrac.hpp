#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qpl/report.hpp"
#include "qpl/series.hpp"

namespace qpl::cf {

/* Finite continued fraction b0 + a1/(b1 + a2/(b2 + ...)) with
 * Series-valued partial quotients. */
struct ContinuedFraction {
    Series head;                               // b0
    std::vector<std::pair<Series, Series>> pairs;   // (a_t, b_t), t = 1..
};

/* Numerator/denominator of the depth-d cut via
 * P_t = b_t P_{t-1} + a_t P_{t-2}, Q_t likewise, P_{-1}=1, P_0=b0,
 * Q_{-1}=0, Q_0=1. depth 0 returns (b0, 1). */
std::pair<Series, Series> convergent(const ContinuedFraction& cf, int depth, int T);

/* P_t Q_{t-1} - P_{t-1} Q_t == (-1)^{t-1} prod_{s<=t} a_s for t <= depth. */
bool convergent_determinant_ok(const ContinuedFraction& cf, int depth, int T);

enum class NumeratorSchedule {
    printed,    // partial numerators -x^2 q^{N-t}
    resolved,   // -x^2 q^{2(N-t)+1}, forced by the three-term recurrence
};

/* F_N(0,1,1;x)/F_{N-1}(0,1,1;x) as the descending fraction with partial
 * denominators 1 + x q^{N-t}; verified by cross-multiplication:
 * P * F_{N-1} == Q * F_N as exact polynomials. */
Report verify_61(int N, NumeratorSchedule sched = NumeratorSchedule::resolved);
Report verify_61_range(int N_lo, int N_hi,
                       NumeratorSchedule sched = NumeratorSchedule::resolved);

enum class SignSchedule {
    printed,     // +, -, ..., + as displayed
    all_minus,   // forced by the x->xq three-term recurrence
    all_plus,    // negative control
};

/* F_N(0,1,1;x)/F_{N-1}(0,1,1;xq) with partial numerators x^2 q^{2t+1} and
 * partial denominators 1 + x q^{t+1}; cross-multiplied exactly. */
Report verify_62(int N, SignSchedule signs = SignSchedule::all_minus);
Report verify_62_range(int N_lo, int N_hi,
                       SignSchedule signs = SignSchedule::all_minus);

/* For N in [1, N_max]: order of (depth-(N-1) convergent of the descending
 * fraction at x = 1) minus 1; PASS iff strictly increasing in N. */
Report check_tends_to_one(int N_max, int T);

/* prefactor * shifted double sum == q/(1+q - q^3/(1+q^2 - q^5/(...))),
 * with the depth pushed until the recorded agreement order reaches T. */
Report verify_thm63(int T);

/* shifted double sum == 1/(q;q^3)_inf - 1/(q^2;q^3)_inf, exact to T. */
Report verify_thm65(int T);

/* unshifted minus shifted double sum == 1/(q^2;q^3)_inf, exact to T. */
Report verify_final_theorem(int T);

/* Convergents of 1/(1 - q/(1+q - q^3/(...))) against
 * (q^2;q^3)_inf / (q;q^3)_inf: agreement order per depth <= depth_max.
 * PASS iff strictly increasing and the last entry >= min_order. */
Report verify_64_agreement(int depth_max, int min_order);

}  // namespace qpl::cf

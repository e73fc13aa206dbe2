#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpl/family.hpp"
#include "qpl/report.hpp"
#include "qpl/series.hpp"

namespace qpl::rec {

/* One term of a linear q-recurrence: coeff(N) * (x -> x q^xsub applied to
 * member N - shift of the referenced family). */
struct RecTerm {
    std::function<Series(int N, int T)> coeff;
    int shift = 0;
    int xsub = 0;
    int family = 0;    // index into RecurrenceSchema::families
};

using FamilyFn = std::function<Series(int N, int T)>;

struct RecurrenceSchema {
    std::string name;
    std::vector<FamilyFn> families;     // family(N, T); N < 0 must yield zero
    std::vector<RecTerm> terms;
    int lo = 0, hi = 0;                 // N range to check, inclusive
    /* q-degree bound of the residual at a given N; drives the default
     * truncation order so checks are exact polynomial identities. */
    std::function<long long(int N)> degree_bound;

    /* Terms with equal (family, shift, xsub) merged by coefficient
     * addition (needed when distinct shifts of a schema collide). */
    RecurrenceSchema merged() const;
};

/* Exact residual check over the schema's N range; PASS iff every residual
 * is the zero series. Stops at the first failing N. */
Report check(const RecurrenceSchema& schema, std::optional<int> T_override = {});

/* Wraps a family evaluator with a memo keyed on N (thread safe). */
FamilyFn memoize_family(FamilyFn fn);

/* Resolves one unknown integer offset in a schema template. Returns the
 * unique passing delta; multiple or zero passing candidates are reported
 * in `passing` and resolved stays empty. */
struct FitResult {
    std::optional<int> resolved;
    std::vector<int> passing;
};
FitResult fit_exponent(const std::function<RecurrenceSchema(int delta)>& make,
                       int delta_lo, int delta_hi);

/* Functional equation for the part-counting generating function
 * g(x) = f_infinite(i,k;x)/(xq;q)_inf:
 *   g(x) = g(xq)/(1-xq) + x q^{i+1} g(xq^2) / ((1-xq)(1-xq^2))
 *          - x^{2k+1} q^{C(2k+2,2)+i} g(xq^{2k+1}) / (xq;q)_{2k+1},
 * verified exactly to order T. */
Report check_functional_eq_51(int i, int k, int T);

/* (1-q^{N-2}) f_N - (1-q^{2N-3}) f_{N-1} + q^{2N-4}(1-q^{N-1}) f_{N-2} = 0
 * for 2 <= N <= Nmax, applied to the f_small sequence. perturb_exponent
 * bumps the q^{2N-4} factor to q^{2N-3} (negative control). */
Report check_f_small_rec(int T, int Nmax, bool perturb_exponent = false);

/* Same second-order recurrence applied to the resolved b sequence,
 * checked for 3 <= N <= Nmax. */
Report check_b_seq_rec(int T, int Nmax, int sign);

/* sum_j q^{3j^2-2j} (q^2;q^3)_j / (q;q)_{3j} == 1/(q;q^3)_inf to order T.
 * alt_reading swaps the Pochhammer for the constant (q^2;q^3)_inf reading. */
Report check_qgauss_limit(int T, bool alt_reading = false);

/* S(N) + x q^N S(N-1) == 0 for 2 <= N <= Nmax, where
 * S(N) = F_N(0,1,1;x) - (1+xq^N) F_{N-1} + x^2 q^{2N-1} F_{N-2}. */
Report check_sn_telescoping(int Nmax, std::shared_ptr<fam::FUpperCache> cache = {});

/* ---- schema builders for the identity catalog ---- */

/* F_N = F_{N-1} + x q^{N+j+k-1+delta} F_{N-2}
 *       - x^{2k+1} q^{(2k+1)(N-k)+i} F_{N-(2k+1)}, checked as a residual.
 * Shift collisions at k = 0 are merged. */
RecurrenceSchema schema_eq21(int i, int j, int k, int delta, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache = {});

/* F_N(0,1,1;x) = (1+x q^N) F_{N-1} - x^2 q^{2N-1} F_{N-2}. */
RecurrenceSchema schema_eq22(int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache = {},
                             int perturb = 0);

/* F_N(i,j,k;x) = F_N(i,j-1,k;x) + x q^{N+i+j-1+delta} F_{N-1}(i,j-1,k;x). */
RecurrenceSchema schema_eq23(int i, int j, int k, int delta, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache = {});

/* F_N(i,0,k;x) = F_{N-1}(i,0,k;xq) + x q^{1+delta} F_{N-2}(i,0,k;xq^2)
 *   - x^{2k+1} q^{C(2k+2,2)+i} F_{N-(2k+1)}(i,0,k;xq^{2k+1}). */
RecurrenceSchema schema_eq24(int i, int k, int delta, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache = {});

/* F_N(0,1,1;x) = (1+xq) F_{N-1}(0,1,1;xq) + sign * x^2 q^3 F_{N-2}(0,1,1;xq^2). */
RecurrenceSchema schema_eq25(int sign, int lo, int hi,
                             std::shared_ptr<fam::FUpperCache> cache = {});

}  // namespace qpl::rec

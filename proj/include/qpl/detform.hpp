#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qpl/series.hpp"

namespace qpl::det {

/* Upper-Hessenberg banded matrix with Series entries: fixed -1 first
 * subdiagonal, entry rules per diagonal offset >= 0 (functions of the row),
 * plus explicit extra entries. Rows and columns are 1-based. */
struct BandMatrixSpec {
    int size = 0;
    std::map<int, std::function<Series(int row, int T)>> rules;
    std::vector<std::tuple<int, int, Series>> extras;   // (row, col, entry)

    Series entry(int row, int col, int T) const;

    /* q-degree bound of the determinant: sum over rows of the largest
     * entry degree in the row. */
    long long degree_bound() const;
};

/* Matrix whose determinant equals F_N(i,0,k;x), reconstructed so that the
 * last-column expansion reproduces the three-term recurrence in N and the
 * top-row expansion reproduces the x->xq recurrence:
 *   diagonal 1, subdiagonal -1,
 *   first superdiagonal (r, r+1):  x q^{r+i},
 *   offset-2k superdiagonal (r, r+2k):  -x^{2k+1} q^{(2k+1)(r+k)+i}. */
BandMatrixSpec build_general(int N, int i, int k);

/* Tridiagonal matrix with diagonal 1+xq^r, superdiagonal -x^2 q^{2r+1} and
 * subdiagonal -1; its determinant is F_N(0,1,1;x). */
BandMatrixSpec build_tridiagonal(int N);

/* Exact determinant by the last-column cofactor recurrence
 * D_s = sum_{r<=s} entry(r,s) * D_{r-1}, O(size * bandwidth) series
 * products. Requires the -1 subdiagonal. */
Series hessenberg_det(const BandMatrixSpec& spec, int T);

/* Determinant at full polynomial degree. */
Series hessenberg_det_exact(const BandMatrixSpec& spec);

/* Nonzero entries as [{"row": r, "col": c, "entry": <series>}...]. */
nlohmann::json matrix_to_json(const BandMatrixSpec& spec, int T);

}  // namespace qpl::det

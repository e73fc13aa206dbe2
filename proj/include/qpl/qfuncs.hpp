#pragma once

#include "qpl/series.hpp"

namespace qpl {

/* prod_{t=0}^{n-1} (1 - x^x_weight * q^(a + step*t)), truncated. n = 0 gives 1.
 * Requires a >= 1 when x_weight > 0 so the result respects e <= d. */
Series poch_finite(int a, int step, int n, int truncation, int x_weight = 0);

/* The infinite product: factors are multiplied until a + step*t exceeds the
 * truncation order. Requires a >= 1. */
Series poch_infinite(int a, int step, int truncation, int x_weight = 0);

/* Gaussian binomial in q^base_power: zero when bottom < 0 or bottom > top. */
struct QBinomSpec {
    int top = 0;
    int bottom = 0;
    int base_power = 1;
};

/* Computed by the product method with exact single-factor divisions (never
 * by series division with remainder checks); the full polynomial is cached
 * per (top, bottom) and truncated on the way out. Choosing a truncation
 * order >= base_power * bottom * (top - bottom) yields the exact
 * polynomial. */
Series qbinom(const QBinomSpec& spec, int truncation);

inline Series qbinom(int top, int bottom, int base_power, int truncation) {
    return qbinom(QBinomSpec{top, bottom, base_power}, truncation);
}

/* Exact degree of the Gaussian polynomial in q (0 for out-of-range specs). */
long long qbinom_degree(const QBinomSpec& spec);

}  // namespace qpl

#include "qpl/qfuncs.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qpl {

Series poch_finite(int a, int step, int n, int truncation, int x_weight) {
    if (n < 0) throw std::invalid_argument("poch_finite: negative count");
    if (step < 1) throw std::invalid_argument("poch_finite: step must be positive");
    if (a < 0) throw std::invalid_argument("poch_finite: negative base degree");
    if (x_weight > 0 && a < 1)
        throw std::invalid_argument("poch_finite: x-weighted factors need a >= 1");
    Series r = Series::one(truncation);
    for (int t = 0; t < n; ++t) {
        long long p = a + static_cast<long long>(step) * t;
        if (p > truncation) break;   // remaining factors are 1 to this order
        if (p == 0) return Series::zero(truncation);   // factor (1 - 1)
        r = mul_one_minus(r, static_cast<int>(p), x_weight);
    }
    return r;
}

Series poch_infinite(int a, int step, int truncation, int x_weight) {
    if (a < 1) throw std::invalid_argument("poch_infinite: base degree must be >= 1");
    if (step < 1) throw std::invalid_argument("poch_infinite: step must be positive");
    Series r = Series::one(truncation);
    for (long long p = a; p <= truncation; p += step)
        r = mul_one_minus(r, static_cast<int>(p), x_weight);
    return r;
}

namespace {

/* Dense polynomial in y = q^base_power, exponents not yet dilated. */
using Poly = std::vector<Coeff>;

void poly_mul_one_minus(Poly& p, int s) {
    p.resize(p.size() + s, Coeff(0));
    for (int d = static_cast<int>(p.size()) - 1; d >= s; --d) p[d] -= p[d - s];
}

void poly_div_one_minus(Poly& p, int s) {
    for (std::size_t d = s; d < p.size(); ++d) p[d] += p[d - s];
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/* [top, bottom] as a polynomial in y via
 * prod_{t=1..bottom} (1 - y^(top-bottom+t)) / (1 - y^t); every intermediate
 * quotient is itself a Gaussian polynomial, so the divisions are exact. */
Poly qbinom_poly(int top, int bottom) {
    Poly p{Coeff(1)};
    for (int t = 1; t <= bottom; ++t) {
        poly_mul_one_minus(p, top - bottom + t);
        poly_div_one_minus(p, t);
    }
    return p;
}

std::mutex g_cache_mu;
std::map<std::pair<int, int>, std::shared_ptr<const Poly>> g_cache;

std::shared_ptr<const Poly> qbinom_cached(int top, int bottom) {
    bottom = std::min(bottom, top - bottom);   // [A,B] = [A,A-B]
    std::pair<int, int> key{top, bottom};
    {
        std::lock_guard<std::mutex> lock(g_cache_mu);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    auto p = std::make_shared<const Poly>(qbinom_poly(top, bottom));
    std::lock_guard<std::mutex> lock(g_cache_mu);
    return g_cache.emplace(key, std::move(p)).first->second;
}

}  // namespace

Series qbinom(const QBinomSpec& spec, int truncation) {
    if (spec.base_power < 1)
        throw std::invalid_argument("qbinom: base power must be positive");
    if (spec.bottom < 0 || spec.bottom > spec.top) return Series::zero(truncation);
    auto poly = qbinom_cached(spec.top, spec.bottom);
    std::vector<Series::Term> out;
    for (std::size_t d = 0; d < poly->size(); ++d) {
        long long qd = static_cast<long long>(d) * spec.base_power;
        if (qd > truncation) break;
        if (!(*poly)[d].is_zero())
            out.push_back(Series::Term{static_cast<int>(qd), 0, (*poly)[d]});
    }
    return Series::from_terms(std::move(out), truncation);
}

long long qbinom_degree(const QBinomSpec& spec) {
    if (spec.bottom < 0 || spec.bottom > spec.top) return 0;
    return static_cast<long long>(spec.base_power) * spec.bottom *
           (spec.top - spec.bottom);
}

}  // namespace qpl

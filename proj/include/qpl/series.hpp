#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qpl/coeff.hpp"

namespace qpl {

/* Truncated formal power series in q and x with exact integer coefficients.
 * q-degrees 0..T are retained, every higher power of q is discarded by all
 * operations. The exponent of x is tracked exactly and never truncated on
 * its own; the storage invariant e <= d (each power of x is accompanied by
 * at least as many powers of q) bounds it by T.
 *
 * Values are immutable after construction, so they can be shared freely
 * across threads. */
class Series {
public:
    struct Term {
        int q;     // q-degree d, 0 <= d <= truncation
        int x;     // x-degree e, 0 <= e <= d
        Coeff c;   // nonzero
    };

    static Series zero(int truncation);
    static Series one(int truncation);

    /* c * q^a * x^b. Throws on negative exponents or b > a; returns the
     * zero series when a exceeds the truncation order. */
    static Series monomial(Coeff c, int q_deg, int x_deg, int truncation);

    /* Builds a series from arbitrary (q, x, coeff) triples: duplicates are
     * combined, zeros dropped, terms beyond the truncation discarded. */
    static Series from_terms(std::vector<Term> terms, int truncation);

    int truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    /* Largest stored q-degree (-1 for the zero series). */
    int q_degree() const { return terms_.empty() ? -1 : terms_.back().q; }
    /* Largest stored x-degree (0 for the zero series). */
    int x_degree() const;

    Coeff coeff_at(int q_deg, int x_deg) const;

    /* The x-polynomial multiplying q^d, as (x_degree, coeff) pairs in
     * ascending x_degree. Throws when d exceeds the truncation order. */
    std::vector<std::pair<int, Coeff>> coeff(int q_deg) const;

    /* Lowest q-degree with a nonzero term, or truncation()+1 if none. */
    int order() const { return terms_.empty() ? trunc_ + 1 : terms_.front().q; }

    /* Copy truncated to new_T <= truncation(). */
    Series truncated(int new_T) const;

    /* Re-declares the truncation order upward. Only meaningful when the
     * series is known to be an exact polynomial (no discarded terms). */
    Series as_exact_polynomial(int new_T) const;

    bool operator==(const Series& o) const {
        if (trunc_ != o.trunc_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].q != o.terms_[i].q || terms_[i].x != o.terms_[i].x ||
                terms_[i].c != o.terms_[i].c)
                return false;
        }
        return true;
    }
    bool operator!=(const Series& o) const { return !(*this == o); }

    nlohmann::json to_json() const;
    static Series from_json(const nlohmann::json& j);
    std::string str() const;   // human-readable, for diagnostics

private:
    int trunc_ = 0;
    std::vector<Term> terms_;  // sorted by (q, x)

    friend class SeriesBuilder;
};

/* Exact coefficientwise ring operations. Mixed truncation orders are
 * allowed; the result carries the minimum of the two. */
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/* The substitution x -> x*q^p: each term (d, e) moves to (d + p*e, e).
 * Terms pushed past the truncation order are dropped. */
Series subst_x(const Series& s, int p);

/* Sets x = 1, summing coefficients over the x-degree. */
Series eval_x_one(const Series& s);

/* Multiplicative inverse to the truncation order, computed degree by
 * degree in q. The input must have constant term exactly 1. */
Series inverse(const Series& s);

/* s * (1 - x^dx * q^dq), in one pass. Requires dq >= 1 and dx <= dq. */
Series mul_one_minus(const Series& s, int dq, int dx);

/* s / (1 - x^dx * q^dq) to the truncation order. Requires dq >= 1,
 * dx <= dq. Exact whenever the quotient is itself a series. */
Series div_one_minus(const Series& s, int dq, int dx);

/* Mutable accumulator used to build series without repeated merging.
 * Not part of the value API; operations use it internally. */
class SeriesBuilder {
public:
    explicit SeriesBuilder(int truncation, int x_bound = -1);
    void add(int q_deg, int x_deg, const Coeff& c);
    void add_product(int q_deg, int x_deg, const Coeff& a, const Coeff& b);
    /* Adds c * q^dq * x^dx * s. */
    void add_scaled(const Series& s, int dq, int dx, const Coeff& c);
    Series build() &&;

private:
    int trunc_;
    int x_bound_;
    std::vector<Coeff> slots_;   // (q * (x_bound+1) + x)
    void ensure_x_bound(int x_deg);
};

}  // namespace qpl

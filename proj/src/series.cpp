#include "qpl/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qpl {

namespace {

void check_trunc(int T) {
    if (T < 0) throw std::invalid_argument("Series: negative truncation order");
}

}  // namespace

Series Series::zero(int truncation) {
    check_trunc(truncation);
    Series s;
    s.trunc_ = truncation;
    return s;
}

Series Series::one(int truncation) {
    return monomial(Coeff(1), 0, 0, truncation);
}

Series Series::monomial(Coeff c, int q_deg, int x_deg, int truncation) {
    check_trunc(truncation);
    if (q_deg < 0 || x_deg < 0)
        throw std::invalid_argument("Series::monomial: negative exponent");
    if (x_deg > q_deg)
        throw std::invalid_argument(
            "Series::monomial: x-degree exceeds q-degree (invariant e <= d)");
    Series s;
    s.trunc_ = truncation;
    if (q_deg <= truncation && !c.is_zero())
        s.terms_.push_back(Term{q_deg, x_deg, std::move(c)});
    return s;
}

Series Series::from_terms(std::vector<Term> terms, int truncation) {
    check_trunc(truncation);
    for (const Term& t : terms) {
        if (t.q < 0 || t.x < 0)
            throw std::invalid_argument("Series::from_terms: negative exponent");
        if (t.x > t.q)
            throw std::invalid_argument(
                "Series::from_terms: x-degree exceeds q-degree (invariant e <= d)");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.q != b.q ? a.q < b.q : a.x < b.x;
    });
    Series s;
    s.trunc_ = truncation;
    for (Term& t : terms) {
        if (t.q > truncation) continue;
        if (!s.terms_.empty() && s.terms_.back().q == t.q && s.terms_.back().x == t.x) {
            s.terms_.back().c += t.c;
        } else {
            s.terms_.push_back(std::move(t));
        }
    }
    s.terms_.erase(std::remove_if(s.terms_.begin(), s.terms_.end(),
                                  [](const Term& t) { return t.c.is_zero(); }),
                   s.terms_.end());
    return s;
}

int Series::x_degree() const {
    int e = 0;
    for (const Term& t : terms_) e = std::max(e, t.x);
    return e;
}

Coeff Series::coeff_at(int q_deg, int x_deg) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair(q_deg, x_deg),
                               [](const Term& t, const std::pair<int, int>& k) {
                                   return t.q != k.first ? t.q < k.first : t.x < k.second;
                               });
    if (it != terms_.end() && it->q == q_deg && it->x == x_deg) return it->c;
    return Coeff(0);
}

std::vector<std::pair<int, Coeff>> Series::coeff(int q_deg) const {
    if (q_deg > trunc_)
        throw std::invalid_argument("Series::coeff: degree beyond truncation order");
    if (q_deg < 0) throw std::invalid_argument("Series::coeff: negative degree");
    std::vector<std::pair<int, Coeff>> out;
    for (const Term& t : terms_) {
        if (t.q == q_deg) out.emplace_back(t.x, t.c);
        if (t.q > q_deg) break;
    }
    return out;
}

Series Series::truncated(int new_T) const {
    if (new_T > trunc_)
        throw std::invalid_argument("Series::truncated: can only lower the order");
    Series s;
    s.trunc_ = new_T;
    for (const Term& t : terms_) {
        if (t.q > new_T) break;
        s.terms_.push_back(t);
    }
    return s;
}

Series Series::as_exact_polynomial(int new_T) const {
    if (new_T < trunc_) return truncated(new_T);
    Series s = *this;
    s.trunc_ = new_T;
    return s;
}

/* ---------------------------------------------------------------- */

SeriesBuilder::SeriesBuilder(int truncation, int x_bound) : trunc_(truncation) {
    check_trunc(truncation);
    x_bound_ = (x_bound < 0) ? 0 : std::min(x_bound, truncation);
    slots_.assign(static_cast<std::size_t>(trunc_ + 1) * (x_bound_ + 1), Coeff(0));
}

void SeriesBuilder::ensure_x_bound(int x_deg) {
    if (x_deg <= x_bound_) return;
    int nb = std::min(std::max(x_deg, 2 * x_bound_ + 1), trunc_);
    std::vector<Coeff> ns(static_cast<std::size_t>(trunc_ + 1) * (nb + 1), Coeff(0));
    for (int d = 0; d <= trunc_; ++d)
        for (int e = 0; e <= x_bound_; ++e)
            ns[static_cast<std::size_t>(d) * (nb + 1) + e] =
                std::move(slots_[static_cast<std::size_t>(d) * (x_bound_ + 1) + e]);
    slots_ = std::move(ns);
    x_bound_ = nb;
}

void SeriesBuilder::add(int q_deg, int x_deg, const Coeff& c) {
    if (q_deg > trunc_ || c.is_zero()) return;
    ensure_x_bound(x_deg);
    slots_[static_cast<std::size_t>(q_deg) * (x_bound_ + 1) + x_deg] += c;
}

void SeriesBuilder::add_product(int q_deg, int x_deg, const Coeff& a, const Coeff& b) {
    if (q_deg > trunc_) return;
    ensure_x_bound(x_deg);
    slots_[static_cast<std::size_t>(q_deg) * (x_bound_ + 1) + x_deg].add_product(a, b);
}

void SeriesBuilder::add_scaled(const Series& s, int dq, int dx, const Coeff& c) {
    if (c.is_zero()) return;
    for (const Series::Term& t : s.terms()) {
        if (t.q + dq > trunc_) break;
        add_product(t.q + dq, t.x + dx, t.c, c);
    }
}

Series SeriesBuilder::build() && {
    Series s;
    s.trunc_ = trunc_;
    for (int d = 0; d <= trunc_; ++d) {
        for (int e = 0; e <= x_bound_; ++e) {
            Coeff& c = slots_[static_cast<std::size_t>(d) * (x_bound_ + 1) + e];
            if (!c.is_zero()) s.terms_.push_back(Series::Term{d, e, std::move(c)});
        }
    }
    return s;
}

/* ---------------------------------------------------------------- */

Series add(const Series& a, const Series& b) {
    int T = std::min(a.truncation(), b.truncation());
    std::vector<Series::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        bool take_a;
        if (ia == ea) take_a = false;
        else if (ib == eb) take_a = true;
        else if (ia->q != ib->q) take_a = ia->q < ib->q;
        else if (ia->x != ib->x) take_a = ia->x < ib->x;
        else {
            Coeff c = ia->c + ib->c;
            if (!c.is_zero() && ia->q <= T)
                out.push_back(Series::Term{ia->q, ia->x, std::move(c)});
            ++ia; ++ib;
            continue;
        }
        const Series::Term& t = take_a ? *ia++ : *ib++;
        if (t.q <= T) out.push_back(t);
    }
    return Series::from_terms(std::move(out), T);
}

Series neg(const Series& a) {
    std::vector<Series::Term> out;
    out.reserve(a.terms().size());
    for (const Series::Term& t : a.terms())
        out.push_back(Series::Term{t.q, t.x, -t.c});
    return Series::from_terms(std::move(out), a.truncation());
}

Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

Series mul(const Series& a, const Series& b) {
    int T = std::min(a.truncation(), b.truncation());
    if (a.is_zero() || b.is_zero()) return Series::zero(T);
    int xb = std::min(a.x_degree() + b.x_degree(), T);
    SeriesBuilder acc(T, xb);
    /* Schoolbook product; the inner loop stops once degrees overflow T. */
    for (const Series::Term& ta : a.terms()) {
        if (ta.q > T) break;
        for (const Series::Term& tb : b.terms()) {
            if (ta.q + tb.q > T) break;
            acc.add_product(ta.q + tb.q, ta.x + tb.x, ta.c, tb.c);
        }
    }
    return std::move(acc).build();
}

Series subst_x(const Series& s, int p) {
    if (p < 0) throw std::invalid_argument("subst_x: negative power");
    if (p == 0) return s;
    std::vector<Series::Term> out;
    out.reserve(s.terms().size());
    for (const Series::Term& t : s.terms()) {
        long long nd = static_cast<long long>(t.q) + static_cast<long long>(p) * t.x;
        if (nd <= s.truncation())
            out.push_back(Series::Term{static_cast<int>(nd), t.x, t.c});
    }
    return Series::from_terms(std::move(out), s.truncation());
}

Series eval_x_one(const Series& s) {
    std::vector<Series::Term> out;
    out.reserve(s.terms().size());
    for (const Series::Term& t : s.terms())
        out.push_back(Series::Term{t.q, 0, t.c});
    return Series::from_terms(std::move(out), s.truncation());
}

Series inverse(const Series& s) {
    const int T = s.truncation();
    bool unit = !s.terms().empty() && s.terms().front().q == 0 &&
                s.terms().front().x == 0 && s.terms().front().c.is_one() &&
                (s.terms().size() == 1 || s.terms()[1].q > 0);
    if (!unit)
        throw std::invalid_argument("inverse: constant term must be exactly 1");

    /* Work with one dense x-polynomial per q-degree. With 1 = s*t and
     * s = 1 + higher orders, t_d = -sum_{k=1..d} s_k * t_{d-k}. */
    std::vector<std::vector<Coeff>> sp(T + 1), tp(T + 1);
    for (const Series::Term& t : s.terms()) {
        auto& row = sp[t.q];
        if (static_cast<int>(row.size()) <= t.x) row.resize(t.x + 1, Coeff(0));
        row[t.x] = t.c;
    }
    tp[0] = {Coeff(1)};
    for (int d = 1; d <= T; ++d) {
        std::vector<Coeff> acc;
        for (int k = 1; k <= d; ++k) {
            if (sp[k].empty() || tp[d - k].empty()) continue;
            const auto& u = sp[k];
            const auto& v = tp[d - k];
            if (acc.size() < u.size() + v.size() - 1)
                acc.resize(u.size() + v.size() - 1, Coeff(0));
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (u[i].is_zero()) continue;
                for (std::size_t j = 0; j < v.size(); ++j)
                    acc[i + j].add_product(u[i], v[j]);
            }
        }
        for (Coeff& c : acc) c = -c;
        while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
        tp[d] = std::move(acc);
    }
    std::vector<Series::Term> out;
    for (int d = 0; d <= T; ++d)
        for (std::size_t e = 0; e < tp[d].size(); ++e)
            if (!tp[d][e].is_zero())
                out.push_back(Series::Term{d, static_cast<int>(e), std::move(tp[d][e])});
    return Series::from_terms(std::move(out), T);
}

Series mul_one_minus(const Series& s, int dq, int dx) {
    if (dq < 1 || dx < 0 || dx > dq)
        throw std::invalid_argument("mul_one_minus: need 1 <= dq and 0 <= dx <= dq");
    std::vector<Series::Term> out;
    out.reserve(2 * s.terms().size());
    for (const Series::Term& t : s.terms()) {
        out.push_back(t);
        if (t.q + dq <= s.truncation())
            out.push_back(Series::Term{t.q + dq, t.x + dx, -t.c});
    }
    return Series::from_terms(std::move(out), s.truncation());
}

Series div_one_minus(const Series& s, int dq, int dx) {
    if (dq < 1 || dx < 0 || dx > dq)
        throw std::invalid_argument("div_one_minus: need 1 <= dq and 0 <= dx <= dq");
    const int T = s.truncation();
    int xb = std::min(s.x_degree() + (T / dq + 1) * dx, T);
    /* t(d,e) = s(d,e) + t(d-dq, e-dx), filled in ascending d. */
    std::vector<std::vector<Coeff>> rows(T + 1);
    for (auto& r : rows) r.assign(xb + 1, Coeff(0));
    for (const Series::Term& t : s.terms()) rows[t.q][t.x] += t.c;
    for (int d = dq; d <= T; ++d) {
        const auto& prev = rows[d - dq];
        auto& cur = rows[d];
        for (int e = dx; e <= xb; ++e) {
            if (!prev[e - dx].is_zero()) cur[e] += prev[e - dx];
        }
    }
    std::vector<Series::Term> out;
    for (int d = 0; d <= T; ++d)
        for (int e = 0; e <= xb; ++e)
            if (!rows[d][e].is_zero())
                out.push_back(Series::Term{d, e, std::move(rows[d][e])});
    return Series::from_terms(std::move(out), T);
}

/* ---------------------------------------------------------------- */

nlohmann::json Series::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const Term& t : terms_) {
        terms.push_back({{"q", t.q}, {"x", t.x}, {"c", t.c.to_decimal()}});
    }
    return nlohmann::json{{"truncation", trunc_}, {"terms", std::move(terms)}};
}

Series Series::from_json(const nlohmann::json& j) {
    int T = j.at("truncation").get<int>();
    std::vector<Term> terms;
    for (const auto& jt : j.at("terms")) {
        terms.push_back(Term{jt.at("q").get<int>(), jt.at("x").get<int>(),
                             Coeff::from_decimal(jt.at("c").get<std::string>())});
    }
    return from_terms(std::move(terms), T);
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = t.c.to_decimal();
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool have_sym = t.q > 0 || t.x > 0;
        if (c != "1" || !have_sym) os << c;
        if (c != "1" && have_sym) os << "*";
        if (t.x > 0) {
            os << "x";
            if (t.x > 1) os << "^" << t.x;
            if (t.q > 0) os << "*";
        }
        if (t.q > 0) {
            os << "q";
            if (t.q > 1) os << "^" << t.q;
        }
    }
    return os.str();
}

}  // namespace qpl

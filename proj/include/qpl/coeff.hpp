#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpl {

/* Exact signed integer with a machine-word fast path. Values that fit in
 * int64 are kept inline; arithmetic detects overflow and promotes to an
 * arbitrary-precision integer, demoting again when the result fits. */
class Coeff {
public:
    using Big = boost::multiprecision::cpp_int;

    Coeff() noexcept : small_(0) {}
    Coeff(long long v) noexcept : small_(v) {}
    Coeff(int v) noexcept : small_(v) {}

    Coeff(const Coeff& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<Big>(*o.big_);
    }
    Coeff(Coeff&&) noexcept = default;
    Coeff& operator=(const Coeff& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
        }
        return *this;
    }
    Coeff& operator=(Coeff&&) noexcept = default;

    /* Parses a decimal string, with optional leading '-'. Throws
     * std::invalid_argument on malformed input. */
    static Coeff from_decimal(const std::string& text);

    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_one() const noexcept { return !big_ && small_ == 1; }

    /* -1, 0 or +1. */
    int sign() const noexcept;

    /* Decimal representation, used by the JSON serialization. */
    std::string to_decimal() const;

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);

    friend Coeff operator+(Coeff a, const Coeff& b) { a += b; return a; }
    friend Coeff operator-(Coeff a, const Coeff& b) { a -= b; return a; }
    friend Coeff operator*(Coeff a, const Coeff& b) { a *= b; return a; }
    Coeff operator-() const;

    friend bool operator==(const Coeff& a, const Coeff& b);
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    /* Add c into *this without constructing temporaries on the fast path. */
    void add_product(const Coeff& a, const Coeff& b);

private:
    long long small_;
    std::unique_ptr<Big> big_;   // non-null means the value lives here

    Big as_big() const { return big_ ? *big_ : Big(small_); }
    void set_big(Big v);
};

}  // namespace qpl

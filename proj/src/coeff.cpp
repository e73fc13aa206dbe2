#include "qpl/coeff.hpp"

#include <limits>
#include <stdexcept>

namespace qpl {

namespace {

const Coeff::Big kInt64Min{std::numeric_limits<long long>::min()};
const Coeff::Big kInt64Max{std::numeric_limits<long long>::max()};

}  // namespace

void Coeff::set_big(Big v) {
    if (v >= kInt64Min && v <= kInt64Max) {
        small_ = v.convert_to<long long>();
        big_.reset();
    } else {
        small_ = 0;
        if (big_) {
            *big_ = std::move(v);
        } else {
            big_ = std::make_unique<Big>(std::move(v));
        }
    }
}

Coeff Coeff::from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Coeff: empty decimal string");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("Coeff: sign without digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("Coeff: malformed decimal string: " + text);
    }
    Coeff c;
    c.set_big(Big(text));
    return c;
}

int Coeff::sign() const noexcept {
    if (big_) return big_->sign();
    return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
}

std::string Coeff::to_decimal() const {
    if (big_) return big_->str();
    return std::to_string(small_);
}

Coeff& Coeff::operator+=(const Coeff& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(as_big() + o.as_big());
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(as_big() - o.as_big());
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
    if (!big_ && !o.big_) {
        long long r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(as_big() * o.as_big());
    return *this;
}

Coeff Coeff::operator-() const {
    Coeff r;
    if (!big_) {
        if (small_ != std::numeric_limits<long long>::min()) {
            r.small_ = -small_;
            return r;
        }
    }
    r.set_big(-as_big());
    return r;
}

bool operator==(const Coeff& a, const Coeff& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.as_big() == b.as_big();
}

void Coeff::add_product(const Coeff& a, const Coeff& b) {
    if (!big_ && !a.big_ && !b.big_) {
        long long p, r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
            !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    set_big(as_big() + a.as_big() * b.as_big());
}

}  // namespace qpl

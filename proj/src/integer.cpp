#include "integer.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace prevariety {

namespace {

using i128 = __int128;

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

void set_mpz_from_i128(mpz_class& out, i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    uint64_t hi = static_cast<uint64_t>(u >> 64);
    uint64_t lo = static_cast<uint64_t>(u);
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &hi);
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 64);
    mpz_class low;
    mpz_import(low.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &lo);
    out += low;
    if (neg) out = -out;
}

mpz_class mpz_of_int64(int64_t v) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

Integer from_i128(i128 v) {
    if (v >= kMin && v <= kMax) return Integer(static_cast<long long>(v));
    mpz_class m;
    set_mpz_from_i128(m, v);
    return Integer(m);
}

}  // namespace

Integer Integer::from_int128(__int128 v) {
    return from_i128(v);
}

Integer::Integer(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = v.get_si();
    } else {
        big_ = std::make_unique<mpz_class>(v);
    }
}

Integer::Integer(std::string_view decimal) {
    mpz_class v;
    if (v.set_str(std::string(decimal), 10) != 0) {
        throw std::invalid_argument("not an integer: " + std::string(decimal));
    }
    assign_mpz(std::move(v));
}

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer::Integer(Integer&& other) noexcept
    : small_(other.small_), big_(std::move(other.big_)) {
    other.small_ = 0;
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    small_ = other.small_;
    if (other.big_) {
        if (big_) {
            *big_ = *other.big_;
        } else {
            big_ = std::make_unique<mpz_class>(*other.big_);
        }
    } else {
        big_.reset();
    }
    return *this;
}

Integer& Integer::operator=(Integer&& other) noexcept {
    small_ = other.small_;
    big_ = std::move(other.big_);
    other.small_ = 0;
    return *this;
}

mpz_class Integer::to_mpz() const {
    return big_ ? *big_ : mpz_of_int64(small_);
}

int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

int Integer::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

void Integer::assign_mpz(mpz_class&& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = v.get_si();
        big_.reset();
    } else {
        small_ = 0;
        if (big_) {
            *big_ = std::move(v);
        } else {
            big_ = std::make_unique<mpz_class>(std::move(v));
        }
    }
}

Integer Integer::operator-() const {
    if (!big_ && small_ != kMin) return Integer(static_cast<long long>(-small_));
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& rhs) {
    int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_add_overflow(small_, rhs.small_, &r)) {
        small_ = r;
        return *this;
    }
    assign_mpz(to_mpz() + rhs.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_sub_overflow(small_, rhs.small_, &r)) {
        small_ = r;
        return *this;
    }
    assign_mpz(to_mpz() - rhs.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_mul_overflow(small_, rhs.small_, &r)) {
        small_ = r;
        return *this;
    }
    assign_mpz(to_mpz() * rhs.to_mpz());
    return *this;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    // Normalized values: a small and a big value are never equal.
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Integer::to_string() const {
    return big_ ? big_->get_str() : std::to_string(small_);
}

Integer divexact(const Integer& dividend, const Integer& divisor) {
    if (!dividend.big_ && !divisor.big_) {
        if (!(dividend.small_ == kMin && divisor.small_ == -1)) {
            return Integer(static_cast<long long>(dividend.small_ / divisor.small_));
        }
    }
    mpz_class q;
    mpz_class n = dividend.to_mpz();
    mpz_class d = divisor.to_mpz();
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.small_ != kMin && b.small_ != kMin) {
        return Integer(static_cast<long long>(
            std::gcd(a.small_ < 0 ? -a.small_ : a.small_, b.small_ < 0 ? -b.small_ : b.small_)));
    }
    mpz_class g;
    mpz_class x = a.to_mpz();
    mpz_class y = b.to_mpz();
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return Integer(g);
}

Integer abs(const Integer& a) {
    return a.sign() < 0 ? -a : a;
}

Integer cross(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    if (a.is_small() && b.is_small() && c.is_small() && d.is_small()) {
        i128 v = static_cast<i128>(a.small_value()) * b.small_value() -
                 static_cast<i128>(c.small_value()) * d.small_value();
        return from_i128(v);
    }
    return Integer(mpz_class(a.to_mpz() * b.to_mpz() - c.to_mpz() * d.to_mpz()));
}

Integer cross_divexact(const Integer& a, const Integer& b, const Integer& c,
                       const Integer& d, const Integer& divisor) {
    if (a.is_small() && b.is_small() && c.is_small() && d.is_small() && divisor.is_small()) {
        i128 v = static_cast<i128>(a.small_value()) * b.small_value() -
                 static_cast<i128>(c.small_value()) * d.small_value();
        if (divisor.small_value() != 1) v /= divisor.small_value();
        return from_i128(v);
    }
    mpz_class v = a.to_mpz() * b.to_mpz() - c.to_mpz() * d.to_mpz();
    if (!divisor.is_one()) {
        mpz_class dv = divisor.to_mpz();
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), dv.get_mpz_t());
    }
    return Integer(v);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) {
    return os << v.to_string();
}

}  // namespace prevariety

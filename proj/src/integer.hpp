#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace prevariety {

/// Arbitrary-precision integer that stays in a machine word while the value
/// fits and promotes to GMP on overflow. Results that fit in int64 again are
/// demoted, so the common case never touches the heap.
class Integer {
public:
    Integer() noexcept = default;
    Integer(int v) noexcept : small_(v) {}
    Integer(long v) noexcept : small_(v) {}
    Integer(long long v) noexcept : small_(v) {}
    explicit Integer(const mpz_class& v);
    explicit Integer(std::string_view decimal);
    static Integer from_int128(__int128 v);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept;
    ~Integer() = default;

    bool is_small() const noexcept { return !big_; }
    int64_t small_value() const noexcept { return small_; }
    mpz_class to_mpz() const;
    bool fits_int64() const noexcept { return is_small(); }
    int64_t to_int64() const;  // throws std::overflow_error

    int sign() const noexcept;
    bool is_zero() const noexcept { return is_small() && small_ == 0; }
    bool is_one() const noexcept { return is_small() && small_ == 1; }

    Integer operator-() const;
    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

    std::string to_string() const;

    // Exact quotient; the caller guarantees divisor | dividend.
    friend Integer divexact(const Integer& dividend, const Integer& divisor);
    friend Integer gcd(const Integer& a, const Integer& b);
    friend Integer abs(const Integer& a);
    // (a*b - c*d) / divisor with the division exact. The Bareiss update.
    friend Integer cross_divexact(const Integer& a, const Integer& b, const Integer& c,
                                  const Integer& d, const Integer& divisor);
    // a*b - c*d
    friend Integer cross(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

private:
    void assign_mpz(mpz_class&& v);

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace prevariety

#include "int_vector.hpp"

#include <stdexcept>

namespace prevariety {

IntVector make_vector(std::initializer_list<long long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long long x : values) v.emplace_back(x);
    return v;
}

IntVector zero_vector(std::size_t dim) {
    return IntVector(dim);
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    // Accumulate in 128 bits while every operand is a machine word.
    __int128 acc = 0;
    std::size_t i = 0;
    const __int128 limit = static_cast<__int128>(1) << 125;
    for (; i < a.size(); ++i) {
        if (!a[i].is_small() || !b[i].is_small()) break;
        acc += static_cast<__int128>(a[i].small_value()) * b[i].small_value();
        if (acc > limit || acc < -limit) {
            ++i;
            break;
        }
    }
    Integer result = Integer::from_int128(acc);
    for (; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        result += a[i] * b[i];
    }
    return result;
}

bool is_zero(std::span<const Integer> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Integer content(std::span<const Integer> v) {
    Integer g;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        g = gcd(g, x);
        if (g.is_one()) break;
    }
    return g;
}

IntVector primitive(IntVector v) {
    Integer g = content(v);
    if (g.is_zero() || g.is_one()) return v;
    for (auto& x : v) x = divexact(x, g);
    return v;
}

bool is_primitive(std::span<const Integer> v) {
    return content(v).is_one();
}

IntVector negate(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
}

IntVector subtract(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) throw std::invalid_argument("subtract: dimension mismatch");
    IntVector r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    IntVector r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IntVector scale(std::span<const Integer> a, const Integer& s) {
    IntVector r(a.begin(), a.end());
    for (auto& x : r) x *= s;
    return r;
}

IntVector combine(const Integer& s, std::span<const Integer> a, const Integer& t,
                  std::span<const Integer> b) {
    if (a.size() != b.size()) throw std::invalid_argument("combine: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = cross(s, a[i], -t, b[i]);
    return r;
}

bool lex_less(std::span<const Integer> a, std::span<const Integer> b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = a[i] <=> b[i];
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

std::string format_vector(std::span<const Integer> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].to_string();
    }
    s += ')';
    return s;
}

}  // namespace prevariety

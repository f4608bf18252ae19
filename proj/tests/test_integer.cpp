#include "int_vector.hpp"
#include "linalg.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace prevariety;

TEST_CASE("integer stays small until it overflows") {
    Integer a(std::numeric_limits<int64_t>::max());
    CHECK(a.is_small());
    a += 1;
    CHECK_FALSE(a.is_small());
    CHECK(a.to_string() == "9223372036854775808");
    a -= 1;
    CHECK(a.is_small());
    CHECK(a.small_value() == std::numeric_limits<int64_t>::max());
}

TEST_CASE("negating int64 min promotes") {
    Integer m(std::numeric_limits<int64_t>::min());
    Integer n = -m;
    CHECK_FALSE(n.is_small());
    CHECK(n.to_string() == "9223372036854775808");
    CHECK(-n == m);
}

TEST_CASE("decimal round trip and ordering") {
    Integer big("-123456789012345678901234567890");
    CHECK(big.sign() < 0);
    CHECK(big.to_string() == "-123456789012345678901234567890");
    CHECK(big < Integer(0));
    CHECK(Integer(3) > Integer(-4));
    CHECK(Integer("17") == Integer(17));
    CHECK_THROWS_AS(Integer(big).to_int64(), std::overflow_error);
}

TEST_CASE("random arithmetic agrees with GMP") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int64_t> any(std::numeric_limits<int64_t>::min() / 2,
                                               std::numeric_limits<int64_t>::max() / 2);
    for (int trial = 0; trial < 2000; ++trial) {
        const int64_t x = any(gen), y = any(gen), z = any(gen), w = any(gen);
        const mpz_class X(std::to_string(x)), Y(std::to_string(y)), Z(std::to_string(z)),
            W(std::to_string(w));
        Integer a(static_cast<long long>(x)), b(static_cast<long long>(y)),
            c(static_cast<long long>(z)), d(static_cast<long long>(w));
        CHECK((a * b).to_mpz() == X * Y);
        CHECK((a * b * c).to_mpz() == X * Y * Z);
        CHECK((a + b).to_mpz() == X + Y);
        CHECK((a - b).to_mpz() == X - Y);
        CHECK(cross(a, b, c, d).to_mpz() == X * Y - Z * W);
        if (y != 0) {
            CHECK(divexact(a * b, b) == a);
            CHECK(cross_divexact(a * b, c, d * b, a, b).to_mpz() == (X * Y * Z - W * Y * X) / Y);
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
        CHECK(gcd(a, b).to_mpz() == g);
        CHECK(((a * b) <=> (c * d)) == (cmp(mpz_class(X * Y), mpz_class(Z * W)) <=> 0));
    }
}

TEST_CASE("vector helpers") {
    auto v = make_vector({4, -6, 0, 10});
    CHECK(content(v) == Integer(2));
    CHECK(primitive(v) == make_vector({2, -3, 0, 5}));
    CHECK(is_primitive(make_vector({2, -3, 0, 5})));
    CHECK(primitive(zero_vector(3)) == zero_vector(3));
    CHECK(dot(make_vector({1, 2, 3}), make_vector({4, -5, 6})) == Integer(12));
    CHECK(combine(2, make_vector({1, 1}), -3, make_vector({1, 0})) == make_vector({-1, 2}));
    CHECK(format_vector(make_vector({1, -2, 0})) == "(1,-2,0)");
    CHECK(lex_less(make_vector({-1, 5}), make_vector({0, -7})));
    CHECK_FALSE(lex_less(make_vector({0, 1}), make_vector({0, 1})));
}

TEST_CASE("dot product survives 128-bit accumulation overflow") {
    const long long big = std::numeric_limits<int64_t>::max();
    IntVector a(8, Integer(big)), b(8, Integer(big));
    const mpz_class B(std::to_string(big));
    CHECK(dot(a, b).to_mpz() == 8 * B * B);
}

TEST_CASE("echelon form is canonical for a row space") {
    IntMatrix m = {make_vector({2, 4, 6}), make_vector({1, 1, 1})};
    IntMatrix n = {make_vector({3, 3, 3}), make_vector({0, 2, 4}), make_vector({1, 3, 5})};
    auto e1 = row_echelon(m, 3), e2 = row_echelon(n, 3);
    CHECK(e1.rows == e2.rows);
    CHECK(e1.rows == IntMatrix{make_vector({1, 0, -1}), make_vector({0, 1, 2})});
    CHECK(rank(n, 3) == 2);
    auto ns = nullspace_basis(e1);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == make_vector({1, -2, 1}));
}

TEST_CASE("nullspace property on random matrices") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + trial % 5, rows = 1 + trial % 4;
        IntMatrix m(rows, IntVector(dim));
        for (auto& r : m) {
            for (auto& x : r) x = d(gen);
        }
        auto e = row_echelon(m, dim);
        auto ns = nullspace_basis(e);
        CHECK(ns.size() + e.rank() == dim);
        for (const auto& v : ns) {
            CHECK(is_primitive(v));
            for (const auto& r : m) CHECK(dot(r, v).is_zero());
        }
        IntVector y(ns.size());
        for (auto& x : y) x = d(gen);
        const auto x = lift(ns, y, dim);
        for (const auto& r : m) CHECK(dot(r, x).is_zero());
        IntVector v(dim);
        for (auto& c : v) c = d(gen);
        const auto red = reduce_modulo(e, v);
        for (std::size_t i = 0; i < e.rank(); ++i) CHECK(red[e.pivots[i]].is_zero());
    }
}

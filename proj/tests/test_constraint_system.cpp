#include "constraint_system.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "simplex.hpp"

#include <doctest.h>

#include <random>

using namespace prevariety;

namespace {

ConstraintSystem sys_of(std::size_t dim, IntMatrix eq, IntMatrix le, IntMatrix lt) {
    return ConstraintSystem::make(dim, std::move(eq), std::move(le), std::move(lt));
}

// Closed cone in one more coordinate: (a,0) <= 0, (a',1) <= 0, -t <= 0.
ConstraintSystem homogenize(const ConstraintSystem& c) {
    ConstraintSystem h(c.dim + 1);
    auto ext = [&](const IntVector& a, long long t) {
        IntVector v = a;
        v.emplace_back(t);
        return v;
    };
    for (const auto& e : c.equations) h.add_equation(ext(e, 0));
    for (const auto& a : c.nonstrict) h.add_nonstrict(ext(a, 0));
    for (const auto& a : c.strict) h.add_nonstrict(ext(a, 1));
    IntVector t = zero_vector(c.dim + 1);
    t.back() = -1;
    h.add_nonstrict(t);
    return h;
}

}  // namespace

TEST_CASE("standard form simplex returns checkable certificates") {
    // u1 + u2 = 1, u1 - u2 = 3 has no nonnegative solution.
    IntMatrix m = {make_vector({1, 1}), make_vector({1, -1})};
    auto r = solve_standard_form(m, make_vector({1, 3}), 2);
    REQUIRE_FALSE(r.feasible);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK((r.farkas[0] * m[0][j] + r.farkas[1] * m[1][j]).sign() <= 0);
    }
    CHECK((r.farkas[0] * 1 + r.farkas[1] * 3).sign() > 0);

    auto ok = solve_standard_form(m, make_vector({3, 1}), 2);
    REQUIRE(ok.feasible);
    CHECK(ok.primal[0] == ok.denominator * 2);
    CHECK(ok.primal[1] == ok.denominator * 1);
}

TEST_CASE("lp_feasible hand examples") {
    auto a = sys_of(1, {}, {}, {make_vector({1}), make_vector({-1})});
    CHECK_FALSE(lp_feasible(a).feasible);
    auto b = sys_of(1, {}, {make_vector({1}), make_vector({-1})}, {});
    auto v = lp_feasible(b);
    REQUIRE(v.feasible);
    CHECK(*v.witness == make_vector({0}));
    auto z = sys_of(2, {}, {}, {make_vector({0, 0})});
    CHECK(z.marked_empty);
    CHECK_FALSE(lp_feasible(z).feasible);
    CHECK_THROWS_AS(sys_of(2, {make_vector({1})}, {}, {}), MalformedInput);
}

TEST_CASE("lp_feasible matches Fourier-Motzkin on random systems") {
    std::mt19937_64 gen(2024);
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t eqs = trial % 3 == 0 ? 1 : 0;
        const std::size_t le = gen() % 4, lt = 1 + gen() % 3;
        auto s = oracle::random_system(gen, 3, eqs, le, lt, 5);
        const auto v = lp_feasible(s);
        CHECK(v.feasible == oracle::fm_feasible(s));
        if (v.feasible) {
            ++feasible;
            CHECK(s.contains(*v.witness));
        }
    }
    CHECK(feasible > 50);
    CHECK(feasible < 350);
}

TEST_CASE("implied equations") {
    auto line = sys_of(1, {}, {make_vector({1}), make_vector({-1})}, {});
    CHECK(implied_equations(line) == std::vector<std::size_t>{0, 1});
    auto quad = sys_of(2, {}, {make_vector({1, 0}), make_vector({0, 1})}, {});
    CHECK(implied_equations(quad).empty());
    CHECK_THROWS_AS(implied_equations(ConstraintSystem::make(1, {}, {}, {make_vector({0})})), EmptyRegion);

    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = oracle::random_system(gen, 3, 0, 2 + gen() % 4, gen() % 2, 3);
        const auto implied = implied_equations(s);
        const auto rows = s.closure().nonstrict;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const bool got = std::find(implied.begin(), implied.end(), i) != implied.end();
            CHECK(got == oracle::fm_implied(s, rows[i]));
        }
    }
}

TEST_CASE("dimension") {
    CHECK(dimension(sys_of(2, {make_vector({1, 0})}, {}, {})) == 1);
    CHECK(dimension(ConstraintSystem(4)) == 4);
    CHECK(dimension(sys_of(1, {}, {}, {make_vector({1}), make_vector({-1})})) == -1);

    std::mt19937_64 gen(9);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 30; ++trial) {
        auto s = oracle::random_system(gen, 3, trial % 4 == 0, 1 + gen() % 3, 1 + gen() % 2, 3);
        if (!lp_feasible(s).feasible) continue;
        ++checked;
        CHECK(dimension(s) == oracle::fm_dimension(s));
        CHECK(dimension(homogenize(s)) == dimension(s) + 1);
    }
    CHECK(checked == 30);
}

TEST_CASE("remove_redundant") {
    auto s = sys_of(2, {}, {make_vector({1, 0}), make_vector({2, 0}), make_vector({0, 1})}, {});
    auto r = remove_redundant(s);
    CHECK(r.nonstrict.size() == 2);
    auto quad = sys_of(2, {}, {make_vector({1, 0}), make_vector({0, 1})}, {});
    CHECK(remove_redundant(quad).nonstrict.size() == 2);
    CHECK_THROWS_AS(remove_redundant(sys_of(1, {}, {}, {make_vector({1}), make_vector({-1})})),
                    EmptyRegion);

    std::mt19937_64 gen(31);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 120; ++trial) {
        auto s2 = oracle::random_system(gen, 3, trial % 5 == 0, 2 + gen() % 4, gen() % 3, 3);
        if (!lp_feasible(s2).feasible) continue;
        auto red = remove_redundant(s2);
        CHECK(red.row_count() <= s2.row_count());
        CHECK(oracle::fm_equal(s2, red));
        CHECK(remove_redundant(red) == red);
        for (int k = 0; k < 500; ++k) {
            IntVector x(3);
            for (auto& c : x) c = d(gen);
            CHECK(s2.contains(x) == red.contains(x));
        }
        // No remaining inequality can be dropped.
        for (std::size_t i = 0; i < red.nonstrict.size(); ++i) {
            auto fewer = red;
            fewer.nonstrict.erase(fewer.nonstrict.begin() + static_cast<std::ptrdiff_t>(i));
            CHECK_FALSE(oracle::fm_equal(fewer, red));
        }
        for (std::size_t i = 0; i < red.strict.size(); ++i) {
            auto fewer = red;
            fewer.strict.erase(fewer.strict.begin() + static_cast<std::ptrdiff_t>(i));
            CHECK_FALSE(oracle::fm_equal(fewer, red));
        }
    }
}

TEST_CASE("closure keys") {
    auto a = sys_of(1, {}, {}, {make_vector({1})});
    auto b = sys_of(1, {}, {make_vector({2})}, {make_vector({1})});
    CHECK(closure_key(a) == closure_key(b));
    CHECK(closure_key(a).inequalities == IntMatrix{make_vector({1})});

    auto c = sys_of(2, {make_vector({1, 0})}, {make_vector({0, 1})}, {});
    auto d = sys_of(2, {}, {make_vector({0, 1}), make_vector({1, 0}), make_vector({-1, 0})}, {});
    CHECK(closure_key(c) == closure_key(d));
    CHECK(closure_key(c).cone_dimension() == 1);

    std::mt19937_64 gen(77);
    std::uniform_int_distribution<int> scale(1, 5);
    int trials = 0;
    while (trials < 100) {
        auto s = oracle::random_system(gen, 3, gen() % 2, 2 + gen() % 3, gen() % 2, 3);
        if (!lp_feasible(s).feasible) continue;
        ++trials;
        IntMatrix eq = s.equations, le = s.nonstrict, lt = s.strict;
        std::shuffle(eq.begin(), eq.end(), gen);
        std::shuffle(le.begin(), le.end(), gen);
        std::shuffle(lt.begin(), lt.end(), gen);
        for (auto& r : le) r = prevariety::scale(r, scale(gen));
        for (auto& r : lt) r = prevariety::scale(r, scale(gen));
        // A redundant combination of two inequalities leaves the set unchanged.
        if (le.size() >= 2) le.push_back(add(le[0], le[1]));
        for (auto& r : eq) r = negate(prevariety::scale(r, scale(gen)));
        auto u = ConstraintSystem::make(3, eq, le, lt);
        CHECK(closure_key(s) == closure_key(u));
    }
}

TEST_CASE("extreme rays") {
    auto quad = sys_of(2, {}, {make_vector({-1, 0}), make_vector({0, -1})}, {});
    auto q = extreme_rays(quad);
    CHECK(q.lineality.empty());
    CHECK(q.rays == IntMatrix{make_vector({0, 1}), make_vector({1, 0})});

    auto half = sys_of(2, {}, {make_vector({-1, 0})}, {});
    auto h = extreme_rays(half);
    CHECK(h.lineality.size() == 1);
    CHECK(h.rays == IntMatrix{make_vector({1, 0})});

    CHECK_THROWS_AS(extreme_rays(sys_of(1, {}, {}, {make_vector({1})})), MalformedInput);

    std::mt19937_64 gen(4242);
    int pointed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto s = oracle::random_system(gen, 4, trial % 6 == 0, 4 + gen() % 3, 0, 3);
        auto desc = extreme_rays(s);
        for (const auto& r : desc.rays) {
            CHECK(s.contains(r));
            CHECK(is_primitive(r));
            IntMatrix tight = s.equations;
            tight.insert(tight.end(), desc.lineality.begin(), desc.lineality.end());
            for (const auto& a : s.nonstrict) {
                if (dot(a, r).is_zero()) tight.push_back(a);
            }
            CHECK(rank(tight, 4) == 3);
        }
        if (!desc.lineality.empty()) continue;
        ++pointed;
        auto brute = oracle::brute_rays(s);
        CHECK(IntMatrix(brute.begin(), brute.end()) == desc.rays);
    }
    CHECK(pointed > 100);
}

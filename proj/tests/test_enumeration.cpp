#include "enumeration.hpp"
#include "helpers.hpp"
#include "postprocess.hpp"

#include <doctest.h>

#include <random>

using namespace prevariety;
using testing::output_keys;
using testing::run_dynamic;
using testing::run_static;

namespace {

std::vector<Fan> sized_fans(const std::vector<std::size_t>& sizes) {
    std::vector<Fan> fans;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        Fan f;
        f.polytope_index = static_cast<int>(i);
        f.cones.resize(sizes[i]);
        fans.push_back(std::move(f));
    }
    return fans;
}

std::size_t ray_count(const std::vector<ClosureKey>& keys) {
    std::vector<ClosureKey> uniq = keys;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    return collect_rays(uniq).rays.size();
}

}  // namespace

TEST_CASE("first fan has the fewest cones") {
    CHECK(choose_first_fan(sized_fans({28, 2, 28})) == 1);
    CHECK(choose_first_fan(sized_fans({5, 5, 5})) == 0);
    CHECK(choose_first_fan(sized_fans({4, 3, 3})) == 1);
    CHECK_THROWS(choose_first_fan({}));
    for (int n = 4; n <= 8; ++n) {
        auto fans = build_fans(gen_cyclic(n), 0);
        CHECK(fans.back().size() == 1);
        CHECK(choose_first_fan(fans) == fans.size() - 1);
    }
}

TEST_CASE("next fan minimizes the block popcount") {
    auto fans = sized_fans({3, 6, 6, 6});
    auto layout = make_layout(fans);
    Task t;
    t.table = RelationTable(layout, false);
    t.used = {true, false, false, false};
    for (std::size_t j = 0; j < 5; ++j) t.table.set(layout->bit(1, j));
    for (std::size_t j = 0; j < 5; ++j) t.table.set(layout->bit(2, j));
    for (std::size_t j = 0; j < 2; ++j) t.table.set(layout->bit(3, j));
    CHECK(choose_next_fan(t, fans) == 3);
    t.table.set(layout->bit(3, 2));
    t.table.set(layout->bit(3, 3));
    t.table.set(layout->bit(3, 4));
    CHECK(choose_next_fan(t, fans) == 1);
    t.used[1] = true;
    CHECK(choose_next_fan(t, fans) == 2);

    Task plain;
    plain.used = {false, true, false, false};
    CHECK(choose_next_fan(plain, sized_fans({4, 1, 2, 2})) == 2);
}

TEST_CASE("zero block prunes without LP calls") {
    auto fans = build_fans(gen_cyclic(5), 0);
    auto tables = init_relation_tables(fans);
    EnumerationContext ctx{fans, &tables};
    CollectingSink sink;
    EnumerationStats stats;
    auto start = starting_tasks(4, ctx, sink, stats);
    REQUIRE(start.size() == 1);
    Task t = start[0];
    t.table.clear_block(2);
    CHECK(choose_next_fan(t, fans) == 2);
    auto children = expand(t, 2, ctx, sink, stats);
    CHECK(children.empty());
    CHECK(stats.intersections_attempted == 0);
    CHECK(stats.pruned_by_table == fans[2].size());
}

TEST_CASE("leaf expansion only emits") {
    auto fans = build_fans(gen_cyclic(4), 0);
    EnumerationContext ctx{fans, nullptr};
    CollectingSink sink;
    EnumerationStats stats;
    std::vector<Task> level = starting_tasks(0, ctx, sink, stats);
    for (std::size_t f = 1; f + 1 < fans.size(); ++f) {
        std::vector<Task> next;
        for (const auto& t : level) {
            for (auto& c : expand(t, f, ctx, sink, stats)) next.push_back(std::move(c));
        }
        level = std::move(next);
    }
    CHECK(sink.size() == 0);
    for (const auto& t : level) CHECK(expand(t, fans.size() - 1, ctx, sink, stats).empty());
    CHECK(sink.size() == stats.output_cones);
    CHECK(stats.output_cones > 0);
}

TEST_CASE("one fan outputs its own cones") {
    PolynomialSystem sys{2, {"x", "y"},
                         {Support{2, {make_vector({0, 0}), make_vector({1, 0}), make_vector({0, 1})}}}, "t"};
    auto fans = build_fans(sys, 0);
    CollectingSink sink;
    enumerate_static(fans, sink);
    CHECK(sink.size() == fans[0].size());
    CHECK(run_dynamic(fans, DynamicMode::iterative, true).size() == fans[0].size());
}

TEST_CASE("two binomial lines meet only at the origin") {
    PolynomialSystem sys{2, {"x", "y"},
                         {Support{2, {make_vector({1, 0}), make_vector({0, 1})}},
                          Support{2, {make_vector({1, 0}), make_vector({0, 2})}}},
                         "t"};
    auto fans = build_fans(sys, 0);
    auto keys = run_static(fans);
    REQUIRE(keys.size() == 1);
    CHECK(keys[0].cone_dimension() == 0);
    CHECK(ray_count(keys) == 0);
}

TEST_CASE("static and dynamic modes agree on random systems") {
    std::mt19937_64 gen(101);
    int nontrivial = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto sys = testing::random_poly_system(gen, 3, 3, 4);
        auto fans = build_fans(sys, static_cast<uint64_t>(trial));
        const auto ref = run_static(fans);
        CHECK(run_dynamic(fans, DynamicMode::recursive, false) == ref);
        CHECK(run_dynamic(fans, DynamicMode::recursive, true) == ref);
        CHECK(run_dynamic(fans, DynamicMode::iterative, true) == ref);
        CHECK(run_dynamic(fans, DynamicMode::iterative, false) == ref);
        nontrivial += ref.size() > 1;
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("output cones replay and lie on every hypersurface") {
    std::mt19937_64 gen(202);
    for (int trial = 0; trial < 10; ++trial) {
        auto sys = testing::random_poly_system(gen, 3, 3, 4);
        auto fans = build_fans(sys, 7);
        CollectingSink sink;
        enumerate_dynamic(fans, sink, DynamicMode::iterative, true);
        auto out = sink.take();
        for (const auto& oc : out) {
            REQUIRE(oc.picks.size() == fans.size());
            HalfOpenCone c = fans[0].cones.at(static_cast<std::size_t>(oc.picks[0]));
            for (std::size_t f = 1; f < fans.size(); ++f) {
                c = intersect(c, fans[f].cones.at(static_cast<std::size_t>(oc.picks[f])));
            }
            REQUIRE(c.nonempty());
            CHECK(closure_key(c) == closure_key(oc.cone));
            const auto& w = *oc.cone.witness;
            for (const auto& s : sys.supports) CHECK(testing::minimizers(s.points, w) >= 2);
        }
        // Pairwise disjoint: no output cone contains another's witness.
        for (std::size_t a = 0; a < out.size(); ++a) {
            for (std::size_t b = 0; b < out.size(); ++b) {
                if (a != b) CHECK_FALSE(out[a].cone.contains(*out[b].cone.witness));
            }
        }
    }
}

TEST_CASE("cyclic-4 and cyclic-5 ray counts") {
    CHECK(ray_count(run_static(build_fans(gen_cyclic(4), 0))) == 2);
    CHECK(ray_count(run_dynamic(build_fans(gen_cyclic(4), 0), DynamicMode::iterative, true)) == 2);
    CHECK(ray_count(run_dynamic(build_fans(gen_cyclic(5), 0), DynamicMode::recursive, true)) == 0);
}

TEST_CASE("pruning on cyclic-8 keeps the output and cuts LP calls") {
    auto fans = build_fans(gen_cyclic(8), 0);
    EnumerationStats off, on;
    auto a = run_dynamic(fans, DynamicMode::iterative, false, &off);
    auto b = run_dynamic(fans, DynamicMode::iterative, true, &on);
    CHECK(a == b);
    CHECK(off.pruned_by_table == 0);
    CHECK(on.pruned_by_table > 0);
    CHECK(on.intersections_attempted < off.intersections_attempted);
    CollectingSink sink;
    auto st = enumerate_static(fans, sink);
    CHECK(output_keys(sink.take()) == a);
    CHECK(on.intersections_attempted <= st.intersections_attempted);
    CHECK(ray_count(a) == 94);
}

TEST_CASE("candidate pairs are either pruned or tested") {
    auto fans = build_fans(gen_cyclic(6), 0);
    EnumerationStats stats;
    CollectingSink sink;
    auto tables = init_relation_tables(fans);
    stats = enumerate_dynamic(fans, sink, DynamicMode::recursive, &tables);
    // Each executed task examines every cone of the one fan it expands.
    EnumerationStats check;
    EnumerationContext ctx{fans, &tables};
    CollectingSink sink2;
    std::function<void(const Task&)> walk = [&](const Task& t) {
        const auto f = choose_next_fan(t, fans);
        const auto before = check.pruned_by_table + check.intersections_attempted;
        auto kids = expand(t, f, ctx, sink2, check);
        CHECK(check.pruned_by_table + check.intersections_attempted - before == fans[f].size());
        for (const auto& k : kids) walk(k);
    };
    for (const auto& t : starting_tasks(choose_first_fan(fans), ctx, sink2, check)) walk(t);
    CHECK(check.intersections_attempted == stats.intersections_attempted);
    CHECK(check.pruned_by_table == stats.pruned_by_table);
    CHECK(sink.size() == sink2.size());
}

#include "cones.hpp"

#include "errors.hpp"

#include <algorithm>
#include <numeric>

namespace prevariety {

HalfOpenCone vertex_cone(const NewtonPolytope& p, std::size_t v) {
    if (v >= p.vertices.size()) throw std::out_of_range("vertex_cone: bad vertex index");
    ConstraintSystem body(p.dim);
    for (auto [from, to] : p.edges) {
        if (to == v) {
            body.add_nonstrict(subtract(p.vertices[v], p.vertices[from]));
        } else if (from == v) {
            body.add_strict(subtract(p.vertices[v], p.vertices[to]));
        }
    }
    return make_cone(std::move(body));
}

std::vector<HalfOpenCone> create_half_open_cones(const HalfOpenCone& c) {
    std::vector<HalfOpenCone> out;
    ConstraintSystem rest = c.body;
    while (!rest.nonstrict.empty()) {
        IntVector chosen = rest.nonstrict.front();
        rest.nonstrict.erase(rest.nonstrict.begin());

        ConstraintSystem on_boundary = rest;
        on_boundary.equations.push_back(chosen);
        HalfOpenCone eq = make_cone(std::move(on_boundary), c.origin);
        if (eq.nonempty()) out.push_back(std::move(eq));

        rest.strict.push_back(std::move(chosen));
    }
    return out;
}

Fan hypersurface_fan(const NewtonPolytope& p, int polytope_index) {
    if (p.edges.empty()) {
        throw DegenerateFan("polytope " + std::to_string(polytope_index) +
                            " has no edges; its tropical hypersurface is empty");
    }
    const auto h = p.heights();
    std::vector<std::size_t> order(p.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });

    Fan fan;
    fan.polytope_index = polytope_index;
    for (auto v : order) {
        for (auto& c : create_half_open_cones(vertex_cone(p, v))) {
            c.body = remove_redundant(c.body);
            c.origin = {polytope_index, static_cast<int>(fan.cones.size())};
            fan.cones.push_back(std::move(c));
        }
    }
    return fan;
}

HalfOpenCone make_cone(ConstraintSystem body, ConeOrigin origin) {
    HalfOpenCone c;
    auto verdict = lp_feasible(body);
    c.body = std::move(body);
    c.origin = origin;
    if (verdict.feasible) c.witness = std::move(verdict.witness);
    return c;
}

HalfOpenCone intersect(const HalfOpenCone& a, const HalfOpenCone& b, bool reduce) {
    HalfOpenCone c = make_cone(concatenate(a.body, b.body));
    if (reduce && c.nonempty()) c.body = remove_redundant(c.body);
    return c;
}

ClosureKey closure_key(const HalfOpenCone& c) {
    if (!c.nonempty()) throw EmptyRegion();
    return closure_key(c.body);
}

}  // namespace prevariety

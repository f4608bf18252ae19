#include "newton.hpp"

#include "constraint_system.hpp"
#include "errors.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace prevariety {

std::vector<Integer> NewtonPolytope::heights() const {
    std::vector<Integer> h;
    h.reserve(vertices.size());
    for (const auto& v : vertices) h.push_back(dot(orientation, v));
    return h;
}

IntMatrix compute_vertices(const Support& s) {
    for (const auto& p : s.points) {
        if (p.size() != s.dim) throw MalformedInput("support point has wrong length");
    }
    if (s.points.size() <= 2) return s.points;

    IntMatrix out;
    const std::size_t n = s.dim;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        // p = sum lambda_j q_j, sum lambda_j = 1, lambda >= 0 over the other points.
        const std::size_t cols = s.points.size() - 1;
        IntMatrix m(n + 1, IntVector(cols));
        std::size_t c = 0;
        for (std::size_t j = 0; j < s.points.size(); ++j) {
            if (j == i) continue;
            for (std::size_t r = 0; r < n; ++r) m[r][c] = s.points[j][r];
            m[n][c] = 1;
            ++c;
        }
        IntVector b = s.points[i];
        b.push_back(1);
        if (!solve_standard_form(m, b, cols).feasible) out.push_back(s.points[i]);
    }
    return out;
}

std::vector<Edge> compute_edges(const IntMatrix& vertices) {
    std::vector<Edge> edges;
    if (vertices.size() < 2) return edges;
    const std::size_t n = vertices.front().size();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            // Some w has {i, j} as its exact minimizing set.
            ConstraintSystem sys(n);
            sys.add_equation(subtract(vertices[i], vertices[j]));
            for (std::size_t k = 0; k < vertices.size(); ++k) {
                if (k == i || k == j) continue;
                sys.add_strict(subtract(vertices[i], vertices[k]));
            }
            if (lp_feasible(sys).feasible) edges.emplace_back(i, j);
        }
    }
    return edges;
}

IntVector draw_orientation(const IntMatrix& vertices, uint64_t seed) {
    const std::size_t n = vertices.empty() ? 0 : vertices.front().size();
    std::mt19937_64 gen(seed);
    const uint64_t width = static_cast<uint64_t>(2 * kOrientationRange + 1);
    for (int attempt = 0; attempt < kOrientationRetries; ++attempt) {
        IntVector r(n);
        for (auto& x : r) x = Integer(static_cast<long long>(gen() % width) - kOrientationRange);
        std::set<Integer> seen;
        bool injective = true;
        for (const auto& v : vertices) {
            if (!seen.insert(dot(r, v)).second) {
                injective = false;
                break;
            }
        }
        if (injective) return r;
    }
    throw DegenerateOrientation("no generic orientation vector found in " +
                                std::to_string(kOrientationRetries) + " draws");
}

NewtonPolytope orient_with(IntMatrix vertices, const std::vector<Edge>& edges, IntVector r) {
    NewtonPolytope p;
    p.dim = vertices.empty() ? 0 : vertices.front().size();
    p.vertices = std::move(vertices);
    p.orientation = std::move(r);
    const auto h = p.heights();
    for (auto [u, v] : edges) {
        auto c = h[u] <=> h[v];
        if (c == 0) throw DegenerateOrientation("orientation vector is not generic");
        p.edges.push_back(c < 0 ? Edge{u, v} : Edge{v, u});
    }
    return p;
}

NewtonPolytope orient(IntMatrix vertices, const std::vector<Edge>& edges, uint64_t seed) {
    IntVector r = draw_orientation(vertices, seed);
    return orient_with(std::move(vertices), edges, std::move(r));
}

NewtonPolytope build_polytope(const Support& s, uint64_t seed) {
    IntMatrix vertices = compute_vertices(s);
    auto edges = compute_edges(vertices);
    return orient(std::move(vertices), edges, seed);
}

}  // namespace prevariety

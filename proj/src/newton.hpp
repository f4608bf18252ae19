#pragma once

#include "int_vector.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace prevariety {

/// Exponent vectors of one polynomial.
struct Support {
    std::size_t dim = 0;
    IntMatrix points;

    friend bool operator==(const Support&, const Support&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Vertices of the Newton polytope with the edge graph oriented by a generic
/// integer vector: every edge (u, v) satisfies <r,u> < <r,v>.
struct NewtonPolytope {
    std::size_t dim = 0;
    IntMatrix vertices;
    std::vector<Edge> edges;
    IntVector orientation;

    // Inner products with the orientation vector, one per vertex.
    std::vector<Integer> heights() const;
};

// Points of the support that are vertices of its convex hull, in input order.
IntMatrix compute_vertices(const Support& s);

// Unordered vertex pairs (i < j) spanning an edge of conv(vertices).
std::vector<Edge> compute_edges(const IntMatrix& vertices);

inline constexpr int kOrientationRetries = 64;
inline constexpr int64_t kOrientationRange = int64_t{1} << 16;

// Integer vector with entries in [-2^16, 2^16] drawn from a generator seeded by
// `seed`, redrawn until <r,.> separates the vertices.
IntVector draw_orientation(const IntMatrix& vertices, uint64_t seed);

NewtonPolytope orient(IntMatrix vertices, const std::vector<Edge>& edges, uint64_t seed);
NewtonPolytope orient_with(IntMatrix vertices, const std::vector<Edge>& edges, IntVector r);

NewtonPolytope build_polytope(const Support& s, uint64_t seed);

}  // namespace prevariety

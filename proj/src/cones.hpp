#pragma once

#include "constraint_system.hpp"
#include "newton.hpp"

#include <optional>
#include <vector>

namespace prevariety {

struct ConeOrigin {
    int fan = -1;
    int index = -1;

    bool derived() const { return fan < 0; }
    friend bool operator==(const ConeOrigin&, const ConeOrigin&) = default;
};

/// A half-open polyhedral cone. `witness` is present exactly when the cone is
/// known to be nonempty, and always satisfies `body`.
struct HalfOpenCone {
    ConstraintSystem body;
    ConeOrigin origin;
    std::optional<IntVector> witness;

    bool nonempty() const { return witness.has_value(); }
    bool contains(std::span<const Integer> x) const { return body.contains(x); }
};

/// Disjoint half-open cones covering the tropical hypersurface of one polytope.
struct Fan {
    int polytope_index = 0;
    std::vector<HalfOpenCone> cones;

    std::size_t size() const { return cones.size(); }
};

// Half-open normal cone of vertex v: inequality <w, v-u> <= 0 for incoming
// edges and < 0 for outgoing ones.
HalfOpenCone vertex_cone(const NewtonPolytope& p, std::size_t v);

// Disjoint half-open cones whose union is the boundary of c.
std::vector<HalfOpenCone> create_half_open_cones(const HalfOpenCone& c);

// Throws DegenerateFan for a polytope without edges.
Fan hypersurface_fan(const NewtonPolytope& p, int polytope_index = 0);

// Checks feasibility and attaches a witness when nonempty.
HalfOpenCone make_cone(ConstraintSystem body, ConeOrigin origin = {});

// Kind-wise concatenation; nonempty results optionally get their redundant
// rows removed.
HalfOpenCone intersect(const HalfOpenCone& a, const HalfOpenCone& b, bool reduce = false);

ClosureKey closure_key(const HalfOpenCone& c);

}  // namespace prevariety

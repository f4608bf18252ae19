#pragma once

#include "int_vector.hpp"
#include "linalg.hpp"

#include <optional>
#include <vector>

namespace prevariety {

/// {x : E x = 0, A x <= 0, A' x < 0}. Rows are stored primitive. A zero strict
/// row makes the set empty; it is dropped and the system is flagged instead.
struct ConstraintSystem {
    std::size_t dim = 0;
    IntMatrix equations;
    IntMatrix nonstrict;
    IntMatrix strict;
    bool marked_empty = false;

    ConstraintSystem() = default;
    explicit ConstraintSystem(std::size_t d) : dim(d) {}

    // Validates row lengths (MalformedInput) and normalizes rows.
    static ConstraintSystem make(std::size_t dim, IntMatrix equations, IntMatrix nonstrict,
                                 IntMatrix strict);

    void add_equation(IntVector row);
    void add_nonstrict(IntVector row);
    void add_strict(IntVector row);

    std::size_t row_count() const { return equations.size() + nonstrict.size() + strict.size(); }

    // Exact membership test.
    bool contains(std::span<const Integer> x) const;
    // Strict rows relaxed to nonstrict.
    ConstraintSystem closure() const;

    friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) = default;
};

// Kind-wise concatenation.
ConstraintSystem concatenate(const ConstraintSystem& a, const ConstraintSystem& b);

struct FeasibilityVerdict {
    bool feasible = false;
    std::optional<IntVector> witness;
};

FeasibilityVerdict lp_feasible(const ConstraintSystem& sys);

// Indices into closure().nonstrict (the nonstrict rows followed by the strict
// rows) of rows that hold with equality on the whole closed region.
std::vector<std::size_t> implied_equations(const ConstraintSystem& sys);

// -1 for the empty region.
int dimension(const ConstraintSystem& sys);

ConstraintSystem remove_redundant(const ConstraintSystem& sys);

/// Canonical description of the closure of a nonempty cone: equations in
/// integer RREF, facet inequalities reduced modulo the equations, primitive,
/// and sorted lexicographically. Equal point sets give equal keys.
struct ClosureKey {
    std::size_t dim = 0;
    IntMatrix equations;
    IntMatrix inequalities;

    int cone_dimension() const { return static_cast<int>(dim - equations.size()); }
    ConstraintSystem as_system() const;
    bool contains(std::span<const Integer> x) const;

    friend bool operator==(const ClosureKey&, const ClosureKey&) = default;
};

bool operator<(const ClosureKey& a, const ClosureKey& b);

ClosureKey closure_key(const ConstraintSystem& sys);

/// Lineality basis and extreme rays of a closed cone, by double description.
struct RayDescription {
    IntMatrix lineality;
    IntMatrix rays;
};

RayDescription extreme_rays(const ConstraintSystem& sys);

namespace detail {

/// Outcome of the cone LP in reduced coordinates.
struct ConeLp {
    bool nonempty = false;
    IntVector witness;      // reduced coordinates, when nonempty
    IntVector multipliers;  // nonstrict rows then strict rows, when empty
};

// Decides {y : L y <= 0, S y < 0} through the Farkas alternative
// {u >= 0, v >= 0 : L^T u + S^T v = 0, sum v = 1}.
ConeLp solve_cone_lp(const IntMatrix& nonstrict, const IntMatrix& strict, std::size_t dim);

/// Coordinates on {x : E x = 0}: x = sum_k y_k basis[k].
struct Subspace {
    std::size_t dim = 0;
    Echelon echelon;
    IntMatrix basis;

    explicit Subspace(const IntMatrix& equations, std::size_t ambient);
    IntVector restrict_row(std::span<const Integer> row) const;
    IntVector lift(std::span<const Integer> y) const;
    std::size_t reduced_dim() const { return basis.size(); }
};

}  // namespace detail

}  // namespace prevariety

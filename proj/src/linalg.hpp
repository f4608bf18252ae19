#pragma once

#include "int_vector.hpp"

#include <cstddef>
#include <vector>

namespace prevariety {

/// Reduced row echelon form over the integers: every row is primitive with a
/// positive pivot, and each pivot column is zero in every other row. This is
/// the rational RREF with each row rescaled, so it is unique for a row space.
struct Echelon {
    std::size_t dim = 0;
    IntMatrix rows;
    std::vector<std::size_t> pivots;  // pivot column of rows[i]

    std::size_t rank() const { return rows.size(); }
};

Echelon row_echelon(IntMatrix rows, std::size_t dim);
std::size_t rank(const IntMatrix& rows, std::size_t dim);

// Primitive integer basis of {x : rows * x = 0}, one vector per free column.
IntMatrix nullspace_basis(const Echelon& e);

// Positive multiple of v minus a combination of echelon rows so that v is zero
// on every pivot column. Inequality directions survive since the scale is > 0.
IntVector reduce_modulo(const Echelon& e, IntVector v);

// sum_k y_k * basis[k]
IntVector lift(const IntMatrix& basis, std::span<const Integer> y, std::size_t dim);

}  // namespace prevariety

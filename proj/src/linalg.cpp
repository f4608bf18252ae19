#include "linalg.hpp"

#include <stdexcept>
#include <utility>

namespace prevariety {

namespace {

// row = p*row - row[col]*pivot_row, then primitive.
void eliminate(IntVector& row, const IntVector& pivot_row, std::size_t col) {
    if (row[col].is_zero()) return;
    const Integer p = pivot_row[col];
    const Integer f = row[col];
    for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = cross(p, row[j], f, pivot_row[j]);
    }
    row = primitive(std::move(row));
}

Integer lcm(const Integer& a, const Integer& b) {
    return divexact(a * b, gcd(a, b));
}

}  // namespace

Echelon row_echelon(IntMatrix rows, std::size_t dim) {
    for (const auto& r : rows) {
        if (r.size() != dim) throw std::invalid_argument("row_echelon: dimension mismatch");
    }
    Echelon e;
    e.dim = dim;
    std::size_t next = 0;
    for (std::size_t col = 0; col < dim && next < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = next; i < rows.size(); ++i) {
            if (!rows[i][col].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == rows.size()) continue;
        std::swap(rows[next], rows[piv]);
        rows[next] = primitive(std::move(rows[next]));
        if (rows[next][col].sign() < 0) rows[next] = negate(std::move(rows[next]));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next) continue;
            eliminate(rows[i], rows[next], col);
        }
        e.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    e.rows = std::move(rows);
    return e;
}

std::size_t rank(const IntMatrix& rows, std::size_t dim) {
    return row_echelon(rows, dim).rank();
}

IntMatrix nullspace_basis(const Echelon& e) {
    std::vector<bool> is_pivot(e.dim, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    IntMatrix basis;
    for (std::size_t f = 0; f < e.dim; ++f) {
        if (is_pivot[f]) continue;
        Integer scale = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            if (!e.rows[i][f].is_zero()) scale = lcm(scale, e.rows[i][e.pivots[i]]);
        }
        IntVector v(e.dim);
        v[f] = scale;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            if (e.rows[i][f].is_zero()) continue;
            v[e.pivots[i]] = -divexact(e.rows[i][f] * scale, e.rows[i][e.pivots[i]]);
        }
        basis.push_back(primitive(std::move(v)));
    }
    return basis;
}

IntVector reduce_modulo(const Echelon& e, IntVector v) {
    if (v.size() != e.dim) throw std::invalid_argument("reduce_modulo: dimension mismatch");
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const std::size_t col = e.pivots[i];
        if (v[col].is_zero()) continue;
        const Integer p = e.rows[i][col];
        const Integer f = v[col];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = cross(p, v[j], f, e.rows[i][j]);
    }
    return v;
}

IntVector lift(const IntMatrix& basis, std::span<const Integer> y, std::size_t dim) {
    IntVector x(dim);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (y[k].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (!basis[k][j].is_zero()) x[j] += y[k] * basis[k][j];
        }
    }
    return x;
}

}  // namespace prevariety

#include "simplex.hpp"

#include <stdexcept>

namespace prevariety {

namespace {

// Dense fraction-free tableau. Entry (i, j) holds det(B) times the rational
// tableau entry; pivots use the Bareiss update so every division is exact.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void pivot(std::size_t r, std::size_t s, const Integer& old_det) {
        const Integer p = at(r, s);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const Integer f = at(i, s);
            Integer* row = &data_[i * cols_];
            const Integer* prow = &data_[r * cols_];
            if (f.is_zero()) {
                if (p == old_det) continue;
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (!row[j].is_zero()) row[j] = cross_divexact(p, row[j], 0, 0, old_det);
                }
                continue;
            }
            for (std::size_t j = 0; j < cols_; ++j) {
                if (prow[j].is_zero()) {
                    if (!row[j].is_zero() && p != old_det) {
                        row[j] = cross_divexact(p, row[j], 0, 0, old_det);
                    }
                } else {
                    row[j] = cross_divexact(p, row[j], f, prow[j], old_det);
                }
            }
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

}  // namespace

StandardFormResult solve_standard_form(const IntMatrix& m, const IntVector& b,
                                       std::size_t num_columns) {
    const std::size_t nrows = m.size();
    if (b.size() != nrows) throw std::invalid_argument("simplex: rhs size mismatch");
    for (const auto& row : m) {
        if (row.size() != num_columns) throw std::invalid_argument("simplex: row size mismatch");
    }

    const std::size_t k = num_columns;
    const std::size_t width = k + nrows + 1;
    const std::size_t rhs = width - 1;
    const std::size_t obj = nrows;
    Tableau t(nrows + 1, width);
    std::vector<int> flip(nrows, 1);
    std::vector<std::size_t> basis(nrows);

    for (std::size_t i = 0; i < nrows; ++i) {
        if (b[i].sign() < 0) flip[i] = -1;
        for (std::size_t j = 0; j < k; ++j) {
            t.at(i, j) = flip[i] < 0 ? -m[i][j] : m[i][j];
        }
        t.at(i, k + i) = 1;
        t.at(i, rhs) = flip[i] < 0 ? -b[i] : b[i];
        basis[i] = k + i;
    }
    // Phase-one objective: minimize the sum of artificials.
    for (std::size_t j = 0; j < k; ++j) {
        Integer s;
        for (std::size_t i = 0; i < nrows; ++i) s -= t.at(i, j);
        t.at(obj, j) = std::move(s);
    }
    {
        Integer s;
        for (std::size_t i = 0; i < nrows; ++i) s -= t.at(i, rhs);
        t.at(obj, rhs) = std::move(s);
    }

    Integer det = 1;
    std::vector<bool> in_basis(width, false);
    for (auto v : basis) in_basis[v] = true;

    StandardFormResult result;
    while (!t.at(obj, rhs).is_zero()) {
        // Bland: lowest-index column with negative reduced cost.
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (!in_basis[j] && t.at(obj, j).sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = nrows;
        for (std::size_t i = 0; i < nrows; ++i) {
            const Integer& a = t.at(i, enter);
            if (a.sign() <= 0) continue;
            if (leave == nrows) {
                leave = i;
                continue;
            }
            // rhs_i / a_i vs rhs_l / a_l
            auto c = t.at(i, rhs) * t.at(leave, enter) <=> t.at(leave, rhs) * a;
            if (c < 0 || (c == 0 && basis[i] < basis[leave])) leave = i;
        }
        if (leave == nrows) {
            // Unbounded below cannot happen: the phase-one objective is >= 0.
            throw std::logic_error("simplex: unbounded phase-one objective");
        }
        t.pivot(leave, enter, det);
        det = t.at(leave, enter);
        in_basis[basis[leave]] = false;
        in_basis[enter] = true;
        basis[leave] = enter;
        ++result.pivots;
    }

    result.denominator = det;
    if (t.at(obj, rhs).is_zero()) {
        result.feasible = true;
        result.primal.assign(k, Integer());
        for (std::size_t i = 0; i < nrows; ++i) {
            if (basis[i] < k) result.primal[basis[i]] = t.at(i, rhs);
        }
    } else {
        result.feasible = false;
        result.farkas.resize(nrows);
        for (std::size_t i = 0; i < nrows; ++i) {
            Integer y = det - t.at(obj, k + i);
            result.farkas[i] = flip[i] < 0 ? -y : y;
        }
    }
    return result;
}

}  // namespace prevariety

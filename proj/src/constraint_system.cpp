#include "constraint_system.hpp"

#include "errors.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace prevariety {

namespace {

struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

void check_row(const IntVector& row, std::size_t dim) {
    if (row.size() != dim) {
        throw MalformedInput("constraint row has length " + std::to_string(row.size()) +
                             ", expected " + std::to_string(dim));
    }
}

void check_rows(const ConstraintSystem& sys) {
    for (const auto& r : sys.equations) check_row(r, sys.dim);
    for (const auto& r : sys.nonstrict) check_row(r, sys.dim);
    for (const auto& r : sys.strict) check_row(r, sys.dim);
}

IntMatrix restrict_rows(const detail::Subspace& sub, const IntMatrix& rows) {
    IntMatrix out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(sub.restrict_row(r));
    return out;
}

// Equations in echelon form plus nonstrict and strict rows reduced modulo
// them, primitive, nonzero and free of duplicates. Requires a nonempty region.
struct Normalized {
    Echelon echelon;
    IntMatrix nonstrict;
    IntMatrix strict;
};

Normalized absorb_implied(const ConstraintSystem& sys) {
    const auto implied = implied_equations(sys);
    const std::size_t num_le = sys.nonstrict.size();
    std::vector<bool> is_implied(num_le + sys.strict.size(), false);
    for (auto i : implied) is_implied[i] = true;

    IntMatrix eqs = sys.equations;
    for (std::size_t i = 0; i < num_le; ++i) {
        if (is_implied[i]) eqs.push_back(sys.nonstrict[i]);
    }
    for (std::size_t i = 0; i < sys.strict.size(); ++i) {
        // A strict row tight on the closure means the half-open set is empty.
        if (is_implied[num_le + i]) throw EmptyRegion();
    }

    Normalized out;
    out.echelon = row_echelon(std::move(eqs), sys.dim);
    std::set<IntVector, LexLess> seen_strict;
    for (const auto& r : sys.strict) {
        IntVector v = primitive(reduce_modulo(out.echelon, r));
        if (is_zero(v)) throw EmptyRegion();
        if (seen_strict.insert(v).second) out.strict.push_back(std::move(v));
    }
    std::set<IntVector, LexLess> seen;
    for (std::size_t i = 0; i < num_le; ++i) {
        if (is_implied[i]) continue;
        IntVector v = primitive(reduce_modulo(out.echelon, sys.nonstrict[i]));
        if (is_zero(v)) continue;
        // x < 0 already implies x <= 0.
        if (seen_strict.count(v)) continue;
        if (seen.insert(v).second) out.nonstrict.push_back(std::move(v));
    }
    return out;
}

// Drops rows whose removal leaves the point set unchanged, one at a time.
void drop_redundant_rows(const detail::Subspace& sub, IntMatrix& le, IntMatrix& lt) {
    IntMatrix le_red = restrict_rows(sub, le);
    IntMatrix lt_red = restrict_rows(sub, lt);
    std::vector<bool> keep_le(le.size(), true);
    std::vector<bool> keep_lt(lt.size(), true);
    const std::size_t d = sub.reduced_dim();

    auto active = [](const IntMatrix& rows, const std::vector<bool>& keep, std::size_t skip) {
        IntMatrix out;
        out.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (keep[i] && i != skip) out.push_back(rows[i]);
        }
        return out;
    };

    for (std::size_t i = 0; i < le.size(); ++i) {
        IntMatrix others = active(le_red, keep_le, i);
        IntMatrix strict = active(lt_red, keep_lt, lt.size());
        strict.push_back(negate(le_red[i]));
        if (!detail::solve_cone_lp(others, strict, d).nonempty) keep_le[i] = false;
    }
    for (std::size_t i = 0; i < lt.size(); ++i) {
        IntMatrix nonstrict = active(le_red, keep_le, le.size());
        nonstrict.push_back(negate(lt_red[i]));
        IntMatrix others = active(lt_red, keep_lt, i);
        if (!detail::solve_cone_lp(nonstrict, others, d).nonempty) keep_lt[i] = false;
    }
    le = active(le, keep_le, le.size());
    lt = active(lt, keep_lt, lt.size());
}

}  // namespace

namespace detail {

Subspace::Subspace(const IntMatrix& equations, std::size_t ambient)
    : dim(ambient), echelon(row_echelon(equations, ambient)), basis(nullspace_basis(echelon)) {}

IntVector Subspace::restrict_row(std::span<const Integer> row) const {
    IntVector out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] = dot(row, basis[k]);
    return out;
}

IntVector Subspace::lift(std::span<const Integer> y) const {
    return prevariety::lift(basis, y, dim);
}

ConeLp solve_cone_lp(const IntMatrix& nonstrict, const IntMatrix& strict, std::size_t dim) {
    ConeLp out;
    if (strict.empty()) {
        out.nonempty = true;
        out.witness = zero_vector(dim);
        return out;
    }
    for (const auto& r : strict) {
        if (is_zero(r)) {
            out.nonempty = false;
            out.multipliers.assign(nonstrict.size() + strict.size(), Integer());
            out.multipliers[nonstrict.size() + (&r - strict.data())] = 1;
            return out;
        }
    }
    const std::size_t cols = nonstrict.size() + strict.size();
    IntMatrix m(dim + 1, IntVector(cols));
    for (std::size_t j = 0; j < nonstrict.size(); ++j) {
        for (std::size_t r = 0; r < dim; ++r) m[r][j] = nonstrict[j][r];
    }
    for (std::size_t j = 0; j < strict.size(); ++j) {
        const std::size_t c = nonstrict.size() + j;
        for (std::size_t r = 0; r < dim; ++r) m[r][c] = strict[j][r];
        m[dim][c] = 1;
    }
    IntVector b(dim + 1);
    b[dim] = 1;
    auto res = solve_standard_form(m, b, cols);
    if (res.feasible) {
        out.nonempty = false;
        out.multipliers = std::move(res.primal);
    } else {
        out.nonempty = true;
        res.farkas.resize(dim);
        out.witness = primitive(std::move(res.farkas));
    }
    return out;
}

}  // namespace detail

ConstraintSystem ConstraintSystem::make(std::size_t dim, IntMatrix equations, IntMatrix nonstrict,
                                        IntMatrix strict) {
    ConstraintSystem sys(dim);
    for (auto& r : equations) sys.add_equation(std::move(r));
    for (auto& r : nonstrict) sys.add_nonstrict(std::move(r));
    for (auto& r : strict) sys.add_strict(std::move(r));
    return sys;
}

void ConstraintSystem::add_equation(IntVector row) {
    check_row(row, dim);
    if (is_zero(row)) return;
    equations.push_back(primitive(std::move(row)));
}

void ConstraintSystem::add_nonstrict(IntVector row) {
    check_row(row, dim);
    if (is_zero(row)) return;
    nonstrict.push_back(primitive(std::move(row)));
}

void ConstraintSystem::add_strict(IntVector row) {
    check_row(row, dim);
    if (is_zero(row)) {
        marked_empty = true;
        return;
    }
    strict.push_back(primitive(std::move(row)));
}

bool ConstraintSystem::contains(std::span<const Integer> x) const {
    if (marked_empty) return false;
    for (const auto& r : equations) {
        if (!dot(r, x).is_zero()) return false;
    }
    for (const auto& r : nonstrict) {
        if (dot(r, x).sign() > 0) return false;
    }
    for (const auto& r : strict) {
        if (dot(r, x).sign() >= 0) return false;
    }
    return true;
}

ConstraintSystem ConstraintSystem::closure() const {
    ConstraintSystem c(dim);
    c.equations = equations;
    c.nonstrict = nonstrict;
    c.nonstrict.insert(c.nonstrict.end(), strict.begin(), strict.end());
    return c;
}

ConstraintSystem concatenate(const ConstraintSystem& a, const ConstraintSystem& b) {
    if (a.dim != b.dim) throw MalformedInput("concatenate: dimension mismatch");
    ConstraintSystem c = a;
    c.equations.insert(c.equations.end(), b.equations.begin(), b.equations.end());
    c.nonstrict.insert(c.nonstrict.end(), b.nonstrict.begin(), b.nonstrict.end());
    c.strict.insert(c.strict.end(), b.strict.begin(), b.strict.end());
    c.marked_empty = a.marked_empty || b.marked_empty;
    return c;
}

FeasibilityVerdict lp_feasible(const ConstraintSystem& sys) {
    check_rows(sys);
    if (sys.marked_empty) return {};
    if (sys.strict.empty()) return {true, zero_vector(sys.dim)};
    detail::Subspace sub(sys.equations, sys.dim);
    auto lp = detail::solve_cone_lp(restrict_rows(sub, sys.nonstrict),
                                    restrict_rows(sub, sys.strict), sub.reduced_dim());
    if (!lp.nonempty) return {};
    IntVector w = primitive(sub.lift(lp.witness));
    if (!sys.contains(w)) throw std::logic_error("lp_feasible: witness failed verification");
    return {true, std::move(w)};
}

std::vector<std::size_t> implied_equations(const ConstraintSystem& sys) {
    check_rows(sys);
    if (sys.marked_empty) throw EmptyRegion();
    const ConstraintSystem closed = sys.closure();
    detail::Subspace sub(closed.equations, closed.dim);
    const IntMatrix rows = restrict_rows(sub, closed.nonstrict);
    const std::size_t d = sub.reduced_dim();

    std::vector<bool> implied(rows.size(), false);
    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (is_zero(rows[i])) {
            implied[i] = true;
        } else {
            unknown.push_back(i);
        }
    }
    // Make every undecided row strict at once. Feasible means all of them are
    // slack somewhere; otherwise the Farkas multipliers name tight rows.
    while (!unknown.empty()) {
        IntMatrix le;
        std::vector<std::size_t> le_index;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (implied[i]) {
                le.push_back(rows[i]);
                le_index.push_back(i);
            }
        }
        IntMatrix lt;
        for (auto i : unknown) lt.push_back(rows[i]);
        auto lp = detail::solve_cone_lp(le, lt, d);
        if (lp.nonempty) break;
        bool progress = false;
        for (std::size_t j = 0; j < lt.size(); ++j) {
            if (lp.multipliers[le.size() + j].sign() > 0) {
                implied[unknown[j]] = true;
                progress = true;
            }
        }
        if (!progress) throw std::logic_error("implied_equations: no progress");
        std::erase_if(unknown, [&](std::size_t i) { return implied[i]; });
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (implied[i]) out.push_back(i);
    }
    return out;
}

int dimension(const ConstraintSystem& sys) {
    if (!lp_feasible(sys).feasible) return -1;
    const ConstraintSystem closed = sys.closure();
    IntMatrix eqs = closed.equations;
    for (auto i : implied_equations(sys)) eqs.push_back(closed.nonstrict[i]);
    return static_cast<int>(sys.dim - rank(eqs, sys.dim));
}

ConstraintSystem remove_redundant(const ConstraintSystem& sys) {
    check_rows(sys);
    if (!lp_feasible(sys).feasible) throw EmptyRegion();
    Normalized n = absorb_implied(sys);
    detail::Subspace sub(n.echelon.rows, sys.dim);
    drop_redundant_rows(sub, n.nonstrict, n.strict);
    ConstraintSystem out(sys.dim);
    out.equations = std::move(n.echelon.rows);
    out.nonstrict = std::move(n.nonstrict);
    out.strict = std::move(n.strict);
    return out;
}

ConstraintSystem ClosureKey::as_system() const {
    ConstraintSystem s(dim);
    s.equations = equations;
    s.nonstrict = inequalities;
    return s;
}

bool ClosureKey::contains(std::span<const Integer> x) const {
    return as_system().contains(x);
}

bool operator<(const ClosureKey& a, const ClosureKey& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.equations.size() != b.equations.size()) return a.equations.size() < b.equations.size();
    for (std::size_t i = 0; i < a.equations.size(); ++i) {
        if (a.equations[i] != b.equations[i]) return lex_less(a.equations[i], b.equations[i]);
    }
    if (a.inequalities.size() != b.inequalities.size()) {
        return a.inequalities.size() < b.inequalities.size();
    }
    for (std::size_t i = 0; i < a.inequalities.size(); ++i) {
        if (a.inequalities[i] != b.inequalities[i]) {
            return lex_less(a.inequalities[i], b.inequalities[i]);
        }
    }
    return false;
}

ClosureKey closure_key(const ConstraintSystem& sys) {
    check_rows(sys);
    if (sys.marked_empty) throw EmptyRegion();
    Normalized n = absorb_implied(sys.closure());
    detail::Subspace sub(n.echelon.rows, sys.dim);
    IntMatrix none;
    drop_redundant_rows(sub, n.nonstrict, none);
    std::sort(n.nonstrict.begin(), n.nonstrict.end(), LexLess{});
    ClosureKey key;
    key.dim = sys.dim;
    key.equations = std::move(n.echelon.rows);
    key.inequalities = std::move(n.nonstrict);
    return key;
}

}  // namespace prevariety

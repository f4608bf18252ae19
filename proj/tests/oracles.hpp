#pragma once

// Slow reference implementations used only by tests. None of them calls the
// simplex code, the double description code or the hull code under test.

#include "constraint_system.hpp"
#include "newton.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace prevariety;

struct Row {
    IntVector a;
    bool strict = false;
};

inline IntVector primitive_row(IntVector v) {
    return primitive(std::move(v));
}

// Fourier-Motzkin elimination with strictness tracking.
inline bool fm_feasible(const ConstraintSystem& sys) {
    if (sys.marked_empty) return false;
    std::vector<Row> rows;
    for (const auto& e : sys.equations) {
        rows.push_back({e, false});
        rows.push_back({negate(e), false});
    }
    for (const auto& a : sys.nonstrict) rows.push_back({a, false});
    for (const auto& a : sys.strict) rows.push_back({a, true});
    for (std::size_t j = 0; j < sys.dim; ++j) {
        std::vector<Row> pos, neg, next;
        for (auto& r : rows) {
            const int s = r.a[j].sign();
            if (s > 0) {
                pos.push_back(std::move(r));
            } else if (s < 0) {
                neg.push_back(std::move(r));
            } else {
                next.push_back(std::move(r));
            }
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                Row c{primitive_row(combine(-q.a[j], p.a, p.a[j], q.a)), p.strict || q.strict};
                next.push_back(std::move(c));
            }
        }
        std::set<std::pair<IntVector, bool>, bool (*)(const std::pair<IntVector, bool>&,
                                                      const std::pair<IntVector, bool>&)>
            seen([](const auto& x, const auto& y) {
                if (x.first != y.first) return lex_less(x.first, y.first);
                return x.second < y.second;
            });
        rows.clear();
        for (auto& r : next) {
            if (seen.insert({r.a, r.strict}).second) rows.push_back(std::move(r));
        }
    }
    for (const auto& r : rows) {
        if (r.strict) return false;  // 0 < 0
    }
    return true;
}

// Closed-cone row implied as equation: no point of the closure has row.x < 0.
inline bool fm_implied(const ConstraintSystem& sys, const IntVector& row) {
    ConstraintSystem c = sys.closure();
    c.add_strict(row);
    return !fm_feasible(c);
}

inline bool fm_subset(const ConstraintSystem& inner, const ConstraintSystem& outer) {
    // inner ⊆ outer iff inner ∩ {violate one outer row} is empty for every row.
    for (const auto& e : outer.equations) {
        for (const auto& v : {e, negate(e)}) {
            ConstraintSystem t = inner;
            t.add_strict(negate(v));
            if (fm_feasible(t)) return false;
        }
    }
    for (const auto& a : outer.nonstrict) {
        ConstraintSystem t = inner;
        t.add_strict(negate(a));
        if (fm_feasible(t)) return false;
    }
    for (const auto& a : outer.strict) {
        ConstraintSystem t = inner;
        t.add_nonstrict(negate(a));
        if (fm_feasible(t)) return false;
    }
    return true;
}

inline bool fm_equal(const ConstraintSystem& a, const ConstraintSystem& b) {
    return fm_subset(a, b) && fm_subset(b, a);
}

inline int fm_dimension(const ConstraintSystem& sys) {
    if (!fm_feasible(sys)) return -1;
    IntMatrix eqs = sys.equations;
    const auto c = sys.closure();
    for (const auto& a : c.nonstrict) {
        if (fm_implied(sys, a)) eqs.push_back(a);
    }
    return static_cast<int>(sys.dim - rank(eqs, sys.dim));
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                         std::size_t start, const auto& visit) {
    if (cur.size() == k) {
        visit(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, cur, i + 1, visit);
        cur.pop_back();
    }
}

// Extreme rays of a pointed closed cone (dim >= 2) by testing every
// (d-1)-subset of rows.
inline std::set<IntVector, bool (*)(const IntVector&, const IntVector&)> brute_rays(
    const ConstraintSystem& sys) {
    std::set<IntVector, bool (*)(const IntVector&, const IntVector&)> out(
        [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
    IntMatrix all = sys.equations;
    all.insert(all.end(), sys.nonstrict.begin(), sys.nonstrict.end());
    std::vector<std::size_t> cur;
    combinations(all.size(), sys.dim - 1, cur, 0, [&](const std::vector<std::size_t>& idx) {
        IntMatrix sub;
        for (auto i : idx) sub.push_back(all[i]);
        if (rank(sub, sys.dim) != sys.dim - 1) return;
        auto ns = nullspace_basis(row_echelon(sub, sys.dim));
        for (const auto& v : {ns.at(0), negate(ns.at(0))}) {
            if (sys.contains(v)) out.insert(primitive(v));
        }
    });
    return out;
}

// 2D convex hull (Andrew's monotone chain), strict corners only.
struct Hull2 {
    std::vector<std::size_t> vertices;  // indices into the input, sorted
    std::set<std::pair<std::size_t, std::size_t>> edges;
};

inline Hull2 hull2(const std::vector<std::pair<long long, long long>>& pts) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](auto a, auto b) { return pts[a] == pts[b]; }),
              idx.end());
    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (pts[a].first - pts[o].first) * (pts[b].second - pts[o].second) -
               (pts[a].second - pts[o].second) * (pts[b].first - pts[o].first);
    };
    Hull2 h;
    if (idx.size() == 1) {
        h.vertices = idx;
        return h;
    }
    std::vector<std::size_t> chain;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t base = chain.size();
        for (auto i : idx) {
            while (chain.size() >= base + 2 && cross(chain[chain.size() - 2], chain.back(), i) <= 0) {
                chain.pop_back();
            }
            chain.push_back(i);
        }
        chain.pop_back();
        std::reverse(idx.begin(), idx.end());
    }
    h.vertices = chain;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const auto a = chain[k], b = chain[(k + 1) % chain.size()];
        if (a != b) h.edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::sort(h.vertices.begin(), h.vertices.end());
    return h;
}

// Unique solution of columns * mu = rhs over Q, or nothing when the columns are
// dependent or the system is inconsistent.
inline std::optional<std::vector<mpq_class>> solve_columns(const std::vector<std::vector<mpq_class>>& cols,
                                                           const std::vector<mpq_class>& rhs) {
    const std::size_t m = rhs.size(), k = cols.size();
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
        a[i][k] = rhs[i];
    }
    std::size_t row = 0;
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t p = row;
        while (p < m && a[p][j] == 0) ++p;
        if (p == m) return std::nullopt;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][j] == 0) continue;
            const mpq_class f = a[i][j] / a[row][j];
            for (std::size_t c = j; c <= k; ++c) a[i][c] -= f * a[row][c];
        }
        ++row;
    }
    for (std::size_t i = row; i < m; ++i) {
        if (a[i][k] != 0) return std::nullopt;
    }
    std::vector<mpq_class> mu(k);
    for (std::size_t j = 0; j < k; ++j) mu[j] = a[j][k] / a[j][j];
    return mu;
}

// p in conv(others), by Caratheodory: some affinely independent subset
// of at most dim+1 points contains p.
inline bool in_hull(const IntVector& p, const IntMatrix& others) {
    const std::size_t dim = p.size();
    auto q = [](const Integer& v) { return mpq_class(v.to_mpz()); };
    for (std::size_t k = 1; k <= std::min(dim + 1, others.size()); ++k) {
        bool found = false;
        std::vector<std::size_t> cur;
        combinations(others.size(), k, cur, 0, [&](const std::vector<std::size_t>& idx) {
            if (found) return;
            const auto& s0 = others[idx[0]];
            std::vector<std::vector<mpq_class>> cols;
            for (std::size_t t = 1; t < idx.size(); ++t) {
                std::vector<mpq_class> c(dim);
                for (std::size_t i = 0; i < dim; ++i) c[i] = q(others[idx[t]][i]) - q(s0[i]);
                cols.push_back(std::move(c));
            }
            std::vector<mpq_class> rhs(dim);
            for (std::size_t i = 0; i < dim; ++i) rhs[i] = q(p[i]) - q(s0[i]);
            if (cols.empty()) {
                found = std::all_of(rhs.begin(), rhs.end(), [](const mpq_class& x) { return x == 0; });
                return;
            }
            auto mu = solve_columns(cols, rhs);
            if (!mu) return;
            mpq_class total = 0;
            for (const auto& x : *mu) {
                if (x < 0) return;
                total += x;
            }
            found = total <= 1;
        });
        if (found) return true;
    }
    return false;
}

inline IntMatrix brute_vertices(const IntMatrix& pts) {
    IntMatrix out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        IntMatrix others;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != i) others.push_back(pts[j]);
        }
        if (!in_hull(pts[i], others)) out.push_back(pts[i]);
    }
    return out;
}

inline ConstraintSystem random_system(std::mt19937_64& gen, std::size_t dim, std::size_t eqs,
                                      std::size_t le, std::size_t lt, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    auto row = [&] {
        IntVector v(dim);
        for (auto& x : v) x = d(gen);
        return v;
    };
    ConstraintSystem s(dim);
    for (std::size_t i = 0; i < eqs; ++i) s.add_equation(row());
    for (std::size_t i = 0; i < le; ++i) s.add_nonstrict(row());
    for (std::size_t i = 0; i < lt; ++i) s.add_strict(row());
    return s;
}

}  // namespace oracle

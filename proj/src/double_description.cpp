#include "constraint_system.hpp"

#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace prevariety {

namespace {

class RowSet {
public:
    explicit RowSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool contains_all(const RowSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((other.words_[i] & ~words_[i]) != 0) return false;
        }
        return true;
    }
    friend RowSet operator&(const RowSet& a, const RowSet& b) {
        RowSet r = a;
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
        return r;
    }

private:
    std::vector<uint64_t> words_;
};

struct Ray {
    IntVector v;
    RowSet zeros;
};

std::size_t zero_count(const IntVector& row) {
    return static_cast<std::size_t>(
        std::count_if(row.begin(), row.end(), [](const Integer& x) { return x.is_zero(); }));
}

// Extreme rays of the pointed cone {y : rows * y <= 0}, rows of full column rank.
IntMatrix pointed_rays(IntMatrix rows, std::size_t k) {
    if (k == 0) return {};
    std::stable_sort(rows.begin(), rows.end(), [](const IntVector& a, const IntVector& b) {
        return zero_count(a) < zero_count(b);
    });

    // Greedy independent rows for the initial simplicial cone.
    std::vector<std::size_t> initial;
    IntMatrix chosen;
    for (std::size_t i = 0; i < rows.size() && initial.size() < k; ++i) {
        chosen.push_back(rows[i]);
        if (rank(chosen, k) == chosen.size()) {
            initial.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    if (initial.size() != k) throw std::logic_error("extreme_rays: cone is not pointed");

    std::vector<std::size_t> order = initial;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::find(initial.begin(), initial.end(), i) == initial.end()) order.push_back(i);
    }
    const std::size_t total = order.size();

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < k; ++j) {
        IntMatrix others;
        for (std::size_t i = 0; i < k; ++i) {
            if (i != j) others.push_back(rows[order[i]]);
        }
        IntMatrix ns = nullspace_basis(row_echelon(others, k));
        IntVector v = std::move(ns.at(0));
        if (dot(rows[order[j]], v).sign() > 0) v = negate(std::move(v));
        Ray r{std::move(v), RowSet(total)};
        for (std::size_t i = 0; i < k; ++i) {
            if (i != j) r.zeros.set(i);
        }
        rays.push_back(std::move(r));
    }

    for (std::size_t pos = k; pos < total; ++pos) {
        const IntVector& g = rows[order[pos]];
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> plus, minus, zero;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(g, rays[r].v);
            int s = val[r].sign();
            if (s > 0) {
                plus.push_back(r);
            } else if (s < 0) {
                minus.push_back(r);
            } else {
                zero.push_back(r);
            }
        }
        if (plus.empty()) {
            for (auto r : zero) rays[r].zeros.set(pos);
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t p : plus) {
            for (std::size_t q : minus) {
                RowSet common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < k) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q) continue;
                    if (rays[t].zeros.contains_all(common)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v = primitive(combine(-val[q], rays[p].v, val[p], rays[q].v));
                common.set(pos);
                next.push_back(Ray{std::move(v), std::move(common)});
            }
        }
        for (auto r : zero) {
            rays[r].zeros.set(pos);
            next.push_back(std::move(rays[r]));
        }
        for (auto r : minus) next.push_back(std::move(rays[r]));
        rays = std::move(next);
    }

    IntMatrix out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return out;
}

}  // namespace

RayDescription extreme_rays(const ConstraintSystem& sys) {
    if (!sys.strict.empty() || sys.marked_empty) {
        throw MalformedInput("extreme_rays: operates on closed cones only");
    }
    for (const auto& r : sys.equations) {
        if (r.size() != sys.dim) throw MalformedInput("extreme_rays: dimension mismatch");
    }
    for (const auto& r : sys.nonstrict) {
        if (r.size() != sys.dim) throw MalformedInput("extreme_rays: dimension mismatch");
    }

    RayDescription out;
    IntMatrix all = sys.equations;
    all.insert(all.end(), sys.nonstrict.begin(), sys.nonstrict.end());
    out.lineality = nullspace_basis(row_echelon(all, sys.dim));

    // Work in the complement of the lineality space inside {E x = 0}.
    IntMatrix eqs = sys.equations;
    eqs.insert(eqs.end(), out.lineality.begin(), out.lineality.end());
    detail::Subspace sub(eqs, sys.dim);
    IntMatrix rows;
    for (const auto& r : sys.nonstrict) {
        IntVector red = sub.restrict_row(r);
        if (!is_zero(red)) rows.push_back(std::move(red));
    }
    std::set<IntVector, decltype([](const IntVector& a, const IntVector& b) {
                 return lex_less(a, b);
             })>
        unique;
    for (auto& y : pointed_rays(std::move(rows), sub.reduced_dim())) {
        unique.insert(primitive(sub.lift(y)));
    }
    out.rays.assign(unique.begin(), unique.end());
    return out;
}

}  // namespace prevariety

#include "postprocess.hpp"

#include "errors.hpp"

#include <algorithm>
#include <set>

namespace prevariety {

std::vector<ClosureKey> dedup_closures(const std::vector<OutputCone>& cones) {
    std::set<ClosureKey> keys;
    for (const auto& c : cones) keys.insert(closure_key(c.cone));
    return {keys.begin(), keys.end()};
}

RayCollection collect_rays(const std::vector<ClosureKey>& closures) {
    RayCollection out;
    std::set<IntVector, decltype(&lex_less)> rays(&lex_less);
    for (const auto& key : closures) {
        auto desc = extreme_rays(key.as_system());
        if (!desc.lineality.empty()) {
            ++out.cones_with_lineality;
            continue;
        }
        for (auto& r : desc.rays) rays.insert(primitive(r));
    }
    out.rays.assign(rays.begin(), rays.end());
    return out;
}

namespace {

bool contains_description(const ClosureKey& outer, const RayDescription& inner) {
    for (const auto& r : inner.rays) {
        if (!outer.contains(r)) return false;
    }
    for (const auto& l : inner.lineality) {
        if (!outer.contains(l) || !outer.contains(negate(l))) return false;
    }
    return true;
}

}  // namespace

bool closure_contains(const ClosureKey& outer, const ClosureKey& inner) {
    return contains_description(outer, extreme_rays(inner.as_system()));
}

std::vector<ClosureKey> maximal_closures(const std::vector<ClosureKey>& closures) {
    std::vector<ClosureKey> distinct = closures;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<RayDescription> desc;
    desc.reserve(distinct.size());
    for (const auto& k : distinct) desc.push_back(extreme_rays(k.as_system()));

    std::vector<ClosureKey> out;
    for (std::size_t a = 0; a < distinct.size(); ++a) {
        bool covered = false;
        for (std::size_t b = 0; b < distinct.size() && !covered; ++b) {
            if (a == b || distinct[a].cone_dimension() > distinct[b].cone_dimension()) continue;
            covered = contains_description(distinct[b], desc[a]);
        }
        if (!covered) out.push_back(distinct[a]);
    }
    return out;
}

std::map<int, std::size_t> maximal_cones(const std::vector<ClosureKey>& closures) {
    std::map<int, std::size_t> counts;
    for (const auto& k : maximal_closures(closures)) ++counts[k.cone_dimension()];
    return counts;
}

std::vector<ClosureKey> oracle_refine_closed(const std::vector<Fan>& fans, std::size_t limit) {
    if (fans.empty()) return {};
    std::size_t product = 1;
    for (const auto& f : fans) {
        if (f.size() != 0 && product > limit / f.size()) {
            throw OracleTooLarge("oracle guard: product of fan sizes exceeds " +
                                 std::to_string(limit));
        }
        product *= f.size();
    }
    const std::size_t dim = fans.front().cones.empty() ? 0 : fans.front().cones.front().body.dim;
    std::set<ClosureKey> level;
    level.insert(closure_key(ConstraintSystem(dim)));
    for (const auto& fan : fans) {
        std::set<ClosureKey> next;
        for (const auto& a : level) {
            const ConstraintSystem lhs = a.as_system();
            // Closed cones always share the origin, so no feasibility test is needed.
            for (const auto& d : fan.cones) next.insert(closure_key(concatenate(lhs, d.body.closure())));
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

bool verify_pretropism(const IntVector& w, const PolynomialSystem& sys) {
    if (is_zero(w)) throw std::invalid_argument("verify_pretropism: zero vector");
    for (const auto& s : sys.supports) {
        if (w.size() != s.dim) throw MalformedInput("verify_pretropism: dimension mismatch");
        std::optional<Integer> best;
        std::size_t count = 0;
        for (const auto& p : s.points) {
            Integer v = dot(w, p);
            if (!best || v < *best) {
                best = std::move(v);
                count = 1;
            } else if (v == *best) {
                ++count;
            }
        }
        if (count < 2) return false;
    }
    return true;
}

}  // namespace prevariety

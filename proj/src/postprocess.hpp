#pragma once

#include "enumeration.hpp"
#include "systems.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace prevariety {

struct ResultMeta {
    std::string system;
    std::size_t dim = 0;
    std::size_t fans = 0;
    uint64_t seed = 0;
    unsigned workers = 1;
    std::vector<IntVector> orientations;
    // Deduplicated closures with a nontrivial lineality space.
    std::size_t cones_with_lineality = 0;
};

struct PrevarietyResult {
    std::vector<ClosureKey> cones;  // sorted, distinct
    IntMatrix rays;                 // primitive, sorted, distinct
    std::map<int, std::size_t> maximal_by_dim;
    bool have_maximal = false;
    EnumerationStats stats;
    ResultMeta meta;
};

// Sorted distinct closure keys of the emitted cones.
std::vector<ClosureKey> dedup_closures(const std::vector<OutputCone>& cones);

struct RayCollection {
    IntMatrix rays;
    std::size_t cones_with_lineality = 0;
};

RayCollection collect_rays(const std::vector<ClosureKey>& closures);

// Closures not contained in another one.
std::vector<ClosureKey> maximal_closures(const std::vector<ClosureKey>& closures);
std::map<int, std::size_t> maximal_cones(const std::vector<ClosureKey>& closures);

// A is contained in B iff A's rays and lineality basis (both signs) satisfy B.
bool closure_contains(const ClosureKey& outer, const ClosureKey& inner);

inline constexpr std::size_t kOracleLimit = 1'000'000;

// Brute-force refinement of the closed fan cones with deduplication at every
// level. Throws OracleTooLarge when the product of fan sizes exceeds the limit.
std::vector<ClosureKey> oracle_refine_closed(const std::vector<Fan>& fans,
                                             std::size_t limit = kOracleLimit);

// Minimum of <w,v> over every support attained at least twice.
bool verify_pretropism(const IntVector& w, const PolynomialSystem& sys);

}  // namespace prevariety

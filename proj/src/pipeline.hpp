#pragma once

#include "postprocess.hpp"
#include "scheduler.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prevariety {

enum class Algorithm { static_order, dynamic_order };

struct RunConfig {
    Algorithm algorithm = Algorithm::dynamic_order;
    bool iterative = true;
    bool tables = true;
    unsigned workers = 1;
    uint64_t seed = 0;
    bool want_rays = true;
    bool want_maximal = false;
    TraceRecorder* trace = nullptr;

    // Static forces tables off and one worker; recursive forces one worker.
    RunConfig normalized() const;
};

// Orientation seed of polytope `index` derived from the run seed.
uint64_t polytope_seed(uint64_t seed, std::size_t index);

// Stage one: Newton polytopes and their hypersurface fans.
std::vector<Fan> build_fans(const PolynomialSystem& sys, uint64_t seed,
                            std::vector<IntVector>* orientations = nullptr);

PrevarietyResult run(const PolynomialSystem& sys, const RunConfig& config);

}  // namespace prevariety

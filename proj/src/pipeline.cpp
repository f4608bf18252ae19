#include "pipeline.hpp"

#include "errors.hpp"
#include "serialize.hpp"

#include <random>

namespace prevariety {

RunConfig RunConfig::normalized() const {
    RunConfig c = *this;
    if (c.workers == 0) throw std::invalid_argument("worker count must be at least 1");
    if (c.algorithm == Algorithm::static_order) {
        c.tables = false;
        c.iterative = false;
        c.workers = 1;
    }
    if (!c.iterative) c.workers = 1;
    return c;
}

uint64_t polytope_seed(uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(index)};
    uint32_t out[2];
    seq.generate(out, out + 2);
    return (uint64_t{out[0]} << 32) | out[1];
}

std::vector<Fan> build_fans(const PolynomialSystem& sys, uint64_t seed,
                            std::vector<IntVector>* orientations) {
    std::vector<Fan> fans;
    fans.reserve(sys.supports.size());
    for (std::size_t i = 0; i < sys.supports.size(); ++i) {
        if (sys.supports[i].dim != sys.dim) throw MalformedInput("support dimension mismatch");
        NewtonPolytope p = build_polytope(sys.supports[i], polytope_seed(seed, i));
        if (orientations) orientations->push_back(p.orientation);
        fans.push_back(hypersurface_fan(p, static_cast<int>(i)));
    }
    return fans;
}

PrevarietyResult run(const PolynomialSystem& sys, const RunConfig& config) {
    const RunConfig c = config.normalized();
    PrevarietyResult r;
    r.meta.system = sys.label;
    r.meta.dim = sys.dim;
    r.meta.fans = sys.supports.size();
    r.meta.seed = c.seed;
    r.meta.workers = c.workers;

    const std::vector<Fan> fans = build_fans(sys, c.seed, &r.meta.orientations);

    RelationTables tables;
    if (c.tables) tables = run_table_stage(fans, c.workers, &r.stats);

    StreamingSink sink(sys.dim);
    if (c.algorithm == Algorithm::static_order) {
        r.stats += enumerate_static(fans, sink);
    } else {
        const auto mode = c.iterative ? DynamicMode::iterative : DynamicMode::recursive;
        r.stats += enumerate_dynamic(fans, sink, mode, c.tables ? &tables : nullptr, c.workers,
                                     c.trace);
    }
    r.cones = sink.closures();

    if (c.want_rays) {
        auto rays = collect_rays(r.cones);
        r.rays = std::move(rays.rays);
        r.meta.cones_with_lineality = rays.cones_with_lineality;
    }
    if (c.want_maximal) {
        r.maximal_by_dim = maximal_cones(r.cones);
        r.have_maximal = true;
    }
    return r;
}

}  // namespace prevariety

#include "prevariety/prevariety.h"

#include "errors.hpp"
#include "pipeline.hpp"
#include "serialize.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

struct pv_system {
    prevariety::PolynomialSystem sys;
};

struct pv_result {
    prevariety::PrevarietyResult result;
    std::vector<std::pair<int, std::size_t>> maximal;
};

namespace {

thread_local std::string last_error;

pv_status fail(pv_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
pv_status guarded(F&& body) {
    using namespace prevariety;
    try {
        last_error.clear();
        return body();
    } catch (const ParseError& e) {
        return fail(PV_ERR_PARSE, e.what());
    } catch (const DegenerateFan& e) {
        return fail(PV_ERR_DEGENERATE, e.what());
    } catch (const DegenerateOrientation& e) {
        return fail(PV_ERR_DEGENERATE, e.what());
    } catch (const IoError& e) {
        return fail(PV_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PV_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PV_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PV_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PV_ERR_INTERNAL, "unknown failure");
    }
}

pv_status copy_text(const std::string& text, char* buf, std::size_t cap, std::size_t* needed) {
    if (needed) *needed = text.size() + 1;
    if (cap < text.size() + 1) return fail(PV_ERR_BUFFER_TOO_SMALL, "buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return PV_OK;
}

}  // namespace

extern "C" {

const char* pv_version(void) {
    return "1.0.0";
}

const char* pv_last_error(void) {
    return last_error.c_str();
}

void pv_config_init(pv_config* config) {
    if (!config) return;
    config->algorithm = PV_DYNAMIC;
    config->iterative = 1;
    config->tables = 1;
    config->workers = 1;
    config->seed = 0;
    config->want_rays = 1;
    config->want_maximal = 0;
    config->trace_path = nullptr;
}

pv_status pv_system_generate(const char* family, int n, pv_system** out) {
    if (!family || !out) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pv_system{prevariety::generate(family, n)};
        return PV_OK;
    });
}

pv_status pv_system_parse(const char* text, pv_system** out) {
    if (!text || !out) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pv_system{prevariety::parse_system(text)};
        return PV_OK;
    });
}

pv_status pv_system_load(const char* path, pv_system** out) {
    if (!path || !out) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in) return fail(PV_ERR_IO, std::string("cannot open ") + path);
        std::ostringstream text;
        text << in.rdbuf();
        auto sys = prevariety::parse_system(text.str());
        sys.label = path;
        *out = new pv_system{std::move(sys)};
        return PV_OK;
    });
}

void pv_system_free(pv_system* sys) {
    delete sys;
}

size_t pv_system_dim(const pv_system* sys) {
    return sys ? sys->sys.dim : 0;
}

size_t pv_system_polynomial_count(const pv_system* sys) {
    return sys ? sys->sys.supports.size() : 0;
}

size_t pv_system_support_size(const pv_system* sys, size_t polynomial) {
    if (!sys || polynomial >= sys->sys.supports.size()) return 0;
    return sys->sys.supports[polynomial].points.size();
}

pv_status pv_system_format(const pv_system* sys, char* buf, size_t cap, size_t* needed) {
    if (!sys) return fail(PV_ERR_INVALID_ARGUMENT, "null system");
    return guarded([&] { return copy_text(prevariety::format_system(sys->sys), buf, cap, needed); });
}

pv_status pv_run(const pv_system* sys, const pv_config* config, pv_result** out) {
    if (!sys || !out) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    pv_config defaults;
    pv_config_init(&defaults);
    const pv_config& c = config ? *config : defaults;
    return guarded([&] {
        using namespace prevariety;
        RunConfig rc;
        rc.algorithm = c.algorithm == PV_STATIC ? Algorithm::static_order : Algorithm::dynamic_order;
        rc.iterative = c.iterative != 0;
        rc.tables = c.tables != 0;
        rc.workers = c.workers;
        rc.seed = c.seed;
        rc.want_rays = c.want_rays != 0;
        rc.want_maximal = c.want_maximal != 0;
        TraceRecorder trace;
        if (c.trace_path) rc.trace = &trace;

        auto r = std::make_unique<pv_result>();
        r->result = run(sys->sys, rc);
        for (const auto& [dim, count] : r->result.maximal_by_dim) r->maximal.emplace_back(dim, count);

        if (c.trace_path) {
            std::ofstream t(c.trace_path, std::ios::trunc);
            if (!t) throw IoError(std::string("cannot open ") + c.trace_path + " for writing");
            trace.write(t);
            if (!t) throw IoError(std::string("write to ") + c.trace_path + " failed");
        }
        *out = r.release();
        return PV_OK;
    });
}

void pv_result_free(pv_result* result) {
    delete result;
}

size_t pv_result_dim(const pv_result* result) {
    return result ? result->result.meta.dim : 0;
}

size_t pv_result_cone_count(const pv_result* result) {
    return result ? result->result.cones.size() : 0;
}

size_t pv_result_ray_count(const pv_result* result) {
    return result ? result->result.rays.size() : 0;
}

pv_status pv_result_ray(const pv_result* result, size_t index, int64_t* out) {
    if (!result || !out) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    if (index >= result->result.rays.size()) return fail(PV_ERR_INVALID_ARGUMENT, "ray index out of range");
    const auto& ray = result->result.rays[index];
    for (const auto& x : ray) {
        if (!x.fits_int64()) return fail(PV_ERR_OVERFLOW, "ray entry exceeds 64 bits");
    }
    for (std::size_t k = 0; k < ray.size(); ++k) out[k] = ray[k].small_value();
    return PV_OK;
}

pv_status pv_result_stats(const pv_result* result, pv_stats* out) {
    if (!result || !out) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    const auto& s = result->result.stats;
    out->intersections_attempted = s.intersections_attempted;
    out->intersections_nonempty = s.intersections_nonempty;
    out->pruned_by_table = s.pruned_by_table;
    out->output_cones = s.output_cones;
    out->tasks_executed = s.tasks_executed;
    out->table_pair_tests = s.table_pair_tests;
    out->table_bits_written = s.table_bits_written;
    return PV_OK;
}

size_t pv_result_maximal_size(const pv_result* result) {
    return result ? result->maximal.size() : 0;
}

pv_status pv_result_maximal_entry(const pv_result* result, size_t index, int* dim, size_t* count) {
    if (!result || !dim || !count) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    if (index >= result->maximal.size()) return fail(PV_ERR_INVALID_ARGUMENT, "index out of range");
    *dim = result->maximal[index].first;
    *count = result->maximal[index].second;
    return PV_OK;
}

pv_status pv_result_serialize(const pv_result* result, char* buf, size_t cap, size_t* needed) {
    if (!result) return fail(PV_ERR_INVALID_ARGUMENT, "null result");
    return guarded([&] { return copy_text(prevariety::serialize(result->result), buf, cap, needed); });
}

pv_status pv_result_write(const pv_result* result, const char* path) {
    if (!result || !path) return fail(PV_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        prevariety::write_result(result->result, path);
        return PV_OK;
    });
}

}  // extern "C"

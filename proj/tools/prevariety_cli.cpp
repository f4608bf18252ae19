#include "prevariety/prevariety.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct SystemDeleter {
    void operator()(pv_system* s) const { pv_system_free(s); }
};
struct ResultDeleter {
    void operator()(pv_result* r) const { pv_result_free(r); }
};

int exit_code(pv_status s) {
    switch (s) {
    case PV_OK: return 0;
    case PV_ERR_INVALID_ARGUMENT:
    case PV_ERR_PARSE:
    case PV_ERR_DEGENERATE: return kExitInput;
    default: return kExitInternal;
    }
}

bool parse_switch(const std::string& v) {
    return v == "on";
}

std::string serialized(const pv_result* r) {
    std::size_t needed = 0;
    pv_result_serialize(r, nullptr, 0, &needed);
    std::string text(needed, '\0');
    if (pv_result_serialize(r, text.data(), text.size(), &needed) != PV_OK) return {};
    text.resize(needed - 1);
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical prevariety of a polynomial system"};

    std::string input, system, algorithm = "dynamic", iterative = "on", tables = "on";
    std::string output, trace;
    int n = 0;
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    uint64_t seed = 0;
    bool want_rays = false, want_maximal = false, want_stats = false;

    auto* in_opt = app.add_option("--input", input, "System file in the v1 input format")
                       ->check(CLI::ExistingFile);
    auto* sys_opt = app.add_option("--system", system, "Built-in family")
                        ->check(CLI::IsMember({"cyclic", "nbody", "nvortex", "minors"}));
    in_opt->excludes(sys_opt);
    app.add_option("--n", n, "Family parameter")->check(CLI::NonNegativeNumber);
    app.add_option("--algorithm", algorithm, "Enumeration order")
        ->check(CLI::IsMember({"static", "dynamic"}));
    app.add_option("--iterative", iterative, "Work-stealing traversal")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--tables", tables, "Relation-table pruning")->check(CLI::IsMember({"on", "off"}));
    app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Orientation seed");
    app.add_option("--output", output, "Write the canonical result here");
    app.add_flag("--rays", want_rays, "Print the ray count and rays");
    app.add_flag("--maximal", want_maximal, "Count maximal cones by dimension");
    app.add_flag("--stats", want_stats, "Print enumeration counters");
    app.add_option("--trace", trace, "Write a scheduler trace here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }
    if (input.empty() && system.empty()) {
        std::cerr << "error: one of --input or --system is required\n";
        return kExitInput;
    }
    if (!system.empty() && system != "minors" && n == 0) {
        std::cerr << "error: --system " << system << " needs --n\n";
        return kExitInput;
    }

    pv_system* raw_sys = nullptr;
    pv_status st = input.empty() ? pv_system_generate(system.c_str(), n, &raw_sys)
                                 : pv_system_load(input.c_str(), &raw_sys);
    if (st != PV_OK) {
        std::cerr << "error: " << pv_last_error() << '\n';
        return kExitInput;
    }
    std::unique_ptr<pv_system, SystemDeleter> sys(raw_sys);

    pv_config config;
    pv_config_init(&config);
    config.algorithm = algorithm == "static" ? PV_STATIC : PV_DYNAMIC;
    config.iterative = parse_switch(iterative);
    config.tables = parse_switch(tables);
    config.workers = workers;
    config.seed = seed;
    config.want_rays = 1;
    config.want_maximal = want_maximal;
    config.trace_path = trace.empty() ? nullptr : trace.c_str();

    pv_result* raw_result = nullptr;
    st = pv_run(sys.get(), &config, &raw_result);
    if (st != PV_OK) {
        std::cerr << "error: " << pv_last_error() << '\n';
        return exit_code(st);
    }
    std::unique_ptr<pv_result, ResultDeleter> result(raw_result);

    if (!output.empty()) {
        st = pv_result_write(result.get(), output.c_str());
        if (st != PV_OK) {
            std::cerr << "error: " << pv_last_error() << '\n';
            return kExitInternal;
        }
    }

    std::cout << "cones: " << pv_result_cone_count(result.get()) << '\n';
    if (want_rays) {
        std::cout << "rays: " << pv_result_ray_count(result.get()) << '\n';
        std::istringstream text(serialized(result.get()));
        std::string line;
        while (std::getline(text, line)) {
            if (line.rfind("RAY ", 0) == 0) std::cout << line << '\n';
        }
    }
    if (want_maximal) {
        for (std::size_t i = 0; i < pv_result_maximal_size(result.get()); ++i) {
            int dim = 0;
            std::size_t count = 0;
            pv_result_maximal_entry(result.get(), i, &dim, &count);
            std::cout << "maximal dim=" << dim << " count=" << count << '\n';
        }
    }
    if (want_stats) {
        pv_stats s;
        pv_result_stats(result.get(), &s);
        std::cout << "intersections_attempted: " << s.intersections_attempted << '\n'
                  << "intersections_nonempty: " << s.intersections_nonempty << '\n'
                  << "pruned_by_table: " << s.pruned_by_table << '\n'
                  << "output_cones: " << s.output_cones << '\n'
                  << "tasks_executed: " << s.tasks_executed << '\n'
                  << "table_pair_tests: " << s.table_pair_tests << '\n'
                  << "table_bits_written: " << s.table_bits_written << '\n';
    }
    return 0;
}

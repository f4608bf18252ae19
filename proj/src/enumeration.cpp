#include "enumeration.hpp"

#include "scheduler.hpp"

#include <functional>
#include <stdexcept>

namespace prevariety {

EnumerationStats& EnumerationStats::operator+=(const EnumerationStats& o) {
    intersections_attempted += o.intersections_attempted;
    intersections_nonempty += o.intersections_nonempty;
    pruned_by_table += o.pruned_by_table;
    output_cones += o.output_cones;
    tasks_executed += o.tasks_executed;
    table_pair_tests += o.table_pair_tests;
    table_bits_written += o.table_bits_written;
    return *this;
}

void CollectingSink::emit(OutputCone&& cone) {
    std::lock_guard lock(mutex_);
    cones_.push_back(std::move(cone));
}

std::vector<OutputCone> CollectingSink::take() {
    std::lock_guard lock(mutex_);
    return std::exchange(cones_, {});
}

std::size_t CollectingSink::size() const {
    std::lock_guard lock(mutex_);
    return cones_.size();
}

std::shared_ptr<const TableLayout> make_layout(const std::vector<Fan>& fans) {
    std::vector<std::size_t> sizes;
    sizes.reserve(fans.size());
    for (const auto& f : fans) sizes.push_back(f.size());
    return std::make_shared<const TableLayout>(sizes);
}

std::vector<PairJob> pair_jobs(const std::vector<Fan>& fans) {
    std::vector<PairJob> jobs;
    for (uint32_t i = 0; i < fans.size(); ++i) {
        for (uint32_t j = i + 1; j < fans.size(); ++j) {
            for (uint32_t a = 0; a < fans[i].size(); ++a) {
                for (uint32_t b = 0; b < fans[j].size(); ++b) jobs.push_back({i, a, j, b});
            }
        }
    }
    return jobs;
}

bool run_pair_job(const std::vector<Fan>& fans, const PairJob& job) {
    const auto& a = fans[job.fan_a].cones[job.cone_a];
    const auto& b = fans[job.fan_b].cones[job.cone_b];
    return lp_feasible(concatenate(a.body, b.body)).feasible;
}

RelationTables assemble_tables(const std::vector<Fan>& fans, const std::vector<PairJob>& jobs,
                               const std::vector<uint8_t>& nonempty, EnumerationStats* stats) {
    if (jobs.size() != nonempty.size()) throw std::logic_error("assemble_tables: size mismatch");
    RelationTables t;
    t.layout = make_layout(fans);
    t.root = RelationTable(t.layout, true);
    t.cones.resize(fans.size());
    for (std::size_t i = 0; i < fans.size(); ++i) {
        t.cones[i].assign(fans[i].size(), RelationTable(t.layout, false));
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (!nonempty[k]) continue;
        const auto& j = jobs[k];
        t.cones[j.fan_a][j.cone_a].set(t.layout->bit(j.fan_b, j.cone_b));
        t.cones[j.fan_b][j.cone_b].set(t.layout->bit(j.fan_a, j.cone_a));
    }
    if (stats) {
        stats->table_pair_tests += jobs.size();
        stats->table_bits_written += 2 * jobs.size();
    }
    return t;
}

RelationTables init_relation_tables(const std::vector<Fan>& fans, EnumerationStats* stats) {
    auto jobs = pair_jobs(fans);
    std::vector<uint8_t> result(jobs.size());
    for (std::size_t k = 0; k < jobs.size(); ++k) result[k] = run_pair_job(fans, jobs[k]) ? 1 : 0;
    return assemble_tables(fans, jobs, result, stats);
}

std::size_t choose_first_fan(const std::vector<Fan>& fans) {
    if (fans.empty()) throw std::invalid_argument("choose_first_fan: no fans");
    std::size_t best = 0;
    for (std::size_t i = 1; i < fans.size(); ++i) {
        if (fans[i].size() < fans[best].size()) best = i;
    }
    return best;
}

std::size_t choose_next_fan(const Task& t, const std::vector<Fan>& fans) {
    const bool use_table = t.table.size() > 0;
    std::size_t best = fans.size();
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < fans.size(); ++i) {
        if (t.used[i]) continue;
        const std::size_t count = use_table ? t.table.block_popcount(i) : fans[i].size();
        if (best == fans.size() || count < best_count) {
            best = i;
            best_count = count;
        }
    }
    if (best == fans.size()) throw std::logic_error("choose_next_fan: every fan is used");
    return best;
}

std::vector<Task> expand(const Task& t, std::size_t fan, const EnumerationContext& ctx,
                         ConeSink& sink, EnumerationStats& stats) {
    std::vector<Task> children;
    const auto& cones = ctx.fans[fan].cones;
    const bool last = t.depth + 1 == ctx.fans.size();
    for (std::size_t j = 0; j < cones.size(); ++j) {
        if (ctx.tables && !t.table.test(fan, j)) {
            ++stats.pruned_by_table;
            continue;
        }
        ++stats.intersections_attempted;
        HalfOpenCone c = intersect(t.cone, cones[j], !last);
        if (!c.nonempty()) continue;
        ++stats.intersections_nonempty;
        std::vector<int> picks = t.picks;
        picks[fan] = static_cast<int>(j);
        if (last) {
            ++stats.output_cones;
            sink.emit(OutputCone{std::move(c), std::move(picks)});
            continue;
        }
        Task child;
        child.cone = std::move(c);
        if (ctx.tables) child.table = and_tables(t.table, ctx.tables->of(fan, j));
        child.used = t.used;
        child.used[fan] = true;
        child.picks = std::move(picks);
        child.depth = t.depth + 1;
        children.push_back(std::move(child));
    }
    return children;
}

std::vector<Task> starting_tasks(std::size_t fan, const EnumerationContext& ctx, ConeSink& sink,
                                 EnumerationStats& stats) {
    const std::size_t n = ctx.fans.size();
    std::vector<Task> tasks;
    for (std::size_t j = 0; j < ctx.fans[fan].size(); ++j) {
        const auto& c = ctx.fans[fan].cones[j];
        std::vector<int> picks(n, -1);
        picks[fan] = static_cast<int>(j);
        if (n == 1) {
            ++stats.output_cones;
            sink.emit(OutputCone{c, std::move(picks)});
            continue;
        }
        Task t;
        t.cone = c;
        if (ctx.tables) t.table = and_tables(ctx.tables->root, ctx.tables->of(fan, j));
        t.used.assign(n, false);
        t.used[fan] = true;
        t.picks = std::move(picks);
        t.depth = 1;
        tasks.push_back(std::move(t));
    }
    return tasks;
}

EnumerationStats enumerate_static(const std::vector<Fan>& fans, ConeSink& sink) {
    EnumerationStats stats;
    if (fans.empty()) return stats;
    EnumerationContext ctx{fans, nullptr};
    std::function<void(const Task&)> recurse = [&](const Task& t) {
        ++stats.tasks_executed;
        for (const auto& child : expand(t, t.depth, ctx, sink, stats)) recurse(child);
    };
    for (const auto& t : starting_tasks(0, ctx, sink, stats)) recurse(t);
    return stats;
}

EnumerationStats enumerate_dynamic(const std::vector<Fan>& fans, ConeSink& sink, DynamicMode mode,
                                   const RelationTables* tables, unsigned workers,
                                   TraceRecorder* trace) {
    if (fans.empty()) return {};
    if (mode == DynamicMode::iterative) {
        return run_enumeration_stage(fans, tables, workers, sink, trace);
    }
    EnumerationStats stats;
    EnumerationContext ctx{fans, tables};
    std::function<void(const Task&)> recurse = [&](const Task& t) {
        ++stats.tasks_executed;
        const std::size_t next = choose_next_fan(t, fans);
        for (const auto& child : expand(t, next, ctx, sink, stats)) recurse(child);
    };
    for (const auto& t : starting_tasks(choose_first_fan(fans), ctx, sink, stats)) recurse(t);
    return stats;
}

EnumerationStats enumerate_dynamic(const std::vector<Fan>& fans, ConeSink& sink, DynamicMode mode,
                                   bool table_pruning) {
    if (!table_pruning) return enumerate_dynamic(fans, sink, mode, nullptr);
    EnumerationStats table_stats;
    RelationTables tables = init_relation_tables(fans, &table_stats);
    EnumerationStats stats = enumerate_dynamic(fans, sink, mode, &tables);
    stats += table_stats;
    return stats;
}

}  // namespace prevariety

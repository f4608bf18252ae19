#pragma once

#include "cones.hpp"
#include "relation_table.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace prevariety {

struct EnumerationStats {
    uint64_t intersections_attempted = 0;
    uint64_t intersections_nonempty = 0;
    uint64_t pruned_by_table = 0;
    uint64_t output_cones = 0;
    uint64_t tasks_executed = 0;
    // Relation-table stage: one feasibility test per cross-fan cone pair.
    uint64_t table_pair_tests = 0;
    uint64_t table_bits_written = 0;

    EnumerationStats& operator+=(const EnumerationStats& o);
    friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

/// A nonempty intersection of one cone from every fan. picks[i] is the index
/// of the cone taken from fan i.
struct OutputCone {
    HalfOpenCone cone;
    std::vector<int> picks;
};

/// Receives output cones; implementations must tolerate concurrent emit().
class ConeSink {
public:
    virtual ~ConeSink() = default;
    virtual void emit(OutputCone&& cone) = 0;
};

class CollectingSink final : public ConeSink {
public:
    void emit(OutputCone&& cone) override;
    std::vector<OutputCone> take();
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::vector<OutputCone> cones_;
};

/// Relation tables of every fan cone plus the all-ones root table.
struct RelationTables {
    std::shared_ptr<const TableLayout> layout;
    std::vector<std::vector<RelationTable>> cones;  // [fan][cone]
    RelationTable root;

    const RelationTable& of(std::size_t fan, std::size_t cone) const { return cones[fan][cone]; }
};

std::shared_ptr<const TableLayout> make_layout(const std::vector<Fan>& fans);

/// One feasibility test between cones of two different fans (fan_a < fan_b).
struct PairJob {
    uint32_t fan_a, cone_a, fan_b, cone_b;
};

std::vector<PairJob> pair_jobs(const std::vector<Fan>& fans);
bool run_pair_job(const std::vector<Fan>& fans, const PairJob& job);
// Sets bit(a)[b] and bit(b)[a] for every job whose result is nonempty.
RelationTables assemble_tables(const std::vector<Fan>& fans, const std::vector<PairJob>& jobs,
                               const std::vector<uint8_t>& nonempty, EnumerationStats* stats);

// Sequential table initialization.
RelationTables init_relation_tables(const std::vector<Fan>& fans, EnumerationStats* stats = nullptr);

/// Unit of scheduling: an intermediate cone, its AND-ed relation table, and
/// the fans already used to produce it.
struct Task {
    HalfOpenCone cone;
    RelationTable table;  // empty when pruning is off
    std::vector<bool> used;
    std::vector<int> picks;
    std::size_t depth = 0;
    uint64_t id = 0;
};

std::size_t choose_first_fan(const std::vector<Fan>& fans);

// With a table: unused fan whose block has the fewest set bits. Without one:
// unused fan with the fewest cones. Ties go to the lowest index.
std::size_t choose_next_fan(const Task& t, const std::vector<Fan>& fans);

struct EnumerationContext {
    const std::vector<Fan>& fans;
    const RelationTables* tables = nullptr;  // null disables pruning
};

std::vector<Task> expand(const Task& t, std::size_t fan, const EnumerationContext& ctx,
                         ConeSink& sink, EnumerationStats& stats);

// Depth-one tasks from the cones of `fan`; with a single fan they are emitted.
std::vector<Task> starting_tasks(std::size_t fan, const EnumerationContext& ctx, ConeSink& sink,
                                 EnumerationStats& stats);

EnumerationStats enumerate_static(const std::vector<Fan>& fans, ConeSink& sink);

enum class DynamicMode { recursive, iterative };

class TraceRecorder;

EnumerationStats enumerate_dynamic(const std::vector<Fan>& fans, ConeSink& sink, DynamicMode mode,
                                   const RelationTables* tables, unsigned workers = 1,
                                   TraceRecorder* trace = nullptr);

// Builds the tables itself when pruning is on.
EnumerationStats enumerate_dynamic(const std::vector<Fan>& fans, ConeSink& sink, DynamicMode mode,
                                   bool table_pruning);

}  // namespace prevariety

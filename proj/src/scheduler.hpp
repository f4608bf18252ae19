#pragma once

#include "enumeration.hpp"

#include <chrono>
#include <deque>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace prevariety {

/// Per-worker queue of tasks bucketed by depth 1..N-1. The owner pops the
/// deepest task; thieves take one of the shallowest.
class DepthQueue {
public:
    explicit DepthQueue(std::size_t fan_count = 2);

    void push(Task t);
    // Subqueue sizes indexed by depth (index 0 unused) taken just before the
    // removal are written to `occupancy` when it is non-null.
    std::optional<Task> pop_local(std::vector<std::size_t>* occupancy = nullptr);
    std::optional<Task> steal(std::vector<std::size_t>* occupancy = nullptr);

    bool empty() const;
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::vector<std::deque<Task>> sub_;
    std::size_t count_ = 0;
};

// Zero-based victims for `thief`: thief+1, ..., W-1, 0, ..., thief-1.
std::vector<unsigned> victim_order(unsigned thief, unsigned workers);

enum class TraceAction { pop, steal, emit };

struct TraceEvent {
    unsigned worker = 0;
    TraceAction action = TraceAction::pop;
    std::size_t depth = 0;
    uint64_t time_ns = 0;
    uint64_t task = 0;
    int victim = -1;
    std::vector<unsigned> probes;        // victims tried, in order, for a steal
    std::vector<std::size_t> occupancy;  // queue the task left, by depth
};

/// Collects scheduler events. Each worker appends to its own buffer.
class TraceRecorder {
public:
    void start(unsigned workers);
    void record(TraceEvent e);
    uint64_t now_ns() const;

    std::vector<TraceEvent> events() const;  // merged, sorted by time
    void write(std::ostream& out) const;
    static std::vector<TraceEvent> parse(std::istream& in);

private:
    std::chrono::steady_clock::time_point origin_;
    std::vector<std::vector<TraceEvent>> per_worker_;
};

struct TraceCheck {
    std::size_t pops = 0;
    std::size_t steals = 0;
    std::size_t emits = 0;
    std::vector<std::string> violations;
};

// Checks the depth and victim policies and that no task id repeats.
TraceCheck check_trace(const std::vector<TraceEvent>& events, unsigned workers);

RelationTables run_table_stage(const std::vector<Fan>& fans, unsigned workers,
                               EnumerationStats* stats = nullptr);

EnumerationStats run_enumeration_stage(const std::vector<Fan>& fans, const RelationTables* tables,
                                       unsigned workers, ConeSink& sink,
                                       TraceRecorder* trace = nullptr);

}  // namespace prevariety

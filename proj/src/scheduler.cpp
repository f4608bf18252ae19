#include "scheduler.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace prevariety {

DepthQueue::DepthQueue(std::size_t fan_count) : sub_(std::max<std::size_t>(fan_count, 2)) {}

void DepthQueue::push(Task t) {
    std::lock_guard lock(mutex_);
    if (t.depth == 0 || t.depth >= sub_.size()) {
        throw std::logic_error("DepthQueue: task depth out of range");
    }
    sub_[t.depth].push_back(std::move(t));
    ++count_;
}

namespace {

void snapshot(const std::vector<std::deque<Task>>& sub, std::vector<std::size_t>* occupancy) {
    if (!occupancy) return;
    occupancy->resize(sub.size());
    for (std::size_t d = 0; d < sub.size(); ++d) (*occupancy)[d] = sub[d].size();
}

}  // namespace

std::optional<Task> DepthQueue::pop_local(std::vector<std::size_t>* occupancy) {
    std::lock_guard lock(mutex_);
    if (count_ == 0) return std::nullopt;
    snapshot(sub_, occupancy);
    for (std::size_t d = sub_.size() - 1; d >= 1; --d) {
        if (sub_[d].empty()) continue;
        Task t = std::move(sub_[d].back());
        sub_[d].pop_back();
        --count_;
        return t;
    }
    return std::nullopt;
}

std::optional<Task> DepthQueue::steal(std::vector<std::size_t>* occupancy) {
    std::lock_guard lock(mutex_);
    if (count_ == 0) return std::nullopt;
    snapshot(sub_, occupancy);
    for (std::size_t d = 1; d < sub_.size(); ++d) {
        if (sub_[d].empty()) continue;
        Task t = std::move(sub_[d].front());
        sub_[d].pop_front();
        --count_;
        return t;
    }
    return std::nullopt;
}

bool DepthQueue::empty() const {
    std::lock_guard lock(mutex_);
    return count_ == 0;
}

std::size_t DepthQueue::size() const {
    std::lock_guard lock(mutex_);
    return count_;
}

std::vector<unsigned> victim_order(unsigned thief, unsigned workers) {
    std::vector<unsigned> order;
    for (unsigned k = 1; k < workers; ++k) order.push_back((thief + k) % workers);
    return order;
}

void TraceRecorder::start(unsigned workers) {
    origin_ = std::chrono::steady_clock::now();
    per_worker_.assign(workers, {});
}

void TraceRecorder::record(TraceEvent e) {
    per_worker_.at(e.worker).push_back(std::move(e));
}

uint64_t TraceRecorder::now_ns() const {
    return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                     std::chrono::steady_clock::now() - origin_)
                                     .count());
}

std::vector<TraceEvent> TraceRecorder::events() const {
    std::vector<TraceEvent> all;
    for (const auto& w : per_worker_) all.insert(all.end(), w.begin(), w.end());
    std::stable_sort(all.begin(), all.end(),
                     [](const TraceEvent& a, const TraceEvent& b) { return a.time_ns < b.time_ns; });
    return all;
}

namespace {

const char* action_name(TraceAction a) {
    switch (a) {
    case TraceAction::pop: return "pop";
    case TraceAction::steal: return "steal";
    case TraceAction::emit: return "emit";
    }
    return "?";
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

template <class T>
std::vector<T> split_numbers(const std::string& s) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(static_cast<T>(std::stoull(item)));
    }
    return out;
}

}  // namespace

// Line format: <worker> <action> <depth> <time_ns> task=<id> victim=<v> probes=<a,b> occ=<n0,n1,...>
void TraceRecorder::write(std::ostream& out) const {
    for (const auto& e : events()) {
        out << e.worker << ' ' << action_name(e.action) << ' ' << e.depth << ' ' << e.time_ns
            << " task=" << e.task << " victim=" << e.victim << " probes=" << join(e.probes)
            << " occ=" << join(e.occupancy) << '\n';
    }
}

std::vector<TraceEvent> TraceRecorder::parse(std::istream& in) {
    std::vector<TraceEvent> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        TraceEvent e;
        std::string action;
        if (!(ls >> e.worker >> action >> e.depth >> e.time_ns)) {
            throw std::runtime_error("malformed trace line: " + line);
        }
        if (action == "pop") {
            e.action = TraceAction::pop;
        } else if (action == "steal") {
            e.action = TraceAction::steal;
        } else if (action == "emit") {
            e.action = TraceAction::emit;
        } else {
            throw std::runtime_error("unknown trace action: " + action);
        }
        std::string field;
        while (ls >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            if (key == "task") {
                e.task = std::stoull(value);
            } else if (key == "victim") {
                e.victim = std::stoi(value);
            } else if (key == "probes") {
                e.probes = split_numbers<unsigned>(value);
            } else if (key == "occ") {
                e.occupancy = split_numbers<std::size_t>(value);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

TraceCheck check_trace(const std::vector<TraceEvent>& events, unsigned workers) {
    TraceCheck r;
    std::vector<uint64_t> ids;
    auto fail = [&](const TraceEvent& e, const std::string& what) {
        r.violations.push_back("worker " + std::to_string(e.worker) + " " + action_name(e.action) +
                               " at " + std::to_string(e.time_ns) + ": " + what);
    };
    for (const auto& e : events) {
        if (e.action == TraceAction::emit) {
            ++r.emits;
            continue;
        }
        ids.push_back(e.task);
        std::size_t lo = 0, hi = 0;
        for (std::size_t d = 1; d < e.occupancy.size(); ++d) {
            if (e.occupancy[d] == 0) continue;
            if (lo == 0) lo = d;
            hi = d;
        }
        if (lo == 0) {
            fail(e, "removal from an empty queue");
            continue;
        }
        if (e.action == TraceAction::pop) {
            ++r.pops;
            if (e.depth != hi) {
                fail(e, "popped depth " + std::to_string(e.depth) + ", deepest nonempty " +
                            std::to_string(hi));
            }
            continue;
        }
        ++r.steals;
        if (e.depth != lo) {
            fail(e, "stole depth " + std::to_string(e.depth) + ", shallowest nonempty " +
                        std::to_string(lo));
        }
        const auto order = victim_order(e.worker, workers);
        const bool prefix = !e.probes.empty() && e.probes.size() <= order.size() &&
                            std::equal(e.probes.begin(), e.probes.end(), order.begin());
        if (!prefix || e.victim != static_cast<int>(e.probes.back())) {
            fail(e, "victim probes out of order");
        }
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        r.violations.push_back("a task id was removed twice");
    }
    return r;
}

namespace {

// Runs body(w) on W threads (inline when W == 1) and rethrows the first failure.
template <class Body>
void run_workers(unsigned workers, std::atomic<bool>& abort, Body body) {
    std::exception_ptr error;
    std::mutex error_mutex;
    auto guarded = [&](unsigned w) {
        try {
            body(w);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            abort = true;
        }
    };
    if (workers == 1) {
        guarded(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(guarded, w);
        for (auto& t : threads) t.join();
    }
    if (error) std::rethrow_exception(error);
}

class TracingSink final : public ConeSink {
public:
    TracingSink(ConeSink& inner, TraceRecorder* trace, unsigned worker, std::size_t depth)
        : inner_(inner), trace_(trace), worker_(worker), depth_(depth) {}

    void emit(OutputCone&& cone) override {
        if (trace_) {
            TraceEvent e;
            e.worker = worker_;
            e.action = TraceAction::emit;
            e.depth = depth_;
            e.time_ns = trace_->now_ns();
            trace_->record(std::move(e));
        }
        inner_.emit(std::move(cone));
    }

private:
    ConeSink& inner_;
    TraceRecorder* trace_;
    unsigned worker_;
    std::size_t depth_;
};

}  // namespace

RelationTables run_table_stage(const std::vector<Fan>& fans, unsigned workers,
                               EnumerationStats* stats) {
    if (workers == 0) throw std::invalid_argument("run_table_stage: need at least one worker");
    const auto jobs = pair_jobs(fans);
    std::vector<uint8_t> result(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    run_workers(workers, abort, [&](unsigned) {
        while (!abort) {
            const std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) break;
            result[k] = run_pair_job(fans, jobs[k]) ? 1 : 0;
        }
    });
    return assemble_tables(fans, jobs, result, stats);
}

EnumerationStats run_enumeration_stage(const std::vector<Fan>& fans, const RelationTables* tables,
                                       unsigned workers, ConeSink& sink, TraceRecorder* trace) {
    if (workers == 0) throw std::invalid_argument("run_enumeration_stage: need at least one worker");
    if (fans.empty()) return {};
    if (trace) trace->start(workers);

    EnumerationContext ctx{fans, tables};
    std::vector<EnumerationStats> stats(workers);
    std::deque<DepthQueue> queues;
    for (unsigned w = 0; w < workers; ++w) queues.emplace_back(fans.size());

    std::atomic<uint64_t> next_id{0};
    std::atomic<std::size_t> in_flight{0};
    std::atomic<bool> abort{false};

    {
        TracingSink seed_sink(sink, nullptr, 0, fans.size());
        auto seeds = starting_tasks(choose_first_fan(fans), ctx, seed_sink, stats[0]);
        in_flight = seeds.size();
        for (std::size_t k = 0; k < seeds.size(); ++k) {
            seeds[k].id = next_id++;
            queues[k % workers].push(std::move(seeds[k]));
        }
    }

    run_workers(workers, abort, [&](unsigned w) {
        TracingSink local_sink(sink, trace, w, fans.size());
        std::vector<std::size_t> occupancy;
        std::vector<std::size_t>* occ = trace ? &occupancy : nullptr;
        const auto victims = victim_order(w, workers);
        while (!abort) {
            TraceEvent e;
            e.worker = w;
            std::optional<Task> t = queues[w].pop_local(occ);
            if (!t) {
                e.action = TraceAction::steal;
                for (unsigned v : victims) {
                    e.probes.push_back(v);
                    t = queues[v].steal(occ);
                    if (t) {
                        e.victim = static_cast<int>(v);
                        break;
                    }
                }
            }
            if (!t) {
                if (in_flight.load() == 0) break;
                std::this_thread::yield();
                continue;
            }
            if (trace) {
                e.depth = t->depth;
                e.task = t->id;
                e.time_ns = trace->now_ns();
                e.occupancy = occupancy;
                trace->record(std::move(e));
            }
            ++stats[w].tasks_executed;
            const std::size_t fan = choose_next_fan(*t, fans);
            auto children = expand(*t, fan, ctx, local_sink, stats[w]);
            for (auto& child : children) {
                child.id = next_id++;
                ++in_flight;
                queues[w].push(std::move(child));
            }
            --in_flight;
        }
    });

    EnumerationStats total;
    for (const auto& s : stats) total += s;
    return total;
}

}  // namespace prevariety

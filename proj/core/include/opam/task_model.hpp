#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace opam {

// All times are integer ticks; the tick-to-wallclock mapping is metadata.
using Tick = std::int64_t;
using TaskId = int;
using Rng = std::mt19937_64;

enum class TaskKind { Periodic, Aperiodic };
enum class DeadlineClass { Hard, Soft };

struct Task {
    TaskId id = 0;
    TaskKind kind = TaskKind::Periodic;
    Tick wcet = 1;
    Tick deadline = 1;          // relative to arrival
    Tick period = 0;            // periodic only
    Tick offset = 0;            // periodic only
    Tick pmin = 0;              // aperiodic only
    Tick pmax = 0;              // aperiodic only
    DeadlineClass deadline_class = DeadlineClass::Hard;
    bool triggered = false;     // arrives only via a trigger relation

    bool periodic() const { return kind == TaskKind::Periodic; }
    bool aperiodic() const { return kind == TaskKind::Aperiodic; }
};

struct TaskSet {
    std::vector<Task> tasks;
    int cores = 1;
    // unordered resource-dependency pairs, stored with first < second
    std::vector<std::pair<TaskId, TaskId>> dependencies;
    // ordered triggering pairs (source, target)
    std::vector<std::pair<TaskId, TaskId>> triggers;
    std::string tick_unit;

    int size() const { return static_cast<int>(tasks.size()); }
    bool has_aperiodic() const;
    bool depends(TaskId a, TaskId b) const;
};

// Bijection task-id -> priority in 1..n; larger value = higher priority.
struct PriorityAssignment {
    std::vector<int> priority;  // indexed by task id

    int size() const { return static_cast<int>(priority.size()); }
    bool is_permutation() const;
    bool operator==(const PriorityAssignment&) const = default;
};

struct ArrivalSequence {
    std::vector<std::vector<Tick>> arrivals;  // per task id, sorted
    Tick horizon = 0;

    bool operator==(const ArrivalSequence&) const = default;
};

struct Execution {
    TaskId task = 0;
    Tick arrival = 0;
    Tick end = 0;
    Tick deadline_abs = 0;
    bool complete = true;

    Tick dist() const { return end - deadline_abs; }
};

struct ScheduleScenario {
    std::vector<Execution> executions;  // sorted by (arrival, task, order)

    bool operator==(const ScheduleScenario&) const = default;
};

inline bool operator==(const Execution& a, const Execution& b) {
    return a.task == b.task && a.arrival == b.arrival && a.end == b.end &&
           a.deadline_abs == b.deadline_abs && a.complete == b.complete;
}

// Returns every model-constraint violation; an empty list means valid.
std::vector<std::string> validate_taskset(const TaskSet& ts);

// All arrivals offset + (k-1)*period within [0, T]. Throws on non-periodic
// or triggered tasks.
std::vector<Tick> periodic_arrivals(const Task& task, Tick horizon);

// Periodic arrivals are fixed; aperiodic gaps sampled uniformly from
// [pmin, pmax]; triggered tasks get no autonomous arrivals.
ArrivalSequence random_arrival_sequence(const TaskSet& ts, Tick horizon, Rng& rng);

// Checks the ArrivalSequence invariants against ts; empty list means valid.
std::vector<std::string> validate_arrivals(const TaskSet& ts, const ArrivalSequence& seq);

PriorityAssignment random_priority_assignment(int n, Rng& rng);

}  // namespace opam

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opam/evolve_priorities.hpp"
#include "opam/fitness.hpp"
#include "opam/task_model.hpp"

namespace opam {

struct CoevolutionConfig {
    int cycles = 1000;
    int arrival_pop_size = 10;
    int priority_pop_size = 10;
    double arrival_crossover = 0.8;
    double priority_crossover = 0.8;
    // negative means "use 1/n", resolved against the task set
    double arrival_mutation = -1.0;
    double priority_mutation = -1.0;
    Tick horizon = 2000;
    int external_set_size = 10;
    int arrival_steps_per_cycle = 1;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool keep_history = false;  // per-cycle best-front snapshots
    std::optional<PriorityAssignment> engineer_assignment;

    std::vector<std::string> validate() const;
    double resolved_arrival_mutation(int n) const;
    double resolved_priority_mutation(int n) const;
};

struct FrontMember {
    PriorityAssignment assignment;
    double fs = 0.0;  // external safety-margin fitness
    double fc = 0.0;
};

struct BestFront {
    std::vector<FrontMember> members;  // mutually non-dominated, sorted
};

struct CycleRow {
    int cycle = 0;
    double best_fs = 0.0;
    double best_fc = 0.0;
    double wall_ms = 0.0;
};

struct RunResult {
    BestFront front;
    std::vector<CycleRow> log;
    std::vector<BestFront> history;  // filled when keep_history
    std::uint64_t simulator_invocations = 0;
    // invocations spent searching (total minus external-set monitoring);
    // the budget unit for cross-method comparisons
    std::uint64_t search_invocations = 0;
    std::uint64_t phase1_invocations = 0;  // SEQ only: spent before the priority phase
};

// Adaptive-random-search external set: member 0 uses all-pmax gaps, member 1
// all-pmin; further members maximize the minimal Euclidean distance to the
// set over candidate batches (10 candidates per accepted member).
std::vector<ArrivalSequence> generate_external_set(const TaskSet& ts, int size, Tick horizon,
                                                   Rng& rng);

// Maps a sequence to a fixed-length vector: per aperiodic task, arrival
// times truncated/padded with T to length ceil(T/pmin), concatenated.
std::vector<double> arrival_feature_vector(const TaskSet& ts, const ArrivalSequence& seq);

// Merges the externally evaluated population into the archive: best front of
// the union, crowding-truncated to `cap` members, deduplicated.
BestFront update_best_front(const BestFront& current, const std::vector<FrontMember>& candidates,
                            int cap);

// The synchronous coevolution driver: evolve arrivals against priorities,
// priorities against arrivals, then externally evaluate and archive, for
// the configured number of cycles.
RunResult coevolve(const TaskSet& ts, const CoevolutionConfig& config);

}  // namespace opam

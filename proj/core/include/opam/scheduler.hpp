#pragma once

#include "opam/task_model.hpp"

namespace opam {

// Single-queue multi-core preemptive fixed-priority simulation.
//
// Semantics: at every event the dispatcher scans queued jobs in descending
// priority and places the highest-priority unblocked job on a free core. A
// job is blocked while any resource-dependent task is running. If no core
// is free, an unblocked job preempts the lowest-priority running job when
// strictly higher priority (victim tie: most recently dispatched); preempted
// jobs keep their remaining time and may resume on any core. Completion of a
// trigger source creates the target's arrival at the completion tick. Jobs
// unfinished at the horizon are reported with end = T and complete = false.
// Context switches cost zero ticks.
ScheduleScenario simulate(const TaskSet& ts, const ArrivalSequence& arrivals,
                          const PriorityAssignment& pa, Tick horizon);

// Naive one-tick-at-a-time reference with the same dispatch rules.
// Guarded to small instances; must equal simulate exactly.
ScheduleScenario brute_force_simulate(const TaskSet& ts, const ArrivalSequence& arrivals,
                                      const PriorityAssignment& pa, Tick horizon);

}  // namespace opam

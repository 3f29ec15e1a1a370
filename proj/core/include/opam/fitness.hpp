#pragma once

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

#include "opam/task_model.hpp"

namespace opam {

// Signed distance from an execution's end to its absolute deadline;
// negative iff the deadline was met.
inline Tick dist(const Execution& e) { return e.dist(); }

// 2^d in double precision; the exponent is clamped to [-1022, 1022] so
// extreme misses stay finite while ordering is preserved.
double pow2_clamped(Tick d);

double deadline_miss_fitness(const ScheduleScenario& s);  // sum of 2^dist

// Runs simulations for the fitness functions and counts every simulator
// invocation (the budget unit for the baselines). Cross-population grids
// are evaluated in parallel; sums are reduced serially in index order.
class Evaluator {
public:
    Evaluator(const TaskSet& ts, Tick horizon, int jobs = 1)
        : ts_(&ts), horizon_(horizon), jobs_(jobs) {}

    double fd(const ArrivalSequence& a, const PriorityAssignment& p) const;
    double fs(const PriorityAssignment& p, const ArrivalSequence& a) const;  // -fd
    double fc(const PriorityAssignment& p) const;

    // mean of fd(a, P_l) over the opposing population, index order
    double internal_fd(const ArrivalSequence& a,
                       const std::vector<PriorityAssignment>& pop) const;
    std::vector<double> internal_fd_all(const std::vector<ArrivalSequence>& as,
                                        const std::vector<PriorityAssignment>& pop) const;

    // mean of fs(p, A_l) over the opposing population, paired with fc(p)
    std::pair<double, double> internal_fsfc(const PriorityAssignment& p,
                                            const std::vector<ArrivalSequence>& as) const;
    std::vector<std::pair<double, double>> internal_fsfc_all(
        const std::vector<PriorityAssignment>& pop,
        const std::vector<ArrivalSequence>& as) const;

    // external fitness: fs over the fixed set E plus fc, per assignment
    std::vector<std::pair<double, double>> external_eval(
        const std::vector<PriorityAssignment>& pop,
        const std::vector<ArrivalSequence>& external_set) const;

    const TaskSet& taskset() const { return *ts_; }
    Tick horizon() const { return horizon_; }
    int jobs() const { return jobs_; }
    std::uint64_t invocations() const { return invocations_.load(); }
    // invocations spent scoring against the external set (monitoring, not search)
    std::uint64_t external_invocations() const { return external_invocations_.load(); }
    std::uint64_t search_invocations() const {
        return invocations_.load() - external_invocations_.load();
    }

private:
    std::vector<double> fd_grid(const std::vector<ArrivalSequence>& as,
                                const std::vector<PriorityAssignment>& pop) const;

    const TaskSet* ts_;
    Tick horizon_;
    int jobs_;
    mutable std::atomic<std::uint64_t> invocations_{0};
    mutable std::atomic<std::uint64_t> external_invocations_{0};
};

}  // namespace opam

#include "opam/fitness.hpp"

#include <algorithm>
#include <cmath>

#include "opam/parallel.hpp"
#include "opam/scheduler.hpp"

namespace opam {

double pow2_clamped(Tick d) {
    const Tick c = std::clamp<Tick>(d, -1022, 1022);
    return std::ldexp(1.0, static_cast<int>(c));
}

double deadline_miss_fitness(const ScheduleScenario& s) {
    double sum = 0.0;
    for (const Execution& e : s.executions) sum += pow2_clamped(e.dist());
    return sum;
}

double Evaluator::fd(const ArrivalSequence& a, const PriorityAssignment& p) const {
    invocations_.fetch_add(1, std::memory_order_relaxed);
    return deadline_miss_fitness(simulate(*ts_, a, p, horizon_));
}

double Evaluator::fs(const PriorityAssignment& p, const ArrivalSequence& a) const {
    return -fd(a, p);
}

double Evaluator::fc(const PriorityAssignment& p) const {
    // lowest priority among periodic tasks; vacuous without periodic tasks
    int lp = 0;
    bool any_periodic = false;
    for (const Task& t : ts_->tasks)
        if (t.periodic()) {
            const int pr = p.priority[t.id];
            lp = any_periodic ? std::min(lp, pr) : pr;
            any_periodic = true;
        }
    if (!any_periodic) return 0.0;
    double sum = 0.0;
    for (const Task& t : ts_->tasks)
        if (t.aperiodic()) sum += lp - p.priority[t.id];
    return sum;
}

std::vector<double> Evaluator::fd_grid(const std::vector<ArrivalSequence>& as,
                                       const std::vector<PriorityAssignment>& pop) const {
    const std::size_t rows = as.size(), cols = pop.size();
    std::vector<double> grid(rows * cols);
    parallel_for(rows * cols, [&](std::size_t idx) {
        grid[idx] = fd(as[idx / cols], pop[idx % cols]);
    }, jobs_);
    return grid;
}

double Evaluator::internal_fd(const ArrivalSequence& a,
                              const std::vector<PriorityAssignment>& pop) const {
    double sum = 0.0;
    for (const PriorityAssignment& p : pop) sum += fd(a, p);
    return sum / static_cast<double>(pop.size());
}

std::vector<double> Evaluator::internal_fd_all(const std::vector<ArrivalSequence>& as,
                                               const std::vector<PriorityAssignment>& pop) const {
    const auto grid = fd_grid(as, pop);
    const std::size_t cols = pop.size();
    std::vector<double> out(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
        double sum = 0.0;
        for (std::size_t l = 0; l < cols; ++l) sum += grid[i * cols + l];
        out[i] = sum / static_cast<double>(cols);
    }
    return out;
}

std::pair<double, double> Evaluator::internal_fsfc(const PriorityAssignment& p,
                                                   const std::vector<ArrivalSequence>& as) const {
    double sum = 0.0;
    for (const ArrivalSequence& a : as) sum += fs(p, a);
    return {sum / static_cast<double>(as.size()), fc(p)};
}

std::vector<std::pair<double, double>> Evaluator::internal_fsfc_all(
    const std::vector<PriorityAssignment>& pop, const std::vector<ArrivalSequence>& as) const {
    const auto grid = fd_grid(as, pop);
    const std::size_t cols = pop.size();
    std::vector<std::pair<double, double>> out(pop.size());
    for (std::size_t l = 0; l < cols; ++l) {
        double sum = 0.0;
        for (std::size_t i = 0; i < as.size(); ++i) sum += -grid[i * cols + l];
        out[l] = {sum / static_cast<double>(as.size()), fc(pop[l])};
    }
    return out;
}

std::vector<std::pair<double, double>> Evaluator::external_eval(
    const std::vector<PriorityAssignment>& pop,
    const std::vector<ArrivalSequence>& external_set) const {
    external_invocations_ += pop.size() * external_set.size();
    return internal_fsfc_all(pop, external_set);
}

}  // namespace opam

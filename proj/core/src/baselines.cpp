#include "opam/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "opam/evolve_arrivals.hpp"

namespace opam {
namespace {

std::vector<PriorityAssignment> assignments_of(const std::vector<RankedIndividual>& pop) {
    std::vector<PriorityAssignment> out;
    out.reserve(pop.size());
    for (const auto& m : pop) out.push_back(m.assignment);
    return out;
}

void log_cycle(RunResult& result, int cycle, double wall_ms) {
    double best_fs = -std::numeric_limits<double>::infinity();
    double best_fc = -std::numeric_limits<double>::infinity();
    for (const auto& m : result.front.members) {
        best_fs = std::max(best_fs, m.fs);
        best_fc = std::max(best_fc, m.fc);
    }
    result.log.push_back({cycle, best_fs, best_fc, wall_ms});
}

void external_update(RunResult& result, const Evaluator& eval,
                     const std::vector<PriorityAssignment>& assignments,
                     const std::vector<ArrivalSequence>& external, int cap, bool keep_history) {
    const auto scores = eval.external_eval(assignments, external);
    std::vector<FrontMember> cand;
    for (std::size_t i = 0; i < assignments.size(); ++i)
        cand.push_back({assignments[i], scores[i].first, scores[i].second});
    result.front = update_best_front(result.front, cand, cap);
    if (keep_history) result.history.push_back(result.front);
}

}  // namespace

RunResult rs_run(const TaskSet& ts, const CoevolutionConfig& config) {
    if (auto errs = config.validate(); !errs.empty())
        throw std::invalid_argument("invalid configuration: " + errs.front());
    if (auto errs = validate_taskset(ts); !errs.empty())
        throw std::invalid_argument("invalid task set: " + errs.front());

    const int n = ts.size();
    Rng rng(config.seed);
    Evaluator eval(ts, config.horizon, config.jobs);
    const auto external = generate_external_set(ts, config.external_set_size, config.horizon, rng);

    ArrivalPopulation arrivals =
        init_arrival_population(ts, config.horizon, config.arrival_pop_size, rng);
    std::vector<RankedIndividual> priorities;
    for (int i = 0; i < config.priority_pop_size; ++i)
        priorities.push_back({random_priority_assignment(n, rng), {0.0, 0.0}, 0, 0.0});

    RunResult result;
    external_update(result, eval, assignments_of(priorities), external,
                    config.priority_pop_size, config.keep_history);

    for (int cycle = 0; cycle < config.cycles; ++cycle) {
        const auto start = std::chrono::steady_clock::now();

        // arrivals: fresh random members, elitist top-ps_a retention by fd
        if (ts.has_aperiodic()) {
            for (int i = 0; i < config.arrival_pop_size; ++i)
                arrivals.members.push_back(
                    {random_arrival_sequence(ts, config.horizon, rng), 0.0});
            refresh_arrival_fitness(arrivals, assignments_of(priorities), eval);
            std::stable_sort(arrivals.members.begin(), arrivals.members.end(),
                             [](const ArrivalMember& a, const ArrivalMember& b) {
                                 return a.fd > b.fd;
                             });
            arrivals.members.resize(config.arrival_pop_size);
        }

        // priorities: fresh random permutations, NSGA-II retention
        std::vector<ArrivalSequence> arrival_seqs;
        for (const auto& m : arrivals.members) arrival_seqs.push_back(m.seq);
        std::vector<RankedIndividual> unioned = priorities;
        for (int i = 0; i < config.priority_pop_size; ++i)
            unioned.push_back({random_priority_assignment(n, rng), {0.0, 0.0}, 0, 0.0});
        const auto scores = eval.internal_fsfc_all(assignments_of(unioned), arrival_seqs);
        for (std::size_t i = 0; i < unioned.size(); ++i)
            unioned[i].objectives = {scores[i].first, scores[i].second};
        priorities = select_archive(std::move(unioned), config.priority_pop_size);

        external_update(result, eval, assignments_of(priorities), external,
                        config.priority_pop_size, config.keep_history);
        log_cycle(result, cycle, std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - start).count());
    }

    result.simulator_invocations = eval.invocations();
    result.search_invocations = eval.search_invocations();
    return result;
}

RunResult seq_run(const TaskSet& ts, const CoevolutionConfig& config, const Budget& budget) {
    if (auto errs = config.validate(); !errs.empty())
        throw std::invalid_argument("invalid configuration: " + errs.front());
    if (auto errs = validate_taskset(ts); !errs.empty())
        throw std::invalid_argument("invalid task set: " + errs.front());

    const int n = ts.size();
    const double mp_a = config.resolved_arrival_mutation(n);
    const double mp_p = config.resolved_priority_mutation(n);
    Rng rng(config.seed);
    Evaluator eval(ts, config.horizon, config.jobs);
    const auto external = generate_external_set(ts, config.external_set_size, config.horizon, rng);

    // fixed random opponents for phase 1
    std::vector<PriorityAssignment> frozen_priorities;
    for (int i = 0; i < config.priority_pop_size; ++i)
        frozen_priorities.push_back(random_priority_assignment(n, rng));

    ArrivalPopulation arrivals =
        init_arrival_population(ts, config.horizon, config.arrival_pop_size, rng);

    const std::uint64_t half = budget.simulator_invocations / 2;
    if (ts.has_aperiodic() && budget.simulator_invocations > 0) {
        refresh_arrival_fitness(arrivals, frozen_priorities, eval);
        while (eval.invocations() < half)
            arrival_step(arrivals, frozen_priorities, config.arrival_crossover, mp_a, eval, rng);
    }
    const std::uint64_t phase1 = eval.invocations();

    std::vector<ArrivalSequence> arrival_seqs;
    for (const auto& m : arrivals.members) arrival_seqs.push_back(m.seq);

    std::vector<RankedIndividual> priorities;
    for (int i = 0; i < config.priority_pop_size; ++i)
        priorities.push_back({random_priority_assignment(n, rng), {0.0, 0.0}, 0, 0.0});
    {
        const auto scores = eval.internal_fsfc_all(assignments_of(priorities), arrival_seqs);
        for (std::size_t i = 0; i < priorities.size(); ++i)
            priorities[i].objectives = {scores[i].first, scores[i].second};
    }

    RunResult result;
    int cycle = 0;
    while (eval.invocations() < budget.simulator_invocations) {
        const auto start = std::chrono::steady_clock::now();
        rank_population(priorities);
        auto offspring = nsga2_breed(priorities, config.priority_pop_size,
                                     config.priority_crossover, mp_p, rng);
        const auto off_scores = eval.internal_fsfc_all(offspring, arrival_seqs);
        std::vector<RankedIndividual> unioned = priorities;
        for (std::size_t i = 0; i < offspring.size(); ++i)
            unioned.push_back({std::move(offspring[i]),
                               {off_scores[i].first, off_scores[i].second}, 0, 0.0});
        priorities = select_archive(std::move(unioned), config.priority_pop_size);
        // log internal objectives; external evaluation happens once at the end
        double best_fs = -std::numeric_limits<double>::infinity();
        double best_fc = -std::numeric_limits<double>::infinity();
        for (const auto& m : priorities) {
            best_fs = std::max(best_fs, m.objectives[0]);
            best_fc = std::max(best_fc, m.objectives[1]);
        }
        result.log.push_back({cycle++, best_fs, best_fc,
                              std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start).count()});
    }
    external_update(result, eval, assignments_of(priorities), external,
                    config.priority_pop_size, config.keep_history);

    result.simulator_invocations = eval.invocations();
    result.search_invocations = eval.search_invocations();
    result.phase1_invocations = phase1;
    return result;
}

}  // namespace opam

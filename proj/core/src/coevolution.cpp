#include "opam/coevolution.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "opam/evolve_arrivals.hpp"

namespace opam {

std::vector<std::string> CoevolutionConfig::validate() const {
    std::vector<std::string> out;
    auto prob = [&](double p, const char* name) {
        if (p < 0.0 || p > 1.0) out.push_back(std::string(name) + " must lie in [0, 1]");
    };
    if (cycles < 0) out.push_back("cycles must be >= 0");
    if (arrival_pop_size < 2) out.push_back("arrival population size must be >= 2");
    if (priority_pop_size < 2) out.push_back("priority population size must be >= 2");
    prob(arrival_crossover, "arrival crossover probability");
    prob(priority_crossover, "priority crossover probability");
    if (arrival_mutation >= 0) prob(arrival_mutation, "arrival mutation probability");
    if (priority_mutation >= 0) prob(priority_mutation, "priority mutation probability");
    if (horizon < 1) out.push_back("horizon must be positive");
    if (external_set_size < 2) out.push_back("external set size must be >= 2");
    if (arrival_steps_per_cycle < 1) out.push_back("arrival steps per cycle must be >= 1");
    return out;
}

double CoevolutionConfig::resolved_arrival_mutation(int n) const {
    return arrival_mutation >= 0 ? arrival_mutation : 1.0 / n;
}

double CoevolutionConfig::resolved_priority_mutation(int n) const {
    return priority_mutation >= 0 ? priority_mutation : 1.0 / n;
}

std::vector<double> arrival_feature_vector(const TaskSet& ts, const ArrivalSequence& seq) {
    std::vector<double> out;
    const Tick horizon = seq.horizon;
    for (const Task& t : ts.tasks) {
        if (!t.aperiodic() || t.triggered) continue;
        const std::size_t dim =
            static_cast<std::size_t>((horizon + t.pmin - 1) / t.pmin);
        const auto& ats = seq.arrivals[t.id];
        for (std::size_t k = 0; k < dim; ++k)
            out.push_back(k < ats.size() ? static_cast<double>(ats[k])
                                         : static_cast<double>(horizon));
    }
    return out;
}

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

ArrivalSequence extreme_gap_sequence(const TaskSet& ts, Tick horizon, bool use_max) {
    ArrivalSequence seq;
    seq.horizon = horizon;
    seq.arrivals.resize(ts.size());
    for (const Task& t : ts.tasks) {
        if (t.triggered) continue;
        if (t.periodic()) {
            seq.arrivals[t.id] = periodic_arrivals(t, horizon);
        } else {
            const Tick gap = use_max ? t.pmax : t.pmin;
            for (Tick at = gap; at <= horizon; at += gap) seq.arrivals[t.id].push_back(at);
        }
    }
    return seq;
}

}  // namespace

std::vector<ArrivalSequence> generate_external_set(const TaskSet& ts, int size, Tick horizon,
                                                   Rng& rng) {
    std::vector<ArrivalSequence> set;
    set.push_back(extreme_gap_sequence(ts, horizon, true));
    if (size > 1) set.push_back(extreme_gap_sequence(ts, horizon, false));

    std::vector<std::vector<double>> features;
    for (const auto& s : set) features.push_back(arrival_feature_vector(ts, s));

    constexpr int kBatch = 10;
    while (static_cast<int>(set.size()) < size) {
        ArrivalSequence best;
        std::vector<double> best_feat;
        double best_min_dist = -1.0;
        for (int c = 0; c < kBatch; ++c) {
            ArrivalSequence cand = random_arrival_sequence(ts, horizon, rng);
            auto feat = arrival_feature_vector(ts, cand);
            double min_dist = std::numeric_limits<double>::infinity();
            for (const auto& f : features) min_dist = std::min(min_dist, euclidean(feat, f));
            if (min_dist > best_min_dist) {
                best_min_dist = min_dist;
                best = std::move(cand);
                best_feat = std::move(feat);
            }
        }
        set.push_back(std::move(best));
        features.push_back(std::move(best_feat));
    }
    return set;
}

BestFront update_best_front(const BestFront& current, const std::vector<FrontMember>& candidates,
                            int cap) {
    std::vector<RankedIndividual> unioned;
    for (const auto& m : current.members)
        unioned.push_back({m.assignment, {m.fs, m.fc}, 0, 0.0});
    for (const auto& m : candidates)
        unioned.push_back({m.assignment, {m.fs, m.fc}, 0, 0.0});
    // exact duplicates would bloat the archive and skew crowding
    std::sort(unioned.begin(), unioned.end(),
              [](const RankedIndividual& a, const RankedIndividual& b) {
                  return a.assignment.priority < b.assignment.priority;
              });
    unioned.erase(std::unique(unioned.begin(), unioned.end(),
                              [](const RankedIndividual& a, const RankedIndividual& b) {
                                  return a.assignment == b.assignment;
                              }),
                  unioned.end());

    rank_population(unioned);
    std::vector<RankedIndividual> front0;
    for (const auto& m : unioned)
        if (m.rank == 0) front0.push_back(m);
    if (static_cast<int>(front0.size()) > cap) front0 = select_archive(std::move(front0), cap);

    BestFront out;
    for (const auto& m : front0)
        out.members.push_back({m.assignment, m.objectives[0], m.objectives[1]});
    std::sort(out.members.begin(), out.members.end(), [](const FrontMember& a, const FrontMember& b) {
        if (a.fs != b.fs) return a.fs > b.fs;
        if (a.fc != b.fc) return a.fc > b.fc;
        return a.assignment.priority < b.assignment.priority;
    });
    return out;
}

RunResult coevolve(const TaskSet& ts, const CoevolutionConfig& config) {
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

    ArrivalPopulation arrivals =
        init_arrival_population(ts, config.horizon, config.arrival_pop_size, rng);
    std::vector<RankedIndividual> priorities;
    for (int i = 0; i < config.priority_pop_size; ++i) {
        PriorityAssignment pa = (i == 0 && config.engineer_assignment)
                                    ? *config.engineer_assignment
                                    : random_priority_assignment(n, rng);
        priorities.push_back({std::move(pa), {0.0, 0.0}, 0, 0.0});
    }

    RunResult result;
    const bool evolve_arrivals = ts.has_aperiodic();

    auto current_assignments = [&] {
        std::vector<PriorityAssignment> out;
        out.reserve(priorities.size());
        for (const auto& m : priorities) out.push_back(m.assignment);
        return out;
    };
    auto external_update = [&] {
        const auto assignments = current_assignments();
        const auto scores = eval.external_eval(assignments, external);
        std::vector<FrontMember> cand;
        for (std::size_t i = 0; i < assignments.size(); ++i)
            cand.push_back({assignments[i], scores[i].first, scores[i].second});
        result.front = update_best_front(result.front, cand, config.priority_pop_size);
        if (config.keep_history) result.history.push_back(result.front);
    };

    external_update();  // cycle-0 baseline so even n_c = 0 yields a front

    for (int cycle = 0; cycle < config.cycles; ++cycle) {
        const auto start = std::chrono::steady_clock::now();

        if (evolve_arrivals) {
            refresh_arrival_fitness(arrivals, current_assignments(), eval);
            for (int s = 0; s < config.arrival_steps_per_cycle; ++s)
                arrival_step(arrivals, current_assignments(), config.arrival_crossover, mp_a,
                             eval, rng);
        }

        std::vector<ArrivalSequence> arrival_seqs;
        for (const auto& m : arrivals.members) arrival_seqs.push_back(m.seq);
        {
            const auto scores = eval.internal_fsfc_all(current_assignments(), arrival_seqs);
            for (std::size_t i = 0; i < priorities.size(); ++i)
                priorities[i].objectives = {scores[i].first, scores[i].second};
            rank_population(priorities);
            auto offspring = nsga2_breed(priorities, config.priority_pop_size,
                                         config.priority_crossover, mp_p, rng);
            const auto off_scores = eval.internal_fsfc_all(offspring, arrival_seqs);
            std::vector<RankedIndividual> unioned = priorities;
            for (std::size_t i = 0; i < offspring.size(); ++i)
                unioned.push_back({std::move(offspring[i]),
                                   {off_scores[i].first, off_scores[i].second}, 0, 0.0});
            priorities = select_archive(std::move(unioned), config.priority_pop_size);
        }

        external_update();

        const auto elapsed = std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start);
        double best_fs = -std::numeric_limits<double>::infinity();
        double best_fc = -std::numeric_limits<double>::infinity();
        for (const auto& m : result.front.members) {
            best_fs = std::max(best_fs, m.fs);
            best_fc = std::max(best_fc, m.fc);
        }
        result.log.push_back({cycle, best_fs, best_fc, elapsed.count()});
    }

    result.simulator_invocations = eval.invocations();
    result.search_invocations = eval.search_invocations();
    return result;
}

}  // namespace opam

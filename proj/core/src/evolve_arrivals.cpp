#include "opam/evolve_arrivals.hpp"

#include <algorithm>

namespace opam {

ArrivalPopulation init_arrival_population(const TaskSet& ts, Tick horizon, int size, Rng& rng) {
    ArrivalPopulation pop;
    pop.members.reserve(size);
    for (int i = 0; i < size; ++i)
        pop.members.push_back({random_arrival_sequence(ts, horizon, rng), 0.0});
    return pop;
}

void refresh_arrival_fitness(ArrivalPopulation& pop,
                             const std::vector<PriorityAssignment>& opponents,
                             const Evaluator& eval) {
    std::vector<ArrivalSequence> seqs;
    seqs.reserve(pop.members.size());
    for (const auto& m : pop.members) seqs.push_back(m.seq);
    const auto fds = eval.internal_fd_all(seqs, opponents);
    for (std::size_t i = 0; i < pop.members.size(); ++i) pop.members[i].fd = fds[i];
}

std::pair<int, int> tournament_select(const ArrivalPopulation& pop, Rng& rng) {
    std::uniform_int_distribution<int> draw(0, static_cast<int>(pop.members.size()) - 1);
    auto one = [&] {
        const int a = draw(rng), b = draw(rng);
        return pop.members[a].fd >= pop.members[b].fd ? a : b;
    };
    return {one(), one()};
}

std::pair<ArrivalSequence, ArrivalSequence> crossover_arrivals(const ArrivalSequence& a,
                                                               const ArrivalSequence& b,
                                                               const TaskSet& ts, double cp,
                                                               Rng& rng) {
    auto offspring = std::make_pair(a, b);
    std::vector<TaskId> aperiodic;
    for (const Task& t : ts.tasks)
        if (t.aperiodic() && !t.triggered) aperiodic.push_back(t.id);
    if (aperiodic.empty()) return offspring;
    if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) >= cp) return offspring;

    std::uniform_int_distribution<std::size_t> pick(0, aperiodic.size() - 1);
    const TaskId cut = aperiodic[pick(rng)];
    for (TaskId id = 0; id <= cut; ++id)
        std::swap(offspring.first.arrivals[id], offspring.second.arrivals[id]);
    return offspring;
}

ArrivalSequence mutate_arrivals(const ArrivalSequence& a, const TaskSet& ts, double mp, Rng& rng) {
    ArrivalSequence out = a;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const Tick horizon = out.horizon;
    for (const Task& t : ts.tasks) {
        if (!t.aperiodic() || t.triggered) continue;
        auto& ats = out.arrivals[t.id];
        std::uniform_int_distribution<Tick> gap(t.pmin, t.pmax);
        for (std::size_t k = 0; k < ats.size(); ++k) {
            if (coin(rng) >= mp) continue;
            const Tick prev = k == 0 ? 0 : ats[k - 1];
            const Tick original = ats[k];
            const Tick mutated = prev + gap(rng);
            ats[k] = mutated;
            const bool next_valid =
                k + 1 >= ats.size() ||
                (ats[k + 1] >= mutated + t.pmin && ats[k + 1] <= mutated + t.pmax);
            if (next_valid && mutated <= horizon) continue;
            if (!next_valid) {
                const Tick shift = mutated - original;
                for (std::size_t i = k + 1; i < ats.size(); ++i) ats[i] += shift;
            }
            while (!ats.empty() && ats.back() > horizon) ats.pop_back();
            // refill the tail while new arrivals still fit in the horizon
            for (;;) {
                const Tick last = ats.empty() ? 0 : ats.back();
                const Tick next = last + gap(rng);
                if (next > horizon) break;
                ats.push_back(next);
            }
            if (k >= ats.size()) break;
        }
    }
    return out;
}

void arrival_step(ArrivalPopulation& pop, const std::vector<PriorityAssignment>& opponents,
                  double cp, double mp, const Evaluator& eval, Rng& rng) {
    const auto [p1, p2] = tournament_select(pop, rng);
    auto [c1, c2] = crossover_arrivals(pop.members[p1].seq, pop.members[p2].seq,
                                       eval.taskset(), cp, rng);
    c1 = mutate_arrivals(c1, eval.taskset(), mp, rng);
    c2 = mutate_arrivals(c2, eval.taskset(), mp, rng);

    for (auto& child : {c1, c2}) {
        const double child_fd = eval.internal_fd(child, opponents);
        auto worst = std::min_element(pop.members.begin(), pop.members.end(),
                                      [](const ArrivalMember& x, const ArrivalMember& y) {
                                          return x.fd < y.fd;
                                      });
        if (child_fd > worst->fd) *worst = {child, child_fd};
    }
}

}  // namespace opam

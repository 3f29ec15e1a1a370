#pragma once

#include "opam/fitness.hpp"
#include "opam/task_model.hpp"

namespace opam {

// Steady-state GA over arrival sequences, maximizing the mean deadline-miss
// fitness against the opposing priority population.

struct ArrivalMember {
    ArrivalSequence seq;
    double fd = 0.0;  // cached internal fitness, refreshed every cycle
};

struct ArrivalPopulation {
    std::vector<ArrivalMember> members;
};

ArrivalPopulation init_arrival_population(const TaskSet& ts, Tick horizon, int size, Rng& rng);

// Recomputes every cached internal fd against the current opposing population.
void refresh_arrival_fitness(ArrivalPopulation& pop,
                             const std::vector<PriorityAssignment>& opponents,
                             const Evaluator& eval);

// Size-2 tournaments, draws uniform with replacement; returns member indices.
std::pair<int, int> tournament_select(const ArrivalPopulation& pop, Rng& rng);

// With probability cp, swaps the whole arrival lists of every task with id
// up to a uniformly chosen aperiodic task; otherwise copies the parents.
std::pair<ArrivalSequence, ArrivalSequence> crossover_arrivals(const ArrivalSequence& a,
                                                               const ArrivalSequence& b,
                                                               const TaskSet& ts, double cp,
                                                               Rng& rng);

// Each aperiodic arrival mutates with probability mp to a fresh gap from the
// predecessor; later arrivals are shifted, trimmed at the horizon, and the
// tail is refilled with sampled gaps.
ArrivalSequence mutate_arrivals(const ArrivalSequence& a, const TaskSet& ts, double mp, Rng& rng);

// One steady-state step: two parents -> crossover -> mutation -> each
// offspring replaces the current worst member iff strictly fitter.
void arrival_step(ArrivalPopulation& pop, const std::vector<PriorityAssignment>& opponents,
                  double cp, double mp, const Evaluator& eval, Rng& rng);

}  // namespace opam

#pragma once

#include <array>
#include <vector>

#include "opam/task_model.hpp"

namespace opam {

// NSGA-II machinery over priority permutations, maximizing both objectives.

using Objectives = std::array<double, 2>;  // (fs, fc)

// a dominates b: >= on both objectives and > on at least one
inline bool dominates(const Objectives& a, const Objectives& b) {
    return a[0] >= b[0] && a[1] >= b[1] && (a[0] > b[0] || a[1] > b[1]);
}

struct RankedIndividual {
    PriorityAssignment assignment;
    Objectives objectives{0.0, 0.0};
    int rank = 0;
    double crowding = 0.0;
};

// Fronts of member indices; front 0 has no dominator in the input.
std::vector<std::vector<int>> non_dominated_sort(const std::vector<Objectives>& points);

// NSGA-II crowding over one front (indices into points); boundary members
// per objective get +infinity, zero objective range contributes nothing.
std::vector<double> crowding_distance(const std::vector<Objectives>& points,
                                      const std::vector<int>& front);

void rank_population(std::vector<RankedIndividual>& pop);

// Two-cut partially mapped crossover; copies the parents when the coin
// misses. Offspring are always permutations of 1..n.
std::pair<PriorityAssignment, PriorityAssignment> pmx_crossover(const PriorityAssignment& p1,
                                                                const PriorityAssignment& p2,
                                                                double cp, Rng& rng);

PriorityAssignment swap_mutation(const PriorityAssignment& p, double mp, Rng& rng);

// Binary tournament on (rank, crowding), then PMX and swap mutation, until
// `count` offspring exist.
std::vector<PriorityAssignment> nsga2_breed(const std::vector<RankedIndividual>& pop, int count,
                                            double cp, double mp, Rng& rng);

// Environmental selection on the ranked union: whole fronts in rank order,
// last partial front truncated by descending crowding.
std::vector<RankedIndividual> select_archive(std::vector<RankedIndividual> unioned, int size);

}  // namespace opam

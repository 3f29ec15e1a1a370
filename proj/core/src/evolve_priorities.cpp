#include "opam/evolve_priorities.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace opam {

std::vector<std::vector<int>> non_dominated_sort(const std::vector<Objectives>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> dominated(n);
    std::vector<int> dominator_count(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && dominates(points[i], points[j])) {
                dominated[i].push_back(j);
                dominator_count[j]++;
            }

    std::vector<std::vector<int>> fronts;
    std::vector<int> current;
    for (int i = 0; i < n; ++i)
        if (dominator_count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<int> next;
        for (int i : current)
            for (int j : dominated[i])
                if (--dominator_count[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<Objectives>& points,
                                      const std::vector<int>& front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    std::vector<double> crowd(n, 0.0);
    if (n <= 2) {
        std::fill(crowd.begin(), crowd.end(), inf);
        return crowd;
    }
    for (int obj = 0; obj < 2; ++obj) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return points[front[a]][obj] < points[front[b]][obj];
        });
        const double lo = points[front[order.front()]][obj];
        const double hi = points[front[order.back()]][obj];
        crowd[order.front()] = inf;
        crowd[order.back()] = inf;
        if (hi == lo) continue;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (crowd[order[i]] == inf) continue;
            crowd[order[i]] += (points[front[order[i + 1]]][obj] -
                                points[front[order[i - 1]]][obj]) / (hi - lo);
        }
    }
    return crowd;
}

void rank_population(std::vector<RankedIndividual>& pop) {
    std::vector<Objectives> pts;
    pts.reserve(pop.size());
    for (const auto& m : pop) pts.push_back(m.objectives);
    const auto fronts = non_dominated_sort(pts);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        const auto crowd = crowding_distance(pts, fronts[r]);
        for (std::size_t i = 0; i < fronts[r].size(); ++i) {
            pop[fronts[r][i]].rank = static_cast<int>(r);
            pop[fronts[r][i]].crowding = crowd[i];
        }
    }
}

std::pair<PriorityAssignment, PriorityAssignment> pmx_crossover(const PriorityAssignment& p1,
                                                                const PriorityAssignment& p2,
                                                                double cp, Rng& rng) {
    auto offspring = std::make_pair(p1, p2);
    const int n = p1.size();
    if (n < 2 || std::uniform_real_distribution<double>(0.0, 1.0)(rng) >= cp) return offspring;

    std::uniform_int_distribution<int> pos(0, n - 1);
    int lo = pos(rng), hi = pos(rng);
    if (lo > hi) std::swap(lo, hi);

    auto map_child = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // child takes b's segment [lo, hi]; values of a displaced by the
        // segment are relocated through the b->a mapping chain
        std::vector<int> child(a);
        std::vector<int> pos_of(n + 1);
        for (int i = 0; i < n; ++i) pos_of[a[i]] = i;
        for (int i = lo; i <= hi; ++i) child[i] = b[i];
        for (int i = lo; i <= hi; ++i) {
            const int displaced = a[i];
            const auto seg_end = b.begin() + hi + 1;
            if (std::find(b.begin() + lo, seg_end, displaced) != seg_end)
                continue;  // already inside the copied segment
            int slot = i;
            while (slot >= lo && slot <= hi) slot = pos_of[b[slot]];
            child[slot] = displaced;
        }
        return child;
    };
    offspring.first.priority = map_child(p1.priority, p2.priority);
    offspring.second.priority = map_child(p2.priority, p1.priority);
    return offspring;
}

PriorityAssignment swap_mutation(const PriorityAssignment& p, double mp, Rng& rng) {
    PriorityAssignment out = p;
    const int n = p.size();
    if (n < 2 || std::uniform_real_distribution<double>(0.0, 1.0)(rng) >= mp) return out;
    std::uniform_int_distribution<int> pos(0, n - 1);
    const int a = pos(rng);
    int b = pos(rng);
    while (b == a) b = pos(rng);
    std::swap(out.priority[a], out.priority[b]);
    return out;
}

namespace {

int crowded_tournament(const std::vector<RankedIndividual>& pop, Rng& rng) {
    std::uniform_int_distribution<int> draw(0, static_cast<int>(pop.size()) - 1);
    const int a = draw(rng), b = draw(rng);
    if (pop[a].rank != pop[b].rank) return pop[a].rank < pop[b].rank ? a : b;
    if (pop[a].crowding != pop[b].crowding) return pop[a].crowding > pop[b].crowding ? a : b;
    return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? a : b;
}

}  // namespace

std::vector<PriorityAssignment> nsga2_breed(const std::vector<RankedIndividual>& pop, int count,
                                            double cp, double mp, Rng& rng) {
    std::vector<PriorityAssignment> offspring;
    offspring.reserve(count);
    while (static_cast<int>(offspring.size()) < count) {
        const int p1 = crowded_tournament(pop, rng);
        const int p2 = crowded_tournament(pop, rng);
        auto [c1, c2] = pmx_crossover(pop[p1].assignment, pop[p2].assignment, cp, rng);
        offspring.push_back(swap_mutation(c1, mp, rng));
        if (static_cast<int>(offspring.size()) < count)
            offspring.push_back(swap_mutation(c2, mp, rng));
    }
    return offspring;
}

std::vector<RankedIndividual> select_archive(std::vector<RankedIndividual> unioned, int size) {
    rank_population(unioned);
    if (static_cast<int>(unioned.size()) <= size) return unioned;

    std::vector<int> order(unioned.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (unioned[a].rank != unioned[b].rank) return unioned[a].rank < unioned[b].rank;
        return unioned[a].crowding > unioned[b].crowding;
    });
    std::vector<RankedIndividual> out;
    out.reserve(size);
    for (int i = 0; i < size; ++i) out.push_back(unioned[order[i]]);
    return out;
}

}  // namespace opam

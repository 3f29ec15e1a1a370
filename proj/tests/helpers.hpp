#pragma once

// Shared fixtures and independent reference implementations used as test
// oracles. Everything here stays deliberately naive; none of it calls into
// the library code paths it is meant to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "opam/task_model.hpp"

namespace test_helpers {

using namespace opam;

inline Task periodic_task(TaskId id, Tick period, Tick offset, Tick wcet, Tick deadline) {
    Task t;
    t.id = id;
    t.kind = TaskKind::Periodic;
    t.period = period;
    t.pmin = period;
    t.pmax = period;
    t.offset = offset;
    t.wcet = wcet;
    t.deadline = deadline;
    return t;
}

inline Task aperiodic_task(TaskId id, Tick pmin, Tick pmax, Tick wcet, Tick deadline) {
    Task t;
    t.id = id;
    t.kind = TaskKind::Aperiodic;
    t.pmin = pmin;
    t.pmax = pmax;
    t.wcet = wcet;
    t.deadline = deadline;
    return t;
}

// The three-task reconstruction used as a regression anchor: two aperiodic
// tasks plus one periodic task on one core over [0, 23].
inline TaskSet fig_taskset() {
    TaskSet ts;
    ts.cores = 1;
    ts.tasks = {
        aperiodic_task(0, 5, 13, 2, 4),   // j1
        aperiodic_task(1, 3, 10, 1, 4),   // j2
        periodic_task(2, 8, 8, 3, 7),     // j3
    };
    return ts;
}

inline ArrivalSequence fig_arrivals() {
    ArrivalSequence seq;
    seq.horizon = 23;
    seq.arrivals = {{5, 10}, {4, 10}, {8, 16}};
    return seq;
}

// random valid task set for differential and round-trip tests
inline TaskSet random_taskset(Rng& rng, int max_tasks = 4, int max_cores = 2,
                              bool with_relations = true) {
    std::uniform_int_distribution<int> ntasks(1, max_tasks);
    std::uniform_int_distribution<int> ncores(1, max_cores);
    std::uniform_int_distribution<Tick> wcet(1, 6);
    std::uniform_int_distribution<Tick> deadline(1, 20);
    std::uniform_int_distribution<Tick> period(4, 30);
    std::uniform_int_distribution<Tick> offset(0, 10);
    std::uniform_int_distribution<int> coin(0, 1);

    TaskSet ts;
    ts.cores = ncores(rng);
    const int n = ntasks(rng);
    for (int i = 0; i < n; ++i) {
        if (coin(rng)) {
            ts.tasks.push_back(periodic_task(i, period(rng), offset(rng), wcet(rng), deadline(rng)));
        } else {
            const Tick pmin = period(rng);
            const Tick pmax = pmin + 1 + period(rng);
            ts.tasks.push_back(aperiodic_task(i, pmin, pmax, wcet(rng), deadline(rng)));
        }
    }
    if (with_relations && n >= 2 && coin(rng)) {
        ts.dependencies.emplace_back(0, 1);
    }
    if (with_relations && n >= 3 && coin(rng)) {
        ts.tasks[n - 1].triggered = true;
        ts.triggers.emplace_back(0, n - 1);
    }
    return ts;
}

// O(n^2) pairwise non-dominated sorting (maximization on both objectives)
inline std::vector<std::vector<int>> reference_nds(const std::vector<std::array<double, 2>>& pts) {
    auto dom = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
        return a[0] >= b[0] && a[1] >= b[1] && (a[0] > b[0] || a[1] > b[1]);
    };
    std::vector<std::vector<int>> fronts;
    std::vector<bool> assigned(pts.size(), false);
    std::size_t left = pts.size();
    while (left > 0) {
        std::vector<int> front;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (assigned[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (!assigned[j] && i != j && dom(pts[j], pts[i])) dominated = true;
            if (!dominated) front.push_back(static_cast<int>(i));
        }
        for (int i : front) assigned[i] = true;
        left -= front.size();
        fronts.push_back(std::move(front));
    }
    return fronts;
}

// textbook PMX: child keeps parent1 outside [lo, hi], takes parent2's
// segment, and resolves displaced values through the mapping chain
inline std::vector<int> reference_pmx_child(const std::vector<int>& p1, const std::vector<int>& p2,
                                            int lo, int hi) {
    const int n = static_cast<int>(p1.size());
    std::vector<int> child(n, 0);
    auto in_segment = [&](int value) {
        for (int i = lo; i <= hi; ++i)
            if (p2[i] == value) return true;
        return false;
    };
    auto pos_in_p2 = [&](int value) {
        for (int i = 0; i < n; ++i)
            if (p2[i] == value) return i;
        return -1;
    };
    for (int i = lo; i <= hi; ++i) child[i] = p2[i];
    for (int i = 0; i < n; ++i) {
        if (i >= lo && i <= hi) continue;
        int v = p1[i];
        while (in_segment(v)) v = p1[pos_in_p2(v)];
        child[i] = v;
    }
    return child;
}

// exhaustive-pair Mann-Whitney U of the first sample
inline double reference_u(const std::vector<double>& xs, const std::vector<double>& ys) {
    double u = 0.0;
    for (double x : xs)
        for (double y : ys) {
            if (x > y) u += 1.0;
            else if (x == y) u += 0.5;
        }
    return u;
}

inline double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Spearman rank correlation (no-tie inputs expected)
inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<int> order(v.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = static_cast<double>(i);
        return r;
    };
    const auto rx = ranks(xs), ry = ranks(ys);
    const double mx = mean(rx), my = mean(ry);
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    return num / std::sqrt(dx * dy);
}

}  // namespace test_helpers

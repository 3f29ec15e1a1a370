#include "opam/task_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opam {

bool TaskSet::has_aperiodic() const {
    return std::any_of(tasks.begin(), tasks.end(), [](const Task& t) {
        return t.aperiodic() && !t.triggered;
    });
}

bool TaskSet::depends(TaskId a, TaskId b) const {
    for (auto [x, y] : dependencies)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

bool PriorityAssignment::is_permutation() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    for (int p : priority) {
        if (p < 1 || p > n || seen[p - 1]) return false;
        seen[p - 1] = true;
    }
    return true;
}

std::vector<std::string> validate_taskset(const TaskSet& ts) {
    std::vector<std::string> out;
    const int n = ts.size();
    auto bad = [&](const std::string& msg) { out.push_back(msg); };

    if (ts.cores < 1) bad("cores must be positive");
    for (int i = 0; i < n; ++i) {
        const Task& t = ts.tasks[i];
        const std::string tag = "task " + std::to_string(t.id) + ": ";
        if (t.id != i) bad(tag + "ids must be 0..n-1 in order");
        if (t.wcet < 1) bad(tag + "wcet must be >= 1");
        if (t.deadline < 1) bad(tag + "deadline must be positive");
        if (t.triggered) continue;  // timing fields unused for triggered tasks
        if (t.periodic()) {
            if (t.period < 1) bad(tag + "period must be positive");
            if (t.offset < 0) bad(tag + "offset must be >= 0");
            if (t.pmin != t.period || t.pmax != t.period)
                bad(tag + "periodic task requires pmin = pmax = period");
        } else {
            if (t.pmin < 1) bad(tag + "pmin must be positive");
            if (t.pmax <= t.pmin) bad(tag + "pmax must exceed pmin");
        }
    }

    auto valid_id = [&](TaskId id) { return id >= 0 && id < n; };
    for (auto [a, b] : ts.dependencies) {
        if (!valid_id(a) || !valid_id(b)) {
            bad("dependency endpoint out of range: (" + std::to_string(a) + "," +
                std::to_string(b) + ")");
            continue;
        }
        if (a == b) bad("dependency self-loop on task " + std::to_string(a));
    }

    std::vector<int> trigger_sources(n, 0);
    std::vector<std::vector<TaskId>> succ(n);
    for (auto [a, b] : ts.triggers) {
        if (!valid_id(a) || !valid_id(b)) {
            bad("trigger endpoint out of range: (" + std::to_string(a) + "," +
                std::to_string(b) + ")");
            continue;
        }
        trigger_sources[b]++;
        succ[a].push_back(b);
    }
    for (int i = 0; i < n; ++i) {
        if (trigger_sources[i] > 1)
            bad("task " + std::to_string(i) + " has more than one trigger source");
        if (trigger_sources[i] > 0 && !ts.tasks[i].triggered)
            bad("task " + std::to_string(i) + " is a trigger target but not marked triggered");
        if (trigger_sources[i] == 0 && i < n && ts.tasks[i].triggered)
            bad("task " + std::to_string(i) + " is marked triggered but has no trigger source");
    }
    // cycle check over the triggering graph
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    bool cycle = false;
    auto dfs = [&](auto&& self, int v) -> void {
        state[v] = 1;
        for (int w : succ[v]) {
            if (state[w] == 1) cycle = true;
            else if (state[w] == 0) self(self, w);
        }
        state[v] = 2;
    };
    for (int i = 0; i < n && !cycle; ++i)
        if (state[i] == 0) dfs(dfs, i);
    if (cycle) bad("circular triggering");

    return out;
}

std::vector<Tick> periodic_arrivals(const Task& task, Tick horizon) {
    if (!task.periodic() || task.triggered)
        throw std::invalid_argument("periodic_arrivals requires an untriggered periodic task");
    std::vector<Tick> out;
    for (Tick at = task.offset; at <= horizon; at += task.period) out.push_back(at);
    return out;
}

ArrivalSequence random_arrival_sequence(const TaskSet& ts, Tick horizon, Rng& rng) {
    ArrivalSequence seq;
    seq.horizon = horizon;
    seq.arrivals.resize(ts.size());
    for (const Task& t : ts.tasks) {
        if (t.triggered) continue;
        if (t.periodic()) {
            seq.arrivals[t.id] = periodic_arrivals(t, horizon);
        } else {
            std::uniform_int_distribution<Tick> gap(t.pmin, t.pmax);
            Tick at = gap(rng);
            while (at <= horizon) {
                seq.arrivals[t.id].push_back(at);
                at += gap(rng);
            }
        }
    }
    return seq;
}

std::vector<std::string> validate_arrivals(const TaskSet& ts, const ArrivalSequence& seq) {
    std::vector<std::string> out;
    if (static_cast<int>(seq.arrivals.size()) != ts.size()) {
        out.push_back("arrival list count differs from task count");
        return out;
    }
    for (const Task& t : ts.tasks) {
        const auto& ats = seq.arrivals[t.id];
        const std::string tag = "task " + std::to_string(t.id) + ": ";
        if (t.triggered) {
            if (!ats.empty()) out.push_back(tag + "triggered task has autonomous arrivals");
            continue;
        }
        for (Tick at : ats)
            if (at < 0 || at > seq.horizon) {
                out.push_back(tag + "arrival outside [0, T]");
                break;
            }
        if (t.periodic()) {
            if (ats != periodic_arrivals(t, seq.horizon))
                out.push_back(tag + "periodic arrivals deviate from offset + k*period");
        } else {
            Tick prev = 0;
            for (std::size_t k = 0; k < ats.size(); ++k) {
                const Tick gap = ats[k] - prev;
                if (gap < t.pmin || gap > t.pmax) {
                    out.push_back(tag + "gap outside [pmin, pmax] at index " + std::to_string(k));
                    break;
                }
                prev = ats[k];
            }
        }
    }
    return out;
}

PriorityAssignment random_priority_assignment(int n, Rng& rng) {
    PriorityAssignment pa;
    pa.priority.resize(n);
    std::iota(pa.priority.begin(), pa.priority.end(), 1);
    std::shuffle(pa.priority.begin(), pa.priority.end(), rng);
    return pa;
}

}  // namespace opam

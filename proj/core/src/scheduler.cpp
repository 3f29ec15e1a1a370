#include "opam/scheduler.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace opam {
namespace {

constexpr Tick kInf = std::numeric_limits<Tick>::max();

struct Job {
    TaskId task = 0;
    Tick arrival = 0;
    long seq = 0;           // global arrival order, tiebreak for same-task jobs
    Tick remaining = 0;
    long dispatch_seq = 0;  // bumped on every (re)dispatch
    std::size_t record = 0;
};

void check_preconditions(const TaskSet& ts, const ArrivalSequence& arrivals,
                         const PriorityAssignment& pa, Tick horizon) {
    if (pa.size() != ts.size() || !pa.is_permutation())
        throw std::invalid_argument("priority assignment is not a permutation over the task set");
    if (static_cast<int>(arrivals.arrivals.size()) != ts.size())
        throw std::invalid_argument("arrival sequence does not match the task set");
    if (arrivals.horizon != horizon)
        throw std::invalid_argument("arrival sequence horizon differs from simulation horizon");
}

// Ready-queue order: descending priority, then earlier arrival, task id, seq.
struct ReadyOrder {
    const PriorityAssignment& pa;
    bool operator()(const Job* a, const Job* b) const {
        const int pra = pa.priority[a->task], prb = pa.priority[b->task];
        if (pra != prb) return pra > prb;
        if (a->arrival != b->arrival) return a->arrival < b->arrival;
        if (a->task != b->task) return a->task < b->task;
        return a->seq < b->seq;
    }
};

void sort_and_finalize(std::vector<Execution>& records) {
    std::stable_sort(records.begin(), records.end(), [](const Execution& a, const Execution& b) {
        return std::tie(a.arrival, a.task) < std::tie(b.arrival, b.task);
    });
}

}  // namespace

ScheduleScenario simulate(const TaskSet& ts, const ArrivalSequence& arrivals,
                          const PriorityAssignment& pa, Tick horizon) {
    check_preconditions(ts, arrivals, pa, horizon);

    const int n = ts.size();
    std::vector<TaskId> trigger_target(n, -1);
    for (auto [src, dst] : ts.triggers) trigger_target[src] = dst;

    std::vector<Execution> records;
    std::deque<Job> storage;
    std::vector<Job*> ready;
    std::vector<Job*> running(ts.cores, nullptr);
    const ReadyOrder order{pa};
    long arrival_seq = 0;
    long dispatch_counter = 0;

    // pending autonomous + triggered arrivals, ordered (time, task, insertion)
    using Pending = std::tuple<Tick, TaskId, long>;
    std::priority_queue<Pending, std::vector<Pending>, std::greater<>> pending;
    long push_seq = 0;
    for (const Task& t : ts.tasks)
        for (Tick at : arrivals.arrivals[t.id]) pending.emplace(at, t.id, push_seq++);

    auto blocked = [&](const Job* j) {
        for (Job* r : running)
            if (r && ts.depends(j->task, r->task)) return true;
        return false;
    };

    auto spawn = [&](TaskId task, Tick at) {
        storage.push_back(Job{task, at, arrival_seq++, ts.tasks[task].wcet, 0, records.size()});
        records.push_back(Execution{task, at, at, at + ts.tasks[task].deadline, false});
        ready.push_back(&storage.back());
    };

    auto dispatch = [&] {
        for (;;) {
            std::sort(ready.begin(), ready.end(), order);
            bool placed = false;
            for (std::size_t i = 0; i < ready.size(); ++i) {
                Job* cand = ready[i];
                if (blocked(cand)) continue;
                int free_core = -1;
                for (int c = 0; c < ts.cores; ++c)
                    if (!running[c]) { free_core = c; break; }
                if (free_core >= 0) {
                    cand->dispatch_seq = ++dispatch_counter;
                    running[free_core] = cand;
                    ready.erase(ready.begin() + i);
                    placed = true;
                    break;
                }
                // pick the lowest-priority running job, most recent dispatch on tie
                int victim_core = 0;
                for (int c = 1; c < ts.cores; ++c) {
                    const int pv = pa.priority[running[victim_core]->task];
                    const int pc = pa.priority[running[c]->task];
                    if (pc < pv || (pc == pv && running[c]->dispatch_seq >
                                                    running[victim_core]->dispatch_seq))
                        victim_core = c;
                }
                Job* victim = running[victim_core];
                if (pa.priority[cand->task] > pa.priority[victim->task]) {
                    cand->dispatch_seq = ++dispatch_counter;
                    running[victim_core] = cand;
                    ready.erase(ready.begin() + i);
                    ready.push_back(victim);
                    placed = true;
                }
                break;  // lower-priority candidates cannot preempt either
            }
            if (!placed) return;
        }
    };

    Tick now = 0;
    for (;;) {
        Tick next = pending.empty() ? kInf : std::get<0>(pending.top());
        for (Job* r : running)
            if (r) next = std::min(next, now + r->remaining);
        if (next == kInf || next > horizon) break;

        for (Job* r : running)
            if (r) r->remaining -= next - now;
        now = next;

        for (int c = 0; c < ts.cores; ++c) {
            Job* r = running[c];
            if (r && r->remaining == 0) {
                records[r->record].end = now;
                records[r->record].complete = true;
                running[c] = nullptr;
                if (trigger_target[r->task] >= 0)
                    pending.emplace(now, trigger_target[r->task], push_seq++);
            }
        }
        while (!pending.empty() && std::get<0>(pending.top()) == now) {
            auto [at, task, s] = pending.top();
            pending.pop();
            spawn(task, at);
        }
        dispatch();
    }

    for (Job& j : storage) {
        if (!records[j.record].complete) {
            records[j.record].end = horizon;
            records[j.record].complete = false;
        }
    }
    sort_and_finalize(records);
    return ScheduleScenario{std::move(records)};
}

ScheduleScenario brute_force_simulate(const TaskSet& ts, const ArrivalSequence& arrivals,
                                      const PriorityAssignment& pa, Tick horizon) {
    if (ts.size() > 6 || horizon > 1000)
        throw std::invalid_argument("brute_force_simulate guard: n <= 6 and T <= 1000");
    check_preconditions(ts, arrivals, pa, horizon);

    const int n = ts.size();
    std::vector<TaskId> trigger_target(n, -1);
    for (auto [src, dst] : ts.triggers) trigger_target[src] = dst;

    std::vector<Execution> records;
    std::deque<Job> storage;
    std::vector<Job*> ready;
    std::vector<Job*> running(ts.cores, nullptr);
    long arrival_seq = 0;
    long dispatch_counter = 0;
    std::vector<std::size_t> next_idx(n, 0);

    for (Tick t = 0; t <= horizon; ++t) {
        // completions first: jobs that ran out during the previous tick
        std::vector<TaskId> triggered_now;
        for (int c = 0; c < ts.cores; ++c) {
            Job* r = running[c];
            if (r && r->remaining == 0) {
                records[r->record].end = t;
                records[r->record].complete = true;
                running[c] = nullptr;
                if (trigger_target[r->task] >= 0) triggered_now.push_back(trigger_target[r->task]);
            }
        }
        // arrivals due at t: autonomous plus triggered, ascending task id
        std::vector<TaskId> due;
        for (TaskId id = 0; id < n; ++id)
            while (next_idx[id] < arrivals.arrivals[id].size() &&
                   arrivals.arrivals[id][next_idx[id]] == t) {
                due.push_back(id);
                next_idx[id]++;
            }
        due.insert(due.end(), triggered_now.begin(), triggered_now.end());
        std::stable_sort(due.begin(), due.end());
        for (TaskId id : due) {
            storage.push_back(Job{id, t, arrival_seq++, ts.tasks[id].wcet, 0, records.size()});
            records.push_back(Execution{id, t, t, t + ts.tasks[id].deadline, false});
            ready.push_back(&storage.back());
        }
        // dispatch, one placement at a time
        for (;;) {
            std::sort(ready.begin(), ready.end(), ReadyOrder{pa});
            bool placed = false;
            for (std::size_t i = 0; i < ready.size(); ++i) {
                Job* cand = ready[i];
                bool is_blocked = false;
                for (Job* r : running)
                    if (r && ts.depends(cand->task, r->task)) is_blocked = true;
                if (is_blocked) continue;
                int free_core = -1;
                for (int c = 0; c < ts.cores; ++c)
                    if (!running[c]) { free_core = c; break; }
                if (free_core >= 0) {
                    cand->dispatch_seq = ++dispatch_counter;
                    running[free_core] = cand;
                    ready.erase(ready.begin() + i);
                    placed = true;
                    break;
                }
                int victim_core = 0;
                for (int c = 1; c < ts.cores; ++c) {
                    const int pv = pa.priority[running[victim_core]->task];
                    const int pc = pa.priority[running[c]->task];
                    if (pc < pv || (pc == pv && running[c]->dispatch_seq >
                                                    running[victim_core]->dispatch_seq))
                        victim_core = c;
                }
                Job* victim = running[victim_core];
                if (pa.priority[cand->task] > pa.priority[victim->task]) {
                    cand->dispatch_seq = ++dispatch_counter;
                    running[victim_core] = cand;
                    ready.erase(ready.begin() + i);
                    ready.push_back(victim);
                    placed = true;
                }
                break;
            }
            if (!placed) break;
        }
        if (t < horizon)
            for (Job* r : running)
                if (r) r->remaining -= 1;
    }

    for (Job& j : storage) {
        if (!records[j.record].complete) {
            records[j.record].end = horizon;
            records[j.record].complete = false;
        }
    }
    sort_and_finalize(records);
    return ScheduleScenario{std::move(records)};
}

}  // namespace opam

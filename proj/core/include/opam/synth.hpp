#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opam/task_model.hpp"

namespace opam {

struct SynthConfig {
    int n = 20;
    double target_utilization = 0.7;
    Tick pd_min = 100;   // defaults mirror 10 ms .. 1 s at a 0.1 ms tick
    Tick pd_max = 10000;
    Tick granularity = 100;
    double aperiodic_ratio = 0.4;  // gamma
    double range_factor = 2.0;     // mu, pmax up to mu * pmin
    int cores = 1;
    std::uint64_t seed = 0;

    std::vector<std::string> validate() const;
};

// Unbiased utilization split summing to `target`; whole samples containing
// any value above 1 are discarded and redrawn.
std::vector<double> uunifast_discard(int n, double target, Rng& rng);

// Log-uniform periods rounded to the nearest multiple of g, clamped back
// into [pd_min, pd_max].
std::vector<Tick> generate_periods(int n, Tick pd_min, Tick pd_max, Tick g, Rng& rng);

struct SynthResult {
    TaskSet taskset;
    PriorityAssignment rate_monotonic;  // shorter period = higher priority
};

SynthResult synthesize(const SynthConfig& config);

}  // namespace opam

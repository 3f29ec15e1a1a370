#pragma once

#include <cstdint>

#include "opam/coevolution.hpp"

namespace opam {

struct Budget {
    std::uint64_t simulator_invocations = 0;  // primary unit; split evenly by SEQ
};

// Random search with elitist retention: fresh random arrivals and
// permutations every cycle, evaluated through the same fitness stack; the
// best-front archive update is identical to coevolution.
RunResult rs_run(const TaskSet& ts, const CoevolutionConfig& config);

// Sequential baseline: GA over arrivals against a frozen random priority
// population for the first half of the budget, then NSGA-II over priorities
// against the frozen final arrivals for the rest.
RunResult seq_run(const TaskSet& ts, const CoevolutionConfig& config, const Budget& budget);

}  // namespace opam

#pragma once

#include <cstddef>
#include <functional>

namespace opam {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. jobs <= 1 runs
// inline. Results must be written to preallocated slots; callers aggregate
// in index order so the schedule never affects output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, int jobs);

}  // namespace opam

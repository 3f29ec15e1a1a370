#pragma once

#include <array>
#include <utility>
#include <vector>

#include "opam/evolve_priorities.hpp"

namespace opam {

using Point2 = std::array<double, 2>;

// Fronts normalized into [0,1]^2 minimization space. Bounds come from the
// non-dominated union of every compared front; maximization objectives are
// flipped (x' = (max - x) / (max - min)), degenerate ranges map to 0,
// out-of-range points are clamped.
struct NormalizedFront {
    std::vector<Point2> points;
};

struct NormalizationResult {
    std::vector<NormalizedFront> fronts;   // same order as the input
    NormalizedFront reference;             // normalized union reference front
    Point2 lo{0.0, 0.0}, hi{0.0, 0.0};     // raw maximization-space bounds
};

// raw points are maximization-space (fs, fc) fronts
NormalizationResult normalize_fronts(const std::vector<std::vector<Point2>>& raw_fronts);

// Area dominated within [0,1]^2 w.r.t. reference point (1,1), minimization.
double hypervolume_2d(const NormalizedFront& front);

// Mean over front points of the clamped (dominance-aware) distance to the
// closest reference point.
double gd_plus(const NormalizedFront& front, const NormalizedFront& reference);

// Deb's spread: gaps along the first-objective-sorted front plus distances
// from its extremes to the reference extremes. Single-point fronts are 1.
double spread_delta(const NormalizedFront& front, const NormalizedFront& reference);

struct MannWhitneyResult {
    double u = 0.0;        // U statistic of the first sample
    double p_value = 1.0;  // two-sided, normal approximation with tie and
                           // continuity corrections
};

MannWhitneyResult mann_whitney_u(const std::vector<double>& xs, const std::vector<double>& ys);

// P(x > y) + 0.5 P(x = y) over all pairs.
double vargha_delaney_a12(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace opam

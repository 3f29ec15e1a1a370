#include "opam/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace opam {
namespace {

// non-dominated subset under maximization, duplicates collapsed
std::vector<Point2> pareto_union(const std::vector<std::vector<Point2>>& fronts) {
    std::vector<Point2> all;
    for (const auto& f : fronts) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<Point2> out;
    for (const auto& p : all) {
        bool dominated = false;
        for (const auto& q : all)
            if (dominates(q, p)) { dominated = true; break; }
        if (!dominated) out.push_back(p);
    }
    return out;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

NormalizationResult normalize_fronts(const std::vector<std::vector<Point2>>& raw_fronts) {
    NormalizationResult res;
    const auto reference = pareto_union(raw_fronts);
    res.lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    res.hi = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& p : reference)
        for (int i = 0; i < 2; ++i) {
            res.lo[i] = std::min(res.lo[i], p[i]);
            res.hi[i] = std::max(res.hi[i], p[i]);
        }
    auto map_point = [&](const Point2& p) {
        Point2 out;
        for (int i = 0; i < 2; ++i) {
            const double range = res.hi[i] - res.lo[i];
            out[i] = range > 0.0 ? clamp01((res.hi[i] - p[i]) / range) : 0.0;
        }
        return out;
    };
    for (const auto& f : raw_fronts) {
        NormalizedFront nf;
        for (const auto& p : f) nf.points.push_back(map_point(p));
        res.fronts.push_back(std::move(nf));
    }
    for (const auto& p : reference) res.reference.points.push_back(map_point(p));
    return res;
}

double hypervolume_2d(const NormalizedFront& front) {
    if (front.points.empty()) return 0.0;
    // keep the non-dominated lower-left staircase (minimization)
    std::vector<Point2> pts = front.points;
    std::sort(pts.begin(), pts.end());
    std::vector<Point2> stair;
    double best_y = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
        if (p[1] < best_y) {
            stair.push_back(p);
            best_y = p[1];
        }
    }
    double area = 0.0;
    for (std::size_t i = 0; i < stair.size(); ++i) {
        const double next_x = i + 1 < stair.size() ? stair[i + 1][0] : 1.0;
        area += (next_x - stair[i][0]) * (1.0 - stair[i][1]);
    }
    return area;
}

double gd_plus(const NormalizedFront& front, const NormalizedFront& reference) {
    if (front.points.empty() || reference.points.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& a : front.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& z : reference.points) {
            const double dx = std::max(a[0] - z[0], 0.0);
            const double dy = std::max(a[1] - z[1], 0.0);
            best = std::min(best, std::sqrt(dx * dx + dy * dy));
        }
        sum += best;
    }
    return sum / static_cast<double>(front.points.size());
}

double spread_delta(const NormalizedFront& front, const NormalizedFront& reference) {
    if (front.points.size() < 2) return 1.0;
    std::vector<Point2> pts = front.points;
    std::sort(pts.begin(), pts.end());
    std::vector<Point2> ref = reference.points;
    std::sort(ref.begin(), ref.end());

    auto dist2 = [](const Point2& a, const Point2& b) {
        return std::hypot(a[0] - b[0], a[1] - b[1]);
    };
    const double d_first = ref.empty() ? 0.0 : dist2(pts.front(), ref.front());
    const double d_last = ref.empty() ? 0.0 : dist2(pts.back(), ref.back());

    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) gaps.push_back(dist2(pts[i], pts[i + 1]));
    const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / gaps.size();
    double dev = 0.0;
    for (double g : gaps) dev += std::abs(g - mean);

    const double denom = d_first + d_last + static_cast<double>(gaps.size()) * mean;
    if (denom == 0.0) return 0.0;
    return (d_first + d_last + dev) / denom;
}

MannWhitneyResult mann_whitney_u(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size(), m = ys.size();
    MannWhitneyResult res;
    if (n == 0 || m == 0) return res;

    std::vector<std::pair<double, int>> all;  // value, sample tag
    for (double v : xs) all.emplace_back(v, 0);
    for (double v : ys) all.emplace_back(v, 1);
    std::sort(all.begin(), all.end());

    // midranks and tie group sizes
    const std::size_t total = all.size();
    std::vector<double> rank(total);
    double tie_term = 0.0;
    for (std::size_t i = 0; i < total;) {
        std::size_t j = i;
        while (j < total && all[j].first == all[i].first) ++j;
        const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) rank[k] = mid;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    double rank_sum_x = 0.0;
    for (std::size_t i = 0; i < total; ++i)
        if (all[i].second == 0) rank_sum_x += rank[i];

    const double nd = static_cast<double>(n), md = static_cast<double>(m);
    res.u = rank_sum_x - nd * (nd + 1.0) / 2.0;

    const double mean = nd * md / 2.0;
    const double nt = nd + md;
    const double var = nd * md / 12.0 * (nt + 1.0 - tie_term / (nt * (nt - 1.0)));
    if (var <= 0.0) {
        res.p_value = 1.0;
        return res;
    }
    const double diff = res.u - mean;
    const double corrected = std::abs(diff) > 0.5 ? std::abs(diff) - 0.5 : 0.0;
    const double z = corrected / std::sqrt(var);
    res.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return res;
}

double vargha_delaney_a12(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.empty() || ys.empty()) return 0.5;
    double score = 0.0;
    for (double x : xs)
        for (double y : ys) {
            if (x > y) score += 1.0;
            else if (x == y) score += 0.5;
        }
    return score / (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
}

}  // namespace opam

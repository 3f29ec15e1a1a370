#include "opam/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace opam {

std::vector<std::string> SynthConfig::validate() const {
    std::vector<std::string> out;
    if (n < 1) out.push_back("n must be >= 1");
    if (target_utilization <= 0.0 || target_utilization > 1.0)
        out.push_back("target utilization must lie in (0, 1]");
    if (pd_min < 1 || pd_max < pd_min) out.push_back("period range must satisfy 1 <= pd_min <= pd_max");
    if (granularity < 1) out.push_back("granularity must be positive");
    if (aperiodic_ratio < 0.0 || aperiodic_ratio > 1.0)
        out.push_back("aperiodic ratio must lie in [0, 1]");
    if (range_factor <= 1.0) out.push_back("range factor must exceed 1");
    if (cores < 1) out.push_back("cores must be positive");
    return out;
}

std::vector<double> uunifast_discard(int n, double target, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> u(n);
    for (;;) {
        double sum = target;
        bool ok = true;
        for (int i = 1; i < n; ++i) {
            const double next = sum * std::pow(unit(rng), 1.0 / (n - i));
            u[i - 1] = sum - next;
            if (u[i - 1] > 1.0) ok = false;
            sum = next;
        }
        u[n - 1] = sum;
        if (ok && sum <= 1.0) return u;
    }
}

std::vector<Tick> generate_periods(int n, Tick pd_min, Tick pd_max, Tick g, Rng& rng) {
    std::uniform_real_distribution<double> logu(std::log(static_cast<double>(pd_min)),
                                                std::log(static_cast<double>(pd_max)));
    std::vector<Tick> out(n);
    for (int i = 0; i < n; ++i) {
        const double raw = std::exp(logu(rng));
        Tick period = static_cast<Tick>(std::llround(raw / g)) * g;
        out[i] = std::clamp(period, pd_min, pd_max);
    }
    return out;
}

SynthResult synthesize(const SynthConfig& config) {
    if (auto errs = config.validate(); !errs.empty())
        throw std::invalid_argument("invalid synth configuration: " + errs.front());

    Rng rng(config.seed);
    const int n = config.n;
    const auto utils = uunifast_discard(n, config.target_utilization, rng);
    const auto periods = generate_periods(n, config.pd_min, config.pd_max, config.granularity, rng);

    TaskSet ts;
    ts.cores = config.cores;
    for (int i = 0; i < n; ++i) {
        Task t;
        t.id = i;
        t.kind = TaskKind::Periodic;
        t.period = periods[i];
        t.pmin = periods[i];
        t.pmax = periods[i];
        t.offset = 0;
        t.wcet = std::max<Tick>(1, std::llround(utils[i] * periods[i]));
        t.deadline = periods[i];
        ts.tasks.push_back(t);
    }

    // rate-monotonic before conversion: shorter period = higher priority
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return periods[a] < periods[b]; });
    PriorityAssignment rm;
    rm.priority.resize(n);
    for (int i = 0; i < n; ++i) rm.priority[order[i]] = n - i;

    const int n_aperiodic = static_cast<int>(std::llround(config.aperiodic_ratio * n));
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::uniform_real_distribution<double> factor(1.0, config.range_factor);
    for (int k = 0; k < n_aperiodic; ++k) {
        Task& t = ts.tasks[ids[k]];
        t.kind = TaskKind::Aperiodic;
        t.pmin = t.period;
        const double x = std::max(std::nextafter(1.0, 2.0), factor(rng));  // (1, mu]
        t.pmax = std::max<Tick>(t.pmin + 1, std::llround(x * t.pmin));
        t.period = 0;
        t.offset = 0;
        t.deadline_class = DeadlineClass::Soft;
    }
    return {std::move(ts), std::move(rm)};
}

}  // namespace opam

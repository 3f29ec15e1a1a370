#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "helpers.hpp"
#include "opam/synth.hpp"

using namespace opam;
using namespace test_helpers;

TEST_CASE("uunifast splits sum to the target") {
    Rng rng(40);
    CHECK(uunifast_discard(1, 0.6, rng) == std::vector<double>{0.6});
    for (int trial = 0; trial < 1000; ++trial) {
        const auto u = uunifast_discard(5, 0.8, rng);
        REQUIRE(u.size() == 5);
        double sum = 0.0;
        for (double x : u) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
            sum += x;
        }
        CHECK(sum == doctest::Approx(0.8).epsilon(1e-9));
    }
}

TEST_CASE("uunifast discards samples holding a share above one") {
    // with target 1.9 over 2 tasks a valid sample needs both shares <= 1,
    // which forces the discard loop to actually run
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto u = uunifast_discard(2, 1.9, rng);
        CHECK(u[0] <= 1.0);
        CHECK(u[1] <= 1.0);
        CHECK(u[0] + u[1] == doctest::Approx(1.9));
    }
}

TEST_CASE("periods are granularity multiples inside the range") {
    Rng rng(42);
    const auto ps = generate_periods(500, 100, 10000, 100, rng);
    for (Tick p : ps) {
        CHECK(p % 100 == 0);
        CHECK(p >= 100);
        CHECK(p <= 10000);
    }
    const auto fixed = generate_periods(20, 500, 500, 100, rng);
    for (Tick p : fixed) CHECK(p == 500);
}

TEST_CASE("periods are log-uniform, not uniform") {
    // under log-uniform on [100, 10000], the geometric midpoint 1000 splits
    // the mass in half; under plain uniform it would sit near 9%
    Rng rng(43);
    const auto ps = generate_periods(20000, 100, 10000, 1, rng);
    int below = 0;
    for (Tick p : ps)
        if (p < 1000) ++below;
    const double frac = static_cast<double>(below) / ps.size();
    CHECK(frac > 0.46);
    CHECK(frac < 0.54);
}

TEST_CASE("synthesized sets validate and hit the requested shape") {
    SynthConfig cfg;
    cfg.n = 20;
    cfg.aperiodic_ratio = 0.4;
    cfg.seed = 44;
    const auto res = synthesize(cfg);
    const TaskSet& ts = res.taskset;
    CHECK(validate_taskset(ts).empty());
    CHECK(ts.size() == 20);
    CHECK(ts.cores == 1);

    int aperiodic = 0;
    for (const Task& t : ts.tasks) {
        CHECK(t.wcet >= 1);
        if (t.aperiodic()) {
            ++aperiodic;
            CHECK(t.pmin >= cfg.pd_min);
            CHECK(t.pmax > t.pmin);
            CHECK(t.pmax <= static_cast<Tick>(std::llround(cfg.range_factor * t.pmin)) + 1);
            CHECK(t.deadline_class == DeadlineClass::Soft);
        } else {
            CHECK(t.period % cfg.granularity == 0);
            CHECK(t.period >= cfg.pd_min);
            CHECK(t.period <= cfg.pd_max);
        }
    }
    CHECK(aperiodic == 8);  // round(0.4 * 20)
    CHECK(res.rate_monotonic.is_permutation());
}

TEST_CASE("gamma extremes") {
    SynthConfig cfg;
    cfg.n = 10;
    cfg.seed = 45;
    cfg.aperiodic_ratio = 0.0;
    for (const Task& t : synthesize(cfg).taskset.tasks) CHECK(t.periodic());
    cfg.aperiodic_ratio = 1.0;
    for (const Task& t : synthesize(cfg).taskset.tasks) CHECK(t.aperiodic());
}

TEST_CASE("rate-monotonic assignment ranks shorter periods higher") {
    SynthConfig cfg;
    cfg.n = 12;
    cfg.aperiodic_ratio = 0.0;  // keep periods directly comparable
    cfg.seed = 46;
    const auto res = synthesize(cfg);
    const auto& ts = res.taskset.tasks;
    const auto& pr = res.rate_monotonic.priority;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (ts[i].period < ts[j].period) CHECK(pr[i] > pr[j]);
            if (ts[i].period == ts[j].period && ts[i].id < ts[j].id) CHECK(pr[i] > pr[j]);
        }
}

TEST_CASE("utilization lands near the target") {
    SynthConfig cfg;
    cfg.n = 15;
    cfg.target_utilization = 0.7;
    cfg.aperiodic_ratio = 0.0;
    cfg.seed = 47;
    const auto ts = synthesize(cfg).taskset;
    double u = 0.0;
    for (const Task& t : ts.tasks) u += static_cast<double>(t.wcet) / t.period;
    // wcet rounding and the max(1, .) floor add slack on both sides
    CHECK(u > 0.4);
    CHECK(u < 1.0);
}

TEST_CASE("synthesis is deterministic per seed") {
    SynthConfig cfg;
    cfg.seed = 48;
    const auto a = synthesize(cfg);
    const auto b = synthesize(cfg);
    CHECK(a.rate_monotonic == b.rate_monotonic);
    REQUIRE(a.taskset.size() == b.taskset.size());
    for (int i = 0; i < a.taskset.size(); ++i) {
        CHECK(a.taskset.tasks[i].wcet == b.taskset.tasks[i].wcet);
        CHECK(a.taskset.tasks[i].kind == b.taskset.tasks[i].kind);
        CHECK(a.taskset.tasks[i].pmin == b.taskset.tasks[i].pmin);
    }
}

TEST_CASE("invalid synth configs report errors") {
    SynthConfig cfg;
    cfg.n = 0;
    CHECK_FALSE(cfg.validate().empty());
    cfg = SynthConfig{};
    cfg.aperiodic_ratio = 1.5;
    CHECK_FALSE(cfg.validate().empty());
    cfg = SynthConfig{};
    cfg.pd_min = 500;
    cfg.pd_max = 100;
    CHECK_FALSE(cfg.validate().empty());
    cfg = SynthConfig{};
    cfg.range_factor = 1.0;
    CHECK_FALSE(cfg.validate().empty());
}
